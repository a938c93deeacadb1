"""Dense univariate polynomials over a prime field F_p.

Coefficients are ints in [0, p), ascending, no trailing zeros (mod p); the
zero polynomial is the empty tuple. The modulus rides alongside as a plain
int argument. Factorization is squarefree decomposition, then distinct-degree
splitting, then randomized equal-degree (Cantor-Zassenhaus) splitting with a
seeded generator; the returned factor list is sorted by (degree, coefficient
tuple) so downstream prime-ideal labels are reproducible regardless of the
random stream.
"""

import random

from .errors import ZeroPolynomial

MPoly = tuple


def mpoly(coeffs, p: int) -> MPoly:
    cs = [int(c) % p for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def degree(f: MPoly) -> int:
    return len(f) - 1


def add(f: MPoly, g: MPoly, p: int) -> MPoly:
    n = max(len(f), len(g))
    return mpoly([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)], p)


def sub(f: MPoly, g: MPoly, p: int) -> MPoly:
    n = max(len(f), len(g))
    return mpoly([(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)], p)


def mul(f: MPoly, g: MPoly, p: int) -> MPoly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return mpoly(out, p)


def scale(f: MPoly, c: int, p: int) -> MPoly:
    return mpoly([a * c for a in f], p)


def div_rem(f: MPoly, g: MPoly, p: int):
    if not g:
        raise ZeroPolynomial("division by zero polynomial mod p")
    r = list(f)
    q = [0] * max(len(f) - len(g) + 1, 1)
    inv_lg = pow(g[-1], p - 2, p)
    while len(r) >= len(g):
        while r and r[-1] % p == 0:
            r.pop()
        if len(r) < len(g):
            break
        k = len(r) - len(g)
        c = r[-1] * inv_lg % p
        q[k] = c
        for i in range(len(g)):
            r[k + i] = (r[k + i] - c * g[i]) % p
        r.pop()
    return mpoly(q, p), mpoly(r, p)


def rem(f: MPoly, g: MPoly, p: int) -> MPoly:
    return div_rem(f, g, p)[1]


def exact_div(f: MPoly, g: MPoly, p: int) -> MPoly:
    q, r = div_rem(f, g, p)
    if r:
        raise ArithmeticError("division not exact mod p")
    return q


def monic(f: MPoly, p: int) -> MPoly:
    if not f:
        raise ZeroPolynomial("monic of zero polynomial mod p")
    return scale(f, pow(f[-1], p - 2, p), p)


def gcd(f: MPoly, g: MPoly, p: int) -> MPoly:
    a, b = f, g
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p) if a else ()


def pow_mod(f: MPoly, e: int, m: MPoly, p: int) -> MPoly:
    result = (1,)
    base = rem(f, m, p)
    while e:
        if e & 1:
            result = rem(mul(result, base, p), m, p)
        base = rem(mul(base, base, p), m, p)
        e >>= 1
    return result


def derivative(f: MPoly, p: int) -> MPoly:
    return mpoly([i * c for i, c in enumerate(f)][1:], p)


def evaluate(f: MPoly, x: int, p: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def _pth_root(f: MPoly, p: int) -> MPoly:
    # f = g(x^p) over F_p, so g is obtained by taking every p-th coefficient
    # (Frobenius makes coefficient-wise p-th roots the identity).
    return tuple(f[i] for i in range(0, len(f), p))


def squarefree_split(f: MPoly, p: int):
    """[(monic squarefree factor, multiplicity)] with product = monic(f)."""
    f = monic(f, p)
    out: dict = {}

    def accumulate(g: MPoly, outer_mult: int):
        if degree(g) == 0:
            return
        dg = derivative(g, p)
        if not dg:
            accumulate(_pth_root(g, p), outer_mult * p)
            return
        a = gcd(g, dg, p)
        w = exact_div(g, a, p)
        i = 1
        while degree(w) > 0:
            y = gcd(w, a, p)
            z = exact_div(w, y, p)
            if degree(z) > 0:
                key = z
                out[key] = out.get(key, 0) + i * outer_mult
            w = y
            a = exact_div(a, y, p)
            i += 1
        if degree(a) > 0:
            accumulate(a, outer_mult * p)

    accumulate(f, 1)
    return sorted(out.items(), key=lambda t: (degree(t[0]), t[0]))


def _distinct_degree(f: MPoly, p: int):
    """Split squarefree monic f into [(product of irreducibles of degree d, d)]."""
    out = []
    h = (0, 1)  # x
    v = f
    d = 0
    while degree(v) >= 2 * (d + 1):
        d += 1
        h = pow_mod(h, p, v, p)
        g = gcd(sub(h, (0, 1), p), v, p)
        if degree(g) > 0:
            out.append((g, d))
            v = exact_div(v, g, p)
            h = rem(h, v, p)
    if degree(v) > 0:
        out.append((v, degree(v)))
    return out


def _equal_degree(f: MPoly, d: int, p: int, rng: random.Random):
    """Cantor-Zassenhaus split of squarefree monic f = product of degree-d irreducibles."""
    n = degree(f)
    if n == d:
        return [f]
    while True:
        a = mpoly([rng.randrange(p) for _ in range(n)], p)
        if degree(a) < 1:
            continue
        g = gcd(a, f, p)
        if 0 < degree(g) < n:
            pieces = [g, exact_div(f, g, p)]
        else:
            if p == 2:
                # Trace map of F_{2^d} over F_2.
                t = rem(a, f, p)
                acc = t
                for _ in range(d - 1):
                    t = pow_mod(t, 2, f, p)
                    acc = add(acc, t, p)
                b = acc
            else:
                b = sub(pow_mod(a, (p ** d - 1) // 2, f, p), (1,), p)
            g = gcd(b, f, p)
            if degree(g) <= 0 or degree(g) >= n:
                continue
            pieces = [g, exact_div(f, g, p)]
        out = []
        for piece in pieces:
            out.extend(_equal_degree(monic(piece, p), d, p, rng))
        return out


def _seed_mix(seed: int, p: int, f: MPoly) -> int:
    h = seed & 0xFFFFFFFF
    h = h * 1000003 ^ p
    for c in f:
        h = (h * 1000003 ^ c) & 0xFFFFFFFFFFFF
    return h


def factor(f: MPoly, p: int, seed: int = 0):
    """Full factorization: sorted [(monic irreducible, multiplicity)].

    Ordering is (degree, coefficient tuple ascending), the contract consumed
    by prime-ideal labeling.
    """
    if not f:
        raise ZeroPolynomial("factor of zero polynomial mod p")
    rng = random.Random(_seed_mix(seed, p, f))
    out: dict = {}
    for sf, mult in squarefree_split(f, p):
        for block, d in _distinct_degree(sf, p):
            for irr in _equal_degree(block, d, p, rng):
                out[irr] = out.get(irr, 0) + mult
    return sorted(out.items(), key=lambda t: (degree(t[0]), t[0]))


def is_irreducible(f: MPoly, p: int) -> bool:
    """Rabin test: x^(p^n) = x mod f and gcd(x^(p^(n/q)) - x, f) = 1 for prime q | n."""
    n = degree(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    f = monic(f, p)
    from .intarith import factorize

    x = (0, 1)
    h = pow_mod(x, p ** n, f, p)
    if h != rem(x, f, p):
        return False
    for q in factorize(n):
        g = pow_mod(x, p ** (n // q), f, p)
        if degree(gcd(sub(g, x, p), f, p)) != 0:
            return False
    return True
