"""Factorization over Q: Zassenhaus with quadratic Hensel lifting.

Pipeline per squarefree part: reduce to a monic integer polynomial, factor it
modulo the smallest odd prime keeping it squarefree, lift the factorization
past twice the Mignotte coefficient bound, then recombine factors by
exhaustive subset search (inputs here never exceed degree ~16, so subsets
beat lattice methods on simplicity).

The multifactor Hensel driver is shared with prime-ideal machinery, which
lifts Dedekind factor groups to high p-adic precision for valuations.
"""

from fractions import Fraction
from math import isqrt, lcm

from . import modpoly, qpoly
from .errors import ZeroPolynomial
from .intarith import is_prime

# --- integer polynomial helpers (coefficients in [0, m)) --------------------


def _ztrim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _zmul(f, g, m):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % m
    return _ztrim(out)


def _zadd(f, g, m):
    n = max(len(f), len(g))
    return _ztrim([((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % m for i in range(n)])


def _zsub(f, g, m):
    n = max(len(f), len(g))
    return _ztrim([((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % m for i in range(n)])


def _zdivrem_monic(f, h, m):
    """Division with remainder by monic h, coefficients mod m."""
    r = list(f)
    dh = len(h) - 1
    if dh < 0:
        raise ZeroPolynomial("division by zero polynomial")
    q = [0] * max(len(r) - dh, 1)
    while len(r) - 1 >= dh:
        while r and r[-1] % m == 0:
            r.pop()
        if len(r) - 1 < dh:
            break
        k = len(r) - 1 - dh
        c = r[-1] % m
        q[k] = c
        for i in range(dh + 1):
            r[k + i] = (r[k + i] - c * h[i]) % m
        r.pop()
    return _ztrim(q), _ztrim([c % m for c in r])


def _symmetric(f, m):
    """Representatives in (-m/2, m/2]."""
    half = m // 2
    return [c - m if c > half else c for c in f]


# --- Hensel ------------------------------------------------------------------


def _hensel_step(m, f, g, h, s, t):
    """One quadratic lift: f = g*h and s*g + t*h = 1, mod m -> mod m^2.

    h monic; all polys are int coefficient lists mod the stated modulus.
    """
    m2 = m * m
    e = _zsub([c % m2 for c in f], _zmul(g, h, m2), m2)
    q, r = _zdivrem_monic(_zmul(s, e, m2), h, m2)
    g1 = _zadd(_zadd(g, _zmul(t, e, m2), m2), _zmul(q, g, m2), m2)
    h1 = _zadd(h, r, m2)
    b = _zsub(_zadd(_zmul(s, g1, m2), _zmul(t, h1, m2), m2), [1], m2)
    c, d = _zdivrem_monic(_zmul(s, b, m2), h1, m2)
    s1 = _zsub(s, d, m2)
    t1 = _zsub(_zsub(t, _zmul(t, b, m2), m2), _zmul(c, g1, m2), m2)
    return g1, h1, s1, t1


def _modpoly_xgcd(g, h, p):
    """s, t with s*g + t*h = 1 mod p, deg s < deg h, deg t < deg g."""
    r0, r1 = modpoly.mpoly(g, p), modpoly.mpoly(h, p)
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = modpoly.div_rem(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, modpoly.sub(s0, modpoly.mul(q, s1, p), p)
        t0, t1 = t1, modpoly.sub(t0, modpoly.mul(q, t1, p), p)
    if modpoly.degree(r0) != 0:
        raise ArithmeticError("factors not coprime mod p")
    inv = pow(r0[0], p - 2, p)
    s = modpoly.scale(s0, inv, p)
    t = modpoly.scale(t0, inv, p)
    s = modpoly.rem(s, modpoly.mpoly(h, p), p)
    # Recompute t so the Bezout identity stays exact after reducing s.
    num = modpoly.sub((1,), modpoly.mul(s, modpoly.mpoly(g, p), p), p)
    t = modpoly.exact_div(num, modpoly.mpoly(h, p), p)
    return list(s), list(t)


def hensel_lift_factors(f, factors, p, exponent):
    """Lift a pairwise-coprime monic factorization of monic f from mod p to mod p^exponent.

    f: integer coefficient list (ascending, monic). factors: monic int polys
    whose product is f mod p. Returns int polys mod p^exponent (coefficients
    in [0, p^exponent)), aligned with the input order.
    """
    target = p ** exponent

    def lift(fcur, facs):
        if len(facs) == 1:
            return [[c % target for c in fcur]]
        mid = len(facs) // 2
        g = [1]
        for a in facs[:mid]:
            g = _zmul(g, a, p)
        h = [1]
        for a in facs[mid:]:
            h = _zmul(h, a, p)
        s, t = _modpoly_xgcd(g, h, p)
        m = p
        while m < target:
            g, h, s, t = _hensel_step(m, fcur, g, h, s, t)
            m = m * m
        g = [c % target for c in g]
        h = [c % target for c in h]
        return lift(g, facs[:mid]) + lift(h, facs[mid:])

    return lift([c % target for c in f], [list(a) for a in factors])


# --- Zassenhaus over Z -------------------------------------------------------


def _mignotte_exponent(g, p):
    """Smallest k with p^k > 2 * 2^n * ||g||_2 (coefficient bound for monic factors)."""
    n = len(g) - 1
    norm = isqrt(sum(c * c for c in g)) + 1
    bound = 2 * (1 << n) * norm
    k = 1
    pk = p
    while pk <= bound:
        pk *= p
        k += 1
    return k


def _int_divides(g, h):
    """Exact division of integer polys by monic h; quotient or None."""
    r = list(g)
    dh = len(h) - 1
    q = [0] * max(len(r) - dh, 1)
    while len(r) - 1 >= dh:
        if r[-1] == 0:
            r.pop()
            continue
        k = len(r) - 1 - dh
        c = r[-1]
        q[k] = c
        for i in range(dh + 1):
            r[k + i] -= c * h[i]
        r.pop()
    if any(r):
        return None
    return _ztrim(q)


def factor_squarefree_monic_int(g, seed=0):
    """Irreducible monic integer factors of a squarefree monic integer poly."""
    if len(g) - 1 <= 1:
        return [list(g)] if len(g) - 1 == 1 else []
    # Smallest odd prime keeping g squarefree mod p (lc = 1 never vanishes).
    p = 3
    while True:
        if is_prime(p):
            fp = modpoly.mpoly(g, p)
            if modpoly.degree(fp) == len(g) - 1:
                d = modpoly.gcd(fp, modpoly.derivative(fp, p), p)
                if modpoly.degree(d) == 0:
                    break
        p += 2
    mod_factors = [list(h) for h, _ in modpoly.factor(modpoly.mpoly(g, p), p, seed)]
    if len(mod_factors) == 1:
        return [list(g)]
    k = _mignotte_exponent(g, p)
    q = p ** k
    lifted = hensel_lift_factors(g, mod_factors, p, k)

    pool = list(range(len(lifted)))
    found = []
    g_cur = list(g)
    size = 1
    while 2 * size <= len(pool):
        hit = False
        from itertools import combinations

        for combo in combinations(pool, size):
            prod = [1]
            for i in combo:
                prod = _zmul(prod, lifted[i], q)
            cand = _symmetric(prod, q)
            quo = _int_divides(g_cur, cand)
            if quo is not None:
                found.append(cand)
                g_cur = quo
                pool = [i for i in pool if i not in combo]
                hit = True
                break
        if not hit:
            size += 1
    if len(g_cur) - 1 > 0:
        found.append(g_cur)
    return found


def factor_rational_poly(f, seed=0):
    """(content, [(monic irreducible over Q, multiplicity)]) with exact reconstruction.

    content is the leading coefficient of f, so content times the product of
    the monic factors (with multiplicity) rebuilds f.
    """
    if qpoly.is_zero(f):
        raise ZeroPolynomial("factor of zero polynomial")
    content = qpoly.leading(f)
    fm = qpoly.monic(f)
    if qpoly.degree(fm) == 0:
        return content, []
    out = []
    for sq, mult in qpoly.squarefree_decomposition(fm):
        # Monic integer model: G(x) = d^n * sq(x/d) for d = common denominator.
        d = lcm(*[c.denominator for c in sq])
        n = qpoly.degree(sq)
        G = [int(sq[i] * d ** (n - i)) for i in range(n + 1)]
        for h in factor_squarefree_monic_int(G, seed):
            # Undo the substitution: factor(x) = d^-m * h(d x).
            m = len(h) - 1
            back = qpoly.poly([Fraction(h[i]) * Fraction(d) ** (i - m) for i in range(m + 1)])
            out.append((back, mult))
    out.sort(key=lambda t: (qpoly.degree(t[0]), t[0]))
    return content, out


def is_irreducible_q(f) -> bool:
    """Irreducibility over Q (degree >= 1)."""
    if qpoly.degree(f) < 1:
        return False
    _, factors = factor_rational_poly(f)
    return len(factors) == 1 and factors[0][1] == 1
