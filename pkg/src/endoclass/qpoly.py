"""Dense univariate polynomials over Q.

A polynomial is an immutable tuple of Fractions in ascending order with no
trailing zeros; the zero polynomial is the empty tuple. Everything here is
exact — no floating point.
"""

from fractions import Fraction
from math import gcd, lcm

from .errors import ZeroPolynomial

Poly = tuple  # tuple[Fraction, ...]

ZERO: Poly = ()
ONE: Poly = (Fraction(1),)
X: Poly = (Fraction(0), Fraction(1))


def poly(coeffs) -> Poly:
    """Build a polynomial from any iterable of rational-like coefficients."""
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def degree(f: Poly) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(f) - 1


def is_zero(f: Poly) -> bool:
    return not f


def leading(f: Poly) -> Fraction:
    if not f:
        raise ZeroPolynomial("leading coefficient of zero polynomial")
    return f[-1]


def constant(c) -> Poly:
    return poly([c])


def add(f: Poly, g: Poly) -> Poly:
    n = max(len(f), len(g))
    return poly([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)])


def neg(f: Poly) -> Poly:
    return tuple(-c for c in f)


def sub(f: Poly, g: Poly) -> Poly:
    return add(f, neg(g))


def scale(f: Poly, c) -> Poly:
    c = Fraction(c)
    if c == 0:
        return ZERO
    return tuple(a * c for a in f)


def mul(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ZERO
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return poly(out)


def div_rem(f: Poly, g: Poly):
    """Quotient and remainder with deg(r) < deg(g)."""
    if not g:
        raise ZeroPolynomial("division by zero polynomial")
    r = list(f)
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 1)
    dg, lg = degree(g), g[-1]
    while len(r) >= len(g) and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(g):
            break
        k = len(r) - len(g)
        c = r[-1] / lg
        q[k] = c
        for i in range(len(g)):
            r[k + i] -= c * g[i]
        r.pop()
    return poly(q), poly(r)


def rem(f: Poly, g: Poly) -> Poly:
    return div_rem(f, g)[1]


def exact_div(f: Poly, g: Poly) -> Poly:
    q, r = div_rem(f, g)
    if r:
        raise ArithmeticError("division not exact")
    return q


def monic(f: Poly) -> Poly:
    if not f:
        raise ZeroPolynomial("monic of zero polynomial")
    return scale(f, 1 / f[-1])


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; gcd(f, 0) = monic(f), gcd(0, 0) = 0."""
    a, b = f, g
    while b:
        a, b = b, rem(a, b)
    return monic(a) if a else ZERO


def evaluate(f: Poly, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def derivative(f: Poly) -> Poly:
    return poly([i * c for i, c in enumerate(f)][1:])


def compose(f: Poly, g: Poly) -> Poly:
    """f(g(x))."""
    acc = ZERO
    for c in reversed(f):
        acc = add(mul(acc, g), constant(c))
    return acc


def shift(f: Poly, a) -> Poly:
    """f(x + a)."""
    return compose(f, (Fraction(a), Fraction(1)))


def pow_mod(f: Poly, e: int, m: Poly) -> Poly:
    """f^e mod m."""
    result = ONE
    base = rem(f, m)
    while e:
        if e & 1:
            result = rem(mul(result, base), m)
        base = rem(mul(base, base), m)
        e >>= 1
    return result


def resultant(f: Poly, g: Poly) -> Fraction:
    """Res(f, g) via the Euclidean scheme; equals the Sylvester determinant."""
    if not f or not g:
        raise ZeroPolynomial("resultant with zero polynomial")
    res = Fraction(1)
    a, b = f, g
    while True:
        da, db = degree(a), degree(b)
        if db == 0:
            return res * b[0] ** da
        r = rem(a, b)
        if not r:
            return Fraction(0)
        dr = degree(r)
        res *= Fraction(-1) ** (da * db) * b[-1] ** (da - dr)
        a, b = b, r


def discriminant(f: Poly) -> Fraction:
    """disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)."""
    n = degree(f)
    if n < 1:
        raise ZeroPolynomial("discriminant needs degree >= 1")
    df = derivative(f)
    if not df:
        return Fraction(0)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, df) / f[-1]


def squarefree_decomposition(f: Poly):
    """Yun's algorithm: list of (monic squarefree factor, multiplicity)."""
    if not f:
        raise ZeroPolynomial("squarefree decomposition of zero")
    f = monic(f)
    if degree(f) == 0:
        return []
    out = []
    df = derivative(f)
    a = poly_gcd(f, df)
    b = exact_div(f, a)
    c = exact_div(df, a)
    i = 1
    while degree(b) > 0:
        d = sub(c, derivative(b))
        g = poly_gcd(b, d)
        if degree(g) > 0:
            out.append((monic(g), i))
        b2 = exact_div(b, g)
        c = exact_div(d, g)
        b = b2
        i += 1
    return out


def is_squarefree(f: Poly) -> bool:
    return degree(poly_gcd(f, derivative(f))) == 0


def content_int(f: Poly):
    """(content, primitive integer coefficient list) for f != 0.

    content is the positive rational c with f = c * primitive, where primitive
    has integer coefficients of gcd 1.
    """
    if not f:
        raise ZeroPolynomial("content of zero polynomial")
    den = lcm(*[c.denominator for c in f])
    ints = [int(c * den) for c in f]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return Fraction(g, den), [v // g for v in ints]


def interpolate(points) -> Poly:
    """Lagrange interpolation through [(x_i, y_i)] with distinct x_i."""
    result = ZERO
    xs = [Fraction(x) for x, _ in points]
    for i, (xi, yi) in enumerate(points):
        xi = Fraction(xi)
        num = ONE
        den = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            num = mul(num, (-xj, Fraction(1)))
            den *= xi - xj
        result = add(result, scale(num, Fraction(yi) / den))
    return result


def from_int_list(coeffs) -> Poly:
    return poly(coeffs)


def to_string(f: Poly, var: str = "x") -> str:
    """Human-readable form, highest degree first."""
    if not f:
        return "0"
    parts = []
    for i in range(degree(f), -1, -1):
        c = f[i]
        if c == 0:
            continue
        if i == 0:
            term = str(c)
        else:
            xi = var if i == 1 else f"{var}^{i}"
            if c == 1:
                term = xi
            elif c == -1:
                term = f"-{xi}"
            else:
                term = f"{c}*{xi}"
        parts.append(term)
    s = parts[0]
    for term in parts[1:]:
        s += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return s
