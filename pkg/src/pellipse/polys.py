"""Dense univariate polynomial utilities over exact and floating scalars.

Polynomials are plain lists of coefficients in **ascending** order
(``[c0, c1, ...]`` represents ``c0 + c1 x + ...``).  All arithmetic is
scalar-generic: it works uniformly for ``int``/``Fraction`` (exact),
``decimal.Decimal`` and ``float``.  Exact real-root isolation uses Sturm
chains over ``Fraction``; resultants and discriminants use a Sylvester
matrix with fraction-free Bareiss elimination over the integers.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Callable, Sequence

from .errors import DomainError

__all__ = [
    "trim",
    "degree",
    "padd",
    "psub",
    "pneg",
    "pscale",
    "pmul",
    "peval",
    "pderiv",
    "pdivmod",
    "pcompose",
    "poly_sqrt",
    "resultant",
    "discriminant",
    "sturm_chain",
    "count_real_roots",
    "isolate_real_roots",
    "refine_root",
    "real_roots",
    "rationalize_root",
    "det",
    "nullspace_vector",
    "frac_sqrt",
]

Poly = Sequence


# ---------------------------------------------------------------------------
# basic arithmetic
# ---------------------------------------------------------------------------


def trim(c: Poly) -> list:
    """Drop trailing zero coefficients (keeping at least the constant term)."""
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def degree(c: Poly) -> int:
    """Degree of the trimmed polynomial (the zero polynomial has degree 0)."""
    return len(trim(c)) - 1


def padd(u: Poly, v: Poly) -> list:
    """Coefficient-wise sum."""
    n = max(len(u), len(v))
    out = []
    for k in range(n):
        a = u[k] if k < len(u) else 0
        b = v[k] if k < len(v) else 0
        out.append(a + b)
    return out


def pneg(u: Poly) -> list:
    """Negation."""
    return [-a for a in u]


def psub(u: Poly, v: Poly) -> list:
    """Difference ``u - v``."""
    return padd(u, pneg(v))


def pscale(u: Poly, s) -> list:
    """Scalar multiple ``s * u``."""
    return [s * a for a in u]


def pmul(u: Poly, v: Poly) -> list:
    """Product by convolution."""
    out = [0 * (u[0] * v[0])] * (len(u) + len(v) - 1) if u and v else []
    for i, a in enumerate(u):
        if a == 0:
            continue
        for j, b in enumerate(v):
            out[i + j] = out[i + j] + a * b
    return out


def peval(c: Poly, x):
    """Evaluate by Horner's rule."""
    acc = 0 * x
    for a in reversed(list(c)):
        acc = acc * x + a
    return acc


def pderiv(c: Poly) -> list:
    """Formal derivative."""
    if len(c) <= 1:
        return [0 * c[0]] if c else [0]
    return [k * c[k] for k in range(1, len(c))]


def pdivmod(u: Poly, v: Poly) -> tuple[list, list]:
    """Quotient and remainder of ``u / v`` over a field."""
    u = trim(u)
    v = trim(v)
    if v == [0] or all(a == 0 for a in v):
        raise ZeroDivisionError("polynomial division by zero")
    q = [0 * v[-1]] * max(1, len(u) - len(v) + 1)
    r = list(u)
    dv = len(v) - 1
    lead = v[-1]
    while len(r) - 1 >= dv and any(a != 0 for a in r):
        k = len(r) - 1 - dv
        coef = r[-1] / lead
        q[k] = q[k] + coef
        for i in range(len(v)):
            r[k + i] = r[k + i] - coef * v[i]
        r.pop()
        while len(r) > 1 and r[-1] == 0:
            r.pop()
    return trim(q), trim(r)


def pcompose(outer: Poly, inner: Poly) -> list:
    """Composition ``outer(inner(x))`` by Horner over polynomials."""
    acc: list = [0 * outer[-1]]
    for a in reversed(list(outer)):
        acc = padd(pmul(acc, inner), [a])
    return acc


def frac_sqrt(q: Fraction) -> Fraction:
    """Exact square root of a rational perfect square.

    Raises :class:`DomainError` when ``q`` is negative or not a perfect
    square of a rational.
    """
    if q < 0:
        raise DomainError(f"square root of negative rational {q}")
    num, den = q.numerator, q.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise DomainError(f"{q} is not the square of a rational")
    return Fraction(rn, rd)


def poly_sqrt(q: Poly, sqrt: Callable | None = None) -> list:
    """Square root of a perfect-square polynomial, leading coefficient > 0.

    Coefficients are recovered top-down from the leading term, which keeps
    the recurrence well-posed even when the constant term vanishes.  The
    ``sqrt`` callable extracts the scalar root of the leading coefficient
    (defaults to :func:`frac_sqrt` for ``Fraction`` input, ``math.sqrt``
    otherwise).  The reconstruction is *not* verified here; callers should
    check ``q - root**2`` themselves when the input may fail to be square.
    """
    q = trim(q)
    d2 = len(q) - 1
    if d2 % 2 != 0:
        raise DomainError("perfect-square polynomial must have even degree")
    if sqrt is None:
        if isinstance(q[-1], Fraction) or isinstance(q[-1], int):
            sqrt = lambda x: frac_sqrt(Fraction(x))  # noqa: E731
        else:
            import math

            sqrt = math.sqrt
    d = d2 // 2
    c = [0 * q[0]] * (d + 1)
    c[d] = sqrt(q[d2])
    for j in range(1, d + 1):
        s = q[d2 - j]
        for i in range(1, j):
            if d - j + i >= 0:
                s = s - c[d - i] * c[d - j + i]
        c[d - j] = s / (2 * c[d])
    return c


# ---------------------------------------------------------------------------
# resultant / discriminant (exact)
# ---------------------------------------------------------------------------


def _to_int_poly(c: Poly) -> tuple[list[int], int]:
    """Scale a rational polynomial to integers; return (poly, multiplier)."""
    fracs = [Fraction(a) for a in c]
    lcm = 1
    for f in fracs:
        d = f.denominator
        g = _gcd(lcm, d)
        lcm = lcm // g * d
    return [int(f * lcm) for f in fracs], lcm


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix (Bareiss)."""
    a = [row[:] for row in m]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def resultant(u: Poly, v: Poly) -> Fraction:
    """Exact resultant of two rational polynomials via Sylvester/Bareiss."""
    ui, lu = _to_int_poly(trim(u))
    vi, lv = _to_int_poly(trim(v))
    m, n = len(ui) - 1, len(vi) - 1
    if m == 0 or n == 0:
        # Res(const, q) = const**deg(q)
        if m == 0:
            return Fraction(ui[0], lu) ** n
        return Fraction(vi[0], lv) ** m
    size = m + n
    rows: list[list[int]] = []
    urev = list(reversed(ui))
    vrev = list(reversed(vi))
    for i in range(n):
        rows.append([0] * i + urev + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + vrev + [0] * (size - n - 1 - i))
    det_int = _bareiss_det(rows)
    return Fraction(det_int) / (Fraction(lu) ** n * Fraction(lv) ** m)


def discriminant(c: Poly) -> Fraction:
    """Exact discriminant ``(-1)^(d(d-1)/2) Res(p, p') / lead(p)``."""
    p = [Fraction(a) for a in trim(c)]
    d = len(p) - 1
    if d < 1:
        raise DomainError("discriminant requires degree >= 1")
    if d == 1:
        return Fraction(1)
    res = resultant(p, pderiv(p))
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * res / p[-1]


# ---------------------------------------------------------------------------
# Sturm isolation and refinement over Fraction
# ---------------------------------------------------------------------------


def _frac_poly(c: Poly) -> list[Fraction]:
    return trim([Fraction(a) for a in c])


def _pgcd(u: list[Fraction], v: list[Fraction]) -> list[Fraction]:
    u, v = trim(u), trim(v)
    while any(a != 0 for a in v):
        _, r = pdivmod(u, v)
        u, v = v, r
    if u[-1] != 0:
        u = [a / u[-1] for a in u]
    return u


def squarefree_part(c: Poly) -> list[Fraction]:
    """``p / gcd(p, p')`` — same real roots, all simple."""
    p = _frac_poly(c)
    if len(p) <= 2:
        return p
    g = _pgcd(p, pderiv(p))
    if degree(g) == 0:
        return p
    q, r = pdivmod(p, g)
    if any(a != 0 for a in r):  # pragma: no cover - exact division by gcd
        raise DomainError("square-free reduction failed")
    return trim(q)


def sturm_chain(c: Poly) -> list[list[Fraction]]:
    """Sturm chain of the square-free part of ``c``."""
    p = squarefree_part(c)
    chain = [p, trim(pderiv(p))]
    while degree(chain[-1]) > 0:
        _, r = pdivmod(chain[-2], chain[-1])
        r = trim(r)
        if all(a == 0 for a in r):
            break
        chain.append(pneg(r))
    return chain


def _variations(chain: list[list[Fraction]], x: Fraction) -> int:
    signs = []
    for p in chain:
        v = peval(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(chain: list[list[Fraction]], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in ``(lo, hi]`` by Sturm's theorem."""
    return _variations(chain, lo) - _variations(chain, hi)


def _cauchy_bound(p: list[Fraction]) -> Fraction:
    lead = abs(p[-1])
    m = max(abs(a) for a in p[:-1]) if len(p) > 1 else Fraction(0)
    return 1 + m / lead


def isolate_real_roots(c: Poly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open intervals each containing exactly one real root."""
    p = squarefree_part(c)
    if degree(p) == 0:
        return []
    chain = sturm_chain(p)
    bound = _cauchy_bound(p)
    lo, hi = -bound, bound
    # Nudge endpoints off roots (Cauchy bound is strict, but be safe).
    while peval(p, lo) == 0:
        lo -= 1
    while peval(p, hi) == 0:
        hi += 1
    total = count_real_roots(chain, lo, hi)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi, total)]
    while stack:
        a, b, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        shift = (b - a) / 4
        while peval(p, mid) == 0:
            # the midpoint hit a root exactly; step off it by a strictly
            # decreasing offset (stays inside (a, b), and a polynomial has
            # only finitely many roots, so this terminates)
            mid += shift
            shift /= 2
        kl = count_real_roots(chain, a, mid)
        stack.append((a, mid, kl))
        stack.append((mid, b, k - kl))
    out.sort(key=lambda ab: ab[0])
    return out


def refine_root(c: Poly, lo: Fraction, hi: Fraction, digits: int = 60) -> Fraction:
    """Bisect a sign-changing bracket down to ``10**-digits`` width."""
    p = squarefree_part(c)
    flo = peval(p, lo)
    if flo == 0:
        return lo
    fhi = peval(p, hi)
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise DomainError("refine_root requires a sign change on the bracket")
    tol = Fraction(1, 10**digits) * max(Fraction(1), abs(lo), abs(hi))
    while hi - lo > tol:
        mid = (lo + hi) / 2
        fm = peval(p, mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def real_roots(c: Poly, digits: int = 60) -> list[Fraction]:
    """All distinct real roots, refined to ``10**-digits``, ascending."""
    return [refine_root(c, a, b, digits) for a, b in isolate_real_roots(c)]


def rationalize_root(c: Poly, approx: Fraction, max_den: int = 10**9) -> Fraction | None:
    """Return the exact rational root near ``approx`` if one exists."""
    p = _frac_poly(c)
    cand = Fraction(approx).limit_denominator(max_den)
    if peval(p, cand) == 0:
        return cand
    return None


# ---------------------------------------------------------------------------
# generic dense linear algebra (works for Fraction / Decimal / float)
# ---------------------------------------------------------------------------


def det(matrix: Sequence[Sequence]) -> object:
    """Determinant by Gaussian elimination with partial pivoting.

    Pivoting by absolute value is valid for all supported scalar types;
    for exact scalars the result is exact.
    """
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        raise DomainError("empty matrix")
    zero = a[0][0] - a[0][0]  # typed zero
    sign = 1
    detv = None
    for k in range(n):
        piv = max(range(k, n), key=lambda r: abs(a[r][k]))
        if a[piv][k] == 0:
            return zero
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        detv = a[k][k] if detv is None else detv * a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] = a[i][j] - f * a[k][j]
    return -detv if sign < 0 else detv


def nullspace_vector(matrix: Sequence[Sequence]) -> list:
    """One null vector of a square matrix of rank ``n-1``.

    Full pivoting with column-permutation tracking; the free variable is
    set to 1 and the system back-substituted.  For exact scalars on a
    genuinely singular matrix the vector is exact.
    """
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        raise DomainError("empty matrix")
    perm = list(range(n))
    for k in range(n - 1):
        piv = max(range(k, n), key=lambda r: max(abs(a[r][c]) for c in range(k, n)))
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
        pc = max(range(k, n), key=lambda c: abs(a[k][c]))
        if pc != k:
            for row in a:
                row[k], row[pc] = row[pc], row[k]
            perm[k], perm[pc] = perm[pc], perm[k]
        if a[k][k] == 0:
            break
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] = a[i][j] - f * a[k][j]
    one = 0 * a[0][0] + 1  # multiplicative identity in the matrix's field
    x = [0 * a[0][0]] * n
    x[n - 1] = one
    for k in range(n - 2, -1, -1):
        s = 0 * a[0][0]
        for j in range(k + 1, n):
            s = s + a[k][j] * x[j]
        if a[k][k] == 0:
            raise DomainError("matrix rank below n-1; null space not unique")
        x[k] = -s / a[k][k]
    out = [0 * a[0][0]] * n
    for i, p in enumerate(perm):
        out[p] = x[i]
    return out
