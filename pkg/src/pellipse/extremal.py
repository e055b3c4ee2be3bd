"""Polynomial Pell certificates and extremal-polynomial cross-checks.

An ``(n, n1)``-periodic caustic ``gamma`` of the boundary ellipse induces a
polynomial Pell equation ``ph**2 - E4 * qh**2 = 1`` where

    E4(s) = s (s - 1/a) (s + 1/b) (s - 1/gamma),

``deg ph = n`` and ``deg qh = n - 2``.  The pair ``(ph, qh)`` is built from
a null vector of a Toeplitz system on the Taylor coefficients of the
square-root series, then lifted by the Chebyshev doubling
``ph = 2 p**2 - 1`` (even ``n``) or ``ph = 2 (s - 1/gamma) p**2 + sign(gamma)``
(odd ``n``).  ``ph`` equioscillates between the band endpoints
``c1 < c2 < c3 < c4 = sorted {0, 1/a, -1/b, 1/gamma}``: together with the
``n - 2`` interior roots of ``qh`` (``tau2`` in ``[c1, c2]``, ``tau1`` in
``[c3, c4]``) there are ``n + 2`` points where ``|ph| = 1``.

Rational ``(a, b, gamma)`` run in exact arithmetic (residual exactly 0);
floating caustics are Newton-polished and evaluated in 50-digit decimal
arithmetic.  The module also provides the Kolmogorov-style rotation-number
integrals, Jacobi elliptic functions via the arithmetic-geometric mean,
the degree-3 Zolotarev consistency identities, the four Akhiezer
least-deviation regimes and the light-like (Chebyshev) special case.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction

import numpy as np

from . import polys
from .cayley import (
    ELLIPTIC_CASES,
    _coerce_field,
    _decimal_context,
    _ladder,
    elliptic_case_test,
    is_periodic,
)
from .config import resolve_epsilon
from .dynamics import partition_counts, simulate, start_on_caustic
from .errors import CertificateInvalid, DomainError, NoCertificate, PellipseError
from .geometry import BoundaryEllipse

__all__ = [
    "PellPair",
    "PellCertificate",
    "ZolotarevReport",
    "chebyshev",
    "pell_construct",
    "pell_lift",
    "elliptic_pell_check",
    "kln_partition",
    "jacobi_elliptic",
    "complete_K",
    "zolotarev3_consistency",
    "akhiezer_p4",
    "lightlike_periodic",
    "lightlike_pell_check",
]


# ---------------------------------------------------------------------------
# Chebyshev polynomials
# ---------------------------------------------------------------------------


def chebyshev(n: int) -> list[int]:
    """Coefficients (ascending) of the Chebyshev polynomial ``T_n``."""
    if n < 0:
        raise DomainError(f"Chebyshev degree must be >= 0, got {n}")
    t0, t1 = [1], [0, 1]
    if n == 0:
        return t0
    for _ in range(n - 1):
        t0, t1 = t1, polys.psub(polys.pmul([0, 2], t1), t0)
    return t1


def _chebyshev_u(n: int) -> list[int]:
    """Coefficients (ascending) of the second-kind polynomial ``U_n``."""
    u0, u1 = [1], [0, 2]
    if n == 0:
        return u0
    for _ in range(n - 1):
        u0, u1 = u1, polys.psub(polys.pmul([0, 2], u1), u0)
    return u1


# ---------------------------------------------------------------------------
# Toeplitz systems on the series coefficients
# ---------------------------------------------------------------------------


def _toeplitz(S: list, start: int, rows: int, cols: int) -> list[list]:
    zero = 0 * S[0]
    return [
        [S[start + i - j] if 0 <= start + i - j < len(S) else zero for j in range(cols)]
        for i in range(rows)
    ]


def _periodic_layout(n: int) -> tuple[str, int, int, int]:
    """(variant, start, size, m): the square system whose null vector is q*."""
    if n % 2 == 0:
        m = n // 2
        return "B", m + 1, m - 1, m
    m = (n - 1) // 2
    return "C", m + 1, m, m


def _elliptic_layout(n: int, ladder: str) -> tuple[int, int, int, int]:
    """(start, size, d1, d2) of the elliptic certificate system."""
    m = n // 2
    if n % 2 == 0:
        return m, m, m - 1, m - 1
    return m + 1, m, m, m - 1


def _trunc_product(v: list, S: list, upto: int) -> list:
    """Coefficients ``0..upto`` of ``(sum v_j x^j) * (sum S_k x^k)``."""
    out = []
    for k in range(upto + 1):
        s = 0 * S[0]
        for j in range(min(k, len(v) - 1) + 1):
            s = s + v[j] * S[k - j]
        out.append(s)
    return out


def _newton_polish(a: Decimal, b: Decimal, g0: Decimal, order: int, variant: str, start: int, size: int) -> Decimal:
    """Polish ``gamma`` so the square Toeplitz determinant vanishes.

    Central-difference Newton iteration in 50-digit decimal arithmetic;
    converges quadratically from a double-precision seed for the simple
    roots of the closure conditions.
    """
    h = Decimal(10) ** -30
    tol = Decimal(10) ** -42

    def f(g: Decimal) -> Decimal:
        S = _ladder(a, b, g, variant, order)
        return polys.det(_toeplitz(S, start, size, size))

    g = g0
    for _ in range(60):
        fp = (f(g + h) - f(g - h)) / (2 * h)
        if fp == 0:
            break
        dg = f(g) / fp
        g = g - dg
        if abs(dg) < tol * max(Decimal(1), abs(g)):
            break
    return g


# ---------------------------------------------------------------------------
# Pell pair construction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PellPair:
    """The primitive solution ``(p, q)`` of the half-degree Pell identity.

    ``p`` and ``q`` are float coefficient tuples (ascending).  The exact
    squares ``p**2``, ``p q``, ``q**2`` — rational polynomials even when
    ``p`` itself carries an irrational scale — are kept internally for the
    lossless lift to the full certificate.
    """

    p: tuple[float, ...]
    q: tuple[float, ...]
    n: int
    gamma: float
    ellipse: BoundaryEllipse
    p2: tuple = field(repr=False)
    pq: tuple = field(repr=False)
    q2: tuple = field(repr=False)
    gamma_exact: object = field(repr=False)
    mode: str = field(repr=False)

    def __iter__(self):
        yield list(self.p)
        yield list(self.q)


@dataclass(frozen=True)
class PellCertificate:
    """A verified polynomial Pell certificate for an ``n``-periodic caustic.

    ``partition`` is the pair ``(n, n1)`` (total period, bounces on
    relativistic-ellipse arcs); ``tau1``/``tau2`` count interior roots of
    ``q_hat`` in the bands ``[c3, c4]`` / ``[c1, c2]``; ``equioscillation``
    lists the ``n + 2`` points where ``|p_hat| = 1``.
    """

    n: int
    gamma: float
    c: tuple[float, float, float, float]
    p_hat: tuple[float, ...]
    q_hat: tuple[float, ...]
    residual: object
    tau1: int
    tau2: int
    partition: tuple[int, int]
    equioscillation: tuple[float, ...]

    def to_jsonable(self, kln_ratio: float | None = None) -> dict:
        doc = {
            "n": self.n,
            "gamma": self.gamma,
            "c": list(self.c),
            "p_hat": list(self.p_hat),
            "q_hat": list(self.q_hat),
            "residual": float(self.residual),
            "tau1": self.tau1,
            "tau2": self.tau2,
            "partition": list(self.partition),
        }
        if kln_ratio is not None:
            doc["kln_ratio"] = kln_ratio
        return doc


def _band_endpoints(a: float, b: float, g: float) -> tuple[float, float, float, float]:
    cs = sorted([0.0, 1.0 / a, -1.0 / b, 1.0 / g])
    return cs[0], cs[1], cs[2], cs[3]


def pell_construct(E: BoundaryEllipse, gamma, n: int, eps: float | None = None) -> PellPair:
    """Construct the primitive Pell pair for an ``n``-periodic caustic.

    ``gamma`` must pass the Hankel periodicity test at period ``n``
    (otherwise :class:`NoCertificate`: the certificate system has a trivial
    null space).  Rational ``(a, b, gamma)`` are processed exactly; floats
    are Newton-polished in 50-digit decimal arithmetic.
    """
    if n < 3:
        raise DomainError(f"Pell construction requires n >= 3, got {n}")
    verdict = is_periodic(E, float(gamma), n, eps)
    if not verdict.periodic:
        raise NoCertificate(
            f"no Pell certificate: Hankel test rejects gamma={float(gamma)!r} at n={n} "
            f"(determinant {float(verdict.determinant_value):.3e}; null space trivial)"
        )
    variant, start, size, m = _periodic_layout(n)
    order = 2 * n + 6
    mode, (fa, fb, fg) = _coerce_field(E.a, E.b, gamma)
    if mode == "fraction":
        return _construct_exact(E, fa, fb, fg, n, variant, start, size, m, mode)
    with localcontext(_decimal_context()):
        if mode == "float":
            fa, fb, fg = Decimal(fa), Decimal(fb), Decimal(fg)
        dg = _newton_polish(fa, fb, fg, order, variant, start, size)
        if abs(dg - fg) > Decimal("1e-6") * max(Decimal(1), abs(dg)):
            raise NoCertificate(
                f"gamma={gamma!r} is not within polishing range of a period-{n} caustic"
            )
        return _construct_exact(E, fa, fb, dg, n, variant, start, size, m, "decimal")


def _construct_exact(E, a, b, g, n, variant, start, size, m, mode) -> PellPair:
    """Shared exact/decimal pipeline once the scalar field is fixed."""
    order = 2 * n + 6
    S = _ladder(a, b, g, variant, order)
    v = polys.nullspace_vector(_toeplitz(S, start, size, size))
    d2 = len(v) - 1
    ph = _trunc_product(v, S, m)
    lead = ph[m]
    if lead == 0:
        raise NoCertificate("degenerate certificate: leading coefficient vanished")
    rev_p = [ph[m - i] for i in range(m + 1)]
    rev_q = [v[d2 - i] for i in range(d2 + 1)]
    lead2 = lead * lead
    pp = [c / lead2 for c in polys.pmul(rev_p, rev_p)]
    pq_ = [c / lead2 for c in polys.pmul(rev_p, rev_q)]
    qq = [c / lead2 for c in polys.pmul(rev_q, rev_q)]
    if n % 2 == 0:
        p2, pq, q2 = pp, pq_, qq
        scale_p = 1 / abs(_to_float(lead))
        scale_q = scale_p
    else:
        eps_sign = 1 if g > 0 else -1
        g_abs = g if g > 0 else -g
        p2 = [c * g_abs for c in pp]
        pq = [c * eps_sign for c in pq_]
        q2 = [c / g_abs for c in qq]
        sg = math.sqrt(abs(_to_float(g)))
        scale_p = sg / abs(_to_float(lead))
        scale_q = 1 / (sg * abs(_to_float(lead)))
        if _to_float(g) < 0:
            scale_p = -scale_p  # p = rev_p * g / (sqrt|g| |lead|)
    p_float = tuple(_to_float(c) * scale_p for c in rev_p)
    q_float = tuple(_to_float(c) * scale_q for c in rev_q)
    return PellPair(
        p=p_float,
        q=q_float,
        n=n,
        gamma=_to_float(g),
        ellipse=E,
        p2=tuple(p2),
        pq=tuple(pq),
        q2=tuple(q2),
        gamma_exact=g,
        mode=mode,
    )


def _to_float(x) -> float:
    return float(x)


def pell_lift(
    pair: PellPair,
    eps: float | None = None,
    validate_partition: bool = True,
    seed: int = 0,
) -> PellCertificate:
    """Lift a Pell pair to the full certificate and verify the identity.

    Builds ``p_hat``/``q_hat`` by Chebyshev doubling, checks
    ``p_hat**2 - E4 * q_hat**2 - 1 = 0`` (exactly in rational mode, to
    ``max(eps, 1e-8)`` otherwise; :class:`CertificateInvalid` on failure),
    counts the ``q_hat`` root bands and records the equioscillation points.
    The partition ``(n, n1)`` is measured on an independent simulated
    trajectory unless ``validate_partition`` is false, in which case it is
    derived from the band counts.
    """
    n = pair.n
    g = pair.gamma_exact
    one = g / g
    if pair.mode == "decimal":
        ctx = localcontext(_decimal_context())
    else:
        ctx = _nullcontext()
    with ctx:
        ia, ib = _field_like(pair.ellipse.a, g), _field_like(pair.ellipse.b, g)
        if n % 2 == 0:
            ph = polys.padd(polys.pscale(pair.p2, 2), [-one])
        else:
            eps_sign = one if g > 0 else -one
            ph = polys.padd(
                polys.pscale(polys.pmul([-1 / g, one], list(pair.p2)), 2), [eps_sign]
            )
        qh = polys.pscale(pair.pq, 2)
        e4 = polys.pmul(
            polys.pmul([0 * one, one], [-1 / ia, one]),
            polys.pmul([1 / ib, one], [-1 / g, one]),
        )
        res_poly = polys.psub(
            polys.psub(polys.pmul(ph, ph), polys.pmul(e4, polys.pmul(qh, qh))), [one]
        )
        residual = max(abs(c) for c in res_poly)
    tol = max(resolve_epsilon(eps), 1e-8)
    if float(residual) > tol:
        raise CertificateInvalid(
            f"Pell identity residual {float(residual):.3e} exceeds {tol:.1e}"
        )
    a, b = float(pair.ellipse.a), float(pair.ellipse.b)
    cs = _band_endpoints(a, b, pair.gamma)
    ph_f = [float(c) for c in ph]
    qh_f = [float(c) for c in qh]
    tau1, tau2, eq_points = _bands_and_equioscillation(ph_f, qh_f, cs)
    if validate_partition:
        n1 = _simulated_partition(pair.ellipse, pair.gamma, n, seed)
    else:
        n1 = tau2 + 1
    return PellCertificate(
        n=n,
        gamma=pair.gamma,
        c=cs,
        p_hat=tuple(ph_f),
        q_hat=tuple(qh_f),
        residual=residual if isinstance(residual, Fraction) else float(residual),
        tau1=tau1,
        tau2=tau2,
        partition=(n, n1),
        equioscillation=tuple(eq_points),
    )


class _nullcontext:
    def __enter__(self):
        return None

    def __exit__(self, *exc):
        return False


def _field_like(x, template):
    if isinstance(template, Fraction):
        return Fraction(x)
    if isinstance(template, Decimal):
        return Decimal(float(x))
    return float(x)


def _bands_and_equioscillation(
    ph: list[float], qh: list[float], cs: tuple[float, float, float, float]
) -> tuple[int, int, list[float]]:
    c1, c2, c3, c4 = cs
    span = c4 - c1
    buf = 1e-9 * span
    coeffs = list(qh)
    top = max(abs(c) for c in coeffs)
    while len(coeffs) > 1 and abs(coeffs[-1]) <= 1e-13 * top:
        coeffs.pop()
    roots: list[float] = []
    if len(coeffs) > 1:
        for z in np.roots(list(reversed(coeffs))):
            if abs(z.imag) <= 1e-7 * (1 + abs(z)):
                roots.append(float(z.real))
    tau2 = sum(1 for r in roots if c1 - buf <= r <= c2 + buf)
    tau1 = sum(1 for r in roots if c3 - buf <= r <= c4 + buf)
    scale = max(abs(c) for c in ph)
    interior = [
        r
        for r in roots
        if (c1 - buf <= r <= c2 + buf or c3 - buf <= r <= c4 + buf)
        and abs(abs(polys.peval(ph, r)) - 1) <= 1e-6 * max(1.0, scale)
    ]
    eq_points = sorted(list(cs) + interior)
    return tau1, tau2, eq_points


def _simulated_partition(E: BoundaryEllipse, gamma: float, n: int, seed: int) -> int:
    rng = random.Random(seed)
    last: Exception | None = None
    for _ in range(6):
        try:
            P0, d0 = start_on_caustic(E, gamma, rng)
            T = simulate(P0, d0, n, E)
            n1, _ = partition_counts(T, n, 1e-6)
            return n1
        except PellipseError as exc:  # retry with a fresh tangent line
            last = exc
    raise CertificateInvalid(
        f"validation trajectory failed to close for gamma={gamma}: {last}"
    )


# ---------------------------------------------------------------------------
# elliptic-periodic certificate check
# ---------------------------------------------------------------------------


def elliptic_pell_check(E: BoundaryEllipse, gamma, n: int, case: str, eps: float | None = None):
    """Residual of the case identity for an elliptic ``n``-periodic caustic.

    Verifies that ``gamma`` matches ``case`` (raising :class:`DomainError`
    on mismatch), builds the case polynomial pair from the matching ladder
    and returns the maximal coefficient of the identity defect — an exact
    rational zero in rational mode, a float otherwise.  The five identities
    are, with ``A = s - 1/a``, ``Bp = s + 1/b``, ``G = s - 1/gamma``:

    * even, case a: ``s A p**2 - Bp G q**2 = 1``
    * even, case b: ``s Bp p**2 - A G q**2 = 1``
    * even, case c: ``s G p**2 - A Bp q**2 = 1``
    * odd, cases a/d: ``Bp p**2 - s A G q**2 = 1``
    * odd, cases b/e: ``A p**2 - s Bp G q**2 = -1``
    """
    if n < 2:
        raise DomainError(f"elliptic certificate requires n >= 2, got {n}")
    parity = "even" if n % 2 == 0 else "odd"
    if (parity, case) not in ELLIPTIC_CASES:
        raise DomainError(f"unknown elliptic case {case!r} for n={n}")
    verdict = elliptic_case_test(E, float(gamma), n, eps)
    if verdict.case != case:
        raise DomainError(
            f"case mismatch: gamma={float(gamma)!r} tests as {verdict.case!r}, not {case!r}"
        )
    ladder = ELLIPTIC_CASES[(parity, case)]
    start, size, d1, d2 = _elliptic_layout(n, ladder)
    order = 2 * n + 6
    mode, (fa, fb, fg) = _coerce_field(E.a, E.b, gamma)
    if mode == "fraction":
        return _elliptic_residual(fa, fb, fg, n, case, ladder, start, size, d1, d2, order)
    with localcontext(_decimal_context()):
        if mode == "float":
            fa, fb, fg = Decimal(fa), Decimal(fb), Decimal(fg)
        dg = _newton_polish(fa, fb, fg, order, ladder, start, size)
        if abs(dg - fg) > Decimal("1e-6") * max(Decimal(1), abs(dg)):
            raise DomainError(
                f"gamma={gamma!r} is not within polishing range of the case-{case} condition"
            )
        res = _elliptic_residual(fa, fb, dg, n, case, ladder, start, size, d1, d2, order)
    return float(res)


def _elliptic_residual(a, b, g, n, case, ladder, start, size, d1, d2, order):
    one = a / a
    S = _ladder(a, b, g, ladder, order)
    v = polys.nullspace_vector(_toeplitz(S, start, size, size))
    ph = _trunc_product(v, S, d1)
    rev_p = [ph[d1 - i] for i in range(d1 + 1)]
    rev_q = [v[d2 - i] for i in range(d2 + 1)]
    if n % 2 == 0:
        lead = v[d2]
    else:
        lead = ph[d1]
    if lead == 0:
        raise CertificateInvalid("degenerate elliptic certificate: zero normalizer")
    l2 = lead * lead
    pp = [c / l2 for c in polys.pmul(rev_p, rev_p)]
    qq = [c / l2 for c in polys.pmul(rev_q, rev_q)]
    # squared scale factors (rational): p2 = sp2 * pp, q2 = sq2 * qq
    if n % 2 == 0:
        if case == "a":
            sp2, sq2 = a * a * b * g, b * g
        elif case == "b":
            sp2, sq2 = -(b * b) * a * g, -(a * g)
        else:  # case c
            sp2, sq2 = g * g * a * b, a * b
    else:
        if ladder == "E":
            sp2, sq2 = b, 1 / b
        else:
            sp2, sq2 = a, 1 / a
    p2 = [c * sp2 for c in pp]
    q2 = [c * sq2 for c in qq]
    A = [-1 / a, one]
    Bp = [1 / b, one]
    G = [-1 / g, one]
    s_ = [0 * one, one]
    if n % 2 == 0:
        if case == "a":
            lhs = polys.psub(
                polys.pmul(polys.pmul(s_, A), p2), polys.pmul(polys.pmul(Bp, G), q2)
            )
            target = [one]
        elif case == "b":
            lhs = polys.psub(
                polys.pmul(polys.pmul(s_, Bp), p2), polys.pmul(polys.pmul(A, G), q2)
            )
            target = [one]
        else:
            lhs = polys.psub(
                polys.pmul(polys.pmul(s_, G), p2), polys.pmul(polys.pmul(A, Bp), q2)
            )
            target = [one]
    else:
        if ladder == "E":
            lhs = polys.psub(
                polys.pmul(Bp, p2), polys.pmul(polys.pmul(s_, polys.pmul(A, G)), q2)
            )
            target = [one]
        else:
            lhs = polys.psub(
                polys.pmul(A, p2), polys.pmul(polys.pmul(s_, polys.pmul(Bp, G)), q2)
            )
            target = [-one]
    defect = polys.psub(lhs, target)
    return max(abs(c) for c in defect)


# ---------------------------------------------------------------------------
# rotation-number integrals (KLN partition)
# ---------------------------------------------------------------------------


def _gauss_composite(f, lo: float, hi: float, nodes: int, panels: int) -> float:
    x, w = np.polynomial.legendre.leggauss(nodes)
    width = (hi - lo) / panels
    total = 0.0
    for ip in range(panels):
        mid = lo + ip * width + width / 2
        half = width / 2
        total += half * sum(wi * f(mid + half * xi) for xi, wi in zip(x, w))
    return total


def _convergents(x: float, max_den: int = 1000, max_terms: int = 25) -> list[tuple[int, int]]:
    p0, q0, p1, q1 = 1, 0, int(math.floor(x)), 1
    out = [(p1, q1)]
    frac = x - math.floor(x)
    while len(out) < max_terms and frac > 1e-15 and q1 <= max_den:
        x = 1.0 / frac
        aa = int(math.floor(x))
        frac = x - aa
        p0, p1 = p1, aa * p1 + p0
        q0, q1 = q1, aa * q1 + q0
        out.append((p1, q1))
    return out


def kln_partition(
    E: BoundaryEllipse, gamma, nodes: int = 80, panels: int = 8, eps: float | None = None
) -> tuple[float, list[tuple[int, int]]]:
    """Rotation-number ratio ``I2/I1`` and its continued-fraction convergents.

    With band endpoints ``c1 < c2 < c3 < c4`` of ``E4``, ``I1`` integrates
    ``1/sqrt(|E4|)`` over the inner gap ``[c2, c3]`` and ``I2`` over
    ``[c4, infinity)``; for an ``(n, n1)``-periodic caustic the ratio
    equals ``n1/n``.  Both integrals are regularized by trigonometric /
    rational substitutions and evaluated by composite Gauss-Legendre
    quadrature.
    """
    e = resolve_epsilon(eps)
    a, b, g = float(E.a), float(E.b), float(gamma)
    if not (abs(g) > e and abs(g - a) > e and abs(g + b) > e):
        raise DomainError(f"gamma={gamma} is degenerate")
    c1, c2, c3, c4 = _band_endpoints(a, b, g)

    def f1(theta: float) -> float:
        s = c2 + (c3 - c2) * math.sin(theta) ** 2
        return 2.0 / math.sqrt((s - c1) * (c4 - s))

    def f2(t: float) -> float:
        w = t * t
        n1 = (c4 - c3) * w + (c4 - c1) * (1 - w)
        n2 = (c4 - c3) * w + (c4 - c2) * (1 - w)
        n3 = (c4 - c3) * w + (c4 - c3) * (1 - w)
        return 2.0 * math.sqrt(c4 - c3) / math.sqrt(n1 * n2 * n3)

    i1 = _gauss_composite(f1, 0.0, math.pi / 2, nodes, panels)
    i2 = _gauss_composite(f2, 0.0, 1.0, nodes, panels)
    ratio = i2 / i1
    return ratio, _convergents(ratio)


# ---------------------------------------------------------------------------
# Jacobi elliptic functions and complete integral via the AGM
# ---------------------------------------------------------------------------


def complete_K(k: float) -> float:
    """Complete elliptic integral ``K(k)``; requires ``0 <= k < 1``."""
    if not 0 <= k < 1:
        raise DomainError(f"complete_K requires 0 <= k < 1, got {k}")
    a0, b0 = 1.0, math.sqrt(1.0 - k * k)
    for _ in range(40):
        # quadratic convergence: stopping at 1e-15 leaves an O(1e-30) error,
        # while a tighter bound can stall one ulp short and never exit
        if abs(a0 - b0) <= 1e-15 * a0:
            break
        a0, b0 = (a0 + b0) / 2, math.sqrt(a0 * b0)
    return math.pi / (a0 + b0)


def jacobi_elliptic(u: float, k: float) -> tuple[float, float, float]:
    """Jacobi functions ``(sn, cn, dn)(u, k)`` by the descending AGM ladder.

    Requires ``0 <= k < 1``; ``k = 0`` degenerates to circular functions.
    ``dn`` is recovered from the last angle of the Landen descent; where
    that formula degenerates to 0/0 (``u`` near odd multiples of ``K``)
    the complementary identity ``dn = sqrt(1 - k**2 sn**2)`` takes over,
    which is well conditioned there because ``dn >= k' > 0``.
    """
    if not 0 <= k < 1:
        raise DomainError(f"jacobi_elliptic requires 0 <= k < 1, got {k}")
    if k == 0.0:
        return math.sin(u), math.cos(u), 1.0
    aa = [1.0]
    bb = [math.sqrt(1.0 - k * k)]
    cc = [k]
    while abs(cc[-1]) > 1e-15 * aa[-1] and len(aa) <= 60:
        ai, bi = aa[-1], bb[-1]
        cc.append((ai - bi) / 2)
        aa.append((ai + bi) / 2)
        bb.append(math.sqrt(ai * bi))
    n = len(aa) - 1
    phi = (2.0**n) * aa[-1] * u
    phi_next = phi
    for i in range(n, 0, -1):
        arg = cc[i] / aa[i] * math.sin(phi)
        arg = max(-1.0, min(1.0, arg))
        phi_next = phi
        phi = (phi + math.asin(arg)) / 2
    sn, cn = math.sin(phi), math.cos(phi)
    cosd = math.cos(phi_next - phi) if n >= 1 else 1.0
    if abs(cosd) > 0.5:
        dn = cn / cosd
    else:
        dn = math.sqrt(1.0 - k * k * sn * sn)
    return sn, cn, dn


# ---------------------------------------------------------------------------
# Zolotarev degree-3 consistency
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ZolotarevReport:
    """Residuals of the degree-3 Zolotarev parametrization identities."""

    t: float
    Y: float
    kappa_sq: float
    alpha_residual: float
    sn_residual: float
    gamma_residual: float

    @property
    def max_residual(self) -> float:
        return max(self.alpha_residual, self.sn_residual, self.gamma_residual)


def zolotarev3_consistency(E: BoundaryEllipse) -> ZolotarevReport:
    """Check the Zolotarev parametrization of the 3-periodic caustic.

    The hardest-approximation parameter ``Y`` solves
    ``t Y**2 + 2 Y - (1 + t) = 0``, i.e.
    ``Y = (-1 + sqrt(1 + t + t**2)) / t`` with ``t = b/a``; the report
    compares ``alpha = (Y**2 - 4 Y + 1)/(Y**2 - 1)`` with ``2 t + 1``,
    evaluates ``sn(K(kappa)/3, kappa) - Y`` for the induced modulus and
    matches ``2 b / (beta - 1)`` against the closed-form caustic
    ``gamma1 = a b (a - b + 2 sqrt(a**2 + a b + b**2)) / (a + b)**2``.
    """
    a, b = float(E.a), float(E.b)
    t = b / a
    Y = (-1.0 + math.sqrt(1.0 + t + t * t)) / t
    if not 0.0 < Y < 1.0:
        raise DomainError(f"Zolotarev parameter Y={Y} out of range")
    kappa_sq = (2 * Y - 1) / (Y**3 * (2 - Y))
    if not 0.0 < kappa_sq < 1.0:
        raise DomainError(f"Zolotarev modulus kappa^2={kappa_sq} out of range")
    alpha = (Y * Y - 4 * Y + 1) / (Y * Y - 1)
    alpha_residual = abs(alpha - (2 * t + 1))
    kappa = math.sqrt(kappa_sq)
    sn, _, _ = jacobi_elliptic(complete_K(kappa) / 3, kappa)
    sn_residual = abs(sn - Y)
    beta = (1 + Y * Y) / (1 - Y * Y)
    gamma_z = 2 * b / (beta - 1)
    gamma1 = a * b * (a - b + 2 * math.sqrt(a * a + a * b + b * b)) / (a + b) ** 2
    gamma_residual = abs(gamma_z - gamma1)
    return ZolotarevReport(t, Y, kappa_sq, alpha_residual, sn_residual, gamma_residual)


# ---------------------------------------------------------------------------
# Akhiezer least-deviation regimes
# ---------------------------------------------------------------------------

_AKHIEZER_GAMMAS = {
    "t2": lambda a, b: Fraction(a) * b / (Fraction(b) - a),
    "t3": lambda a, b: Fraction(a) * b / (Fraction(b) - a),
    "t4": lambda a, b: -Fraction(a) * b / (Fraction(a) + b),
    "t5": lambda a, b: Fraction(a) * b / (Fraction(a) + b),
}


def akhiezer_p4(E: BoundaryEllipse, case: str, eps: float | None = None) -> tuple[float, ...]:
    """Degree-4 least-deviation polynomial ``T2(w(s))`` for one regime.

    ``case`` selects the regime: ``t2`` (hyperbola caustic, ``b > a``),
    ``t3`` (hyperbola, ``a > b``), ``t4``/``t5`` (ellipse caustics
    ``-ab/(a+b)`` and ``ab/(a+b)``).  The result is checked to be exactly
    proportional to the Pell ``p_hat`` of the corresponding 4-periodic
    caustic (:class:`CertificateInvalid` if the coefficient ratio is not
    constant to ``1e-9`` relative).
    """
    a, b = float(E.a), float(E.b)
    if case == "t2":
        if not b > a:
            raise DomainError("regime t2 requires b > a")
        w = [-1.0, 2 * (a - b), 2 * a * b]
    elif case == "t3":
        if not a > b:
            raise DomainError("regime t3 requires a > b")
        w = [-1.0, 2 * (a - b), 2 * a * b]
    elif case == "t4":
        w = [-1.0, 2 * a * a / (a + b), 2 * a * a * b / (a + b)]
    elif case == "t5":
        w = [-1.0, -2 * b * b / (a + b), 2 * a * b * b / (a + b)]
    else:
        raise DomainError(f"unknown Akhiezer regime {case!r}")
    p4 = polys.padd(polys.pscale(polys.pmul(w, w), 2.0), [-1.0])
    if isinstance(E.a, (int, Fraction)) and isinstance(E.b, (int, Fraction)):
        gamma = _AKHIEZER_GAMMAS[case](E.a, E.b)
    else:
        gamma = float(_AKHIEZER_GAMMAS[case](Fraction(a), Fraction(b)))
    cert = pell_lift(pell_construct(E, gamma, 4, eps), eps, validate_partition=False)
    ph = [float(c) for c in cert.p_hat]
    k_star = max(range(len(ph)), key=lambda i: abs(ph[i]))
    r = p4[k_star] / ph[k_star]
    defect = max(abs(c - r * p) for c, p in zip(p4, ph))
    if defect > 1e-9 * max(1.0, max(abs(c) for c in p4)):
        raise CertificateInvalid(
            f"Akhiezer regime {case}: T2(w) is not proportional to the Pell p_hat "
            f"(defect {defect:.3e})"
        )
    return tuple(p4)


# ---------------------------------------------------------------------------
# light-like trajectories (Chebyshev case)
# ---------------------------------------------------------------------------


def lightlike_periodic(E: BoundaryEllipse, max_n: int, eps: float | None = None) -> tuple[int, int] | None:
    """Smallest light-like period ``(n, k)`` with ``n <= max_n``, if any.

    A light-like billiard closes in ``n`` steps (necessarily even, ``n = 2m``)
    iff ``a/b = cot(k pi / n)**2`` with ``gcd(k, m) = 1``; the angle
    ``theta = atan(sqrt(b/a))`` is compared against the grid to tolerance
    ``eps``.
    """
    e = resolve_epsilon(eps)
    theta = math.atan(math.sqrt(float(E.b) / float(E.a)))
    for n in range(4, max_n + 1, 2):
        k = round(n * theta / math.pi)
        if k < 1 or k >= n / 2:
            continue
        if math.gcd(k, n // 2) != 1:
            continue
        if abs(theta - k * math.pi / n) <= e:
            return n, k
    return None


def lightlike_pell_check(E: BoundaryEllipse, m: int, eps: float | None = None):
    """Chebyshev Pell data for the light-like period ``n = 2m``.

    Computes ``p_hat = T_m(h)`` with
    ``h(s) = (2 a b s + a - b) / (a + b)``, divides ``p_hat**2 - 1`` by the
    quadratic ``(s - 1/a)(s + 1/b)`` (:class:`CertificateInvalid` if the
    division leaves a remainder) and extracts the polynomial square root
    ``q_hat``.  Returns ``(residual, q_hat(0))``: the trajectory closes
    geometrically iff ``q_hat(0) = 0``.  Exact for rational ``(a, b)``.
    """
    if m < 1:
        raise DomainError(f"lightlike_pell_check requires m >= 1, got {m}")
    exact = isinstance(E.a, (int, Fraction)) and isinstance(E.b, (int, Fraction))
    if exact:
        a, b = Fraction(E.a), Fraction(E.b)
        one = Fraction(1)
    else:
        a, b = float(E.a), float(E.b)
        one = 1.0
    h = [(a - b) / (a + b), 2 * a * b / (a + b)]
    ph = polys.pcompose([one * c for c in chebyshev(m)], h)
    num = polys.psub(polys.pmul(ph, ph), [one])
    d2 = polys.pmul([-1 / a, one], [1 / b, one])
    quot, rem = polys.pdivmod(num, d2)
    scale = max(abs(float(c)) for c in num)
    rem_max = max(abs(float(c)) for c in rem) if rem else 0.0
    tol = max(resolve_epsilon(eps), 1e-9) * max(1.0, scale)
    if rem_max > (0 if exact else tol):
        raise CertificateInvalid(
            f"p_hat**2 - 1 is not divisible by (s - 1/a)(s + 1/b): remainder {rem_max:.3e}"
        )
    qh = polys.poly_sqrt(quot)
    defect = polys.psub(polys.psub(polys.pmul(ph, ph), polys.pmul(d2, polys.pmul(qh, qh))), [one])
    residual = max(abs(c) for c in defect)
    if float(residual) > (0 if exact else tol):
        raise CertificateInvalid(
            f"light-like Pell identity residual {float(residual):.3e} exceeds tolerance"
        )
    return (residual, qh[0] if exact else float(qh[0]))
