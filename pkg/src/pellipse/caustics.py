"""Caustic parameters of periodic and elliptic-periodic trajectories.

For each small period the closure condition on the caustic parameter
``gamma`` reduces to a polynomial with coefficients polynomial in the
squared semi-axes ``(a, b)``.  This module carries those polynomials in
exact rational arithmetic, isolates their real roots with Sturm sequences,
filters out spurious roots (degenerate conics, parity violations, lower
periods) and cross-validates every surviving caustic twice: through the
Hankel-determinant test and through an actual simulated trajectory that
must close geometrically.

The discriminants of the condition polynomials factor into strikingly
small closed forms in ``(a, b)``; :func:`discriminant_identity_check`
verifies those identities exactly.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import polys
from .cayley import (
    _hankel_scale,
    case_symmetry,
    cubic_sqrt_series,
    divided_series,
    elliptic_case_test,
    hankel_test,
    is_periodic,
)
from .config import resolve_epsilon
from .dynamics import closure_status, partition_counts, simulate, start_on_caustic
from .errors import DomainError, PellipseError
from .geometry import ArcClass, BoundaryEllipse, ConicClass, classify_conic

__all__ = [
    "CausticResult",
    "ScanGrid",
    "closed_form_caustics",
    "periodic_caustics",
    "elliptic_caustics",
    "generic_caustic_scan",
    "discriminant_identity_check",
    "DISCRIMINANT_IDENTITIES",
]


# ---------------------------------------------------------------------------
# condition polynomials (ascending coefficients in gamma)
# ---------------------------------------------------------------------------


def _p3(a, b):
    """3-periodic condition (quadratic)."""
    return [3 * a**2 * b**2, 2 * a * b * (a - b), -((a + b) ** 2)]


def _p4(a, b):
    """4-periodic condition: ``-(ab + (a+b)g)(ab + (a-b)g)(ab - (a+b)g)``."""
    prod = polys.pmul(
        polys.pmul([a * b, a + b], [a * b, a - b]), [a * b, -(a + b)]
    )
    return polys.pneg(prod)


def _p5(a, b):
    """5-periodic condition (sextic)."""
    return [
        5 * a**6 * b**6,
        10 * a**5 * b**5 * (a - b),
        -(a**4) * b**4 * (9 * a**2 + 34 * a * b + 9 * b**2),
        -36 * a**3 * b**3 * (a - b) * (a + b) ** 2,
        -(a**2) * b**2 * (29 * a**2 - 54 * a * b + 29 * b**2) * (a + b) ** 2,
        -2 * a * b * (a - b) * (a - 3 * b) * (3 * a - b) * (a + b) ** 2,
        (a + b) ** 6,
    ]


def _e2_quad(a, b):
    """Odd E-ladder quadratic: elliptic cases a/d at n = 3, new factor at n = 6."""
    return [a**2 * b**2, -2 * a * b * (a + b), -(a + b) * (3 * a - b)]


def _d2_quad(a, b):
    """Odd D-ladder quadratic: elliptic cases b/e at n = 3, new factor at n = 6."""
    return [a**2 * b**2, 2 * a * b * (a + b), (a + b) * (a - 3 * b)]


def _f3_quad(a, b):
    """The complex-conjugate factor of the 6-periodic condition (no real roots)."""
    return [a**2 * b**2, 2 * a * b * (a - b), (a + b) ** 2]


def _p6_full(a, b):
    """Full 6-periodic condition: 3-periodic factor times the three quadratics."""
    out = _p3(a, b)
    for f in (_d2_quad(a, b), _f3_quad(a, b), _e2_quad(a, b)):
        out = polys.pmul(out, f)
    return out


def _p6_expansion(a, b):
    """The same degree-8 polynomial as :func:`_p6_full`, expanded."""
    return [
        3 * a**8 * b**8,
        8 * a**7 * b**7 * (a - b),
        -4 * a**6 * b**6 * (a + 3 * b) * (3 * a + b),
        -72 * a**5 * b**5 * (a - b) * (a + b) ** 2,
        -10 * a**4 * b**4 * (11 * a**2 - 18 * a * b + 11 * b**2) * (a + b) ** 2,
        -8 * a**3 * b**3 * (a - b) * (9 * a**2 - 14 * a * b + 9 * b**2) * (a + b) ** 2,
        -4
        * a**2
        * b**2
        * (3 * a**4 - 24 * a**3 * b + 10 * a**2 * b**2 - 24 * a * b**3 + 3 * b**4)
        * (a + b) ** 2,
        8 * a * b * (a - b) * (a + b) ** 6,
        (3 * a - b) * (a - 3 * b) * (a + b) ** 6,
    ]


def _p7(a, b):
    """7-periodic condition (degree 12)."""
    return [
        7 * a**12 * b**12,
        28 * a**11 * b**11 * (a - b),
        -14 * a**10 * b**10 * (3 * a**2 + 14 * a * b + 3 * b**2),
        -4 * a**9 * b**9 * (a - b) * (121 * a**2 + 250 * a * b + 121 * b**2),
        -3 * a**8 * b**8 * (437 * a**2 - 726 * a * b + 437 * b**2) * (a + b) ** 2,
        -24 * a**7 * b**7 * (a - b) * (75 * a**2 - 106 * a * b + 75 * b**2) * (a + b) ** 2,
        -12
        * a**6
        * b**6
        * (105 * a**4 - 420 * a**3 * b + 422 * a**2 * b**2 - 420 * a * b**3 + 105 * b**4)
        * (a + b) ** 2,
        -8
        * a**5
        * b**5
        * (a - b)
        * (21 * a**4 - 420 * a**3 * b - 50 * a**2 * b**2 - 420 * a * b**3 + 21 * b**4)
        * (a + b) ** 2,
        a**4
        * b**4
        * (7 * a**2 + 30 * a * b + 7 * b**2)
        * (63 * a**4 - 84 * a**3 * b - 38 * a**2 * b**2 - 84 * a * b**3 + 63 * b**4)
        * (a + b) ** 2,
        28 * a**3 * b**3 * (a - b) * (13 * a**2 - 38 * a * b + 13 * b**2) * (a + b) ** 6,
        2
        * a**2
        * b**2
        * (59 * a**4 - 332 * a**3 * b + 626 * a**2 * b**2 - 332 * a * b**3 + 59 * b**4)
        * (a + b) ** 6,
        4 * a * b * (a - b) * (a - 3 * b) * (3 * a - b) * (a**2 - 6 * a * b + b**2) * (a + b) ** 6,
        -((a + b) ** 12),
    ]


def _q1(a, b):
    """Even D-ladder quartic: elliptic case a at n = 4, new factor at n = 8."""
    return [
        a**4 * b**4,
        -4 * a**3 * b**3 * (a + b),
        -2 * a**2 * b**2 * (a + b) * (5 * a - 3 * b),
        -4 * a * b * (a + b) * (a - b) ** 2,
        (a + b) ** 4,
    ]


def _q2(a, b):
    """Even E-ladder quartic: elliptic case b at n = 4, new factor at n = 8."""
    return [
        a**4 * b**4,
        4 * a**3 * b**3 * (a + b),
        2 * a**2 * b**2 * (a + b) * (3 * a - 5 * b),
        4 * a * b * (a + b) * (a - b) ** 2,
        (a + b) ** 4,
    ]


def _q3(a, b):
    """Even C-ladder quartic: elliptic case c at n = 4, new factor at n = 8."""
    return [
        a**4 * b**4,
        4 * a**3 * b**3 * (a - b),
        2 * a**2 * b**2 * (3 * a**2 + 2 * a * b + 3 * b**2),
        4 * a * b * (a - b) * (a + b) ** 2,
        (a**2 - 6 * a * b + b**2) * (a + b) ** 2,
    ]


def _p8_full(a, b):
    """Full 8-periodic condition: 4-periodic factor times the three quartics."""
    out = _p4(a, b)
    for f in (_q1(a, b), _q2(a, b), _q3(a, b)):
        out = polys.pmul(out, f)
    return out


def _e5_sextic(a, b):
    """Odd E-ladder sextic: elliptic cases a/d at n = 5."""
    return [
        a**6 * b**6,
        -6 * a**5 * b**5 * (a + b),
        -(a**4) * b**4 * (a + b) * (29 * a - 15 * b),
        -4 * a**3 * b**3 * (a + b) * (9 * a**2 - 10 * a * b + 5 * b**2),
        -(a**2) * b**2 * (a + b) * (9 * a**3 - 45 * a**2 * b - 5 * a * b**2 - 15 * b**3),
        2 * a * b * (5 * a - 3 * b) * (a + b) ** 4,
        (5 * a**2 - 10 * a * b + b**2) * (a + b) ** 4,
    ]


def _d5_sextic(a, b):
    """Odd D-ladder sextic: elliptic cases b/e at n = 5."""
    return [
        a**6 * b**6,
        6 * a**5 * b**5 * (a + b),
        a**4 * b**4 * (a + b) * (15 * a - 29 * b),
        4 * a**3 * b**3 * (a + b) * (5 * a**2 - 10 * a * b + 9 * b**2),
        a**2 * b**2 * (a + b) * (15 * a**3 + 5 * a**2 * b + 45 * a * b**2 - 9 * b**3),
        2 * a * b * (3 * a - 5 * b) * (a + b) ** 4,
        (a**2 - 10 * a * b + 5 * b**2) * (a + b) ** 4,
    ]


def _lin_d(a, b):
    """n = 2, case a: ``gamma = ab/(a+b)``."""
    return [-a * b, a + b]


def _lin_e(a, b):
    """n = 2, case b: ``gamma = -ab/(a+b)``."""
    return [a * b, a + b]


def _lin_c(a, b):
    """n = 2, case c: ``gamma = ab/(b-a)``; drops out when ``a = b``."""
    return [-a * b, b - a]


#: Factors carrying the *new* caustics of each period (retraced shorter
#: periods and factors without real roots are excluded).
_PERIODIC_NEW = {
    3: (_p3,),
    4: (_p4,),
    5: (_p5,),
    6: (_d2_quad, _e2_quad),
    7: (_p7,),
    8: (_q1, _q2, _q3),
}

#: Elliptic closure factors per period: (ladder, builder).
_ELLIPTIC_POLYS = {
    2: (("D", _lin_d), ("E", _lin_e), ("C", _lin_c)),
    3: (("E", _e2_quad), ("D", _d2_quad)),
    4: (("D", _q1), ("E", _q2), ("C", _q3)),
    5: (("E", _e5_sextic), ("D", _d5_sextic)),
}


# ---------------------------------------------------------------------------
# results
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CausticResult:
    """One caustic parameter with its validation record.

    ``gamma_exact`` is the exact rational root when one exists (denominator
    up to ``10**9``) and ``None`` when the root is irrational; certificate
    pipelines refine irrational parameters internally from the float value.
    ``n1``/``n2`` count bounces on relativistic-ellipse / -hyperbola arcs
    over one period of the validation trajectory (``None`` if the
    simulation could not be completed).  For elliptic-periodic caustics
    ``case`` is the closure case letter and ``sigma`` the axial symmetry.
    """

    gamma: float
    conic: ConicClass
    n: int
    n1: int | None
    n2: int | None
    validated: bool
    kind: str
    case: str | None = None
    sigma: str | None = None
    gamma_exact: Fraction | None = None

    def to_jsonable(self) -> dict:
        return {
            "gamma": self.gamma,
            "conic": self.conic.value,
            "n": self.n,
            "n1": self.n1,
            "n2": self.n2,
            "validated": self.validated,
            "kind": self.kind,
            "case": self.case,
            "sigma": self.sigma,
            "gamma_exact": None if self.gamma_exact is None else str(self.gamma_exact),
        }


@dataclass(frozen=True)
class ScanGrid:
    """Sampling grid for :func:`generic_caustic_scan`.

    ``points`` samples are spread over the admissible ``gamma`` ranges;
    ``span`` bounds the hyperbola branches (default ``4 (a + b)``).  Roots
    where the normalized determinant touches zero without changing sign
    (double roots) are invisible to the sign scan.
    """

    points: int = 4000
    span: float | None = None


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------


def closed_form_caustics(E: BoundaryEllipse, n: int) -> list:
    """Closed-form caustic parameters for periods 3 and 4, sorted ascending.

    Period 3 returns the two surd expressions
    ``ab (a - b +- 2 sqrt(a**2 + a b + b**2)) / (a + b)**2`` (floats);
    period 4 returns ``[-ab/(a-b), -ab/(a+b), ab/(a+b)]`` exactly
    (:class:`~fractions.Fraction` for rational input), the middle value
    dropping out when ``a = b``.
    """
    if n == 3:
        a, b = float(E.a), float(E.b)
        r = math.sqrt(a * a + a * b + b * b)
        g1 = a * b * (a - b + 2 * r) / (a + b) ** 2
        g2 = -a * b * (b - a + 2 * r) / (a + b) ** 2
        return sorted([g1, g2])
    if n == 4:
        exact = isinstance(E.a, (int, Fraction)) and isinstance(E.b, (int, Fraction))
        a = Fraction(E.a) if exact else Fraction(float(E.a))
        b = Fraction(E.b) if exact else Fraction(float(E.b))
        vals = [-a * b / (a + b), a * b / (a + b)]
        if a != b:
            vals.append(-a * b / (a - b))
        vals.sort()
        return vals if exact else [float(v) for v in vals]
    raise DomainError(f"closed forms exist for n in {{3, 4}}, got n={n}")


# ---------------------------------------------------------------------------
# shared validation helpers
# ---------------------------------------------------------------------------


def _sim_closure(E, gamma_f, n, rng, want_sigma=None):
    """Simulate n steps from a random caustic tangent; classify the closure.

    Returns ``(ok, n1, n2)``.  ``want_sigma=None`` demands full periodicity;
    otherwise the trajectory must close onto the ``want_sigma`` mirror image.
    Retries a few times: a random start can land too close to a touch point.
    """
    for _ in range(6):
        try:
            P0, d0 = start_on_caustic(E, gamma_f, rng)
            T = simulate(P0, d0, n, E)
            status = closure_status(T, n, 1e-6)
        except PellipseError:
            continue
        if want_sigma is None:
            if status.tag == "Periodic":
                n1, n2 = partition_counts(T, n, 1e-6)
                return True, n1, n2
        else:
            if status.tag == "EllipticPeriodic" and status.sigma == want_sigma:
                n1 = sum(1 for c in T.arc_classes[:n] if c is ArcClass.RelativisticEllipseArc)
                n2 = sum(1 for c in T.arc_classes[:n] if c is ArcClass.RelativisticHyperbolaArc)
                return True, n1, n2
    return False, None, None


def _spurious_reason(gamma_f: float, E: BoundaryEllipse, n: int) -> str | None:
    a, b = float(E.a), float(E.b)
    tol = 1e-9
    if abs(gamma_f) <= tol:
        return "degenerate conic (gamma = 0)"
    if abs(gamma_f - a) <= tol * (1 + a):
        return "degenerate conic (gamma = a)"
    if abs(gamma_f + b) <= tol * (1 + b):
        return "degenerate conic (gamma = -b)"
    if n % 2 == 1 and not (-b < gamma_f < a):
        return "odd period requires an ellipse caustic"
    return None


def _record_discard(discarded, gamma_f: float, reason: str) -> None:
    if discarded is not None:
        discarded.append({"gamma": gamma_f, "reason": reason})


def _root_list(coeffs) -> list[tuple[Fraction, Fraction | None]]:
    """Real roots of a rational polynomial as (60-digit refinement, exact-or-None)."""
    coeffs = polys.trim(coeffs)
    if polys.degree(coeffs) < 1:
        return []
    out = []
    for root in polys.real_roots(coeffs):
        out.append((root, polys.rationalize_root(coeffs, root)))
    return out


# ---------------------------------------------------------------------------
# periodic caustics from the condition polynomials
# ---------------------------------------------------------------------------


def periodic_caustics(
    E: BoundaryEllipse,
    n: int,
    eps: float | None = None,
    rng: random.Random | None = None,
    discarded: list | None = None,
) -> list[CausticResult]:
    """All new ``n``-periodic caustics, 3 <= n <= 8, doubly validated.

    Roots of the period-``n`` condition polynomial are isolated exactly;
    spurious roots (degenerate conic values; hyperbola parameters at odd
    periods) are dropped, with reasons appended to ``discarded`` when a
    list is supplied.  Every returned caustic carries the outcome of the
    Hankel test *and* of an ``n``-step simulated closure (tolerance
    ``1e-6``) in ``validated``; results are sorted by ``gamma``.  Factors
    already accounting for shorter periods (the 3-periodic factor inside
    the period-6 condition, the 4-periodic one inside period 8) are
    excluded, as is the period-6 factor without real roots.
    """
    if n not in _PERIODIC_NEW:
        raise DomainError(
            f"period n={n} out of the closed-form range 3..8; use generic_caustic_scan"
        )
    rng = random.Random(0) if rng is None else rng
    a, b = Fraction(E.a), Fraction(E.b)
    results: list[CausticResult] = []
    seen: list[float] = []
    for builder in _PERIODIC_NEW[n]:
        for refined, exact in _root_list(builder(a, b)):
            gamma_f = float(refined)
            reason = _spurious_reason(gamma_f, E, n)
            if reason is not None:
                _record_discard(discarded, gamma_f, reason)
                continue
            if any(abs(gamma_f - s) <= 1e-9 * max(1.0, abs(s)) for s in seen):
                continue
            seen.append(gamma_f)
            verdict = is_periodic(E, gamma_f, n, eps)
            ok, n1, n2 = _sim_closure(E, gamma_f, n, rng)
            results.append(
                CausticResult(
                    gamma=gamma_f,
                    conic=classify_conic(gamma_f, E),
                    n=n,
                    n1=n1,
                    n2=n2,
                    validated=bool(verdict.periodic and ok),
                    kind="periodic",
                    gamma_exact=exact,
                )
            )
    return sorted(results, key=lambda r: r.gamma)


# ---------------------------------------------------------------------------
# elliptic-periodic caustics
# ---------------------------------------------------------------------------


def _elliptic_case(ladder: str, parity: str, gamma_f: float, E: BoundaryEllipse) -> str | None:
    conic = classify_conic(gamma_f, E)
    is_ell = conic is ConicClass.EllipseOfFamily
    is_hyp = conic in (ConicClass.HyperbolaXMajor, ConicClass.HyperbolaYMajor)
    if parity == "even":
        if ladder == "D" and is_ell and gamma_f > 0:
            return "a"
        if ladder == "E" and is_ell and gamma_f < 0:
            return "b"
        if ladder == "C" and is_hyp:
            return "c"
    else:
        if ladder == "E" and is_ell and gamma_f > 0:
            return "a"
        if ladder == "E" and is_hyp:
            return "d"
        if ladder == "D" and is_ell and gamma_f < 0:
            return "b"
        if ladder == "D" and is_hyp:
            return "e"
    return None


def elliptic_caustics(
    E: BoundaryEllipse,
    n: int,
    eps: float | None = None,
    rng: random.Random | None = None,
    discarded: list | None = None,
) -> list[CausticResult]:
    """All elliptic ``n``-periodic caustics, 2 <= n <= 5, doubly validated.

    Roots of the mirror-closure factor polynomials are assigned a case
    letter from the ladder, the parity of ``n`` and the conic class of the
    root (roots admitting no case are discarded with a reason).  Validation
    requires :func:`~pellipse.cayley.elliptic_case_test` to confirm the
    case *and* an ``n``-step simulated trajectory to close onto its mirror
    image under exactly the case symmetry.  Sorted by ``gamma``.
    """
    if n not in _ELLIPTIC_POLYS:
        raise DomainError(f"elliptic closure polynomials cover n in 2..5, got n={n}")
    rng = random.Random(0) if rng is None else rng
    a, b = Fraction(E.a), Fraction(E.b)
    parity = "even" if n % 2 == 0 else "odd"
    results: list[CausticResult] = []
    for ladder, builder in _ELLIPTIC_POLYS[n]:
        for refined, exact in _root_list(builder(a, b)):
            gamma_f = float(refined)
            reason = _spurious_reason(gamma_f, E, 0)
            if reason is not None:
                _record_discard(discarded, gamma_f, reason)
                continue
            case = _elliptic_case(ladder, parity, gamma_f, E)
            if case is None:
                _record_discard(
                    discarded,
                    gamma_f,
                    f"no elliptic case for a {ladder}-ladder root of this conic class",
                )
                continue
            sigma = case_symmetry(case)
            verdict = elliptic_case_test(E, gamma_f, n, eps)
            ok, n1, n2 = _sim_closure(E, gamma_f, n, rng, want_sigma=sigma)
            results.append(
                CausticResult(
                    gamma=gamma_f,
                    conic=classify_conic(gamma_f, E),
                    n=n,
                    n1=n1,
                    n2=n2,
                    validated=bool(verdict.case == case and ok),
                    kind="elliptic",
                    case=case,
                    sigma=sigma,
                    gamma_exact=exact,
                )
            )
    return sorted(results, key=lambda r: r.gamma)


# ---------------------------------------------------------------------------
# generic scan for periods beyond the closed-form tables
# ---------------------------------------------------------------------------


def _normalized_det(E: BoundaryEllipse, gamma_f: float, n: int) -> float:
    B = cubic_sqrt_series(E, gamma_f, 2 * n + 2)
    S = divided_series(B, "C") if n % 2 == 1 else B
    value = hankel_test(S, n)
    scale = _hankel_scale(S, n)
    return float(value) / scale if scale > 0 else float(value)


def _proper_divisors(n: int) -> list[int]:
    return [d for d in range(3, n) if n % d == 0]


def generic_caustic_scan(
    E: BoundaryEllipse,
    n: int,
    grid: ScanGrid | None = None,
    eps: float | None = None,
    rng: random.Random | None = None,
    discarded: list | None = None,
) -> list[CausticResult]:
    """Scan the admissible ``gamma`` ranges for ``n``-periodic caustics.

    Floating-point fallback for periods outside the polynomial tables: the
    row-norm-normalized Hankel determinant is sampled on a grid, sign
    changes are bisected to roots, and roots belonging to proper-divisor
    periods are removed.  Survivors are validated like
    :func:`periodic_caustics`.  Sign scanning cannot see double roots.
    """
    if n < 3:
        raise DomainError(f"caustic scan requires n >= 3, got {n}")
    grid = grid if grid is not None else ScanGrid()
    rng = random.Random(0) if rng is None else rng
    a, b = float(E.a), float(E.b)
    span = grid.span if grid.span is not None else 4.0 * (a + b)
    delta = 1e-4 * (a + b)
    segments = [(-b + delta, -delta), (delta, a - delta)]
    if n % 2 == 0:
        segments += [(-span, -b - delta), (a + delta, span)]
    per_seg = max(64, grid.points // len(segments))
    roots: list[float] = []
    for lo, hi in segments:
        if hi <= lo:
            continue
        step = (hi - lo) / per_seg
        prev_x, prev_f = lo, _normalized_det(E, lo, n)
        for i in range(1, per_seg + 1):
            x = lo + i * step
            f = _normalized_det(E, x, n)
            if prev_f == 0.0:
                roots.append(prev_x)
            elif f * prev_f < 0:
                roots.append(_bisect_det(E, n, prev_x, x, prev_f))
            prev_x, prev_f = x, f
    out: list[CausticResult] = []
    seen: list[float] = []
    for gamma_f in roots:
        if any(abs(gamma_f - s) <= 1e-7 * max(1.0, abs(s)) for s in seen):
            continue
        seen.append(gamma_f)
        reason = _spurious_reason(gamma_f, E, n)
        if reason is not None:
            _record_discard(discarded, gamma_f, reason)
            continue
        lower = next(
            (d for d in _proper_divisors(n) if is_periodic(E, gamma_f, d, eps).periodic),
            None,
        )
        if lower is not None:
            _record_discard(discarded, gamma_f, f"already periodic with period {lower}")
            continue
        verdict = is_periodic(E, gamma_f, n, eps)
        ok, n1, n2 = _sim_closure(E, gamma_f, n, rng)
        out.append(
            CausticResult(
                gamma=gamma_f,
                conic=classify_conic(gamma_f, E),
                n=n,
                n1=n1,
                n2=n2,
                validated=bool(verdict.periodic and ok),
                kind="periodic",
            )
        )
    return sorted(out, key=lambda r: r.gamma)


def _bisect_det(E: BoundaryEllipse, n: int, lo: float, hi: float, flo: float) -> float:
    for _ in range(90):
        mid = (lo + hi) / 2
        if mid == lo or mid == hi:
            break
        fm = _normalized_det(E, mid, n)
        if fm == 0.0:
            return mid
        if fm * flo < 0:
            hi = mid
        else:
            lo, flo = mid, fm
    return (lo + hi) / 2


# ---------------------------------------------------------------------------
# discriminant identities
# ---------------------------------------------------------------------------


def _sym12(a, b):
    coeffs = [
        84375,
        506250,
        4266243,
        16690590,
        34989622,
        45383698,
        46564971,
        45383698,
        34989622,
        16690590,
        4266243,
        506250,
        84375,
    ]
    return sum(c * a ** (12 - i) * b**i for i, c in enumerate(coeffs))


def _asym26(a, b):
    coeffs = [
        8,
        200,
        2427,
        19048,
        108652,
        479688,
        1703702,
        4993208,
        12286692,
        25688608,
        46007797,
        70961808,
        94556312,
        108998288,
        108671412,
        93545968,
        69297712,
        43955208,
        23703317,
        10761608,
        4059132,
        1248808,
        305302,
        57048,
        7652,
        656,
        27,
    ]
    return sum(c * a ** (26 - i) * b**i for i, c in enumerate(coeffs))


#: identity name -> (builder, closed-form discriminant, generic degree).
DISCRIMINANT_IDENTITIES = {
    "G2": (_p3, lambda a, b: 16 * (a**2 + a * b + b**2) * a**2 * b**2, 2),
    "G3": (_p4, lambda a, b: 64 * a**8 * b**8 * (a + b) ** 2, 3),
    "G6": (
        _p5,
        lambda a, b: -5
        * 2**44
        * (
            27 * a**6
            + 81 * a**5 * b
            + 322 * a**4 * b**2
            + 509 * a**3 * b**3
            + 322 * a**2 * b**4
            + 81 * a * b**5
            + 27 * b**6
        )
        * (a + b) ** 8
        * a**38
        * b**38,
        6,
    ),
    "G8": (
        _p6_full,
        lambda a, b: -(2**88) * (a**2 + a * b + b**2) * (a + b) ** 18 * a**74 * b**74,
        8,
    ),
    "G12": (
        _p7,
        lambda a, b: -(2**184) * 49 * (a + b) ** 40 * (a * b) ** 172 * _sym12(a, b),
        12,
    ),
    "G15": (
        _p8_full,
        lambda a, b: -(2**246)
        * (a * b) ** 278
        * (27 * a**2 + 46 * a * b + 27 * b**2)
        * (a + b) ** 20
        * _asym26(a, b)
        * _asym26(b, a),
        15,
    ),
    "G1e": (_e2_quad, lambda a, b: 16 * a**3 * b**2 * (a + b), 2),
    "G2e": (_d2_quad, lambda a, b: 16 * a**2 * b**3 * (a + b), 2),
    "G3e": (
        _q1,
        lambda a, b: -(2**16) * a**16 * b**14 * (8 * a**2 + 8 * a * b + 27 * b**2) * (a + b) ** 4,
        4,
    ),
    "G4e": (
        _q2,
        lambda a, b: -(2**16) * a**14 * b**16 * (27 * a**2 + 8 * a * b + 8 * b**2) * (a + b) ** 4,
        4,
    ),
    "G5e": (
        _q3,
        lambda a, b: -(2**16) * a**16 * b**16 * (a + b) ** 2 * (27 * a**2 + 46 * a * b + 27 * b**2),
        4,
    ),
}


def discriminant_identity_check(identity: str, a, b) -> Fraction:
    """Exact residual of one discriminant identity at rational ``(a, b)``.

    Computes the discriminant of the named condition polynomial by exact
    resultants and subtracts the closed form; the return value is ``0``
    precisely when the identity holds.  Available names:
    ``G2 G3 G6 G8 G12 G15`` (periodic conditions for n = 3..8) and
    ``G1e``-``G5e`` (elliptic factors: the two odd quadratics and the
    three even quartics).  Pairs where the condition polynomial degenerates
    (its leading coefficient vanishes, e.g. ``a = b`` for ``G3`` or
    ``a = 3b`` for ``G2e``) are outside the identity's domain and raise
    :class:`DomainError`.
    """
    if identity not in DISCRIMINANT_IDENTITIES:
        names = " ".join(sorted(DISCRIMINANT_IDENTITIES))
        raise DomainError(f"unknown identity {identity!r}; available: {names}")
    fa, fb = Fraction(a), Fraction(b)
    if fa <= 0 or fb <= 0:
        raise DomainError(f"squared semi-axes must be positive, got a={a}, b={b}")
    builder, rhs, generic_degree = DISCRIMINANT_IDENTITIES[identity]
    poly = builder(fa, fb)
    if polys.degree(poly) < generic_degree:
        raise DomainError(
            f"identity {identity} degenerates at a={a}, b={b}: the condition "
            f"polynomial drops below its generic degree {generic_degree}"
        )
    return polys.discriminant(poly) - rhs(fa, fb)
