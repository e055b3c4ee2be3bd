"""Cayley-type closure conditions via Taylor series and Hankel determinants.

For the boundary ellipse ``x**2/a + y**2/b = 1`` and a caustic parameter
``gamma`` the key object is the square root

    B(x) = sqrt(eps * (a - x) * (b + x) * (gamma - x)),   eps = sign(gamma),

expanded at ``x = 0``.  Internally all recurrences run on the *scaled*
series ``Bhat = B / B0`` with ``B0 = sqrt(|a b gamma|)``, whose
coefficients are rational in ``(a, b, gamma)``; true coefficients differ
by the common factor ``B0``, so Hankel determinant zero tests are
unaffected.  Dividing by ``gamma - x``, ``a - x`` or ``b + x`` yields the
ladders ``C``, ``D`` and ``E`` used by the closure conditions:

* ``n``-periodicity: a Hankel determinant of ``C`` (odd ``n``) or ``B``
  (even ``n``) vanishes;
* elliptic ``n``-periodicity (closure onto a mirror image): a Hankel
  determinant of ``D``, ``E`` or ``C`` vanishes, the ladder depending on
  the parity, the sign of ``gamma`` and the conic type of the caustic.

Exact inputs (``int``/``Fraction``) are processed in exact rational
arithmetic; ``decimal.Decimal`` inputs run at 50 significant digits;
otherwise standard ``float`` arithmetic is used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Context, Decimal, localcontext
from fractions import Fraction

from . import polys
from .config import resolve_epsilon
from .errors import DomainError, InsufficientOrder
from .geometry import BoundaryEllipse, ConicClass, classify_conic

__all__ = [
    "TruncatedSeries",
    "PeriodicityVerdict",
    "EllipticVerdict",
    "cubic_sqrt_series",
    "divided_series",
    "hankel_test",
    "is_periodic",
    "elliptic_case_test",
    "DECIMAL_PRECISION",
    "ELLIPTIC_CASES",
    "case_symmetry",
]

#: Significant digits used for ``decimal.Decimal`` series arithmetic.
DECIMAL_PRECISION = 50

#: Divisor keyword accepted by :func:`divided_series` for each ladder.
_DIVISORS = {"gamma-x": "C", "a-x": "D", "b+x": "E"}

#: Elliptic closure cases: (parity, case letter) -> series ladder.
ELLIPTIC_CASES = {
    ("even", "a"): "D",
    ("even", "b"): "E",
    ("even", "c"): "C",
    ("odd", "a"): "E",
    ("odd", "b"): "D",
    ("odd", "d"): "E",
    ("odd", "e"): "D",
}

#: Axial symmetry of the half-period closure for each elliptic case.
_CASE_SYMMETRY = {
    "a": "flip-x",
    "b": "flip-y",
    "c": "flip-both",
    "d": "flip-x",
    "e": "flip-y",
}


def case_symmetry(case: str) -> str:
    """Mirror symmetry (``flip-x``/``flip-y``/``flip-both``) of a case.

    ``flip-x`` is the reflection across the x-axis ``(x, y) -> (x, -y)``,
    ``flip-y`` the reflection across the y-axis, ``flip-both`` the point
    reflection through the origin.
    """
    try:
        return _CASE_SYMMETRY[case]
    except KeyError as exc:
        raise DomainError(f"unknown elliptic case {case!r}") from exc


# ---------------------------------------------------------------------------
# scalar field dispatch
# ---------------------------------------------------------------------------


def _decimal_context() -> Context:
    return Context(prec=DECIMAL_PRECISION)


def _coerce_field(a, b, gamma):
    """Pick the common arithmetic for the three scalars: exact, decimal or float."""
    values = (a, b, gamma)
    if any(isinstance(v, Decimal) for v in values):
        def conv(v):
            if isinstance(v, Decimal):
                return v
            if isinstance(v, int):
                return Decimal(v)
            if isinstance(v, Fraction):
                with localcontext(_decimal_context()):
                    return Decimal(v.numerator) / Decimal(v.denominator)
            return Decimal(v)  # float converts exactly

        return "decimal", tuple(conv(v) for v in values)
    if all(isinstance(v, (int, Fraction)) for v in values):
        return "fraction", tuple(Fraction(v) for v in values)
    return "float", tuple(float(v) for v in values)


def _scaled_sqrt(a, b, gamma, order: int) -> list:
    """Scaled coefficients of ``sqrt(eps (a-x)(b+x)(gamma-x)) / B0``.

    The square of the scaled series is the cubic
    ``(1 - x/a)(1 + x/b)(1 - x/gamma)``; coefficients are rational in the
    inputs and are computed by the standard square-root recurrence.
    """
    ia, ib, ig = 1 / a, 1 / b, 1 / gamma
    one = a / a
    c1 = -ia + ib - ig
    c2 = -ia * ib + ia * ig - ib * ig
    c3 = ia * ib * ig
    cubic = [one, c1, c2, c3] + [0 * one] * max(0, order - 3)
    out = [one]
    for k in range(1, order + 1):
        s = cubic[k] if k < len(cubic) else 0 * one
        for j in range(1, k):
            s = s - out[j] * out[k - j]
        out.append(s / 2)
    return out


def _divided(bhat: list, c, sign: int) -> list:
    """Ladder ``out`` with ``bhat[k] = c*out[k] - sign*out[k-1]``."""
    out = [bhat[0] / c]
    for k in range(1, len(bhat)):
        out.append((bhat[k] + sign * out[k - 1]) / c)
    return out


def _ladder(a, b, gamma, variant: str, order: int) -> list:
    """Scaled series for any of the four variants in the given field."""
    bh = _scaled_sqrt(a, b, gamma, order)
    if variant == "B":
        return bh
    if variant == "C":
        return _divided(bh, gamma, 1)
    if variant == "D":
        return _divided(bh, a, 1)
    if variant == "E":
        return _divided(bh, b, -1)
    raise DomainError(f"unknown series variant {variant!r}")


# ---------------------------------------------------------------------------
# public series objects
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TruncatedSeries:
    """Truncated Taylor series of one of the variants ``B, C, D, E``.

    ``scaled`` holds the coefficients divided by ``B0 = sqrt(|a b gamma|)``
    (rational in the inputs, stored in the arithmetic of the inputs); the
    ``coeffs`` property restores the true coefficients, which involves the
    generally irrational factor ``B0`` and is therefore floating point.
    """

    variant: str
    scaled: tuple
    order: int
    a: float | Fraction
    b: float | Fraction
    gamma: float | Fraction

    @property
    def coeffs(self) -> tuple[float, ...]:
        b0 = math.sqrt(abs(float(self.a) * float(self.b) * float(self.gamma)))
        return tuple(b0 * float(s) for s in self.scaled)

    def __len__(self) -> int:
        return len(self.scaled)


@dataclass(frozen=True)
class PeriodicityVerdict:
    """Outcome of the Hankel periodicity test for ``(gamma, n)``."""

    periodic: bool
    determinant_value: object
    variant_used: str
    n: int


@dataclass(frozen=True)
class EllipticVerdict:
    """Outcome of the elliptic closure test: matched case letter or ``none``."""

    case: str
    determinant_value: object


def _check_gamma(E: BoundaryEllipse, gamma, eps: float) -> None:
    if isinstance(gamma, float) and (math.isinf(gamma) or math.isnan(gamma)):
        raise DomainError(f"gamma={gamma} is degenerate")
    for v in (0, E.a, -E.b):
        if isinstance(gamma, (int, Fraction)) and isinstance(v, (int, Fraction)):
            hit = gamma == v
        else:
            hit = abs(float(gamma) - float(v)) <= eps * max(1.0, abs(float(v)))
        if hit:
            raise DomainError(f"gamma={gamma} coincides with degenerate value {v}")


def cubic_sqrt_series(E: BoundaryEllipse, gamma, order: int, eps: float | None = None) -> TruncatedSeries:
    """Truncated series of ``sqrt(eps (a-x)(b+x)(gamma-x))`` at ``x = 0``.

    ``gamma`` must avoid the degenerate values ``{0, a, -b}``.  ``order``
    is the index of the last retained coefficient.
    """
    if order < 0:
        raise DomainError(f"order must be non-negative, got {order}")
    e = resolve_epsilon(eps)
    _check_gamma(E, gamma, e)
    mode, (a, b, g) = _coerce_field(E.a, E.b, gamma)
    if mode == "decimal":
        with localcontext(_decimal_context()):
            scaled = _scaled_sqrt(a, b, g, order)
    else:
        scaled = _scaled_sqrt(a, b, g, order)
    return TruncatedSeries("B", tuple(scaled), order, E.a, E.b, gamma)


def divided_series(B: TruncatedSeries, divisor: str) -> TruncatedSeries:
    """Series of ``B(x)`` divided by one of ``gamma - x``, ``a - x``, ``b + x``.

    ``divisor`` is the keyword ``"gamma-x"``, ``"a-x"`` or ``"b+x"`` (or
    the ladder letter ``"C"``, ``"D"``, ``"E"``).
    """
    if B.variant != "B":
        raise DomainError("divided_series expects the base sqrt series (variant B)")
    letter = _DIVISORS.get(divisor, divisor)
    if letter not in ("C", "D", "E"):
        raise DomainError(f"unknown divisor {divisor!r}")
    mode, (a, b, g) = _coerce_field(B.a, B.b, B.gamma)
    spec = {"C": (g, 1), "D": (a, 1), "E": (b, -1)}[letter]
    if mode == "decimal":
        with localcontext(_decimal_context()):
            scaled = _divided(list(B.scaled), *spec)
    else:
        scaled = _divided(list(B.scaled), *spec)
    return TruncatedSeries(letter, tuple(scaled), B.order, B.a, B.b, B.gamma)


# ---------------------------------------------------------------------------
# Hankel determinants
# ---------------------------------------------------------------------------


def _hankel_layout(variant: str, n: int) -> tuple[int, int]:
    """(start, size) of the Hankel block testing closure at period ``n``."""
    if variant == "B":
        if n % 2 != 0 or n < 4:
            raise DomainError("variant B tests even periods n >= 4")
        return 3, n // 2 - 1
    if variant == "C":
        if n % 2 == 1:
            if n < 3:
                raise DomainError("variant C tests odd periods n >= 3")
            return 2, (n - 1) // 2
        if n < 2:
            raise DomainError("variant C (elliptic) tests even n >= 2")
        return 1, n // 2
    if variant in ("D", "E"):
        if n % 2 == 0:
            if n < 2:
                raise DomainError("elliptic ladders test n >= 2")
            return 1, n // 2
        if n < 3:
            raise DomainError("elliptic ladders test odd n >= 3")
        return 2, (n - 1) // 2
    raise DomainError(f"unknown series variant {variant!r}")


def hankel_test(S: TruncatedSeries, n: int, eps: float | None = None):
    """Closure-condition Hankel determinant of the series ``S`` at period ``n``.

    Built on the scaled coefficients ``M[i][j] = scaled[start + i + j]``
    with the layout determined by the variant and the parity of ``n``; the
    scaled determinant differs from the true one by a power of ``B0``, so
    the zero locus is identical.  Raises :class:`InsufficientOrder` when
    the series is shorter than ``n - 1``.
    """
    start, size = _hankel_layout(S.variant, n)
    need = start + 2 * (size - 1)
    if S.order < need:
        raise InsufficientOrder(
            f"series order {S.order} < {need} required for variant {S.variant}, n={n}"
        )
    m = [[S.scaled[start + i + j] for j in range(size)] for i in range(size)]
    if isinstance(m[0][0], Decimal):
        with localcontext(_decimal_context()):
            return polys.det(m)
    return polys.det(m)


def _hankel_scale(S: TruncatedSeries, n: int) -> float:
    """Product of per-row magnitude scales of the Hankel block (zero test).

    Each row contributes its Euclidean norm, floored by the geometric mean
    of the series coefficients flanking the row.  The floor matters when a
    row consists of coefficients that themselves vanish at the closure
    condition (1 x 1 blocks in particular): the flanking coefficients give
    the natural magnitude the row would have away from the root, so the
    relative zero test remains meaningful there.
    """
    start, size = _hankel_layout(S.variant, n)
    prod = 1.0
    for i in range(size):
        norm = math.sqrt(sum(float(S.scaled[start + i + j]) ** 2 for j in range(size)))
        left = abs(float(S.scaled[start + i - 1]))
        right_idx = start + i + size
        right = abs(float(S.scaled[right_idx])) if right_idx < len(S.scaled) else left
        prod *= max(norm, math.sqrt(left * right))
    return prod


def _det_is_zero(S: TruncatedSeries, n: int, value, eps: float) -> bool:
    if isinstance(value, (int, Fraction)):
        return value == 0
    return abs(float(value)) <= eps * _hankel_scale(S, n)


def is_periodic(E: BoundaryEllipse, gamma, n: int, eps: float | None = None) -> PeriodicityVerdict:
    """Hankel test for an ``n``-periodic trajectory with caustic ``gamma``.

    Uses the ``C`` ladder for odd ``n`` and the base series for even ``n``;
    odd periods additionally require the caustic to be an ellipse of the
    confocal family (hyperbola caustics only support even periods).
    """
    if n < 3:
        raise DomainError(f"periodicity test requires n >= 3, got {n}")
    e = resolve_epsilon(eps)
    _check_gamma(E, gamma, e)
    conic = classify_conic(gamma, E)
    B = cubic_sqrt_series(E, gamma, 2 * n + 2, eps)
    if n % 2 == 1:
        S = divided_series(B, "C")
        variant = "C"
    else:
        S = B
        variant = "B"
    value = hankel_test(S, n)
    zero = _det_is_zero(S, n, value, e)
    structural = n % 2 == 0 or conic is ConicClass.EllipseOfFamily
    return PeriodicityVerdict(bool(zero and structural), value, variant, n)


def elliptic_case_test(E: BoundaryEllipse, gamma, n: int, eps: float | None = None) -> EllipticVerdict:
    """Test closure of an ``n``-step trajectory onto a mirror image of itself.

    Returns the matched case letter: for even ``n`` the cases are ``a``
    (ellipse caustic, ``gamma > 0``, ladder ``D``), ``b`` (ellipse,
    ``gamma < 0``, ladder ``E``) and ``c`` (hyperbola, ladder ``C``);
    for odd ``n`` they are ``a`` (ellipse, ``gamma > 0``, ladder ``E``),
    ``b`` (ellipse, ``gamma < 0``, ladder ``D``) and the hyperbola cases
    ``d`` (ladder ``E``) and ``e`` (ladder ``D``).  A ``gamma`` that is
    fully ``n``-periodic reports ``none``, as does one matching no case.
    """
    if n < 2:
        raise DomainError(f"elliptic closure test requires n >= 2, got {n}")
    e = resolve_epsilon(eps)
    _check_gamma(E, gamma, e)
    if n >= 3:
        pv = is_periodic(E, gamma, n, eps)
        if pv.periodic:
            return EllipticVerdict("none", pv.determinant_value)
    conic = classify_conic(gamma, E)
    ellipse = conic is ConicClass.EllipseOfFamily
    positive = float(gamma) > 0
    if n % 2 == 0:
        if ellipse:
            candidates = [("a", "D")] if positive else [("b", "E")]
        else:
            candidates = [("c", "C")]
    else:
        if ellipse:
            candidates = [("a", "E")] if positive else [("b", "D")]
        else:
            candidates = [("d", "E"), ("e", "D")]
    B = cubic_sqrt_series(E, gamma, 2 * n + 2, eps)
    best: EllipticVerdict | None = None
    for case, letter in candidates:
        S = divided_series(B, letter)
        value = hankel_test(S, n)
        if _det_is_zero(S, n, value, e):
            return EllipticVerdict(case, value)
        if best is None or abs(float(value)) < abs(float(best.determinant_value)):
            best = EllipticVerdict("none", value)
    assert best is not None
    return best
