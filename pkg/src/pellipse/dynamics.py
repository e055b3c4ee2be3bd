"""Billiard dynamics in the Minkowski plane.

Reflection off a line with direction ``d`` is the linear map
``v' = 2 <v, d>/<d, d> d - v``; it preserves the Minkowski norm and is an
involution, but is undefined when the mirror direction is light-like.
Trajectories inside the boundary ellipse are polygonal: every segment is
tangent to one fixed confocal conic (the caustic), which the simulator
verifies at each step.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .config import resolve_epsilon
from .errors import CausticDrift, DegenerateChord, DomainError, ReflectionUndefined
from .geometry import (
    ALL_CONICS,
    ArcClass,
    BoundaryEllipse,
    ConicClass,
    LineImplicit,
    MVec2,
    VectorType,
    boundary_arc_class,
    caustic_of_line,
    classify_conic,
    line_through,
    minkowski_dot,
    tangent_line_at,
    vector_type,
)

__all__ = [
    "ClosureStatus",
    "Trajectory",
    "SIGMAS",
    "apply_sigma",
    "reflect",
    "next_boundary_hit",
    "simulate",
    "closure_status",
    "partition_counts",
    "start_on_caustic",
]

#: Names of the three axial symmetries used by elliptic closure.
SIGMAS = ("flip-x", "flip-y", "flip-both")


def apply_sigma(sigma: str, v: MVec2) -> MVec2:
    """Apply a named mirror symmetry to a point or direction.

    ``flip-x`` reflects across the x-axis, ``flip-y`` across the y-axis,
    ``flip-both`` through the origin.
    """
    if sigma == "flip-x":
        return MVec2(v.x, -v.y)
    if sigma == "flip-y":
        return MVec2(-v.x, v.y)
    if sigma == "flip-both":
        return MVec2(-v.x, -v.y)
    raise DomainError(f"unknown symmetry {sigma!r}")


@dataclass(frozen=True)
class ClosureStatus:
    """Closure verdict for a trajectory prefix of ``n`` steps.

    ``tag`` is ``"Periodic"`` (returns to start with the same direction),
    ``"EllipticPeriodic"`` (returns to the mirror image of the start under
    exactly one axial symmetry ``sigma``) or ``"Open"``.
    """

    tag: str
    n: int | None = None
    sigma: str | None = None

    @staticmethod
    def periodic(n: int) -> "ClosureStatus":
        return ClosureStatus("Periodic", n, None)

    @staticmethod
    def elliptic(n: int, sigma: str) -> "ClosureStatus":
        return ClosureStatus("EllipticPeriodic", n, sigma)

    @staticmethod
    def open_() -> "ClosureStatus":
        return ClosureStatus("Open", None, None)


@dataclass(frozen=True)
class Trajectory:
    """A simulated polygonal billiard trajectory.

    ``vertices`` has ``steps + 1`` boundary points; ``directions`` has
    ``steps + 1`` entries, the segment directions followed by the reflected
    direction at the final vertex; ``arc_classes`` classifies each vertex.
    ``caustic_gamma`` is the parameter of the conic touched by every
    segment (``math.inf`` for light-like trajectories).
    """

    vertices: tuple[MVec2, ...]
    directions: tuple[MVec2, ...]
    arc_classes: tuple[ArcClass, ...]
    segment_type: VectorType
    caustic_gamma: object
    ellipse: BoundaryEllipse

    @property
    def steps(self) -> int:
        return len(self.vertices) - 1

    def to_jsonable(self, closure: ClosureStatus | None = None) -> dict:
        """JSON-ready dict (finite floats only; infinity as the string "inf")."""
        gamma = self.caustic_gamma
        if gamma is ALL_CONICS:
            gval: object = "all"
        elif isinstance(gamma, float) and math.isinf(gamma):
            gval = "inf"
        else:
            gval = float(gamma)
        doc: dict = {
            "a": float(self.ellipse.a),
            "b": float(self.ellipse.b),
            "gamma": gval,
            "segment_type": self.segment_type.value,
            "vertices": [[float(P.x), float(P.y)] for P in self.vertices],
            "arc_classes": [arc.value for arc in self.arc_classes],
        }
        doc["closure"] = (
            None
            if closure is None
            else {"tag": closure.tag, "n": closure.n, "sigma": closure.sigma}
        )
        return doc


def reflect(v: MVec2, L: LineImplicit, eps: float | None = None) -> MVec2:
    """Minkowski reflection of ``v`` across the line ``L``.

    Raises :class:`ReflectionUndefined` when the line direction is
    light-like relative to its Euclidean size.
    """
    d = L.direction()
    dd = minkowski_dot(d, d)
    scale = float(d.x) * float(d.x) + float(d.y) * float(d.y)
    if dd == 0 or abs(float(dd)) <= resolve_epsilon(eps) * scale:
        raise ReflectionUndefined("mirror line is light-like; reflection undefined")
    s = minkowski_dot(v, d) / dd
    return MVec2(2 * s * d.x - v.x, 2 * s * d.y - v.y)


def next_boundary_hit(P: MVec2, d: MVec2, E: BoundaryEllipse, eps: float | None = None) -> MVec2:
    """Second intersection of the ray ``P + t d  (t > 0)`` with the boundary.

    ``P`` must lie on the boundary within tolerance.  The start root of the
    chord quadratic is deflated exactly, leaving ``t = -B/A`` with
    ``A = dx**2/a + dy**2/b`` and ``B = 2 (x dx / a + y dy / b)``; a
    non-positive ``t`` means the chord degenerates (tangent ray or ray
    leaving the ellipse) and raises :class:`DegenerateChord`.
    """
    e = resolve_epsilon(eps)
    if abs(float(E.boundary_residual(P))) > e:
        raise DomainError(f"chord start ({P.x}, {P.y}) is not on the boundary")
    if d.x == 0 and d.y == 0:
        raise DomainError("chord direction must be nonzero")
    A = d.x * d.x / E.a + d.y * d.y / E.b
    B = 2 * (P.x * d.x / E.a + P.y * d.y / E.b)
    t = -B / A
    if float(t) * d.euclid_norm() <= e * E.scale():
        raise DegenerateChord(
            "degenerate chord: direction tangent at the start point"
            if float(t) >= 0
            else "degenerate chord: ray leaves the ellipse"
        )
    return MVec2(P.x + t * d.x, P.y + t * d.y)


def simulate(
    P0: MVec2,
    d0: MVec2,
    steps: int,
    E: BoundaryEllipse,
    eps: float | None = None,
) -> Trajectory:
    """Simulate ``steps`` reflections from boundary point ``P0`` along ``d0``.

    Enforces the caustic invariant (every segment tangent to the conic of
    the first segment, relative drift tolerance ``max(eps, 1e-6)``) and
    aborts with :class:`ReflectionUndefined` when a vertex lands within
    tolerance of a touch point, where the tangent line is light-like.
    Errors carry the 1-based index of the offending step.
    """
    if steps < 1:
        raise DomainError(f"steps must be >= 1, got {steps}")
    e = resolve_epsilon(eps)
    if abs(float(E.boundary_residual(P0))) > e:
        raise DomainError(f"start point ({P0.x}, {P0.y}) is not on the boundary")
    seg_type = vector_type(d0, eps)
    gamma0 = caustic_of_line(line_through(P0, d0, eps), E, eps)
    drift_tol = max(e, 1e-6)

    vertices = [P0]
    directions = [d0]
    arcs = [boundary_arc_class(P0, E, max(e, 1e-12))]
    P, v = P0, d0
    for i in range(1, steps + 1):
        gamma_i = caustic_of_line(line_through(P, v, eps), E, eps)
        if not _same_caustic(gamma0, gamma_i, drift_tol):
            raise CausticDrift(
                f"segment {i} caustic {gamma_i} drifted from {gamma0}", step=i
            )
        try:
            Q = next_boundary_hit(P, v, E, eps)
        except DegenerateChord as exc:
            raise DegenerateChord(str(exc), step=i) from None
        arc = boundary_arc_class(Q, E, max(e, 1e-12))
        if arc is ArcClass.TouchPoint:
            raise ReflectionUndefined(
                f"vertex {i} landed on a touch point; tangent line is light-like",
                step=i,
            )
        try:
            v = reflect(v, tangent_line_at(Q, E, 0, max(e, 1e-9)), eps)
        except ReflectionUndefined as exc:
            raise ReflectionUndefined(str(exc), step=i) from None
        vertices.append(Q)
        directions.append(v)
        arcs.append(arc)
        P = Q
    return Trajectory(
        vertices=tuple(vertices),
        directions=tuple(directions),
        arc_classes=tuple(arcs),
        segment_type=seg_type,
        caustic_gamma=gamma0,
        ellipse=E,
    )


def _same_caustic(g0, g1, tol: float) -> bool:
    # a common tangent is tangent to every conic of the family, so the
    # sentinel is consistent with any recorded caustic (it only arises for
    # chords passing within tolerance of a touch point)
    if g0 is ALL_CONICS or g1 is ALL_CONICS:
        return True
    f0, f1 = float(g0), float(g1)
    if math.isinf(f0) or math.isinf(f1):
        return math.isinf(f0) and math.isinf(f1)
    return abs(f1 - f0) <= tol * max(1.0, abs(f0), abs(f1))


def _unit(v: MVec2) -> MVec2:
    n = v.euclid_norm()
    return MVec2(float(v.x) / n, float(v.y) / n)


def _close(u: MVec2, v: MVec2, tol: float) -> bool:
    return max(abs(float(u.x) - float(v.x)), abs(float(u.y) - float(v.y))) <= tol


def closure_status(T: Trajectory, n: int, eps: float | None = None) -> ClosureStatus:
    """Closure verdict after ``n`` steps of the trajectory.

    Compares vertex ``n`` and the outgoing direction there against the
    start data, directly (``Periodic``) and under each axial symmetry
    (``EllipticPeriodic``); ``eps`` is an absolute tolerance on vertex
    coordinates and on unit direction components.  Exact periodicity takes
    precedence; an elliptic verdict requires exactly one matching symmetry.
    """
    if n < 1 or n > T.steps:
        raise DomainError(f"closure test needs 1 <= n <= {T.steps}, got {n}")
    tol = resolve_epsilon(eps)
    v0, vn = T.vertices[0], T.vertices[n]
    d0, dn = _unit(T.directions[0]), _unit(T.directions[n])
    if _close(vn, v0, tol) and _close(dn, d0, tol):
        return ClosureStatus.periodic(n)
    matches = [
        s
        for s in SIGMAS
        if _close(vn, apply_sigma(s, v0), tol) and _close(dn, apply_sigma(s, d0), tol)
    ]
    if len(matches) == 1:
        return ClosureStatus.elliptic(n, matches[0])
    return ClosureStatus.open_()


def partition_counts(T: Trajectory, n: int | None = None, eps: float | None = None) -> tuple[int, int]:
    """Counts ``(n1, n2)`` of bounce types over one period.

    ``n1`` counts vertices on relativistic-ellipse arcs and ``n2`` those on
    relativistic-hyperbola arcs among the first ``n`` vertices.  The
    trajectory must close (``Periodic``) at ``n`` (default: all its steps).
    """
    if n is None:
        n = T.steps
    status = closure_status(T, n, eps)
    if status.tag != "Periodic":
        raise DomainError(f"partition counts need a closed trajectory, got {status.tag}")
    n1 = sum(1 for arc in T.arc_classes[:n] if arc is ArcClass.RelativisticEllipseArc)
    n2 = sum(1 for arc in T.arc_classes[:n] if arc is ArcClass.RelativisticHyperbolaArc)
    return n1, n2


def start_on_caustic(
    E: BoundaryEllipse,
    gamma,
    rng: random.Random | None = None,
    eps: float | None = None,
    clearance: float = 0.02,
) -> tuple[MVec2, MVec2]:
    """Random admissible start ``(P0, d0)`` whose first segment touches ``gamma``.

    Samples a tangent line of the caustic, intersects it with the boundary
    and rejects lines that miss the ellipse or whose endpoints come within
    ``clearance`` (relative) of a touch point.  Raises :class:`DomainError`
    for degenerate caustics or when no admissible tangent is found.
    """
    if rng is None:
        rng = random.Random()
    conic = classify_conic(gamma, E)
    if conic not in (
        ConicClass.EllipseOfFamily,
        ConicClass.HyperbolaXMajor,
        ConicClass.HyperbolaYMajor,
    ):
        raise DomainError(f"cannot start on degenerate caustic gamma={gamma}")
    a, b, g = float(E.a), float(E.b), float(gamma)
    xt = E.touch_x()
    for _ in range(500):
        if conic is ConicClass.EllipseOfFamily:
            A, B = a - g, b + g
            phi = rng.uniform(0.0, 2 * math.pi)
            p = math.cos(phi) / math.sqrt(A)
            q = math.sin(phi) / math.sqrt(B)
        elif conic is ConicClass.HyperbolaXMajor:
            A, Babs = a - g, -(b + g)
            u = rng.uniform(-2.5, 2.5)
            branch = 1.0 if rng.random() < 0.5 else -1.0
            p = branch * math.cosh(u) / math.sqrt(A)
            q = -math.sinh(u) / math.sqrt(Babs)
        else:
            Aabs, B = g - a, b + g
            u = rng.uniform(-2.5, 2.5)
            branch = 1.0 if rng.random() < 0.5 else -1.0
            p = -math.sinh(u) / math.sqrt(Aabs)
            q = branch * math.cosh(u) / math.sqrt(B)
        nn = p * p + q * q
        foot = MVec2(p / nn, q / nn)
        A2 = q * q / a + p * p / b
        B2 = 2 * (foot.x * q / a - foot.y * p / b)
        C2 = foot.x * foot.x / a + foot.y * foot.y / b - 1
        disc = B2 * B2 - 4 * A2 * C2
        if disc <= 1e-12 * (B2 * B2 + abs(4 * A2 * C2)):
            continue  # tangent line misses the boundary (caustic bulge)
        root = math.sqrt(disc)
        t1 = (-B2 - root) / (2 * A2)
        t2 = (-B2 + root) / (2 * A2)
        P0 = MVec2(foot.x + t1 * q, foot.y - t1 * p)
        P1 = MVec2(foot.x + t2 * q, foot.y - t2 * p)
        if any(
            abs(abs(float(P.x)) - xt) < clearance * (1 + xt) for P in (P0, P1)
        ):
            continue  # too close to a touch point for stable reflection
        return P0, MVec2(P1.x - P0.x, P1.y - P0.y)
    raise DomainError(f"no admissible tangent line found for gamma={gamma}")
