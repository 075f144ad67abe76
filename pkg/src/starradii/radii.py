"""Radius constants: printed closed forms and an independent bisection on the
disk-containment margin ``m(r) = max_disk_radius(region, a(r)) - b(r)``."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from starradii.errors import DomainError, NoSignChangeError
from starradii.kernel import ClassId, logderiv_bound, unit_centered_bound
from starradii.regions import (
    E,
    SIN1,
    SPECIAL_REGIONS,
    SQRT2,
    RegionKind,
    TargetRegion,
    admissible_interval,
    max_disk_radius,
)

K = RegionKind
DEFAULT_TOL = 1e-12
MAX_BISECTIONS = 60
GRID_STEP = 1e-3

# Items with a proved lower bound only.
LOWER_BOUND_ONLY = {(ClassId.PI2, K.LEMNISCATE), (ClassId.PI2, K.SINE)}


def _pi1_closed(region: TargetRegion) -> float:
    kind = region.kind
    if kind is K.HALF_PLANE:
        a = region.alpha
        return (1 - a) / (3 + math.sqrt(8 + a * a))
    return {
        K.LEMNISCATE: (SQRT2 - 1) * (math.sqrt(10) - 3),
        K.PARABOLIC: (6 - math.sqrt(33)) / 3,
        K.EXP: (E - 1) / (3 * E + math.sqrt(8 * E * E + 1)),
        K.CARDIOID: (9 - math.sqrt(73)) / 4,
        K.SINE: SIN1 / (math.sqrt(9 + SIN1 * SIN1 + 2 * SIN1) + 3),
        K.LUNE: 3 / SQRT2 - math.sqrt((11 - 2 * SQRT2) / 2),
        K.RATIONAL: (3 - 2 * math.sqrt(5 - 2 * SQRT2)) / (2 * SQRT2 - 1),
    }[kind]


def _pi2_closed(region: TargetRegion) -> float:
    kind = region.kind
    if kind is K.HALF_PLANE:
        a = region.alpha
        return 2 * (1 - a) / (5 + math.sqrt(4 * a * a - 4 * a + 25))
    return {
        K.LEMNISCATE: (math.sqrt(4 * SQRT2 + 25) - 5) / (2 * (SQRT2 + 2)),
        K.PARABOLIC: 5 - 2 * math.sqrt(6),
        K.EXP: 2 * (E - 1) / (5 * E + math.sqrt(25 * E * E - 4 * E + 4)),
        K.CARDIOID: (15 - math.sqrt(217)) / 2,
        K.SINE: (math.sqrt(25 + 4 * (3 + SIN1) * SIN1) - 5) / (2 * (3 + SIN1)),
        K.LUNE: (5 - math.sqrt(41 - 12 * SQRT2)) / (2 * (SQRT2 - 1)),
        K.RATIONAL: (5 - math.sqrt(81 - 40 * SQRT2)) / (4 * (SQRT2 - 1)),
    }[kind]


def closed_form_radius(cls: ClassId, region: TargetRegion) -> float:
    """The sharp (or lower-bound) radius in closed form."""
    if cls is ClassId.PI1:
        return _pi1_closed(region)
    return _pi2_closed(region)


def radius_quadratic(cls: ClassId, region: TargetRegion) -> tuple[float, float, float]:
    """Coefficients ``(A, B, C)`` of ``A r^2 + B r + C`` whose smallest positive
    root is the radius."""
    kind = region.kind
    if cls is ClassId.PI1:
        if kind is K.HALF_PLANE:
            a = region.alpha
            return (1 + a, -6.0, 1 - a)
        return {
            K.LEMNISCATE: (1 + SQRT2, 6.0, 1 - SQRT2),
            K.PARABOLIC: (3.0, -12.0, 1.0),
            K.EXP: (E + 1, -6 * E, E - 1),
            K.CARDIOID: (2.0, -9.0, 1.0),
            K.SINE: (2 + SIN1, 6.0, -SIN1),
            K.LUNE: (SQRT2, -6.0, 2 - SQRT2),
            K.RATIONAL: (2 * SQRT2 - 1, -6.0, 3 - 2 * SQRT2),
        }[kind]
    if kind is K.HALF_PLANE:
        a = region.alpha
        return (a, -5.0, 1 - a)
    return {
        K.LEMNISCATE: (2 + SQRT2, 5.0, 1 - SQRT2),
        K.PARABOLIC: (1.0, -10.0, 1.0),
        K.EXP: (1.0, -5 * E, E - 1),
        K.CARDIOID: (1.0, -15.0, 2.0),
        K.SINE: (3 + SIN1, 5.0, -SIN1),
        K.LUNE: (SQRT2 - 1, -5.0, 2 - SQRT2),
        K.RATIONAL: (2 * SQRT2 - 2, -5.0, 3 - 2 * SQRT2),
    }[kind]


_EQUATIONS = {
    (ClassId.PI1, K.HALF_PLANE): "(1+alpha)r^2 - 6r + 1 - alpha = 0",
    (ClassId.PI1, K.LEMNISCATE): "(1+sqrt2)r^2 + 6r + 1 - sqrt2 = 0",
    (ClassId.PI1, K.PARABOLIC): "3r^2 - 12r + 1 = 0",
    (ClassId.PI1, K.EXP): "(1+e)r^2 - 6er + e - 1 = 0",
    (ClassId.PI1, K.CARDIOID): "2r^2 - 9r + 1 = 0",
    (ClassId.PI1, K.SINE): "(2+sin1)r^2 + 6r - sin1 = 0",
    (ClassId.PI1, K.LUNE): "sqrt2 r^2 - 6r + 2 - sqrt2 = 0",
    (ClassId.PI1, K.RATIONAL): "(2sqrt2-1)r^2 - 6r + 3 - 2sqrt2 = 0",
    (ClassId.PI2, K.HALF_PLANE): "alpha r^2 - 5r + 1 - alpha = 0",
    (ClassId.PI2, K.LEMNISCATE): "(2+sqrt2)r^2 + 5r + 1 - sqrt2 = 0",
    (ClassId.PI2, K.PARABOLIC): "r^2 - 10r + 1 = 0",
    (ClassId.PI2, K.EXP): "r^2 - 5er + e - 1 = 0",
    (ClassId.PI2, K.CARDIOID): "r^2 - 15r + 2 = 0",
    (ClassId.PI2, K.SINE): "(3+sin1)r^2 + 5r - sin1 = 0",
    (ClassId.PI2, K.LUNE): "(sqrt2-1)r^2 - 5r + 2 - sqrt2 = 0",
    (ClassId.PI2, K.RATIONAL): "(2sqrt2-2)r^2 - 5r + 3 - 2sqrt2 = 0",
}


def radius_equation(cls: ClassId, region: TargetRegion) -> str:
    text = _EQUATIONS[cls, region.kind]
    if region.kind is K.HALF_PLANE:
        text += f" with alpha = {region.alpha:.17g}"
    return text


def is_sharp(cls: ClassId, region: TargetRegion) -> bool:
    return (cls, region.kind) not in LOWER_BOUND_ONLY


def containment_margin(cls: ClassId, region: TargetRegion, r: float, route: str = "generic") -> float:
    """``m(r)``: slack between the lemma radius at the bound's centre and the bound's radius.

    ``route="generic"`` uses the class disk about ``(1+r^2)/(1-r^2)``;
    ``route="unit"`` uses the coarser disk about 1.
    """
    if route == "generic":
        disk = logderiv_bound(cls, r)
    elif route == "unit":
        disk = unit_centered_bound(cls, r)
    else:
        raise ValueError(f"unknown route {route!r}")
    return max_disk_radius(region, disk.center) - disk.radius


def _centre(cls: ClassId, r: float, route: str) -> float:
    return 1.0 if route == "unit" else logderiv_bound(cls, r).center


def solve_radius(
    cls: ClassId,
    region: TargetRegion,
    tol: float = DEFAULT_TOL,
    route: str = "generic",
    step: float = GRID_STEP,
) -> float:
    """Largest ``r`` with ``m(r) >= 0``, by a grid scan for the first sign change
    followed by bisection to width ``tol``."""
    if not (0.0 < tol <= 1e-6):
        raise DomainError(f"tol must lie in (0, 1e-6], got {tol!r}")
    lo_a, hi_a = admissible_interval(region)

    def admissible(r: float) -> bool:
        return lo_a < _centre(cls, r, route) < hi_a

    lo = tol
    if not admissible(lo) or containment_margin(cls, region, lo, route) < 0:
        raise NoSignChangeError(f"margin not positive at r = {tol!r} for {cls.value}/{region}")
    hi = None
    j = 1
    while True:
        r = tol + j * step
        if r >= 1.0:
            break
        if not admissible(r):
            break
        if containment_margin(cls, region, r, route) < 0:
            hi = r
            break
        lo = r
        j += 1
    if hi is None:
        raise NoSignChangeError(
            f"margin stayed non-negative up to r = {lo!r} for {cls.value}/{region}"
        )
    for _ in range(MAX_BISECTIONS):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if containment_margin(cls, region, mid, route) >= 0:
            lo = mid
        else:
            hi = mid
    return lo


@dataclass(frozen=True)
class RadiusResult:
    cls: ClassId
    region: TargetRegion
    closed_form: float
    solved: float
    sharp: bool
    equation: str
    route: str = "generic"
    # Independent solution via the disk about 1, where that route is of interest.
    alt_routes: dict[str, float] = field(default_factory=dict)

    @property
    def abs_diff(self) -> float:
        return abs(self.closed_form - self.solved)


def radius_result(cls: ClassId, region: TargetRegion, tol: float = DEFAULT_TOL) -> RadiusResult:
    alt = {}
    if (cls, region.kind) == (ClassId.PI2, K.LEMNISCATE):
        alt["unit"] = solve_radius(cls, region, tol, route="unit")
    return RadiusResult(
        cls=cls,
        region=region,
        closed_form=closed_form_radius(cls, region),
        solved=solve_radius(cls, region, tol),
        sharp=is_sharp(cls, region),
        equation=radius_equation(cls, region),
        alt_routes=alt,
    )


def table_regions(alphas: Iterable[float]) -> list[TargetRegion]:
    return [TargetRegion.half_plane(a) for a in alphas] + list(SPECIAL_REGIONS)


def radius_table(cls: ClassId, alphas: Iterable[float] = (0.0,), tol: float = DEFAULT_TOL) -> list[RadiusResult]:
    """One row per half-plane order in ``alphas``, then one per special region."""
    return [radius_result(cls, region, tol) for region in table_regions(alphas)]
