"""The eight target regions: membership, boundary curves, and the radius of the
largest disk about a real centre that each region contains.

Margins returned by :func:`margin` are signed (positive inside) but are not
Euclidean distances; only their sign is contractual.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np
import shapely

from starradii.errors import BranchWarning, DomainError, InconclusiveError

SQRT2 = math.sqrt(2.0)
SIN1 = math.sin(1.0)
E = math.e
RATIONAL_K = SQRT2 + 1.0

# Unbounded boundaries (half-plane, parabola) are clipped to |Im w| <= this.
UNBOUNDED_CLIP = 4.0
BRANCH_EPS = 1e-12


class RegionKind(enum.Enum):
    HALF_PLANE = "halfplane"
    LEMNISCATE = "lemniscate"
    PARABOLIC = "parabolic"
    EXP = "exp"
    CARDIOID = "cardioid"
    SINE = "sine"
    LUNE = "lune"
    RATIONAL = "rational"


_LABELS = {
    RegionKind.HALF_PLANE: "S*(alpha)",
    RegionKind.LEMNISCATE: "S_L",
    RegionKind.PARABOLIC: "S_P",
    RegionKind.EXP: "S_e",
    RegionKind.CARDIOID: "S_c",
    RegionKind.SINE: "S_sin",
    RegionKind.LUNE: "S_lune",
    RegionKind.RATIONAL: "S_R",
}


@dataclass(frozen=True)
class TargetRegion:
    """A target domain. ``alpha`` is used only by the half-plane ``Re w > alpha``."""

    kind: RegionKind
    alpha: float = 0.0

    def __post_init__(self):
        if self.kind is RegionKind.HALF_PLANE:
            if not (0.0 <= self.alpha < 1.0):
                raise DomainError(f"half-plane order must lie in [0, 1), got {self.alpha!r}")
        elif self.alpha != 0.0:
            raise DomainError(f"{self.kind.value} takes no alpha parameter")

    @classmethod
    def half_plane(cls, alpha: float = 0.0) -> "TargetRegion":
        return cls(RegionKind.HALF_PLANE, float(alpha))

    @property
    def name(self) -> str:
        return self.kind.value

    @property
    def label(self) -> str:
        return _LABELS[self.kind]

    @property
    def k(self) -> float | None:
        return RATIONAL_K if self.kind is RegionKind.RATIONAL else None

    def __str__(self) -> str:
        if self.kind is RegionKind.HALF_PLANE:
            return f"halfplane({self.alpha:g})"
        return self.kind.value


LEMNISCATE = TargetRegion(RegionKind.LEMNISCATE)
PARABOLIC = TargetRegion(RegionKind.PARABOLIC)
EXP = TargetRegion(RegionKind.EXP)
CARDIOID = TargetRegion(RegionKind.CARDIOID)
SINE = TargetRegion(RegionKind.SINE)
LUNE = TargetRegion(RegionKind.LUNE)
RATIONAL = TargetRegion(RegionKind.RATIONAL)

# Table order, after the half-plane row.
SPECIAL_REGIONS = (LEMNISCATE, PARABOLIC, EXP, CARDIOID, SINE, LUNE, RATIONAL)


def region_from_name(name: str, alpha: float = 0.0) -> TargetRegion:
    kind = RegionKind(name.lower())
    if kind is RegionKind.HALF_PLANE:
        return TargetRegion.half_plane(alpha)
    return TargetRegion(kind)


@dataclass(frozen=True)
class ContainmentMargin:
    inside: bool
    margin: float
    branch_warning: bool = False


# ---------------------------------------------------------------------------
# membership


def _cardioid_margin(w):
    # 1 + 4z/3 + 2z^2/3 = w  <=>  z = -1 +- s,  s^2 = (3w - 1)/2.
    # The principal root gives the preimage nearest the origin; the other has |z| >= 1.
    # Margin is (1 - |z|^2)|phi'(z)| so it stays linear in w at the cusp w = 1/3.
    s = np.sqrt((3.0 * w - 1.0) / 2.0)
    one_minus_mod2 = 2.0 * s.real - np.abs(s) ** 2
    return one_minus_mod2 * (4.0 / 3.0) * np.abs(s)


def _rational_margin(w):
    # 1 + (kz + z^2)/(k^2 - kz) = w  <=>  z^2 + k w z - k^2 (w - 1) = 0.
    k = RATIONAL_K
    b = k * w
    c = -(k * k) * (w - 1.0)
    sq = np.sqrt(b * b - 4.0 * c)
    sgn = np.where((np.conj(b) * sq).real >= 0.0, 1.0, -1.0)
    q = -(b + sgn * sq) / 2.0
    z = c / q  # root of smaller modulus
    # phi'(z) = (k^2 + 2kz - z^2) / (k (k - z)^2); numerator factored through its zero at -1.
    dphi = -(z + 1.0) * (z - (1.0 + SQRT2) ** 2) / (k * (k - z) ** 2)
    return (1.0 - np.abs(z) ** 2) * np.abs(dphi)


def _right_component(m, w):
    # |w^2-1| < 1 and |w^2-1| < 2|w| each have a mirror component in Re w < 0.
    return np.where(w.real > 0.0, m, np.minimum(m, w.real))


def margin(region: TargetRegion, w):
    """Signed containment margin, vectorized over ``w``."""
    w = np.asarray(w, dtype=complex)
    kind = region.kind
    if kind is RegionKind.HALF_PLANE:
        return w.real - region.alpha
    if kind is RegionKind.LEMNISCATE:
        return _right_component(1.0 - np.abs(w * w - 1.0), w)
    if kind is RegionKind.PARABOLIC:
        return w.real - np.abs(w - 1.0)
    if kind is RegionKind.EXP:
        if np.any(w == 0):
            raise DomainError("log is undefined at w = 0")
        return 1.0 - np.abs(np.log(w))
    if kind is RegionKind.CARDIOID:
        return _cardioid_margin(w)
    if kind is RegionKind.SINE:
        return 1.0 - np.abs(np.arcsin(w - 1.0))
    if kind is RegionKind.LUNE:
        return _right_component(2.0 * np.abs(w) - np.abs(w * w - 1.0), w)
    if kind is RegionKind.RATIONAL:
        return _rational_margin(w)
    raise AssertionError(kind)


def branch_flags(region: TargetRegion, w):
    """True where an inverse-map evaluation sits on a branch point."""
    w = np.asarray(w, dtype=complex)
    if region.kind is RegionKind.SINE:
        u = w - 1.0
        return (np.abs(u - 1.0) < BRANCH_EPS) | (np.abs(u + 1.0) < BRANCH_EPS)
    return np.zeros(w.shape, dtype=bool)


def contains(region: TargetRegion, w: complex) -> ContainmentMargin:
    w = complex(w)
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise DomainError("non-finite point")
    m = float(margin(region, w))
    flagged = bool(branch_flags(region, w))
    if flagged:
        warnings.warn(f"{w!r} is at an arcsin branch point", BranchWarning, stacklevel=2)
    return ContainmentMargin(m > 0.0, m, flagged)


def quartic_cardioid(w):
    """The implicit cardioid polynomial; negative on the region containing 1."""
    w = np.asarray(w, dtype=complex)
    x, y = w.real, w.imag
    rho = 9 * x * x + 9 * y * y
    return (rho - 18 * x + 5) ** 2 - 16 * (rho - 6 * x + 1)


# ---------------------------------------------------------------------------
# boundaries


def _circle_params(n: int) -> np.ndarray:
    # Hits theta = 0 and theta = pi for any n, so both real-axis crossings appear.
    upper = n // 2 + 1
    top = np.linspace(0.0, math.pi, upper)
    bottom = np.linspace(math.pi, 2 * math.pi, n - upper + 2)[1:-1]
    return np.concatenate([top, bottom])


def _symmetric_heights(n: int, clip: float) -> np.ndarray:
    lower = np.linspace(-clip, 0.0, n // 2 + 1)
    upper = np.linspace(0.0, clip, n - n // 2)[1:]
    return np.concatenate([lower, upper])


_BOUNDARY_MAPS: dict[RegionKind, Callable] = {
    RegionKind.LEMNISCATE: lambda z: np.sqrt(1 + z),
    RegionKind.EXP: np.exp,
    RegionKind.CARDIOID: lambda z: 1 + 4 * z / 3 + 2 * z * z / 3,
    RegionKind.SINE: lambda z: 1 + np.sin(z),
    RegionKind.LUNE: lambda z: z + np.sqrt(1 + z * z),
    RegionKind.RATIONAL: lambda z: 1 + (RATIONAL_K * z + z * z) / (RATIONAL_K**2 - RATIONAL_K * z),
}


def boundary_points(region: TargetRegion, n: int) -> np.ndarray:
    """``n`` boundary points in parameter order (read-only array).

    Bounded regions are traced once as the image of the unit circle; the
    half-plane and parabola are clipped to ``|Im w| <= UNBOUNDED_CLIP``.
    """
    if n < 16:
        raise DomainError("need at least 16 boundary points")
    kind = region.kind
    if kind is RegionKind.HALF_PLANE:
        y = _symmetric_heights(n, UNBOUNDED_CLIP)
        pts = region.alpha + 1j * y
    elif kind is RegionKind.PARABOLIC:
        y = _symmetric_heights(n, UNBOUNDED_CLIP)
        pts = (1 + y * y) / 2 + 1j * y
    else:
        pts = _BOUNDARY_MAPS[kind](np.exp(1j * _circle_params(n)))
    pts = np.asarray(pts, dtype=complex)
    pts.flags.writeable = False
    return pts


def _oracle_polygon(region: TargetRegion, n: int) -> np.ndarray:
    pts = boundary_points(region, n)
    if region.kind is RegionKind.HALF_PLANE:
        far = region.alpha + 2 * UNBOUNDED_CLIP
        pts = np.concatenate([pts, [far + 1j * UNBOUNDED_CLIP, far - 1j * UNBOUNDED_CLIP]])
    return pts


def oracle_classify(region: TargetRegion, w, n: int):
    """Point-in-polygon test against the sampled boundary.

    Returns ``(inside, conclusive)`` boolean arrays; points closer than
    ``2*pi*diameter/n`` to the polygon are marked inconclusive.
    """
    if n < 512:
        raise DomainError("oracle needs at least 512 boundary points")
    w = np.atleast_1d(np.asarray(w, dtype=complex))
    pts = _oracle_polygon(region, n)
    xy = np.column_stack([pts.real, pts.imag])
    diameter = math.hypot(*(xy.max(axis=0) - xy.min(axis=0)))
    poly = shapely.Polygon(xy)
    ring = poly.exterior
    shapely.prepare(poly)
    shapely.prepare(ring)
    inside = shapely.contains_xy(poly, w.real, w.imag)
    near = shapely.dwithin(ring, shapely.points(w.real, w.imag), 2 * math.pi * diameter / n)
    return inside, ~near


def contains_oracle(region: TargetRegion, w: complex, n: int) -> bool:
    inside, conclusive = oracle_classify(region, complex(w), n)
    if not conclusive[0]:
        raise InconclusiveError(f"{complex(w)!r} is too close to the sampled boundary of {region}")
    return bool(inside[0])


# ---------------------------------------------------------------------------
# largest contained disk about a real centre


@dataclass(frozen=True)
class _DiskLemma:
    lo: float
    hi: float
    breaks: tuple[float, ...]
    branches: tuple[Callable[[float], float], ...]

    def radius(self, a: float) -> float:
        for brk, fn in zip(self.breaks, self.branches):
            if a <= brk:
                return fn(a)
        return self.branches[-1](a)


_LEMMAS = {
    RegionKind.LEMNISCATE: _DiskLemma(
        0.0, SQRT2, (2 * SQRT2 / 3,),
        (lambda a: math.sqrt(math.sqrt(1 - a * a) - (1 - a * a)), lambda a: SQRT2 - a),
    ),
    RegionKind.PARABOLIC: _DiskLemma(
        0.5, math.inf, (1.5,),
        (lambda a: a - 0.5, lambda a: math.sqrt(2 * a - 2)),
    ),
    RegionKind.EXP: _DiskLemma(
        1 / E, E, ((E + 1 / E) / 2,),
        (lambda a: a - 1 / E, lambda a: E - a),
    ),
    RegionKind.CARDIOID: _DiskLemma(
        1 / 3, 3.0, (5 / 3,),
        (lambda a: a - 1 / 3, lambda a: 3 - a),
    ),
    RegionKind.SINE: _DiskLemma(
        1 - SIN1, 1 + SIN1, (1.0,),
        (lambda a: SIN1 - (1 - a), lambda a: SIN1 - (a - 1)),
    ),
    RegionKind.LUNE: _DiskLemma(
        SQRT2 - 1, SQRT2 + 1, (SQRT2,),
        (lambda a: 1 - (SQRT2 - a), lambda a: 1 - (a - SQRT2)),
    ),
    RegionKind.RATIONAL: _DiskLemma(
        2 * (SQRT2 - 1), 2.0, (SQRT2,),
        (lambda a: a - 2 * (SQRT2 - 1), lambda a: 2 - a),
    ),
}


def _lemma(region: TargetRegion) -> _DiskLemma:
    if region.kind is RegionKind.HALF_PLANE:
        return _DiskLemma(region.alpha, math.inf, (), (lambda a: a - region.alpha,))
    return _LEMMAS[region.kind]


def admissible_interval(region: TargetRegion) -> tuple[float, float]:
    """Open interval of centres for which :func:`max_disk_radius` is defined."""
    lem = _lemma(region)
    return lem.lo, lem.hi


def junctions(region: TargetRegion) -> list[tuple[float, Callable, Callable]]:
    """``(a, left_branch, right_branch)`` at each breakpoint of the radius formula."""
    lem = _lemma(region)
    return [(brk, lem.branches[i], lem.branches[i + 1]) for i, brk in enumerate(lem.breaks)]


def max_disk_radius(region: TargetRegion, a: float) -> float:
    """Radius of the disk about real ``a`` that the disk lemmas place inside ``region``."""
    a = float(a)
    lem = _lemma(region)
    if not (lem.lo < a < lem.hi):
        raise DomainError(f"centre {a!r} outside ({lem.lo!r}, {lem.hi!r}) for {region}")
    return lem.radius(a)
