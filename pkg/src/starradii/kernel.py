"""Catalog functions, their logarithmic derivatives, and the class disk bounds.

Everything here works on Python complex scalars or numpy complex arrays; a
scalar in gives a scalar out.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

import numpy as np

from starradii.errors import DomainError

# Evaluation is refused beyond this modulus; every catalog pole sits on |z| = 1.
Z_CAP = 1.0 - 1e-9


class FunctionId(enum.Enum):
    F0 = "f0"
    F1 = "f1"
    F2 = "f2"
    F3 = "f3"
    G0 = "g0"
    G1 = "g1"
    G2 = "g2"
    G3 = "g3"
    KOEBE = "koebe"


class ClassId(enum.Enum):
    """PI1: f/g has positive real part; PI2: |f/g - 1| < 1. In both, g/k has
    positive real part where k is the Koebe function."""

    PI1 = "pi1"
    PI2 = "pi2"


@dataclass(frozen=True)
class DiskSpec:
    """Closed disk ``{w : |w - center| <= radius}`` with a real center."""

    center: float
    radius: float

    def __post_init__(self):
        if not np.isfinite(self.center) or not np.isfinite(self.radius):
            raise DomainError(f"non-finite disk {self.center!r}, {self.radius!r}")
        if self.radius < 0:
            raise DomainError(f"negative disk radius {self.radius!r}")

    @property
    def left(self) -> float:
        return self.center - self.radius

    @property
    def right(self) -> float:
        return self.center + self.radius

    def contains(self, w, rel_inflate: float = 0.0, abs_inflate: float = 0.0):
        """Closed-disk membership, optionally inflated; vectorized over ``w``."""
        bound = self.radius * (1.0 + rel_inflate) + abs_inflate
        return np.abs(np.asarray(w) - self.center) <= bound


_FUNCTIONS: dict[FunctionId, Callable] = {
    FunctionId.F0: lambda z: z * (1 + z) ** 2 / (1 - z) ** 4,
    FunctionId.F1: lambda z: z / (1 + z) ** 2,
    FunctionId.F2: lambda z: z / (1 - z),
    FunctionId.F3: lambda z: z * (1 + z) ** 2 / (1 - z) ** 3,
    FunctionId.G0: lambda z: z * (1 + z) / (1 - z) ** 3,
    FunctionId.G1: lambda z: z / (1 - z * z),
    FunctionId.G2: lambda z: z / (1 - z * z),
    FunctionId.G3: lambda z: z * (1 + z) / (1 - z) ** 3,
    FunctionId.KOEBE: lambda z: z / (1 - z) ** 2,
}

# z f'(z) / f(z), simplified by hand. Each is a rational function equal to 1 at z = 0.
_LOGDERIVS: dict[FunctionId, Callable] = {
    FunctionId.F0: lambda z: (1 + 6 * z + z * z) / (1 - z * z),
    FunctionId.F1: lambda z: (1 - z) / (1 + z),
    FunctionId.F2: lambda z: 1 / (1 - z),
    FunctionId.F3: lambda z: (1 + 5 * z) / (1 - z * z),
    FunctionId.G0: lambda z: (1 + 4 * z + z * z) / (1 - z * z),
    FunctionId.G1: lambda z: (1 + z * z) / (1 - z * z),
    FunctionId.G2: lambda z: (1 + z * z) / (1 - z * z),
    FunctionId.G3: lambda z: (1 + 4 * z + z * z) / (1 - z * z),
    FunctionId.KOEBE: lambda z: (1 + z) / (1 - z),
}

# Companion g for each witness f: f/g and (1-z)^2 g/z are checked in tests.
WITNESS_PAIRS = {
    FunctionId.F0: FunctionId.G0,
    FunctionId.F1: FunctionId.G1,
    FunctionId.F2: FunctionId.G2,
    FunctionId.F3: FunctionId.G3,
}

# The function that attains each class's radii.
EXTREMAL = {ClassId.PI1: FunctionId.F0, ClassId.PI2: FunctionId.F3}


def _as_disk_points(z):
    arr = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(arr)):
        raise DomainError("non-finite argument")
    if np.any(np.abs(arr) > Z_CAP):
        raise DomainError(f"|z| must stay below {Z_CAP!r}")
    return arr


def _apply(table, fid: FunctionId, z):
    arr = _as_disk_points(z)
    out = table[fid](arr)
    if np.ndim(out) == 0:
        return complex(out)
    return out


def eval_function(fid: FunctionId, z):
    """Value of catalog function ``fid`` at ``z`` (scalar or array, ``|z| < 1``)."""
    return _apply(_FUNCTIONS, fid, z)


def eval_logderiv(fid: FunctionId, z):
    """``z f'(z) / f(z)`` from the closed form; equals 1 at the origin."""
    return _apply(_LOGDERIVS, fid, z)


def _check_radius(r: float) -> float:
    r = float(r)
    if not (0.0 <= r < 1.0):
        raise DomainError(f"radius must lie in [0, 1), got {r!r}")
    return r


def mobius_disk_image(r: float) -> DiskSpec:
    """Image of ``|z| <= r`` under ``(1 + z) / (1 - z)``."""
    r = _check_radius(r)
    d = 1.0 - r * r
    return DiskSpec((1.0 + r * r) / d, 2.0 * r / d)


def logderiv_bound(cls: ClassId, r: float) -> DiskSpec:
    """Disk holding ``z f'/f`` on ``|z| <= r`` for every member of ``cls``."""
    r = _check_radius(r)
    d = 1.0 - r * r
    center = (1.0 + r * r) / d
    if cls is ClassId.PI1:
        return DiskSpec(center, 6.0 * r / d)
    return DiskSpec(center, (5.0 * r + r * r) / d)


def unit_centered_bound(cls: ClassId, r: float) -> DiskSpec:
    """Coarser disk about 1 obtained from :func:`logderiv_bound` by the
    triangle inequality (the centre moves by ``2r^2/(1-r^2)``)."""
    disk = logderiv_bound(cls, r)
    return DiskSpec(1.0, disk.radius + (disk.center - 1.0))
