"""Function-level checks: sample ``z f'/f`` of a catalog function on ``|z| = r``
and measure how the image sits relative to a target region."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from starradii.errors import DomainError, InconclusiveError, NoSignChangeError
from starradii.kernel import EXTREMAL, Z_CAP, ClassId, FunctionId, eval_logderiv
from starradii.radii import closed_form_radius, containment_margin, is_sharp, solve_radius
from starradii.regions import RegionKind, TargetRegion, branch_flags, contains, margin

TOL_INSIDE = 1e-9
TOL_TOUCH = 1e-6
TOL_RADIUS = 1e-9
DEFAULT_SAMPLES = 2048
MIN_SAMPLES = 360
BRANCH_LIMIT = 0.01
# Largest radius probed; the slack absorbs rounding in |r e^{it}|.
R_TOP = Z_CAP * (1 - 1e-15)


class Verdict(enum.Enum):
    CONTAINED = "contained"
    TOUCHES = "touches"
    VIOLATES = "violates"


def classify(min_margin: float, tol_inside: float = TOL_INSIDE, tol_touch: float = TOL_TOUCH) -> Verdict:
    # CONTAINED takes precedence where the two tolerance bands overlap.
    if min_margin > tol_inside:
        return Verdict.CONTAINED
    if min_margin >= -tol_touch:
        return Verdict.TOUCHES
    return Verdict.VIOLATES


def _complex_dict(z):
    if z is None:
        return None
    return {"re": float(z.real), "im": float(z.imag)}


@dataclass
class VerificationReport:
    cls: ClassId | None
    region: TargetRegion
    function: FunctionId
    radius_tested: float
    n_samples: int
    min_margin: float
    verdict: Verdict
    tolerances: dict[str, float]
    touch_point: complex | None = None
    argmin_z: complex | None = None
    argmin_w: complex | None = None
    checks: dict[str, bool] = field(default_factory=dict)
    details: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        if self.checks:
            return all(self.checks.values())
        return self.verdict is not Verdict.VIOLATES

    def to_dict(self) -> dict:
        return {
            "cls": self.cls.value if self.cls else None,
            "region": {"kind": self.region.kind.value, "alpha": self.region.alpha, "label": self.region.label},
            "function": self.function.value,
            "radius_tested": self.radius_tested,
            "n_samples": self.n_samples,
            "min_margin": self.min_margin,
            "verdict": self.verdict.value,
            "touch_point": _complex_dict(self.touch_point),
            "argmin_z": _complex_dict(self.argmin_z),
            "argmin_w": _complex_dict(self.argmin_w),
            "tolerances": dict(self.tolerances),
            "checks": dict(self.checks),
            "details": list(self.details),
            "passed": self.passed,
        }


def sample_circle(r: float, n: int) -> np.ndarray:
    theta = 2 * math.pi * np.arange(n) / n
    return r * np.exp(1j * theta)


def check_function_containment(
    fid: FunctionId,
    region: TargetRegion,
    r: float,
    n: int = DEFAULT_SAMPLES,
    tol_inside: float = TOL_INSIDE,
    tol_touch: float = TOL_TOUCH,
    cls: ClassId | None = None,
) -> VerificationReport:
    """Minimum region margin of ``z f'/f`` over ``n`` equally spaced points of ``|z| = r``."""
    if not (0.0 < r < 1.0):
        raise DomainError(f"radius must lie in (0, 1), got {r!r}")
    if n < MIN_SAMPLES:
        raise DomainError(f"need at least {MIN_SAMPLES} samples, got {n}")
    z = sample_circle(r, n)
    w = eval_logderiv(fid, z)
    m = margin(region, w)
    flagged = branch_flags(region, w)
    if flagged.mean() > BRANCH_LIMIT:
        raise InconclusiveError(f"{flagged.sum()} of {n} samples sit on a branch point")
    j = int(np.argmin(np.where(flagged, np.inf, m)))
    min_margin = float(m[j])
    verdict = classify(min_margin, tol_inside, tol_touch)
    return VerificationReport(
        cls=cls,
        region=region,
        function=fid,
        radius_tested=float(r),
        n_samples=n,
        min_margin=min_margin,
        verdict=verdict,
        tolerances={"tol_inside": tol_inside, "tol_touch": tol_touch},
        touch_point=complex(w[j]) if verdict is not Verdict.CONTAINED else None,
        argmin_z=complex(z[j]),
        argmin_w=complex(w[j]),
    )


def check_sharpness(fid: FunctionId, region: TargetRegion, R: float, z_star: complex, tol: float = TOL_TOUCH) -> bool:
    """True when ``z f'/f`` at ``z_star`` (on ``|z| = R``) lies on the region boundary to ``tol``."""
    z_star = complex(z_star)
    if abs(abs(z_star) - R) > 1e-12:
        raise DomainError(f"|z_star| = {abs(z_star)!r} differs from R = {R!r}")
    return abs(contains(region, eval_logderiv(fid, z_star)).margin) <= tol


# Sign of the real touch point z* = +-R for each sharp item; every other item touches at -R.
_TOUCH_SIDE = {
    (ClassId.PI1, RegionKind.LEMNISCATE): +1,
    (ClassId.PI1, RegionKind.SINE): +1,
}


def designated_touch(cls: ClassId, region: TargetRegion, R: float) -> complex | None:
    if not is_sharp(cls, region):
        return None
    return complex(_TOUCH_SIDE.get((cls, region.kind), -1) * R)


def estimate_radius_function_level(
    fid: FunctionId,
    region: TargetRegion,
    tol: float = 1e-8,
    n: int = DEFAULT_SAMPLES,
    step: float = 5e-3,
) -> float:
    """Largest ``r`` (to ``tol``) at which the sampled image is still CONTAINED."""
    if tol < 1e-10:
        raise DomainError(f"tol must be at least 1e-10, got {tol!r}")

    def contained(r: float) -> bool:
        return check_function_containment(fid, region, r, n).verdict is Verdict.CONTAINED

    grid = list(np.arange(1, int(1 / step)) * step) + [R_TOP]
    lo, hi = 0.0, None
    for r in grid:
        if contained(float(r)):
            lo = float(r)
        else:
            hi = float(r)
            break
    if hi is None:
        raise NoSignChangeError(f"{fid.value} image stays inside {region} up to |z| = {R_TOP}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if contained(mid):
            lo = mid
        else:
            hi = mid
    return lo


def _angle_gap(a: complex, b: complex) -> float:
    d = abs(math.atan2(a.imag, a.real) - math.atan2(b.imag, b.real)) % (2 * math.pi)
    return min(d, 2 * math.pi - d)


def cross_validate(
    cls: ClassId,
    region: TargetRegion,
    n: int = DEFAULT_SAMPLES,
    tol_inside: float = TOL_INSIDE,
    tol_touch: float = TOL_TOUCH,
) -> VerificationReport:
    """Closed form against bisection, then two-sided bracketing and boundary touch
    for the extremal function. Failures are recorded in the report, not raised."""
    checks: dict[str, bool] = {}
    details: list[str] = []
    R = closed_form_radius(cls, region)
    fid = EXTREMAL[cls]
    sharp = is_sharp(cls, region)

    def attempt(name, fn):
        try:
            checks[name] = bool(fn())
        except Exception as exc:  # report, keep going
            checks[name] = False
            details.append(f"{name}: {type(exc).__name__}: {exc}")

    attempt("closed_form_vs_bisection", lambda: abs(solve_radius(cls, region) - R) <= TOL_RADIUS)
    route = "unit" if (cls, region.kind) == (ClassId.PI2, RegionKind.LEMNISCATE) else "generic"
    attempt("disk_level", lambda: containment_margin(cls, region, R, route) >= -TOL_RADIUS)
    if route == "unit":
        attempt("unit_route_vs_closed_form", lambda: abs(solve_radius(cls, region, route="unit") - R) <= TOL_RADIUS)

    def run(r):
        return check_function_containment(fid, region, r, n, tol_inside, tol_touch, cls)

    attempt("contained_below", lambda: run(0.999 * R).verdict is Verdict.CONTAINED)
    try:
        at = run(R)
    except Exception as exc:
        details.append(f"at_radius: {type(exc).__name__}: {exc}")
        checks["at_radius"] = False
        at = None

    z_star = designated_touch(cls, region, R)
    if sharp:
        attempt("exceeds_above", lambda: run(1.001 * R).verdict is not Verdict.CONTAINED)
        attempt("check_sharpness", lambda: check_sharpness(fid, region, R, z_star, tol_touch))
        if at is not None:
            checks["touches_at_radius"] = at.verdict is Verdict.TOUCHES
            checks["touch_locality"] = _angle_gap(at.argmin_z, z_star) <= 2 * math.pi / n + 1e-12
    else:
        details.append("lower-bound item: only the containment direction is asserted")

    return VerificationReport(
        cls=cls,
        region=region,
        function=fid,
        radius_tested=R,
        n_samples=n,
        min_margin=at.min_margin if at else math.nan,
        verdict=at.verdict if at else Verdict.VIOLATES,
        tolerances={"tol_inside": tol_inside, "tol_touch": tol_touch, "tol_radius": TOL_RADIUS},
        touch_point=at.argmin_w if (at and sharp) else None,
        argmin_z=at.argmin_z if at else None,
        argmin_w=at.argmin_w if at else None,
        checks=checks,
        details=details,
    )
