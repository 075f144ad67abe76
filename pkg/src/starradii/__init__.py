"""Sharp radius constants for two classes of analytic functions defined by
ratio conditions against the Koebe function, with numerical verification."""

from starradii.errors import BranchWarning, DomainError, InconclusiveError, NoSignChangeError
from starradii.kernel import ClassId, DiskSpec, FunctionId, eval_function, eval_logderiv, logderiv_bound
from starradii.regions import RegionKind, TargetRegion, contains, max_disk_radius
from starradii.radii import RadiusResult, closed_form_radius, radius_table, solve_radius
from starradii.verify import Verdict, VerificationReport, cross_validate

__version__ = "0.1.0"

__all__ = [
    "BranchWarning",
    "ClassId",
    "DiskSpec",
    "DomainError",
    "FunctionId",
    "InconclusiveError",
    "NoSignChangeError",
    "RadiusResult",
    "RegionKind",
    "TargetRegion",
    "Verdict",
    "VerificationReport",
    "closed_form_radius",
    "contains",
    "cross_validate",
    "eval_function",
    "eval_logderiv",
    "logderiv_bound",
    "max_disk_radius",
    "radius_table",
    "solve_radius",
]
