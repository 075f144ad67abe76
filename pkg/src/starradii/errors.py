"""Exception and warning types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where an operation is defined."""


class InconclusiveError(RuntimeError):
    """A numerical test cannot decide (point too close to a boundary, too many
    branch-flagged samples, ...)."""


class NoSignChangeError(RuntimeError):
    """A bracketing search never observed the sign change it needs."""


class BranchWarning(UserWarning):
    """An evaluation landed within round-off of a branch point."""
