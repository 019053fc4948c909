"""Exception types raised across the package."""


class DomainError(ValueError):
    """An input falls outside the region where a formula is real and finite."""


class DegenerateError(DomainError):
    """A formula is singular for the given parameters (e.g. zero acceleration)."""


class NoInterceptError(DomainError):
    """The outgoing wavefront never reaches the target."""


class BranchError(DomainError):
    """A logarithm or complex power would leave its principal real-argument branch."""
