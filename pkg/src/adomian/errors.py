"""Exception hierarchy."""


class AdomianError(Exception):
    """Base class for all library errors."""


class InvalidMonomialError(AdomianError, ValueError):
    """A monomial has the wrong total degree or weight for its polynomial."""

    def __init__(self, monomial, eta, n, reason):
        self.monomial = monomial
        self.eta = eta
        self.n = n
        super().__init__(f"invalid monomial {monomial} for eta={eta}, n={n}: {reason}")


class ArityError(AdomianError, ValueError):
    """Too few components supplied for substitution."""


class OrderRangeError(AdomianError, IndexError):
    """Partial-sum order outside the computed components."""


class DomainError(AdomianError):
    """Mathematical domain violation (CLI exit code 3)."""


class SingularityError(DomainError):
    """Closed form evaluated at or past its finite-time singularity."""

    def __init__(self, t, blow_up=None, message=None):
        self.t = t
        self.blow_up = blow_up
        if message is None:
            message = f"closed form is singular at t={t}"
            if blow_up is not None:
                message += f" (blow-up time t*={blow_up})"
        super().__init__(message)


class UnsupportedProblemError(DomainError):
    """Problem outside the closed-form reference (eta < 2, nonzero forcing)."""
