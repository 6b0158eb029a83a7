class CheapARSException(Exception):
    """Catch-all exception for errors emitted by this library."""

    pass


class InvalidParameter(CheapARSException, ValueError):
    """A target or sampler parameter is outside its valid range."""

    pass


class DomainError(CheapARSException, ValueError):
    """A function was evaluated outside the support of the target."""

    pass


class ImproperProposal(CheapARSException):
    """The envelope would have a piece with infinite area."""

    pass


class DegenerateNodes(CheapARSException):
    """The support set cannot produce a well-defined hull."""

    pass


class InitializationError(CheapARSException):
    """No proper initial support set could be drawn."""

    pass


class DiagnosticUnavailable(CheapARSException):
    """The diagnostic needs information the target does not provide."""

    pass


class DiagnosticFailure(CheapARSException):
    """A numerical diagnostic did not converge or found a broken envelope."""

    pass


class InvalidConfig(CheapARSException):
    """Experiment configuration errors are collected per key."""

    def __init__(self, message, errors=None):
        super(InvalidConfig, self).__init__(message)
        self.errors = errors or {}


class ValidationFailed(CheapARSException):
    """One or more checks of the validation suite failed."""

    def __init__(self, message, failed=None):
        super(ValidationFailed, self).__init__(message)
        self.failed = failed or []
