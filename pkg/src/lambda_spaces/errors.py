"""Exception hierarchy; every error carries a stable machine-readable code."""


class LambdaSpaceError(Exception):
    code = "ERROR"

    def __init__(self, message=""):
        super().__init__(message or self.code)


class InvalidWeightsError(LambdaSpaceError):
    code = "INVALID_WEIGHTS"


class IndexOutOfRangeError(LambdaSpaceError):
    code = "INDEX_OUT_OF_RANGE"


class NoTailBoundError(LambdaSpaceError):
    code = "NO_TAIL_BOUND"


class NonconvergentError(LambdaSpaceError):
    code = "NONCONVERGENT"


class BracketingFailedError(LambdaSpaceError):
    code = "BRACKETING_FAILED"


class DomainError(LambdaSpaceError):
    code = "DOMAIN"


class NotOnSphereError(LambdaSpaceError):
    code = "NOT_ON_SPHERE"


class WitnessUnavailableError(LambdaSpaceError):
    code = "WITNESS_UNAVAILABLE"
