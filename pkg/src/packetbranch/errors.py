"""Exception hierarchy shared by all modules."""


class BranchingError(ValueError):
    """Base class for domain errors raised by packetbranch."""


class ParityError(BranchingError):
    pass


class RangeError(BranchingError):
    pass


class SignatureError(BranchingError):
    pass


class SignatureMismatch(BranchingError):
    pass


class ZeroRepError(BranchingError):
    pass


class AssumptionError(BranchingError):
    pass


class RegularityError(BranchingError):
    pass


class LengthError(BranchingError):
    pass


class DomainError(BranchingError):
    pass


class ScaleError(BranchingError):
    pass
