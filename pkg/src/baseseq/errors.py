"""Exception types raised across the package."""


class BaseSeqError(ValueError):
    pass


class NotInAlphabet(BaseSeqError):
    """A 2x2 quad (or column) matches none of the labelled patterns."""


class BadLength(BaseSeqError):
    pass


class BadDigit(BaseSeqError):
    pass


class NotNormalized(BaseSeqError):
    """The first (A;B) quad is not the label-0 pattern."""


class NotBaseSequences(BaseSeqError):
    pass


class ParityUndefined(BaseSeqError):
    pass


class VertexNotFound(BaseSeqError):
    pass


class NotGolay(BaseSeqError):
    pass


class NotGolayNumber(BaseSeqError):
    pass


class NotTSequences(BaseSeqError):
    pass


class ConstructionFailed(RuntimeError):
    """A construction produced an object that fails its own verifier (a bug, never data)."""


class NearNormalParity(BaseSeqError):
    pass


class EntryOutOfRange(BaseSeqError):
    pass
