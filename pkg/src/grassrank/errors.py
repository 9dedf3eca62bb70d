"""Exception types shared across the package."""


class GrassrankError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameterError(GrassrankError):
    """A parameter is outside its legal range (q < 2, k > n, ...)."""


class MalformedInputError(GrassrankError):
    """Text input could not be parsed."""


class NotRrefError(GrassrankError):
    """A matrix violates one of the reduced row echelon conditions."""


class InconsistentExtensionError(GrassrankError):
    """The top row of an extended representation contradicts its matrix."""


class WrongEntryCountError(GrassrankError):
    """An entries vector does not match the size of its diagram."""


class RankDeficientError(GrassrankError):
    """Rows fed to Gaussian elimination are linearly dependent."""


class NonPrimeFieldError(GrassrankError):
    """Field arithmetic was requested for a non-prime alphabet size."""


class InvalidPrefixError(GrassrankError):
    """A column or diagram prefix is structurally inconsistent."""


class SizeMismatchError(GrassrankError):
    """Two diagrams live in different boxes or have different sizes."""


class IndexOutOfRangeError(GrassrankError):
    """An index lies outside [0, count) for the requested family."""


class ParamMismatchError(GrassrankError):
    """Two objects that must share (q, n, k) do not."""


class TooLargeError(GrassrankError):
    """The exhaustive oracle was asked to enumerate past its cap."""


class TypeSError(GrassrankError):
    """The operation is undefined for subspaces with the full-box diagram."""


class ExactDivisionError(GrassrankError):
    """An exact base-q shift or division left a nonzero remainder."""
