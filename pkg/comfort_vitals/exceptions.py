class ComfortVitalsException(Exception):
    """Base class for exceptions in this module."""

    code = "comfort-vitals-error"


class InvalidParameterError(ComfortVitalsException):
    """A parameter lies outside the range an operation accepts."""

    code = "invalid-parameter"


class InvalidRoiError(ComfortVitalsException):
    """The region of interest does not fit inside the frames."""

    code = "invalid-roi"


class InsufficientDataError(ComfortVitalsException):
    code = "insufficient-data"


class DegenerateInputError(ComfortVitalsException):
    """Zero variance where a statistic needs spread."""

    code = "degenerate-input"


class FormatError(ComfortVitalsException):
    """A file could not be read or does not follow its format."""

    code = "format-error"


class EstimationError(ComfortVitalsException):
    """Base class for failures to turn a signal into a rate."""

    code = "estimation-error"


class TooShortError(EstimationError):
    code = "too-short"


class InsufficientPeaksError(EstimationError):
    code = "insufficient-peaks"


class EstimationFailedError(EstimationError):
    """The pipeline produced a rate outside its physiological window."""

    code = "estimation-failed"
