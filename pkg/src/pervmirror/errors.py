"""Exception hierarchy shared by all modules."""


class PervMirrorError(Exception):
    """Base class for every error raised by this package."""


class InputError(PervMirrorError):
    """Bad user input; the CLI maps these to exit code 2."""


class NotFullDimensional(InputError):
    pass


class DimensionOutOfRange(InputError):
    pass


class OriginNotInterior(InputError):
    pass


class NotReflexive(InputError):
    pass


class UnsupportedFaceDimension(InputError):
    pass


class InvalidConfiguration(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InternalInconsistency(PervMirrorError):
    """An identity that must hold by construction did not; indicates a bug."""


class VerificationFailed(PervMirrorError):
    """A mirror identity failed. ``identity`` names the first violated check."""

    def __init__(self, identity: str, report=None):
        self.identity = identity
        self.report = report
        super().__init__(f"verification failed: {identity}")
