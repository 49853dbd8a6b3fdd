"""Exception hierarchy shared by all modules."""


class SecgrassError(Exception):
    """Base class for every error raised by this package."""


class CompositeModulus(SecgrassError, ValueError):
    pass


class ModulusTooSmall(SecgrassError, ValueError):
    pass


class DuplicateDirection(SecgrassError, ValueError):
    pass


class ArityMismatch(SecgrassError, ValueError):
    pass


class IndexOutOfRange(SecgrassError, IndexError):
    pass


class ShapeMismatch(SecgrassError, ValueError):
    pass


class RankDeficient(SecgrassError, ValueError):
    pass


class SingularPivotBlock(SecgrassError, ArithmeticError):
    """The pivot block of a chart is singular at the sampled point."""


class SampleFailure(SecgrassError, RuntimeError):
    """Resampling did not produce a generic point within the retry cap."""


class DegenerateSample(SecgrassError, ArithmeticError):
    """Sampled points fail to span a plane of the requested dimension."""


class ParseError(SecgrassError, ValueError):
    pass


class InvariantViolation(SecgrassError, ValueError):
    pass


class TargetTooSmall(SecgrassError, ValueError):
    pass


class TooManyDirections(SecgrassError, ValueError):
    """The requested computation exceeds the active-direction guard."""
