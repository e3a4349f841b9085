"""Exception and warning classes shared across the package."""


class ScgrowthError(Exception):
    """Base class for domain errors (CLI exit status 1)."""


class ParseError(ScgrowthError):
    pass


class UnknownLetter(ParseError):
    def __init__(self, letter):
        super().__init__(f"unknown letter {letter!r}")
        self.letter = letter


class DuplicateGenerator(ParseError):
    pass


class EmptyGeneratorList(ParseError):
    pass


class NoRelators(ScgrowthError):
    pass


class NotVerifiedC16(ScgrowthError):
    """Dehn's algorithm requested for a presentation that fails C'(1/6)."""


class UnsupportedWordProblem(ScgrowthError):
    pass


class UnsupportedStrategy(ScgrowthError):
    pass


class ResourceCap(ScgrowthError):
    pass


class OutOfRange(ScgrowthError):
    """A distance or point lies outside the region the ball can resolve."""


class EmptyGeneratingSet(ScgrowthError):
    pass


class IdentityElement(ScgrowthError):
    pass


class NotLoxodromic(ScgrowthError):
    pass


class NonPositiveTranslation(ScgrowthError):
    pass


class EmptyFamily(ScgrowthError):
    pass


class NotReducedWord(ScgrowthError):
    pass


class TauBelowGate(ScgrowthError):
    pass


class InputOutOfRange(ScgrowthError):
    pass


class NonPositiveXi(InputOutOfRange):
    pass


class PropertyViolation(ScgrowthError):
    """A computed object contradicts a proved statement on a valid input."""


class BBelowThreshold(UserWarning):
    """Ping-pong exponent below the b0 threshold; the set is still built and re-verified."""
