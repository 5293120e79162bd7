class AutoComplexityError(Exception):
    """
    Base class of every error raised by autocomplexity
    """


class InvalidSymbol(AutoComplexityError, ValueError):
    """
    Raised when a word contains a symbol outside of its alphabet
    """


class InvalidAlphabet(AutoComplexityError, ValueError):
    """
    Raised when an alphabet size is not admissible for the requested operation
    """


class InvalidArity(AutoComplexityError, ValueError):
    """
    Raised when a valence size is outside of 1..b
    """


class AlphabetMismatch(AutoComplexityError, ValueError):
    """
    Raised when an automaton and a word are defined over different alphabets
    """


class InvalidAutomaton(AutoComplexityError, ValueError):
    """
    Raised when an automaton refers to states or symbols it does not own
    """


class EvenLengthUnsupported(AutoComplexityError, ValueError):
    """
    Raised when a Kayleigh graph is requested for a word of even length
    """


class OverlappingRuns(AutoComplexityError, ValueError):
    """
    Raised when the runs of a selection overlap or touch each other
    """


class InvalidSelection(AutoComplexityError, ValueError):
    """
    Raised when a run selection does not fit the word it is applied to
    """


class SearchLimitExceeded(AutoComplexityError):
    """
    Raised when an exhaustive search is requested beyond the configured limits
    """


class InvalidProbability(AutoComplexityError, ValueError):
    """
    Raised when a probability lies outside of [0, 1]
    """


class DomainError(AutoComplexityError, ValueError):
    """
    Raised when a real-valued function is evaluated outside of its domain
    """


class InvariantViolation(AutoComplexityError):
    """
    Raised when a proven property fails on computed values, which signals a bug
    """
