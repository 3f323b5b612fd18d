"""
Exception hierarchy for notemap

Every failure raised by the library derives from NotemapError. The CLI turns
an exception into a process exit code through the ``exit_code`` attribute.
"""


class NotemapError(Exception):
    """Base class for all notemap errors"""

    exit_code = 1


class ConfigError(NotemapError):
    """Configuration could not be loaded or validated"""


# Pitch codec

class PitchError(NotemapError):
    pass


class UnknownLetter(PitchError):
    pass


class MalformedAccidental(PitchError):
    pass


class MissingOctave(PitchError):
    pass


class OffGrid(PitchError):
    """Value lies off the half-semitone grid that spellings can express"""


# Note-set grammar

class NoteSetError(NotemapError):
    pass


class EmptySet(NoteSetError):
    pass


class MalformedEntry(NoteSetError):
    pass


class IrrationalUnsupported(NoteSetError):
    pass


class TooFew(NoteSetError):
    pass


# Exact solver

class SolverError(NotemapError):
    pass


class DimensionMismatch(SolverError):
    pass


class NotSquare(SolverError):
    pass


class SingularMatrix(SolverError):
    pass


class NotFourByFour(SolverError):
    pass


# Mapping engine

class MappingError(NotemapError):
    pass


class NotAFunction(MappingError):
    """The same source value is paired with two different targets"""

    exit_code = 2


class OverconstrainedInconsistent(MappingError):
    pass


class EmptyInput(MappingError):
    pass


class CardinalityMismatch(MappingError):
    exit_code = 2


class DuplicateStepLabel(MappingError):
    pass


# Function expressions

class ExpressionError(NotemapError):
    pass


class ExpressionSyntaxError(ExpressionError):
    pass


class NonPolynomial(ExpressionError):
    pass


class IrrationalLiteral(ExpressionError):
    pass


# Progressions

class UnknownTemplate(NotemapError):
    pass


# Claim verification

class HarnessError(NotemapError):
    pass


class UnknownCase(HarnessError):
    pass


# Serialization and export

class ExportError(NotemapError):
    pass


class KeyOutOfRange(ExportError):
    pass


class BadReference(ExportError):
    pass


class ScoreFormatError(ExportError):
    pass
