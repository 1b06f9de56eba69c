"""Exception types raised by torusfan."""


class TorusFanError(Exception):
    """Base class for all library errors."""


class NoSolution(TorusFanError):
    """Right-hand side lies outside the column space."""


class NotUnimodular(TorusFanError):
    """Cone rays do not extend to a lattice basis."""


class PrereqFailed(TorusFanError):
    """An operation was called on data failing its precondition checks."""


class InvalidStratum(TorusFanError):
    """Index set is not a simplex of the fan."""


class Condition1Failed(TorusFanError):
    """Real projection restricted to the subspace is not injective."""


class ObstructionFails(TorusFanError):
    """Kaehler dimension condition does not hold."""


class ShapeMismatch(TorusFanError):
    """Matrix or vector shapes are incompatible."""


class RealAlphaTilde(TorusFanError):
    """Calabi-Eckmann parameter has zero imaginary part."""


class DegenerateLattice(TorusFanError):
    """Periods do not span a lattice of full rank."""


class NotComplete(TorusFanError):
    """Fan is not complete."""


class ParityViolation(TorusFanError):
    """Lift dimension has the wrong parity."""


class SizeViolation(TorusFanError):
    """Lift dimension is too small."""
