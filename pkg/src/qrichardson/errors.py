"""Exception hierarchy shared by all modules.

Every exception carries the CLI exit code it maps to.
"""


class QRError(Exception):
    exit_code = 1


class InvalidInput(QRError):
    exit_code = 2


class DenominatorVanishes(InvalidInput, ZeroDivisionError):
    pass


class ParseError(InvalidInput, ValueError):
    pass


class BadShape(InvalidInput, ValueError):
    pass


class IndexOutOfBounds(InvalidInput, IndexError):
    pass


class NotSquare(InvalidInput, ValueError):
    pass


class NotComparable(InvalidInput, ValueError):
    pass


class NotALattice(InvalidInput, ValueError):
    pass


class InvariantViolation(QRError):
    exit_code = 3


class NotDistributive(InvariantViolation):
    pass


class RankDeficient(InvariantViolation):
    pass


class InconsistentParameters(InvariantViolation):
    pass


class NotConfluent(InvariantViolation):
    pass


class WeightViolation(InvariantViolation):
    pass


class ReconstructionFailed(QRError):
    exit_code = 4
