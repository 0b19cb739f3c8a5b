"""Exact computations with quantum Grassmannians, their Richardson quotients
and their toric degenerations."""

from .errors import (
    InvalidInput, InvariantViolation, NotDistributive, QRError, RankDeficient,
    ReconstructionFailed,
)
from .scalars import ONE, ZERO, QScalar, as_pure_q_power, parse_scalar, q, specialize

__version__ = "0.1.0"

__all__ = [
    "InvalidInput", "InvariantViolation", "NotDistributive", "QRError", "RankDeficient",
    "ReconstructionFailed", "ONE", "ZERO", "QScalar", "as_pure_q_power", "parse_scalar", "q",
    "specialize", "__version__",
]
