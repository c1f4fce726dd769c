class QuantumError(Exception):
    """Base class for every error raised by the toolkit"""


class ShapeError(QuantumError, ValueError):
    """Operand dimensions do not fit together"""


class ContractError(QuantumError, ValueError):
    """An input violates a documented precondition (not Hermitian, not a distribution, ...)"""


class DomainError(QuantumError, ValueError):
    """A function is undefined on the given input (log of zero, T <= 0, ...)"""


class ResourceError(QuantumError, ValueError):
    """The requested object would exceed the size guards"""


class NumericalError(QuantumError):
    """A result that should be real or nonnegative drifted beyond tolerance"""


class ConvergenceError(NumericalError):
    pass


class AtypicalSequenceError(QuantumError):
    """Raised by a typical-set codebook asked to compress a string it does not hold"""

    def __init__(self, bits):
        self.bits = tuple(bits)
        super().__init__(f"Sequence {''.join(map(str, self.bits))} is not in the typical set")


class CompressionFailure(QuantumError):
    """The state has no component in the typical subspace"""

    def __init__(self, success_prob=0.0):
        self.success_prob = success_prob
        super().__init__(f"State lies outside the typical subspace (success probability {success_prob:.3e})")


class MatrixParseError(QuantumError, ValueError):
    def __init__(self, message, line, column=None):
        self.line = line
        self.column = column
        location = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{message} ({location})")
