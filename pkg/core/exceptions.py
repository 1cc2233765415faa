"""
Error tree for knotsig

Every error carries an exit_code consumed by the command-line front end.
"""

from typing import Optional, Tuple


class KnotSigError(Exception):
    """Base class for all library errors"""
    exit_code = 1


# hermitian-core

class NotHermitian(KnotSigError, ValueError):
    def __init__(self, entry: Tuple[int, int], deviation: float, tolerance: float):
        self.entry = entry
        self.deviation = deviation
        self.tolerance = tolerance
        i, j = entry
        super().__init__(
            f"matrix is not Hermitian: |H[{i},{j}] - conj(H[{j},{i}])| = "
            f"{deviation:.3e} exceeds {tolerance:.3e}"
        )


class IndexOutOfRange(KnotSigError, IndexError):
    pass


class EqualIndices(KnotSigError, ValueError):
    pass


class ZeroScale(KnotSigError, ValueError):
    pass


# seifert-knots

class OddDimension(KnotSigError, ValueError):
    def __init__(self, dim: int):
        self.dim = dim
        super().__init__(f"Seifert matrix has odd dimension {dim}")


class NonUnimodularSkewPart(KnotSigError, ValueError):
    def __init__(self, determinant: int):
        self.determinant = determinant
        super().__init__(f"det(A - A^T) = {determinant}, expected 1")


class NotValid(KnotSigError, ValueError):
    pass


class NotCoprime(KnotSigError, ValueError):
    pass


class OutOfRange(KnotSigError, ValueError):
    pass


# satellite-builder

class InvalidSpec(KnotSigError, ValueError):
    pass


# invariants

class ZeroPolynomial(KnotSigError, ValueError):
    pass


class ProfileInconsistent(KnotSigError):
    def __init__(self, arc: int, values: Tuple[int, ...]):
        self.arc = arc
        self.values = values
        super().__init__(f"signature samples disagree on arc {arc}: {sorted(set(values))}")


# lab

class RootOfUnityExcluded(KnotSigError, ValueError):
    exit_code = 4


class StageMismatch(KnotSigError):
    exit_code = 5

    def __init__(self, stage: str, deviation: float, detail: Optional[str] = None):
        self.stage = stage
        self.deviation = deviation
        msg = f"stage {stage}: max-abs deviation {deviation:.3e}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class RequiresNAtLeast3(KnotSigError, ValueError):
    pass


class VerificationFailed(KnotSigError):
    exit_code = 5


# cli

class UnknownKnot(KnotSigError, KeyError):
    exit_code = 2

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown knot"


class ParseError(KnotSigError, ValueError):
    exit_code = 3

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ConfigError(KnotSigError, ValueError):
    """Unreadable config.yaml"""
