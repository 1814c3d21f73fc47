"""
Tract Matroid Errors
Exception hierarchy shared by the library, the services and the CLI
"""
from typing import Any, Optional, Tuple


class TractMatroidError(Exception):
    """Root of every error raised by the library"""

    def __init__(self, message: str, witness: Optional[Tuple[Any, ...]] = None):
        super().__init__(message)
        self.message = message
        self.witness = witness

    def __str__(self) -> str:
        if self.witness is None:
            return self.message
        return f"{self.message} (witness: {', '.join(str(w) for w in self.witness)})"


class TractMismatchError(TractMatroidError, TypeError):
    """Values from two different tract instances were combined"""


class TractDomainError(TractMatroidError, ValueError):
    """Operation outside its domain, e.g. inverting zero"""


class ParseError(TractMatroidError, ValueError):
    """Malformed serialized value, descriptor or file"""

    def __init__(self, message: str, position: Optional[str] = None):
        super().__init__(message)
        self.position = position

    def __str__(self) -> str:
        if self.position:
            return f"{self.message} at {self.position}"
        return self.message


class UnderlyingMatroidError(TractMatroidError):
    """Circuit supports violate the classical matroid circuit axioms"""


class DualityError(TractMatroidError):
    """Cocircuit values could not be propagated consistently"""


class EliminationPreconditionError(TractMatroidError):
    """eliminate() was called on a pair that does not qualify for elimination"""


class QuasiPluckerError(TractMatroidError):
    """Quasi-Plücker data is inconsistent with a matroid"""


class MinorError(TractMatroidError):
    """Invalid deletion or contraction request"""


class LocalizationError(TractMatroidError):
    """Value map is not a valid equivariant map on cocircuits"""


class NotALocalizationError(LocalizationError):
    """Equivariant map fails the localization axioms; carries the axiom report"""

    def __init__(self, message: str, report: Any = None, witness: Optional[Tuple[Any, ...]] = None):
        super().__init__(message, witness)
        self.report = report


class ExtensionError(TractMatroidError):
    """Single-element extension could not be built or recovered"""
