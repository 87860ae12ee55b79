"""
Package schemas contenant les contrats de données pydantic.
"""

from .presentation import (
    TranslationPresentation,
    PairedShiftPresentation,
    AtomExpr,
    PairedExpr,
    InverseExpr,
    ComposeExpr,
    BijectionExpr,
    ValidatedBijection,
)
from .orbit import (
    OrbitInfo,
    OrbitCount,
    OrbitClassification,
    CoverFamily,
    CoverCheck,
    OrbitClass,
    WindowPartition,
)
from .order import Label, NormalForm
from .conjugacy import ConjugacyReport
from .verification import Violation, VerificationReport
from .run import RunConfig, CommandResult, RunRecord

__all__ = [
    "TranslationPresentation",
    "PairedShiftPresentation",
    "AtomExpr",
    "PairedExpr",
    "InverseExpr",
    "ComposeExpr",
    "BijectionExpr",
    "ValidatedBijection",
    "OrbitInfo",
    "OrbitCount",
    "OrbitClassification",
    "CoverFamily",
    "CoverCheck",
    "OrbitClass",
    "WindowPartition",
    "Label",
    "NormalForm",
    "ConjugacyReport",
    "Violation",
    "VerificationReport",
    "RunConfig",
    "CommandResult",
    "RunRecord",
]
