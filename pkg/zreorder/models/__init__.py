"""
Package models contenant les énumérations du domaine.
"""

from .presentation import Capability, Family, ExprKind
from .orbit import OrbitKind, CountKind, FragmentKind
from .order import Comparison
from .coloring import Color
from .conjugacy import ConjugacyVerdict, RefutationReason
from .run import Command, OutputFormat, RunStatus

# Export all models
__all__ = [
    "Capability",
    "Family",
    "ExprKind",
    "OrbitKind",
    "CountKind",
    "FragmentKind",
    "Comparison",
    "Color",
    "ConjugacyVerdict",
    "RefutationReason",
    "Command",
    "OutputFormat",
    "RunStatus",
]
