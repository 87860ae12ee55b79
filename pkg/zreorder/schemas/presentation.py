from typing import Dict, Literal, Optional, Tuple, Union
from pydantic import Field, PrivateAttr, validator

from zreorder.models.presentation import Capability, ExprKind, Family
from zreorder.schemas.base import FrozenSchema

# Family A: translation on each tail, explicit finite patch in between
class TranslationPresentation(FrozenSchema):
    patch: Dict[int, int] = Field(default_factory=dict)
    tail_up: int
    tail_down: int

    _lo: Optional[int] = PrivateAttr(default=None)
    _hi: Optional[int] = PrivateAttr(default=None)
    _hash: int = PrivateAttr(default=0)

    def __init__(self, **data):
        super().__init__(**data)
        if self.patch:
            self._lo = min(self.patch)
            self._hi = max(self.patch)
        self._hash = hash((tuple(sorted(self.patch.items())), self.tail_up, self.tail_down))

    @property
    def lo(self) -> Optional[int]:
        return self._lo

    @property
    def hi(self) -> Optional[int]:
        return self._hi

    @property
    def bounds(self) -> Tuple[int, int]:
        """Bornes du noyau ; (0, -1) désigne un noyau vide."""
        if self._lo is None:
            return 0, -1
        return self._lo, self._hi

    @property
    def is_pure_translation(self) -> bool:
        return not self.patch and self.tail_up == self.tail_down

    def __hash__(self) -> int:
        return self._hash

# Family B: f = p^-1 o (id x (k -> k + direction)) o p
class PairedShiftPresentation(FrozenSchema):
    direction: int

    @validator("direction")
    def validate_direction(cls, v: int) -> int:
        if v not in (1, -1):
            raise ValueError("direction doit valoir +1 ou -1")
        return v

# Expression trees produced by the parser
class AtomExpr(FrozenSchema):
    kind: Literal[ExprKind.ATOM] = ExprKind.ATOM
    pairs: Tuple[Tuple[int, int], ...] = ()
    tail_up: int
    tail_down: int

class PairedExpr(FrozenSchema):
    kind: Literal[ExprKind.PAIRED] = ExprKind.PAIRED
    direction: int

    @validator("direction")
    def validate_direction(cls, v: int) -> int:
        if v not in (1, -1):
            raise ValueError("direction doit valoir +1 ou -1")
        return v

class InverseExpr(FrozenSchema):
    kind: Literal[ExprKind.INVERSE] = ExprKind.INVERSE
    operand: "BijectionExpr"

class ComposeExpr(FrozenSchema):
    """compose(left, right) = left o right : right est appliquée en premier."""
    kind: Literal[ExprKind.COMPOSE] = ExprKind.COMPOSE
    left: "BijectionExpr"
    right: "BijectionExpr"

BijectionExpr = Union[AtomExpr, PairedExpr, InverseExpr, ComposeExpr]

InverseExpr.update_forward_refs()
ComposeExpr.update_forward_refs()

# Schema for an analysis-ready bijection
class ValidatedBijection(FrozenSchema):
    capability: Capability
    family: Family
    translation: Optional[TranslationPresentation] = None
    paired: Optional[PairedShiftPresentation] = None
    expr: Optional[BijectionExpr] = None

    @validator("expr", always=True)
    def validate_canonical(cls, v, values):
        family = values.get("family")
        present = {
            Family.TRANSLATION: values.get("translation") is not None,
            Family.PAIRED_SHIFT: values.get("paired") is not None,
            Family.OPAQUE: v is not None,
        }
        if family is not None and not present[family]:
            raise ValueError(f"forme canonique manquante pour {family.value}")
        return v

    @property
    def canonical(self) -> Union[TranslationPresentation, PairedShiftPresentation, BijectionExpr]:
        if self.family is Family.TRANSLATION:
            return self.translation
        if self.family is Family.PAIRED_SHIFT:
            return self.paired
        return self.expr

    @property
    def is_analyzable(self) -> bool:
        return self.capability is Capability.FULL_ANALYSIS
