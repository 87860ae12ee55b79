from typing import List, Optional, Tuple
from pydantic import validator

from zreorder.models.orbit import CountKind, FragmentKind, OrbitKind
from zreorder.models.presentation import Family
from zreorder.schemas.base import FrozenSchema

class OrbitInfo(FrozenSchema):
    kind: OrbitKind
    cycle: Optional[Tuple[int, ...]] = None
    period: Optional[int] = None
    orbit_id: Optional[int] = None
    step: Optional[int] = None

    @classmethod
    def periodic(cls, cycle: Tuple[int, ...]) -> "OrbitInfo":
        return cls(kind=OrbitKind.PERIODIC, cycle=tuple(cycle), period=len(cycle))

    @classmethod
    def line(cls, orbit_id: int, step: int) -> "OrbitInfo":
        return cls(kind=OrbitKind.LINE, orbit_id=orbit_id, step=step)

    @property
    def is_periodic(self) -> bool:
        return self.kind is OrbitKind.PERIODIC

class OrbitCount(FrozenSchema):
    kind: CountKind
    value: Optional[int] = None

    @classmethod
    def finite(cls, value: int) -> "OrbitCount":
        return cls(kind=CountKind.FINITE, value=value)

    @classmethod
    def countably_infinite(cls) -> "OrbitCount":
        return cls(kind=CountKind.COUNTABLY_INFINITE)

    @property
    def is_finite(self) -> bool:
        return self.kind is CountKind.FINITE

    def __str__(self) -> str:
        return str(self.value) if self.is_finite else "countably_infinite"

class OrbitClassification(FrozenSchema):
    family: Family
    window: Tuple[int, int]
    cycles: Tuple[Tuple[int, ...], ...] = ()
    line_count: OrbitCount
    representatives: Tuple[int, ...] = ()
    representative_rule: Optional[str] = None
    cofinite_fixed_tail: bool = False

# Cover families
class CoverFamily(FrozenSchema):
    sets: Tuple[Tuple[int, ...], ...]

    @validator("sets", each_item=True)
    def normalize_set(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(sorted(set(v)))

    @classmethod
    def of(cls, sets) -> "CoverFamily":
        return cls(sets=tuple(tuple(s) for s in sets))

    def as_lists(self) -> List[List[int]]:
        return [list(s) for s in self.sets]

class CoverCheck(FrozenSchema):
    valid: bool
    violated: Optional[int] = None
    witness: Tuple[int, ...] = ()
    reason: Optional[str] = None

# Oracle output
class OrbitClass(FrozenSchema):
    kind: FragmentKind
    points: Tuple[int, ...]

class WindowPartition(FrozenSchema):
    window: Tuple[int, int]
    classes: Tuple[OrbitClass, ...] = ()

    def as_sets(self) -> List[Tuple[FragmentKind, frozenset]]:
        """Classes sous forme comparable, indépendante de l'ordre."""
        return sorted(((c.kind, frozenset(c.points)) for c in self.classes), key=lambda item: min(item[1]))
