from typing import Optional, Tuple

from zreorder.models.conjugacy import ConjugacyVerdict, RefutationReason
from zreorder.schemas.base import FrozenSchema

class ConjugacyReport(FrozenSchema):
    verdict: ConjugacyVerdict
    k: Optional[int] = None
    orbit_labels: Tuple[int, ...] = ()
    reason: Optional[RefutationReason] = None
    cycle: Optional[Tuple[int, ...]] = None

    @classmethod
    def conjugate(cls, k: int) -> "ConjugacyReport":
        return cls(verdict=ConjugacyVerdict.CONJUGATE, k=k, orbit_labels=tuple(range(k)))

    @classmethod
    def identity(cls) -> "ConjugacyReport":
        return cls(verdict=ConjugacyVerdict.IDENTITY, k=0)

    @classmethod
    def periodic_points(cls, cycle: Tuple[int, ...]) -> "ConjugacyReport":
        return cls(
            verdict=ConjugacyVerdict.NOT_CONJUGATE,
            reason=RefutationReason.PERIODIC_POINTS,
            cycle=tuple(cycle),
        )

    @classmethod
    def infinitely_many_orbits(cls) -> "ConjugacyReport":
        return cls(verdict=ConjugacyVerdict.NOT_CONJUGATE, reason=RefutationReason.INFINITELY_MANY_ORBITS)
