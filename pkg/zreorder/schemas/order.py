from typing import Tuple

from zreorder.models.presentation import Family
from zreorder.schemas.base import FrozenSchema
from zreorder.schemas.orbit import OrbitCount
from zreorder.schemas.presentation import ValidatedBijection

class Label(FrozenSchema):
    alpha: int
    step: int
    inner_rank: int = 0

    def key(self) -> Tuple[int, int, int]:
        return self.alpha, self.step, self.inner_rank

class NormalForm(FrozenSchema):
    """Forme normale de décalage : h(f^m(rep_i)) = (i, m)."""
    bijection: ValidatedBijection
    family: Family
    k: OrbitCount
    representatives: Tuple[int, ...] = ()
    direction: int = 1

