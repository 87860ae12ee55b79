import random
from typing import List

import pytest

from zreorder.schemas.presentation import AtomExpr, ValidatedBijection
from zreorder.services.orbit import OrbitService
from zreorder.services.presentation import PresentationService

CORPUS_SEED = 20240611
CORPUS_SIZE = 100
FAR_PATCH_OFFSETS = (-1000, 500)


def random_atom(rng: random.Random, max_patch: int = 8, max_shift: int = 5, far_share: float = 0.25) -> AtomExpr:
    """
    Atome valide de famille A : déplacement t != 0, patch permutant [lo, hi] -> [lo + t, hi + t].

    Une part far_share des patchs est placée loin de 0 (lo dans FAR_PATCH_OFFSETS).
    """
    t = rng.choice([d for d in range(-max_shift, max_shift + 1) if d != 0])
    size = rng.randint(0, max_patch)
    lo = rng.choice(FAR_PATCH_OFFSETS) if rng.random() < far_share else rng.randint(-10, 10)
    values = list(range(lo + t, lo + size + t))
    rng.shuffle(values)
    return AtomExpr(pairs=tuple(zip(range(lo, lo + size), values)), tail_up=t, tail_down=t)


def build_corpus(seed: int, size: int, periodic_point_free: bool = True) -> List[ValidatedBijection]:
    rng = random.Random(seed)
    corpus = []
    while len(corpus) < size:
        f = PresentationService.validate(random_atom(rng))
        if not periodic_point_free or OrbitService.is_periodic_point_free(f):
            corpus.append(f)
    return corpus


@pytest.fixture(scope="session")
def translation():
    """Fabrique de translations n -> n + t."""
    return PresentationService.translation


@pytest.fixture(scope="session")
def swap01() -> ValidatedBijection:
    return PresentationService.load("map { tail+ = 0; tail- = 0; patch { 0 -> 1, 1 -> 0 } }")


@pytest.fixture(scope="session")
def identity() -> ValidatedBijection:
    return PresentationService.load("map{tail+=0;tail-=0;patch{}}")


@pytest.fixture(scope="session")
def paired_shift() -> ValidatedBijection:
    return PresentationService.load("paired_shift")


@pytest.fixture(scope="session")
def corpus() -> List[ValidatedBijection]:
    """Corpus déterministe de présentations sans point périodique."""
    return build_corpus(CORPUS_SEED, CORPUS_SIZE)


@pytest.fixture(scope="session")
def mixed_corpus() -> List[ValidatedBijection]:
    """Corpus déterministe avec ou sans points périodiques."""
    return build_corpus(CORPUS_SEED + 1, CORPUS_SIZE, periodic_point_free=False)
