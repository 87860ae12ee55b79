"""
Algèbre des présentations de la famille A : translation sur chaque queue,
patch fini contigu sur [lo, hi].
"""

from typing import Dict, Iterable, Tuple

from zreorder.core.config import settings
from zreorder.core.exceptions import AnalysisLimitExceeded, BudgetExceeded, InvalidPatch, NotBijective
from zreorder.schemas.presentation import TranslationPresentation


def check_translation(pairs: Iterable[Tuple[int, int]], tail_up: int, tail_down: int) -> TranslationPresentation:
    """
    Vérifie qu'un atome définit une bijection de Z.

    Args:
        pairs: Couples (clé, valeur) du patch, dans l'ordre du texte
        tail_up: Déplacement appliqué à n > hi
        tail_down: Déplacement appliqué à n < lo

    Returns:
        TranslationPresentation: Présentation validée (non réduite)

    Raises:
        InvalidPatch: Clé dupliquée, trou dans les clés ou valeurs non injectives
        NotBijective: Collision ou point sans antécédent, avec témoin
    """
    patch: Dict[int, int] = {}
    for key, value in pairs:
        if key in patch:
            raise InvalidPatch(f"clé dupliquée {key}", keys=[key])
        patch[key] = value

    if not patch:
        if tail_up != tail_down:
            raise NotBijective("queues différentes sur un patch vide")
        return TranslationPresentation(patch={}, tail_up=tail_up, tail_down=tail_down)

    keys = sorted(patch)
    lo, hi = keys[0], keys[-1]
    if len(keys) != hi - lo + 1:
        hole = next(a + 1 for a, b in zip(keys, keys[1:]) if b != a + 1)
        raise InvalidPatch(f"trou dans les clés en {hole}", keys=[hole])

    preimage: Dict[int, int] = {}
    for key in keys:
        value = patch[key]
        if value in preimage:
            raise InvalidPatch(f"valeur {value} atteinte deux fois", keys=[preimage[value], key])
        preimage[value] = key

    up_min = hi + 1 + tail_up
    down_max = lo - 1 + tail_down
    if down_max >= up_min:
        raise NotBijective("les images des deux queues se chevauchent", collision=(up_min - tail_down, hi + 1))

    for key in keys:
        value = patch[key]
        if value >= up_min:
            raise NotBijective("valeur du patch dans l'image de la queue haute", collision=tuple(sorted((key, value - tail_up))))
        if value <= down_max:
            raise NotBijective("valeur du patch dans l'image de la queue basse", collision=tuple(sorted((value - tail_down, key))))

    # Les valeurs sont distinctes : le premier manque apparaît en au plus |patch| + 1 pas
    for y in range(down_max + 1, up_min):
        if y not in preimage:
            raise NotBijective("point hors de l'image", missing=y)

    return TranslationPresentation(patch=patch, tail_up=tail_up, tail_down=tail_down)


def trim(p: TranslationPresentation) -> TranslationPresentation:
    """Retire les entrées d'extrémité qui prolongent déjà la queue adjacente."""
    if not p.patch:
        return p
    lo, hi = p.bounds
    while lo <= hi and p.patch[hi] == hi + p.tail_up:
        hi -= 1
    while lo <= hi and p.patch[lo] == lo + p.tail_down:
        lo += 1
    if (lo, hi) == p.bounds:
        return p
    patch = {n: p.patch[n] for n in range(lo, hi + 1)}
    return TranslationPresentation(patch=patch, tail_up=p.tail_up, tail_down=p.tail_down)


def inverse(p: TranslationPresentation) -> TranslationPresentation:
    patch = {value: key for key, value in p.patch.items()}
    return trim(TranslationPresentation(patch=patch, tail_up=-p.tail_up, tail_down=-p.tail_down))


def compose(f: TranslationPresentation, g: TranslationPresentation) -> TranslationPresentation:
    """f o g : g est appliquée en premier."""
    lows, highs = [], []
    if g.patch:
        lows.append(g.lo)
        highs.append(g.hi)
    if f.patch:
        lows.append(f.lo - g.tail_down)
        highs.append(f.hi - g.tail_up)

    patch: Dict[int, int] = {}
    if lows:
        lo, hi = min(lows), max(highs)
        width = hi - lo + 1
        if width > settings.MAX_PATCH_WIDTH:
            raise AnalysisLimitExceeded("largeur du patch composé", width, settings.MAX_PATCH_WIDTH)
        for n in range(lo, hi + 1):
            patch[n] = evaluate(f, evaluate(g, n))

    return trim(TranslationPresentation(
        patch=patch,
        tail_up=f.tail_up + g.tail_up,
        tail_down=f.tail_down + g.tail_down,
    ))


def evaluate(p: TranslationPresentation, n: int) -> int:
    value = p.patch.get(n)
    if value is not None:
        return value
    if not p.patch or n > p.hi:
        return n + p.tail_up
    return n + p.tail_down


def advance(p: TranslationPresentation, x: int, m: int) -> int:
    """
    p^m(x) pour m >= 0, en sautant d'un coup les parcours dans une queue.

    Raises:
        BudgetExceeded: Si le noyau est parcouru plus de ITERATION_BUDGET fois
    """
    lo, hi = p.bounds
    up, down = p.tail_up, p.tail_down
    start = x
    core_steps = 0
    while m > 0:
        if x > hi:
            if up >= 0:
                return x + m * up
            j = min(m, -(-(x - hi) // -up))
            x += j * up
            m -= j
        elif x < lo:
            if down <= 0:
                return x + m * down
            j = min(m, -(-(lo - x) // down))
            x += j * down
            m -= j
        else:
            core_steps += 1
            if core_steps > settings.ITERATION_BUDGET:
                raise BudgetExceeded(settings.ITERATION_BUDGET, start)
            x = p.patch[x]
            m -= 1
    return x


def reflect(p: TranslationPresentation) -> TranslationPresentation:
    """Conjuguée par la négation : n -> -p(-n)."""
    patch = {-key: -value for key, value in p.patch.items()}
    return TranslationPresentation(patch=patch, tail_up=-p.tail_down, tail_down=-p.tail_up)
