from functools import lru_cache
from itertools import count
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from zreorder.core.config import settings
from zreorder.core.exceptions import (
    AnalysisLimitExceeded,
    BudgetExceeded,
    CoverInsufficient,
    PeriodicPointFound,
    UnsupportedPresentation,
)
from zreorder.core.logging import engine_logger as logger
from zreorder.models.orbit import FragmentKind
from zreorder.models.presentation import Family
from zreorder.schemas.orbit import (
    CoverCheck,
    CoverFamily,
    OrbitClass,
    OrbitClassification,
    OrbitCount,
    OrbitInfo,
    WindowPartition,
)
from zreorder.schemas.presentation import TranslationPresentation, ValidatedBijection
from zreorder.services import pairing, translation

Window = Tuple[int, int]

REPRESENTATIVE_RULE_B = "orbit_id -> unpair(zigzag(orbit_id), 0)"


def magnitude_key(x: int) -> Tuple[int, int]:
    """Ordre canonique : |x| croissant, positif avant négatif."""
    return abs(x), 0 if x >= 0 else 1


def _near_zero(start: int, step: int) -> List[Tuple[int, int]]:
    """Points de la progression start + j*step (j >= 0) les plus proches de 0."""
    if (step > 0 and start >= 0) or (step < 0 and start <= 0):
        return [(0, start)]
    j = abs(start) // abs(step)
    return [(j, start + j * step), (j + 1, start + (j + 1) * step)]


def _rotate(cycle: List[int]) -> Tuple[int, ...]:
    i = min(range(len(cycle)), key=lambda k: magnitude_key(cycle[k]))
    return tuple(cycle[i:] + cycle[:i])


class TranslationDynamics:
    """
    Structure d'orbites exacte d'une présentation de famille A.

    Pour un déplacement de queue t > 0, [lo, +inf) est invariant vers l'avant :
    les cycles sont dans [lo, hi] et chaque orbite-droite coupe la section
    [lo - t, lo - 1] exactement une fois. Le cas t < 0 se ramène à t > 0 par la
    conjugaison n -> -n, qui conserve les pas.
    """

    def __init__(self, p: TranslationPresentation):
        self.p = p
        self.t = p.tail_up
        if p.tail_up != p.tail_down:
            raise AssertionError("une présentation valide de famille A a des queues égales")
        self.cycles, self._cycle_of = self._find_cycles()
        self.representatives: Tuple[int, ...] = ()
        self._section: Dict[int, Tuple[int, int]] = {}
        if self.t != 0:
            if abs(self.t) > settings.MAX_LINE_ORBITS:
                raise AnalysisLimitExceeded("nombre d'orbites-droites", abs(self.t), settings.MAX_LINE_ORBITS)
            self.sigma = 1 if self.t > 0 else -1
            self.work = p if self.t > 0 else translation.reflect(p)
            self.work_inverse = translation.inverse(self.work)
            self.step = abs(self.t)
            self._build_section()
        logger.debug(f"Dynamique calculée : t={self.t}, {len(self.cycles)} cycle(s), {len(self.representatives)} orbite(s)-droite(s)")

    def _find_cycles(self):
        patch = self.p.patch
        cycle_of: Dict[int, Tuple[int, ...]] = {}
        seen: Set[int] = set()
        cycles = []
        for start in sorted(patch):
            if start in seen:
                continue
            path = [start]
            y = patch[start]
            while y in patch and y != start and y not in seen:
                path.append(y)
                y = patch[y]
            seen.update(path)
            if y == start:
                cycle = _rotate(path)
                cycles.append(cycle)
                for x in cycle:
                    cycle_of[x] = cycle
        cycles.sort(key=lambda c: magnitude_key(c[0]))
        return cycles, cycle_of

    def _build_section(self):
        lo, hi = self.work.bounds
        t = self.step
        patch = self.work.patch
        budget = len(patch) + 1
        chosen = []
        for s in range(lo - t, lo):
            candidates = [(pt, -(j + 1)) for j, pt in _near_zero(s - t, -t)]
            candidates.append((s, 0))
            x, offset = s + t, 1
            while lo <= x <= hi:
                candidates.append((x, offset))
                x = patch[x]
                offset += 1
                if offset > budget + 1:
                    raise BudgetExceeded(budget, s)
            assert x > hi, "une orbite-droite quitte le noyau par la queue haute"
            candidates.extend((pt, offset + j) for j, pt in _near_zero(x, t))
            point, rep_offset = min(((self.sigma * pt, off) for pt, off in candidates), key=lambda c: magnitude_key(c[0]))
            chosen.append((point, s, rep_offset))

        chosen.sort(key=lambda c: magnitude_key(c[0]))
        self.representatives = tuple(point for point, _, _ in chosen)
        assert len(set(self.representatives)) == t, "une orbite-droite par point de la section"
        for orbit_id, (_, s, rep_offset) in enumerate(chosen):
            self._section[s] = (orbit_id, rep_offset)

    def _locate(self, y: int) -> Tuple[int, int]:
        """(s, c) avec y = work^c(s) et s dans la section."""
        lo, hi = self.work.bounds
        t = self.step
        if y < lo - t:
            j = -(-(lo - t - y) // t)
            return y + j * t, -j
        c = 0
        z = y
        steps = 0
        while z >= lo:
            if z > hi + t:
                j = -(-(z - hi - t) // t)
                z -= j * t
                c += j
            else:
                steps += 1
                if steps > settings.ITERATION_BUDGET:
                    raise BudgetExceeded(settings.ITERATION_BUDGET, y)
                z = translation.evaluate(self.work_inverse, z)
                c += 1
        return z, c

    def periodic_cycle(self, x: int) -> Optional[Tuple[int, ...]]:
        cycle = self._cycle_of.get(x)
        if cycle is not None:
            return cycle
        if self.t == 0:
            return (x,)
        return None

    def coordinates(self, x: int) -> Tuple[int, int]:
        s, c = self._locate(self.sigma * x)
        orbit_id, rep_offset = self._section[s]
        return orbit_id, c - rep_offset


@lru_cache(maxsize=256)
def dynamics(p: TranslationPresentation) -> TranslationDynamics:
    return TranslationDynamics(p)


def _require_analysis(f: ValidatedBijection, operation: str):
    if not f.is_analyzable:
        raise UnsupportedPresentation(operation)


class OrbitService:
    @staticmethod
    def dynamics(f: ValidatedBijection) -> TranslationDynamics:
        return dynamics(f.translation)

    @staticmethod
    def coordinates(f: ValidatedBijection, x: int) -> Optional[Tuple[int, int]]:
        """(orbit_id, step) de x, ou None si x est périodique."""
        _require_analysis(f, "orbit_of")
        if f.family is Family.PAIRED_SHIFT:
            i, k = pairing.pair(x)
            return pairing.unzigzag(i), k * f.paired.direction
        d = dynamics(f.translation)
        if d.periodic_cycle(x) is not None:
            return None
        return d.coordinates(x)

    @staticmethod
    def orbit_of(f: ValidatedBijection, x: int) -> OrbitInfo:
        """
        Orbite de x : cycle ordonné, ou coordonnées (orbit_id, step) sur une orbite-droite.

        Raises:
            UnsupportedPresentation: Pour une présentation opaque
        """
        _require_analysis(f, "orbit_of")
        if f.family is Family.TRANSLATION:
            cycle = dynamics(f.translation).periodic_cycle(x)
            if cycle is not None:
                return OrbitInfo.periodic(cycle)
        orbit_id, step = OrbitService.coordinates(f, x)
        return OrbitInfo.line(orbit_id, step)

    @staticmethod
    def representative(f: ValidatedBijection, orbit_id: int) -> int:
        _require_analysis(f, "representative")
        if f.family is Family.PAIRED_SHIFT:
            return pairing.unpair(pairing.zigzag(orbit_id), 0)
        reps = dynamics(f.translation).representatives
        if not 0 <= orbit_id < len(reps):
            raise ValueError(f"orbit_id {orbit_id} hors de [0, {len(reps)})")
        return reps[orbit_id]

    @staticmethod
    def classify(f: ValidatedBijection, window: Optional[Window] = None) -> OrbitClassification:
        """
        Décompose Z en orbites.

        Les points fixes d'une queue de déplacement nul sont en nombre infini :
        seuls ceux de la fenêtre sont listés, avec cofinite_fixed_tail.
        """
        _require_analysis(f, "classify")
        window = window or (settings.DEFAULT_WINDOW_LO, settings.DEFAULT_WINDOW_HI)
        if f.family is Family.PAIRED_SHIFT:
            return OrbitClassification(
                family=f.family,
                window=window,
                line_count=OrbitCount.countably_infinite(),
                representative_rule=REPRESENTATIVE_RULE_B,
            )
        d = dynamics(f.translation)
        cycles = list(d.cycles)
        if d.t == 0:
            cycles.extend((x,) for x in range(window[0], window[1] + 1) if x not in f.translation.patch)
            cycles.sort(key=lambda c: magnitude_key(c[0]))
        return OrbitClassification(
            family=f.family,
            window=window,
            cycles=tuple(cycles),
            line_count=OrbitCount.finite(abs(d.t)),
            representatives=d.representatives,
            cofinite_fixed_tail=d.t == 0,
        )

    @staticmethod
    def window_partition(f: ValidatedBijection, window: Window) -> WindowPartition:
        """Restriction de la décomposition en orbites à la fenêtre."""
        _require_analysis(f, "classify")
        cycles: Dict[Tuple[int, ...], List[int]] = {}
        lines: Dict[int, List[Tuple[int, int]]] = {}
        for x in range(window[0], window[1] + 1):
            info = OrbitService.orbit_of(f, x)
            if info.is_periodic:
                cycles.setdefault(info.cycle, []).append(x)
            else:
                lines.setdefault(info.orbit_id, []).append((info.step, x))
        classes = [OrbitClass(kind=FragmentKind.CYCLE, points=tuple(points)) for points in cycles.values()]
        classes.extend(
            OrbitClass(kind=FragmentKind.LINE_FRAGMENT, points=tuple(x for _, x in sorted(points)))
            for _, points in sorted(lines.items())
        )
        return WindowPartition(window=window, classes=tuple(classes))

    @staticmethod
    def trace(f: ValidatedBijection, orbit_id: int, window: Window) -> List[int]:
        """Points de la fenêtre sur l'orbite orbit_id, dans l'ordre des pas."""
        _require_analysis(f, "trace")
        points = []
        for x in range(window[0], window[1] + 1):
            coords = OrbitService.coordinates(f, x)
            if coords is not None and coords[0] == orbit_id:
                points.append((coords[1], x))
        return [x for _, x in sorted(points)]

    @staticmethod
    def first_cycle(f: ValidatedBijection) -> Optional[Tuple[int, ...]]:
        """Premier cycle non trivial dans l'ordre canonique, sinon premier point fixe."""
        _require_analysis(f, "is_periodic_point_free")
        if f.family is Family.PAIRED_SHIFT:
            return None
        d = dynamics(f.translation)
        nontrivial = [c for c in d.cycles if len(c) > 1]
        if nontrivial:
            return nontrivial[0]
        if d.cycles:
            return d.cycles[0]
        if d.t == 0:
            # Hors du patch tout est fixe : le premier point hors patch est atteint en |patch| + 1 essais
            return next((pairing.zigzag(n),) for n in count() if pairing.zigzag(n) not in f.translation.patch)
        return None

    @staticmethod
    def is_periodic_point_free(f: ValidatedBijection) -> bool:
        return OrbitService.first_cycle(f) is None

    @staticmethod
    def is_potentially_monotonic(f: ValidatedBijection) -> bool:
        """Sur Z, potentiellement monotone équivaut à sans point périodique."""
        _require_analysis(f, "is_potentially_monotonic")
        return OrbitService.is_periodic_point_free(f)

    @staticmethod
    def require_periodic_point_free(f: ValidatedBijection, operation: str):
        _require_analysis(f, operation)
        cycle = OrbitService.first_cycle(f)
        if cycle is not None:
            raise PeriodicPointFound(list(cycle))

    @staticmethod
    def strongly_discrete_point(f: ValidatedBijection, x: int) -> bool:
        _require_analysis(f, "strongly_discrete_point")
        return OrbitService.coordinates(f, x) is not None

    @staticmethod
    def discreteness_witness(f: ValidatedBijection, points: Iterable[int]) -> Optional[Tuple[int, ...]]:
        """Témoin que f^n(U) et f^m(U) se rencontrent : un point périodique, ou deux points d'une même orbite."""
        owner: Dict[int, int] = {}
        for x in sorted(set(points)):
            coords = OrbitService.coordinates(f, x)
            if coords is None:
                return (x,)
            if coords[0] in owner:
                return owner[coords[0]], x
            owner[coords[0]] = x
        return None

    @staticmethod
    def strongly_discrete_set(f: ValidatedBijection, points: Iterable[int]) -> bool:
        _require_analysis(f, "strongly_discrete_set")
        return OrbitService.discreteness_witness(f, points) is None

    # Recouvrements

    @staticmethod
    def canonical_cover(f: ValidatedBijection) -> CoverFamily:
        """
        Recouvrement canonique : un singleton par représentant.

        Raises:
            PeriodicPointFound: Si f a un point périodique
            UnsupportedPresentation: Pour la famille B (recouvrement infini) et les présentations opaques
        """
        OrbitService.require_periodic_point_free(f, "canonical_cover")
        if f.family is not Family.TRANSLATION:
            raise UnsupportedPresentation("canonical_cover (recouvrement infini)")
        return CoverFamily.of([rep] for rep in dynamics(f.translation).representatives)

    @staticmethod
    def singleton_enumeration() -> Iterator[List[int]]:
        """Singletons de 0, 1, -1, 2, -2, ..."""
        for n in count():
            yield [pairing.zigzag(n)]

    @staticmethod
    def greedy_cover(f: ValidatedBijection, cover: Iterable[Iterable[int]], window: Window) -> CoverFamily:
        """
        Extrait d'une énumération d'ensembles finis une famille d'orbites disjointes.

        À chaque étape, le premier ensemble non encore recouvert est retenu, privé
        des points dont l'orbite est déjà recouverte (y compris par un point
        précédent du même ensemble). S'arrête dès que la fenêtre est recouverte.

        Raises:
            CoverInsufficient: Si l'énumération s'épuise avant de recouvrir la fenêtre
        """
        OrbitService.require_periodic_point_free(f, "greedy_cover")
        needed: Dict[int, int] = {}
        for x in range(window[0], window[1] + 1):
            orbit_id, _ = OrbitService.coordinates(f, x)
            needed.setdefault(orbit_id, x)

        covered: Set[int] = set()
        sets = []
        for candidate in cover:
            if needed.keys() <= covered:
                break
            kept = []
            for x in sorted(set(candidate)):
                orbit_id, _ = OrbitService.coordinates(f, x)
                if orbit_id not in covered:
                    covered.add(orbit_id)
                    kept.append(x)
            if kept:
                sets.append(kept)

        missing = [x for orbit_id, x in needed.items() if orbit_id not in covered]
        if missing:
            raise CoverInsufficient(min(missing))
        logger.info(f"Recouvrement glouton : {len(sets)} ensemble(s)")
        return CoverFamily.of(sets)

    @staticmethod
    def check_cover(f: ValidatedBijection, cover: CoverFamily, window: Window) -> CoverCheck:
        """
        Vérifie les hypothèses d'un recouvrement.

        (1) chaque ensemble est non vide et fortement discret ;
        (2) les orbites de deux ensembles distincts sont disjointes ;
        (3) l'orbite de la famille recouvre Z (exact pour la famille A, sur la fenêtre sinon).
        """
        OrbitService.require_periodic_point_free(f, "check_cover")
        owner: Dict[int, Tuple[int, int]] = {}
        for index, points in enumerate(cover.sets):
            if not points:
                return CoverCheck(valid=False, violated=1, reason=f"ensemble {index} vide")
            witness = OrbitService.discreteness_witness(f, points)
            if witness is not None:
                return CoverCheck(valid=False, violated=1, witness=witness, reason=f"ensemble {index} non fortement discret")
            for x in points:
                orbit_id, _ = OrbitService.coordinates(f, x)
                if orbit_id in owner and owner[orbit_id][0] != index:
                    return CoverCheck(
                        valid=False,
                        violated=2,
                        witness=(owner[orbit_id][1], x),
                        reason=f"ensembles {owner[orbit_id][0]} et {index} sur la même orbite",
                    )
                owner[orbit_id] = (index, x)

        if f.family is Family.TRANSLATION:
            for orbit_id, rep in enumerate(dynamics(f.translation).representatives):
                if orbit_id not in owner:
                    return CoverCheck(valid=False, violated=3, witness=(rep,), reason=f"orbite {orbit_id} non recouverte")
        else:
            for x in range(window[0], window[1] + 1):
                orbit_id, _ = OrbitService.coordinates(f, x)
                if orbit_id not in owner:
                    return CoverCheck(valid=False, violated=3, witness=(x,), reason="point de la fenêtre non recouvert")
        return CoverCheck(valid=True)

    @staticmethod
    def cover_assignment(f: ValidatedBijection, cover: CoverFamily) -> Dict[int, Tuple[int, int, int]]:
        """orbit_id -> (alpha, pas du point de O_alpha, rang de ce point dans O_alpha)."""
        assignment: Dict[int, Tuple[int, int, int]] = {}
        for alpha, points in enumerate(cover.sets):
            for rank, x in enumerate(points):
                orbit_id, step = OrbitService.coordinates(f, x)
                assignment[orbit_id] = (alpha, step, rank)
        return assignment


def window_points(window: Window) -> Sequence[int]:
    return range(window[0], window[1] + 1)
