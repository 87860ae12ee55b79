"""
Oracles naïfs : itération directe, recherche exhaustive ou échantillonnée.

Ils ne dépendent que de eval/eval_inverse et servent à réfuter les
résultats symboliques du moteur d'orbites sur des fenêtres finies.
"""

import random
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from zreorder.core.config import settings
from zreorder.core.logging import get_logger
from zreorder.models.order import Comparison
from zreorder.models.orbit import FragmentKind
from zreorder.schemas.orbit import OrbitClass, WindowPartition
from zreorder.schemas.presentation import ValidatedBijection
from zreorder.schemas.verification import VerificationReport, Violation
from zreorder.services.presentation import PresentationService

logger = get_logger(__name__)

Window = Tuple[int, int]
Comparator = Callable[[int, int], Comparison]


class ReportBuilder:
    """Accumule compteurs et violations d'une vérification."""

    def __init__(self, name: str, window: Window, cap: Optional[int] = None):
        self.name = name
        self.window = window
        self.cap = cap or settings.MAX_REPORTED_VIOLATIONS
        self.checks: Dict[str, int] = {}
        self.violations: List[Violation] = []
        self.violation_count = 0

    def count(self, check: str, n: int = 1):
        self.checks[check] = self.checks.get(check, 0) + n

    def fail(self, check: str, witness: Sequence[int], detail: str = ""):
        self.violation_count += 1
        if len(self.violations) < self.cap:
            self.violations.append(Violation(check=check, witness=tuple(witness), detail=detail))

    def merge(self, report: VerificationReport):
        for check, n in report.checks.items():
            self.count(check, n)
        for violation in report.violations:
            if len(self.violations) < self.cap:
                self.violations.append(violation)
        self.violation_count += report.violation_count

    def build(self) -> VerificationReport:
        report = VerificationReport(
            name=self.name,
            window=self.window,
            checks=dict(self.checks),
            violations=tuple(self.violations),
            violation_count=self.violation_count,
        )
        if report.passed:
            logger.info(f"Vérification {self.name} sur {self.window} : OK")
        else:
            logger.warning(f"Vérification {self.name} sur {self.window} : {self.violation_count} violation(s)")
        return report


class _Classes:
    """Union de fragments d'orbite qui se recoupent."""

    def __init__(self):
        self.parent: Dict[int, int] = {}
        self.cyclic: Dict[int, bool] = {}

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def add(self, points: Iterable[int], cyclic: bool):
        points = list(points)
        root = points[0]
        for p in points:
            if p not in self.parent:
                self.parent[p] = p
                self.cyclic[p] = False
        root = self.find(root)
        for p in points[1:]:
            other = self.find(p)
            if other != root:
                self.parent[other] = root
                self.cyclic[root] = self.cyclic[root] or self.cyclic[other]
        self.cyclic[root] = self.cyclic[root] or cyclic


class OracleService:
    @staticmethod
    def brute_orbits(f: ValidatedBijection, window: Window, margin: Optional[int] = None) -> WindowPartition:
        """
        Orbites restreintes à la fenêtre par itération naïve avant et arrière.

        Le nombre de pas est 2 * largeur + ORACLE_STEP_MARGIN ; un retour au point
        de départ signale un cycle.
        """
        lo, hi = window
        n_steps = 2 * (hi - lo + 1) + (settings.ORACLE_STEP_MARGIN if margin is None else margin)
        classes = _Classes()
        for x in range(lo, hi + 1):
            if x in classes.parent:
                continue
            fragment = [x]
            y = PresentationService.eval(f, x)
            cyclic = False
            for _ in range(n_steps):
                if y == x:
                    cyclic = True
                    break
                fragment.append(y)
                y = PresentationService.eval(f, y)
            if not cyclic:
                y = PresentationService.eval_inverse(f, x)
                for _ in range(n_steps):
                    fragment.append(y)
                    y = PresentationService.eval_inverse(f, y)
            inside = [p for p in fragment if lo <= p <= hi]
            classes.add(inside, cyclic)

        groups: Dict[int, List[int]] = {}
        for x in range(lo, hi + 1):
            groups.setdefault(classes.find(x), []).append(x)
        result = tuple(
            OrbitClass(kind=FragmentKind.CYCLE if classes.cyclic[root] else FragmentKind.LINE_FRAGMENT, points=tuple(points))
            for root, points in groups.items()
        )
        return WindowPartition(window=window, classes=result)

    @staticmethod
    def brute_check_total_order(cmp: Comparator, window: Window, triple_sample_size: int) -> VerificationReport:
        """
        Vérifie qu'un comparateur est un ordre total strict sur la fenêtre.

        Args:
            cmp: Comparateur à tester
            window: Fenêtre [lo, hi]
            triple_sample_size: Nombre de triplets tirés pour la transitivité

        Returns:
            VerificationReport: Rapport avec témoins (paire ou triplet)
        """
        points = list(range(window[0], window[1] + 1))
        builder = ReportBuilder("total_order", window)

        for x in points:
            builder.count("reflexivity")
            if cmp(x, x) is not Comparison.EQUAL:
                builder.fail("reflexivity", (x,), f"{x} n'est pas égal à lui-même")

        for x, y in combinations(points, 2):
            forward, backward = cmp(x, y), cmp(y, x)
            builder.count("totality")
            if forward is Comparison.EQUAL:
                builder.fail("totality", (x, y), f"{x} et {y} incomparables")
            builder.count("antisymmetry")
            if backward is not forward.flipped():
                builder.fail("antisymmetry", (x, y), f"cmp({x}, {y}) = {forward.value}, cmp({y}, {x}) = {backward.value}")

        def check_triple(a: int, b: int, c: int):
            builder.count("transitivity")
            if cmp(a, b) is Comparison.LESS and cmp(b, c) is Comparison.LESS and cmp(a, c) is not Comparison.LESS:
                builder.fail("transitivity", (a, b, c), f"{a} < {b} < {c} mais pas {a} < {c}")

        if len(points) <= settings.EXHAUSTIVE_TRIPLES_MAX_POINTS:
            for a in points:
                for b in points:
                    for c in points:
                        check_triple(a, b, c)
        else:
            rng = random.Random(settings.RANDOM_SEED)
            for _ in range(triple_sample_size):
                check_triple(rng.choice(points), rng.choice(points), rng.choice(points))
        return builder.build()

    @staticmethod
    def brute_strongly_discrete(f: ValidatedBijection, points: Iterable[int], n_bound: int) -> bool:
        """Les f^n(U), |n| <= n_bound, sont-ils deux à deux disjoints ?"""
        base = set(points)
        if not base:
            return True
        seen = set(base)
        forward, backward = set(base), set(base)
        for _ in range(n_bound):
            forward = {PresentationService.eval(f, x) for x in forward}
            backward = {PresentationService.eval_inverse(f, x) for x in backward}
            for image in (forward, backward):
                if seen & image:
                    return False
                seen |= image
        return True

    @staticmethod
    def brute_check_translation(pairs: Sequence[Tuple[int, int]], tail_up: int, tail_down: int) -> Tuple[bool, str]:
        """
        Test de bijectivité indépendant d'un atome brut.

        Évalue l'atome sur [lo - 3S, hi + 3S] (S : étendue des déplacements) et
        cherche une collision, puis un point de [lo - S, hi + S] sans antécédent.
        """
        patch: Dict[int, int] = {}
        for key, value in pairs:
            if key in patch:
                return False, f"clé dupliquée {key}"
            patch[key] = value
        if not patch:
            return (True, "translation") if tail_up == tail_down else (False, "queues différentes")
        lo, hi = min(patch), max(patch)
        if len(patch) != hi - lo + 1:
            return False, "trou dans les clés"

        def raw(n: int) -> int:
            if n in patch:
                return patch[n]
            return n + (tail_up if n > hi else tail_down)

        span = abs(tail_up) + abs(tail_down) + max(abs(v - k) for k, v in patch.items()) + 1
        images: Dict[int, int] = {}
        for n in range(lo - 3 * span, hi + 3 * span + 1):
            y = raw(n)
            if y in images:
                return False, f"collision {images[y]} et {n}"
            images[y] = n
        for y in range(lo - span, hi + span + 1):
            if y not in images:
                return False, f"{y} sans antécédent"
        return True, "bijection"

    @staticmethod
    def sweep_window(
        check: Callable[[Window], VerificationReport],
        name: str,
        window: Window,
        workers: Optional[int] = None,
    ) -> VerificationReport:
        """
        Découpe la fenêtre en blocs contigus, vérifie chaque bloc et fusionne par conjonction.
        """
        workers = workers or settings.VERIFY_WORKERS
        lo, hi = window
        size = -(-(hi - lo + 1) // workers)
        chunks = [(start, min(start + size - 1, hi)) for start in range(lo, hi + 1, size)]
        if workers == 1:
            reports = [check(chunk) for chunk in chunks]
        else:
            with ThreadPoolExecutor(max_workers=workers) as executor:
                reports = list(executor.map(check, chunks))
        return VerificationReport.merge(name, window, reports, settings.MAX_REPORTED_VIOLATIONS)

    @staticmethod
    def check_partition(expected: WindowPartition, actual: WindowPartition) -> VerificationReport:
        """Compare deux partitions de la même fenêtre, classe par classe."""
        builder = ReportBuilder("orbit_agreement", expected.window)
        reference = {points: kind for kind, points in expected.as_sets()}
        for kind, points in actual.as_sets():
            builder.count("classes")
            if points not in reference:
                builder.fail("classes", tuple(sorted(points))[:8], "classe absente de la référence")
            elif reference[points] is not kind:
                builder.fail("classes", (min(points),), f"classe {kind.value}, attendu {reference[points].value}")
        if len(reference) != len(actual.classes):
            builder.fail("class_count", (len(reference), len(actual.classes)), "nombres de classes différents")
        return builder.build()

    @staticmethod
    def check_inverse(f: ValidatedBijection, window: Window) -> VerificationReport:
        """eval_inverse(eval(x)) = x et eval(eval_inverse(x)) = x sur la fenêtre."""
        builder = ReportBuilder("inverse_round_trip", window)
        for x in range(window[0], window[1] + 1):
            builder.count("round_trip")
            if PresentationService.eval_inverse(f, PresentationService.eval(f, x)) != x:
                builder.fail("round_trip", (x,), f"eval_inverse(eval({x})) != {x}")
            elif PresentationService.eval(f, PresentationService.eval_inverse(f, x)) != x:
                builder.fail("round_trip", (x,), f"eval(eval_inverse({x})) != {x}")
        return builder.build()
