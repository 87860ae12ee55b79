from typing import Dict, List, Optional, Tuple

from zreorder.core.config import settings
from zreorder.core.exceptions import CoverInvalid
from zreorder.core.logging import engine_logger as logger
from zreorder.models.order import Comparison
from zreorder.models.presentation import Family
from zreorder.schemas.orbit import CoverFamily, OrbitCount
from zreorder.schemas.order import Label, NormalForm
from zreorder.schemas.presentation import ValidatedBijection
from zreorder.schemas.verification import VerificationReport
from zreorder.services import pairing
from zreorder.services.oracle import OracleService, ReportBuilder
from zreorder.services.orbit import OrbitService, Window, window_points
from zreorder.services.presentation import PresentationService

LabelKey = Tuple[int, int, int]


class OrderHandle:
    """
    Nouvel ordre sur Z pour lequel f est strictement croissante.

    x a pour étiquette (alpha, n, r) lorsque x = f^n(y) avec y le point de rang r
    de O_alpha ; l'ordre est lexicographique sur les étiquettes.
    """

    def __init__(
        self,
        f: ValidatedBijection,
        cover: Optional[CoverFamily] = None,
        assignment: Optional[Dict[int, Tuple[int, int, int]]] = None,
    ):
        self.f = f
        self.cover = cover
        self._assignment = assignment or {}

    def key(self, x: int) -> LabelKey:
        orbit_id, step = OrbitService.coordinates(self.f, x)
        if self.f.family is Family.PAIRED_SHIFT:
            return orbit_id, step, 0
        alpha, anchor_step, rank = self._assignment[orbit_id]
        return alpha, step - anchor_step, rank

    def label(self, x: int) -> Label:
        alpha, step, inner_rank = self.key(x)
        return Label(alpha=alpha, step=step, inner_rank=inner_rank)

    def compare(self, x: int, y: int) -> Comparison:
        if x == y:
            return Comparison.EQUAL
        return Comparison.of(self.key(x), self.key(y))


class ReorderService:
    @staticmethod
    def build_order(f: ValidatedBijection) -> OrderHandle:
        """
        Construit l'ordre à partir du recouvrement canonique.

        Raises:
            PeriodicPointFound: Si f a un point périodique
            UnsupportedPresentation: Pour une présentation opaque
        """
        OrbitService.require_periodic_point_free(f, "build_order")
        if f.family is Family.PAIRED_SHIFT:
            logger.info("Ordre construit sous forme close (famille B)")
            return OrderHandle(f)
        return ReorderService.build_order_from_cover(f, OrbitService.canonical_cover(f))

    @staticmethod
    def build_order_from_cover(f: ValidatedBijection, cover: CoverFamily, window: Optional[Window] = None) -> OrderHandle:
        """
        Construit l'ordre à partir d'un recouvrement fourni.

        Args:
            f: Bijection sans point périodique
            cover: Famille d'ensembles finis aux orbites disjointes
            window: Fenêtre de contrôle du recouvrement (famille B seulement)

        Raises:
            CoverInvalid: Propriété violée et témoin
            PeriodicPointFound: Si f a un point périodique
        """
        OrbitService.require_periodic_point_free(f, "build_order_from_cover")
        window = window or (settings.DEFAULT_WINDOW_LO, settings.DEFAULT_WINDOW_HI)
        check = OrbitService.check_cover(f, cover, window)
        if not check.valid:
            raise CoverInvalid(check.violated, list(check.witness), check.reason)
        assignment = OrbitService.cover_assignment(f, cover)
        logger.info(f"Ordre construit à partir de {len(cover.sets)} ensemble(s)")
        return OrderHandle(f, cover, assignment)

    @staticmethod
    def label(h: OrderHandle, x: int) -> Label:
        return h.label(x)

    @staticmethod
    def compare(h: OrderHandle, x: int, y: int) -> Comparison:
        return h.compare(x, y)

    @staticmethod
    def verify_order(f: ValidatedBijection, h: OrderHandle, window: Window, triple_samples: Optional[int] = None) -> VerificationReport:
        """
        Vérifie sur la fenêtre que l'ordre est total, antisymétrique, transitif
        (triplets échantillonnés) et que x < y implique f(x) < f(y).
        """
        points = list(window_points(window))
        keys = {x: h.key(x) for x in points}
        images = {x: PresentationService.eval(f, x) for x in points}
        for y in images.values():
            if y not in keys:
                keys[y] = h.key(y)

        def cmp(x: int, y: int) -> Comparison:
            if x == y:
                return Comparison.EQUAL
            return Comparison.of(keys[x], keys[y])

        report = OracleService.brute_check_total_order(cmp, window, triple_samples or settings.TRIPLE_SAMPLES)
        builder = ReportBuilder("order", window)
        builder.merge(report)

        # Une étiquette en double rend l'ordre non strict
        seen: Dict[LabelKey, int] = {}
        for x in points:
            builder.count("injective_labels")
            if keys[x] in seen:
                builder.fail("injective_labels", (seen[keys[x]], x), f"étiquette {keys[x]} partagée")
            seen.setdefault(keys[x], x)

        image_keys = [keys[images[x]] for x in points]
        point_keys = [keys[x] for x in points]
        for i, x in enumerate(points):
            kx, fx = point_keys[i], image_keys[i]
            builder.count("monotonicity", len(points) - i - 1)
            for j in range(i + 1, len(points)):
                if (kx < point_keys[j]) != (fx < image_keys[j]):
                    y = points[j]
                    before, after = cmp(x, y), cmp(images[x], images[y])
                    builder.fail("monotonicity", (x, y), f"{x} {before.value} {y} mais f({x}) {after.value} f({y})")
        return builder.build()

    # Forme normale de décalage

    @staticmethod
    def normal_form(f: ValidatedBijection) -> NormalForm:
        """
        Forme normale h : Z -> I x Z avec h(f(x)) = h(x) + (0, 1).

        Raises:
            PeriodicPointFound: Si f a un point périodique
            UnsupportedPresentation: Pour une présentation opaque
        """
        OrbitService.require_periodic_point_free(f, "normal_form")
        if f.family is Family.PAIRED_SHIFT:
            return NormalForm(bijection=f, family=f.family, k=OrbitCount.countably_infinite(), direction=f.paired.direction)
        reps = OrbitService.dynamics(f).representatives
        return NormalForm(bijection=f, family=f.family, k=OrbitCount.finite(len(reps)), representatives=reps)

    @staticmethod
    def h(nf: NormalForm, x: int) -> Tuple[int, int]:
        if nf.family is Family.PAIRED_SHIFT:
            i, k = pairing.pair(x)
            return i, k * nf.direction
        return OrbitService.coordinates(nf.bijection, x)

    @staticmethod
    def h_inverse(nf: NormalForm, point: Tuple[int, int]) -> int:
        i, m = point
        if nf.family is Family.PAIRED_SHIFT:
            return pairing.unpair(i, m * nf.direction)
        return PresentationService.power(nf.bijection, nf.representatives[i % nf.k.value], m)

    @staticmethod
    def group_add(nf: NormalForm, a: Tuple[int, int], b: Tuple[int, int]) -> Tuple[int, int]:
        first = a[0] + b[0]
        if nf.k.is_finite:
            first %= nf.k.value
        return first, a[1] + b[1]

    @staticmethod
    def carrier_rank(nf: NormalForm, i: int) -> int:
        """Rang de l'indice d'orbite : i si k est fini, sa position dans 0, 1, -1, 2, ... sinon."""
        if nf.k.is_finite:
            return i
        return pairing.unzigzag(i)

    @staticmethod
    def pullback_compare(nf: NormalForm, x: int, y: int) -> Comparison:
        """Ordre lexicographique du support I x Z ramené sur Z par h."""
        hx, hy = ReorderService.h(nf, x), ReorderService.h(nf, y)
        return Comparison.of(
            (ReorderService.carrier_rank(nf, hx[0]), hx[1]),
            (ReorderService.carrier_rank(nf, hy[0]), hy[1]),
        )

    @staticmethod
    def verify_normal_form(f: ValidatedBijection, nf: NormalForm, window: Window) -> VerificationReport:
        """Loi de décalage, injectivité et aller-retour exact sur la fenêtre."""
        builder = ReportBuilder("normal_form", window)
        owner: Dict[Tuple[int, int], int] = {}
        for x in window_points(window):
            hx = ReorderService.h(nf, x)
            builder.count("shift_law")
            expected = ReorderService.group_add(nf, hx, (0, 1))
            actual = ReorderService.h(nf, PresentationService.eval(f, x))
            if actual != expected:
                builder.fail("shift_law", (x,), f"h(f({x})) = {actual}, attendu {expected}")
            builder.count("injectivity")
            if hx in owner:
                builder.fail("injectivity", (owner[hx], x), f"h({owner[hx]}) = h({x}) = {hx}")
            owner.setdefault(hx, x)
            builder.count("round_trip")
            back = ReorderService.h_inverse(nf, hx)
            if back != x:
                builder.fail("round_trip", (x,), f"h^-1(h({x})) = {back}")
        return builder.build()

    @staticmethod
    def sample_labels(h: OrderHandle, points: List[int]) -> List[Dict[str, int]]:
        return [{"x": x, **h.label(x).dict()} for x in points]
