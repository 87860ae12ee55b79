from typing import Iterable, List, Tuple

from zreorder.core.logging import engine_logger as logger
from zreorder.models.coloring import Color
from zreorder.schemas.presentation import ValidatedBijection
from zreorder.schemas.verification import VerificationReport
from zreorder.services.oracle import OracleService, ReportBuilder
from zreorder.services.orbit import OrbitService, Window, window_points
from zreorder.services.presentation import PresentationService
from zreorder.services.reorder import OrderHandle, ReorderService


class Coloring:
    """Partition de Z en deux f-couleurs : parité du pas de l'étiquette."""

    def __init__(self, handle: OrderHandle):
        self.handle = handle

    def membership(self, x: int) -> Color:
        _, step, _ = self.handle.key(x)
        return Color.A if step % 2 == 0 else Color.B


class ColoringService:
    @staticmethod
    def two_coloring(h: OrderHandle) -> Coloring:
        return Coloring(h)

    @staticmethod
    def is_color(f: ValidatedBijection, points: Iterable[int]) -> bool:
        """U est une f-couleur si U et f(U) sont disjoints."""
        points = set(points)
        return not any(PresentationService.eval(f, x) in points for x in points)

    @staticmethod
    def verify_coloring(f: ValidatedBijection, c: Coloring, window: Window, workers: int = None) -> VerificationReport:
        """Vérifie membership(f(x)) != membership(x) sur la fenêtre."""

        def check(chunk: Window) -> VerificationReport:
            builder = ReportBuilder("coloring", chunk)
            for x in window_points(chunk):
                builder.count("color_alternates")
                y = PresentationService.eval(f, x)
                color = c.membership(x)
                if c.membership(y) is color:
                    builder.fail("color_alternates", (x, y), f"{x} et f({x}) = {y} sont tous deux de couleur {color.value}")
            return builder.build()

        return OracleService.sweep_window(check, "coloring", window, workers)

    @staticmethod
    def color_classes(c: Coloring, window: Window) -> Tuple[List[int], List[int]]:
        a, b = [], []
        for x in window_points(window):
            (a if c.membership(x) is Color.A else b).append(x)
        return a, b

    @staticmethod
    def chromatic_number(f: ValidatedBijection) -> int:
        """
        Nombre chromatique d'une bijection sans point périodique : toujours 2.

        Raises:
            PeriodicPointFound: Si f a un point périodique
        """
        OrbitService.require_periodic_point_free(f, "chromatic_number")
        logger.debug("Nombre chromatique : 2")
        return 2

    @staticmethod
    def coloring_for(f: ValidatedBijection) -> Coloring:
        return ColoringService.two_coloring(ReorderService.build_order(f))
