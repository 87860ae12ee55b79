from typing import Dict

from zreorder.core.exceptions import InvalidReport
from zreorder.core.logging import engine_logger as logger
from zreorder.models.conjugacy import ConjugacyVerdict
from zreorder.models.presentation import Family
from zreorder.schemas.conjugacy import ConjugacyReport
from zreorder.schemas.presentation import ValidatedBijection
from zreorder.schemas.verification import VerificationReport
from zreorder.services.oracle import OracleService, ReportBuilder
from zreorder.services.orbit import OrbitService, Window, window_points
from zreorder.services.presentation import PresentationService


class ConjugacyService:
    @staticmethod
    def decide_shift_conjugacy(f: ValidatedBijection) -> ConjugacyReport:
        """
        Décide si f est conjuguée à une translation n -> n + k.

        Returns:
            ConjugacyReport: Identity, Conjugate{k >= 1} ou NotConjugate avec sa raison

        Raises:
            UnsupportedPresentation: Pour une présentation opaque
        """
        if f.family is Family.PAIRED_SHIFT:
            report = ConjugacyReport.infinitely_many_orbits()
        elif f.is_analyzable and f.translation.is_pure_translation and f.translation.tail_up == 0:
            report = ConjugacyReport.identity()
        else:
            cycle = OrbitService.first_cycle(f)
            if cycle is not None:
                report = ConjugacyReport.periodic_points(cycle)
            else:
                report = ConjugacyReport.conjugate(len(OrbitService.dynamics(f).representatives))
        logger.info(f"Conjugaison : {report.verdict.value}")
        return report

    @staticmethod
    def conjugacy_witness(f: ValidatedBijection, report: ConjugacyReport, x: int) -> int:
        """t(x) = orbit_labels[i] + k * m pour x = f^m(rep_i)."""
        if report.verdict is not ConjugacyVerdict.CONJUGATE:
            raise InvalidReport(f"pas de témoin pour un verdict {report.verdict.value}")
        orbit_id, step = OrbitService.coordinates(f, x)
        return report.orbit_labels[orbit_id] + report.k * step

    @staticmethod
    def verify_conjugacy(f: ValidatedBijection, report: ConjugacyReport, window: Window, workers: int = None) -> VerificationReport:
        """
        Vérifie t(f(x)) = t(x) + k et l'injectivité de t sur la fenêtre.

        Raises:
            InvalidReport: Si le rapport n'est pas Conjugate
        """
        if report.verdict is not ConjugacyVerdict.CONJUGATE:
            raise InvalidReport(f"verify_conjugacy attend un verdict conjugate, reçu {report.verdict.value}")

        def check(chunk: Window) -> VerificationReport:
            builder = ReportBuilder("conjugacy", chunk)
            for x in window_points(chunk):
                builder.count("shift_equation")
                tx = ConjugacyService.conjugacy_witness(f, report, x)
                tfx = ConjugacyService.conjugacy_witness(f, report, PresentationService.eval(f, x))
                if tfx != tx + report.k:
                    builder.fail("shift_equation", (x,), f"t(f({x})) = {tfx}, attendu {tx + report.k}")
            return builder.build()

        builder = ReportBuilder("conjugacy", window)
        builder.merge(OracleService.sweep_window(check, "conjugacy", window, workers))
        owner: Dict[int, int] = {}
        for x in window_points(window):
            builder.count("injectivity")
            tx = ConjugacyService.conjugacy_witness(f, report, x)
            if tx in owner:
                builder.fail("injectivity", (owner[tx], x), f"t({owner[tx]}) = t({x}) = {tx}")
            owner.setdefault(tx, x)
        return builder.build()
