from zreorder.core.logging import cli_logger as logger
from zreorder.models.conjugacy import ConjugacyVerdict
from zreorder.models.run import RunStatus
from zreorder.schemas.presentation import ValidatedBijection
from zreorder.schemas.run import CommandResult, RunConfig
from zreorder.services.coloring import ColoringService
from zreorder.services.conjugacy import ConjugacyService
from zreorder.services.oracle import OracleService
from zreorder.services.orbit import OrbitService
from zreorder.services.reorder import ReorderService
from zreorder.cli.render import report_lines, report_summary


def handle(f: ValidatedBijection, config: RunConfig) -> CommandResult:
    """Toutes les vérifications applicables à la présentation, sans refus d'analyse."""
    window = config.window
    reports = [OracleService.check_inverse(f, window)]
    skipped = []

    if not f.is_analyzable:
        skipped.append("analyse d'orbites (présentation opaque)")
    else:
        reports.append(OracleService.check_partition(
            OracleService.brute_orbits(f, window),
            OrbitService.window_partition(f, window),
        ))
        if OrbitService.is_periodic_point_free(f):
            order = ReorderService.build_order(f)
            reports.append(ReorderService.verify_order(f, order, window, config.triple_samples))
            reports.append(ReorderService.verify_normal_form(f, ReorderService.normal_form(f), window))
            reports.append(ColoringService.verify_coloring(f, ColoringService.two_coloring(order), window))
        else:
            skipped.append("ordre, forme normale et coloration (point périodique)")
        conjugacy = ConjugacyService.decide_shift_conjugacy(f)
        if conjugacy.verdict is ConjugacyVerdict.CONJUGATE:
            reports.append(ConjugacyService.verify_conjugacy(f, conjugacy, window))

    for item in skipped:
        logger.info(f"Vérification ignorée : {item}")
    passed = all(r.passed for r in reports)
    lines = report_lines(*reports) + [f"ignoré : {item}" for item in skipped]
    return CommandResult(
        result={"family": f.family.value, "skipped": skipped, "passed": passed},
        verification=report_summary(*reports),
        witnesses=[list(v.witness) for r in reports for v in r.violations],
        lines=lines,
        status=RunStatus.OK if passed else RunStatus.FAILED,
    )
