from zreorder.models.run import RunStatus
from zreorder.schemas.presentation import ValidatedBijection
from zreorder.schemas.run import CommandResult, RunConfig
from zreorder.services.coloring import ColoringService
from zreorder.services.orbit import window_points
from zreorder.cli.render import report_lines, report_summary


def handle(f: ValidatedBijection, config: RunConfig) -> CommandResult:
    chromatic = ColoringService.chromatic_number(f)
    coloring = ColoringService.coloring_for(f)
    report = ColoringService.verify_coloring(f, coloring, config.window)
    a, b = ColoringService.color_classes(coloring, config.window)
    window_is_color = ColoringService.is_color(f, window_points(config.window))

    result = {
        "chromatic_number": chromatic,
        "classes": {"A": a, "B": b},
        "window_is_color": window_is_color,
    }
    lines = [
        f"nombre chromatique : {chromatic}",
        f"couleur A : {len(a)} point(s), couleur B : {len(b)} point(s)",
        f"la fenêtre entière est une f-couleur : {'oui' if window_is_color else 'non'}",
    ]
    lines.extend(report_lines(report))
    return CommandResult(
        result=result,
        verification=report_summary(report),
        witnesses=[list(v.witness) for v in report.violations],
        lines=lines,
        status=RunStatus.OK if report.passed else RunStatus.FAILED,
    )
