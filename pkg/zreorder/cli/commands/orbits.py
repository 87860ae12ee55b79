from zreorder.models.run import RunStatus
from zreorder.schemas.presentation import ValidatedBijection
from zreorder.schemas.run import CommandResult, RunConfig
from zreorder.services.oracle import OracleService
from zreorder.services.orbit import OrbitService
from zreorder.cli.render import report_lines, report_summary


def handle(f: ValidatedBijection, config: RunConfig) -> CommandResult:
    classification = OrbitService.classify(f, config.window)
    partition = OrbitService.window_partition(f, config.window)
    agreement = OracleService.check_partition(OracleService.brute_orbits(f, config.window), partition)

    result = {
        "family": f.family.value,
        "line_count": str(classification.line_count),
        "cycles": [list(c) for c in classification.cycles],
        "representatives": list(classification.representatives),
        "representative_rule": classification.representative_rule,
        "cofinite_fixed_tail": classification.cofinite_fixed_tail,
        "periodic_point_free": OrbitService.is_periodic_point_free(f),
        "window_classes": [{"kind": c.kind.value, "points": list(c.points)} for c in partition.classes],
    }
    lines = [
        f"orbites-droites : {classification.line_count}",
        f"cycles : {len(classification.cycles)}"
        + (" (queue de points fixes cofinie)" if classification.cofinite_fixed_tail else ""),
    ]
    lines.extend(f"  cycle {list(c)}" for c in classification.cycles[:20])
    if classification.representatives:
        lines.append(f"représentants : {list(classification.representatives[:20])}")
    if classification.representative_rule:
        lines.append(f"règle des représentants : {classification.representative_rule}")
    lines.extend(report_lines(agreement))
    return CommandResult(
        result=result,
        verification=report_summary(agreement),
        witnesses=[list(v.witness) for v in agreement.violations],
        lines=lines,
        status=RunStatus.OK if agreement.passed else RunStatus.FAILED,
    )
