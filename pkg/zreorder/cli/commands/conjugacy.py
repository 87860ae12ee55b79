from zreorder.models.conjugacy import ConjugacyVerdict
from zreorder.models.run import RunStatus
from zreorder.schemas.presentation import ValidatedBijection
from zreorder.schemas.run import CommandResult, RunConfig
from zreorder.services.conjugacy import ConjugacyService
from zreorder.cli.render import report_lines, report_summary


def handle(f: ValidatedBijection, config: RunConfig) -> CommandResult:
    report = ConjugacyService.decide_shift_conjugacy(f)
    result = report.dict(exclude={"orbit_labels"})
    result["verdict"] = report.verdict.value
    result["reason"] = report.reason.value if report.reason else None
    result["cycle"] = list(report.cycle) if report.cycle else None

    lines = [f"verdict : {report.verdict.value}"]
    if report.k is not None:
        lines.append(f"décalage k = {report.k}")
    if report.reason is not None:
        lines.append(f"raison : {report.reason.value}")
    if report.cycle is not None:
        lines.append(f"cycle : {list(report.cycle)}")

    witnesses = [list(report.cycle)] if report.cycle else []
    if report.verdict is not ConjugacyVerdict.CONJUGATE:
        return CommandResult(result=result, witnesses=witnesses, lines=lines)

    verification = ConjugacyService.verify_conjugacy(f, report, config.window)
    lines.extend(report_lines(verification))
    return CommandResult(
        result=result,
        verification=report_summary(verification),
        witnesses=[list(v.witness) for v in verification.violations],
        lines=lines,
        status=RunStatus.OK if verification.passed else RunStatus.FAILED,
    )
