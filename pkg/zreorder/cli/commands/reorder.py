from zreorder.models.run import RunStatus
from zreorder.schemas.presentation import ValidatedBijection
from zreorder.schemas.run import CommandResult, RunConfig
from zreorder.services.reorder import ReorderService
from zreorder.cli.render import report_lines, report_summary

SAMPLE_RADIUS = 5


def handle(f: ValidatedBijection, config: RunConfig) -> CommandResult:
    order = ReorderService.build_order(f)
    nf = ReorderService.normal_form(f)
    lo, hi = config.window
    sample = [x for x in range(-SAMPLE_RADIUS, SAMPLE_RADIUS + 1) if lo <= x <= hi]
    order_report = ReorderService.verify_order(f, order, config.window, config.triple_samples)
    nf_report = ReorderService.verify_normal_form(f, nf, config.window)
    passed = order_report.passed and nf_report.passed

    result = {
        "family": f.family.value,
        "k": str(nf.k),
        "representatives": list(nf.representatives),
        "sample_labels": ReorderService.sample_labels(order, sample),
    }
    lines = [f"k = {nf.k}"]
    lines.extend(f"  label({item['x']}) = ({item['alpha']}, {item['step']}, {item['inner_rank']})" for item in result["sample_labels"])
    lines.extend(report_lines(order_report, nf_report))
    return CommandResult(
        result=result,
        verification=report_summary(order_report, nf_report),
        witnesses=[list(v.witness) for r in (order_report, nf_report) for v in r.violations],
        lines=lines,
        status=RunStatus.OK if passed else RunStatus.FAILED,
    )
