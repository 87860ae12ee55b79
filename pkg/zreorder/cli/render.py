from datetime import datetime, timezone
from typing import Any, Dict, List, Optional

from zreorder.models.run import OutputFormat, RunStatus
from zreorder.schemas.run import CommandResult, RunConfig, RunRecord
from zreorder.schemas.verification import VerificationReport


def report_summary(*reports: VerificationReport) -> Dict[str, Any]:
    """Résumé sérialisable d'un ou plusieurs rapports de vérification."""
    return {
        "passed": all(r.passed for r in reports),
        "reports": [
            {
                "name": r.name,
                "passed": r.passed,
                "checks": dict(sorted(r.checks.items())),
                "violation_count": r.violation_count,
                "violations": [v.dict() for v in r.violations],
            }
            for r in reports
        ],
    }


def report_lines(*reports: VerificationReport) -> List[str]:
    lines = []
    for r in reports:
        total = sum(r.checks.values())
        verdict = "OK" if r.passed else f"ÉCHEC ({r.violation_count} violation(s))"
        lines.append(f"vérification {r.name} : {verdict}, {total} contrôle(s)")
        for v in r.violations[:5]:
            lines.append(f"  {v.check} témoin {list(v.witness)} : {v.detail}")
    return lines


def build_record(
    config: RunConfig,
    digest: Optional[str],
    outcome: Optional[CommandResult] = None,
    error: Optional[Dict[str, Any]] = None,
    status: Optional[RunStatus] = None,
) -> RunRecord:
    outcome = outcome or CommandResult()
    return RunRecord(
        command=config.command,
        input_digest=digest,
        window=config.window,
        result=outcome.result,
        verification=outcome.verification,
        witnesses=outcome.witnesses,
        status=status or outcome.status,
        error=error,
        timestamp=datetime.now(timezone.utc).isoformat() if config.timestamp else None,
    )


def render(record: RunRecord, config: RunConfig, lines: List[str]) -> str:
    if config.format is OutputFormat.STRUCTURED:
        exclude = set()
        if record.timestamp is None:
            exclude.add("timestamp")
        if record.error is None:
            exclude.add("error")
        return record.json(sort_keys=True, indent=2, exclude=exclude)
    header = f"{record.command.value} [{record.status.value}] fenêtre {record.window[0]}:{record.window[1]}"
    out = [header]
    if record.input_digest:
        out.append(f"empreinte {record.input_digest}")
    out.extend(lines)
    if record.error is not None:
        out.append(f"erreur : {record.error['detail']}")
    if record.timestamp is not None:
        out.append(f"horodatage {record.timestamp}")
    return "\n".join(out)
