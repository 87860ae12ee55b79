from zreorder.schemas.presentation import ValidatedBijection
from zreorder.schemas.run import CommandResult, RunConfig
from zreorder.services.presentation import PresentationService


def handle(f: ValidatedBijection, config: RunConfig) -> CommandResult:
    canonical = PresentationService.format_bijection(f)
    result = {
        "family": f.family.value,
        "capability": f.capability.value,
        "canonical": canonical,
        "canonical_digest": PresentationService.digest(f),
    }
    lines = [
        f"famille {f.family.value}, capacité {f.capability.value}",
        f"forme canonique : {canonical}",
    ]
    return CommandResult(result=result, lines=lines)
