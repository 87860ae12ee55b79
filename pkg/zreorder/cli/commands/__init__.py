from typing import Callable, Dict

from zreorder.cli.commands import color, conjugacy, orbits, reorder, validate, verify
from zreorder.models.run import Command
from zreorder.schemas.presentation import ValidatedBijection
from zreorder.schemas.run import CommandResult, RunConfig

Handler = Callable[[ValidatedBijection, RunConfig], CommandResult]

COMMANDS: Dict[Command, Handler] = {
    Command.VALIDATE: validate.handle,
    Command.ORBITS: orbits.handle,
    Command.REORDER: reorder.handle,
    Command.COLOR: color.handle,
    Command.CONJUGACY: conjugacy.handle,
    Command.VERIFY: verify.handle,
}
