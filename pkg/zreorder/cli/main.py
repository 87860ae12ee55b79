import argparse
import sys
import traceback
from pathlib import Path
from typing import List, Optional, TextIO, Tuple

from pydantic import ValidationError

from zreorder.core.config import settings
from zreorder.core.exceptions import (
    EXIT_ANALYSIS,
    EXIT_INPUT,
    EXIT_OK,
    AnalysisLimitExceeded,
    ConfigurationException,
    ZReorderException,
)
from zreorder.core.files import spec_file_manager
from zreorder.core.logging import cli_logger as logger
from zreorder.cli.commands import COMMANDS
from zreorder.cli.diagram import emit_orbit_diagram
from zreorder.cli.render import build_record, render
from zreorder.models.run import Command, OutputFormat, RunStatus
from zreorder.schemas.run import RunConfig
from zreorder.services.presentation import PresentationService


def parse_window(text: str) -> Tuple[int, int]:
    """--window lo:hi"""
    lo, sep, hi = text.partition(":")
    try:
        if not sep:
            raise ValueError(text)
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"fenêtre invalide {text!r}, attendu lo:hi")


def check_window(window: Tuple[int, int]):
    """
    Raises:
        AnalysisLimitExceeded: Si la fenêtre dépasse MAX_WINDOW points
    """
    width = window[1] - window[0] + 1
    if width > settings.MAX_WINDOW:
        raise AnalysisLimitExceeded("largeur de fenêtre", width, settings.MAX_WINDOW)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=settings.PROJECT_NAME, description=settings.DESCRIPTION)
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.VERSION}")
    parser.add_argument("command", choices=[c.value for c in Command])
    parser.add_argument("--spec", required=True, type=Path, help="fichier de spécification (DSL)")
    parser.add_argument(
        "--window",
        type=parse_window,
        default=(settings.DEFAULT_WINDOW_LO, settings.DEFAULT_WINDOW_HI),
        help="fenêtre d'inspection lo:hi",
    )
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value)
    parser.add_argument("--emit-diagram", type=Path, default=None, help="écrit le diagramme d'orbites (DOT)")
    parser.add_argument("--no-timestamp", action="store_true", help="omet l'horodatage du rapport")
    parser.add_argument("--triple-samples", type=int, default=settings.TRIPLE_SAMPLES)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        spec_path=args.spec,
        window=args.window,
        format=args.format,
        emit_diagram=args.emit_diagram,
        timestamp=not args.no_timestamp,
        triple_samples=args.triple_samples,
    )


def run(config: RunConfig, out: TextIO = None, err: TextIO = None) -> int:
    """
    Exécute une commande et écrit son rapport.

    Returns:
        int: 0 en cas de succès, 1 pour un refus d'analyse ou une vérification
        échouée, 2 pour une entrée invalide
    """
    out = out or sys.stdout
    err = err or sys.stderr
    digest = None
    lines: List[str] = []
    logger.info(f"Commande {config.command.value} sur {config.spec_path}")
    try:
        text, digest = spec_file_manager.read_spec(config.spec_path)
        f = PresentationService.load(text)
        check_window(config.window)
        # Le diagramme ne dépend que de la présentation validée
        if config.emit_diagram is not None:
            emit_orbit_diagram(f, config.window, config.emit_diagram)
        outcome = COMMANDS[config.command](f, config)
        lines = outcome.lines
        record = build_record(config, digest, outcome)
        exit_code = EXIT_OK if outcome.status is RunStatus.OK else EXIT_ANALYSIS
        if exit_code != EXIT_OK:
            err.write(f"{settings.PROJECT_NAME}: vérification échouée, {len(outcome.witnesses)} témoin(s)\n")
    except ZReorderException as e:
        logger.warning(f"{type(e).__name__} : {e.detail}")
        status = RunStatus.INPUT_ERROR if e.exit_code == EXIT_INPUT else RunStatus.REFUSED
        record = build_record(config, digest, error=e.to_dict(), status=status)
        exit_code = e.exit_code
        err.write(f"{settings.PROJECT_NAME}: {e.detail}\n")
    except Exception as e:
        logger.error(f"Erreur inattendue : {str(e)}\n{traceback.format_exc()}")
        record = build_record(
            config,
            digest,
            error={"error": type(e).__name__, "detail": f"erreur interne : {e}", "exit_code": EXIT_ANALYSIS},
            status=RunStatus.REFUSED,
        )
        exit_code = EXIT_ANALYSIS
        err.write(f"{settings.PROJECT_NAME}: erreur interne : {e}\n")

    out.write(render(record, config, lines) + "\n")
    return exit_code


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
    except ValidationError as e:
        error = ConfigurationException("; ".join(item["msg"] for item in e.errors()))
        logger.warning(f"Options invalides : {error.detail}")
        parser.exit(error.exit_code, f"{parser.prog}: {error.detail}\n")
    return run(config)
