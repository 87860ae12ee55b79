import sys
from typing import List, Optional

from zreorder.cli.main import main as cli_main
from zreorder.core.config import settings
from zreorder.core.logging import logger


def main(argv: Optional[List[str]] = None) -> int:
    """Point d'entrée de l'application."""
    logger.debug(f"{settings.PROJECT_NAME} {settings.VERSION} démarre")
    return cli_main(argv if argv is not None else sys.argv[1:])
