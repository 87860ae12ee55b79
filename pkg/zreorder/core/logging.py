import logging
import sys
from logging.handlers import RotatingFileHandler
from zreorder.core.config import settings

# Configuration du format des logs
log_format = logging.Formatter(settings.LOG_FORMAT)

# Handler console : stderr, stdout est réservé aux rapports
console_handler = logging.StreamHandler(sys.stderr)
console_handler.setFormatter(log_format)

# Configuration du logger principal
logger = logging.getLogger("zreorder")
logger.setLevel(settings.LOG_LEVEL)
logger.addHandler(console_handler)
logger.propagate = False

# Handler fichier, uniquement si un dossier de logs est configuré
if settings.LOG_DIR is not None:
    settings.LOG_DIR.mkdir(parents=True, exist_ok=True)
    file_handler = RotatingFileHandler(
        filename=settings.LOG_DIR / "zreorder.log",
        maxBytes=10485760,  # 10MB
        backupCount=5,
        encoding="utf-8"
    )
    file_handler.setFormatter(log_format)
    logger.addHandler(file_handler)

# Configuration des loggers spécifiques
cli_logger = logging.getLogger("zreorder.cli")
engine_logger = logging.getLogger("zreorder.engine")

# En mode debug, tout le package passe en DEBUG
if settings.DEBUG:
    logger.setLevel(logging.DEBUG)

def get_logger(name: str) -> logging.Logger:
    """Retourne un logger avec le préfixe de l'application."""
    if name.startswith("zreorder."):
        return logging.getLogger(name)
    return logging.getLogger(f"zreorder.{name}")
