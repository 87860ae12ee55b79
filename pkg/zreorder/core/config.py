from typing import Any, Dict, Optional
from pydantic import BaseSettings, validator
from pathlib import Path
from functools import lru_cache

class Settings(BaseSettings):
    # Configuration du projet
    PROJECT_NAME: str = "zreorder"
    VERSION: str = "1.0.0"
    DESCRIPTION: str = "Réordonnancement monotone des bijections de Z"
    SCHEMA_VERSION: int = 1

    # Fenêtre d'analyse par défaut
    DEFAULT_WINDOW_LO: int = -200
    DEFAULT_WINDOW_HI: int = 200
    MAX_WINDOW: int = 10_001

    @validator("DEFAULT_WINDOW_HI")
    def validate_window(cls, v: int, values: Dict[str, Any]) -> int:
        if "DEFAULT_WINDOW_LO" in values and v <= values["DEFAULT_WINDOW_LO"]:
            raise ValueError("DEFAULT_WINDOW_HI doit être strictement supérieur à DEFAULT_WINDOW_LO")
        return v

    # Moteur d'orbites
    ITERATION_BUDGET: int = 1_000_000
    MAX_LINE_ORBITS: int = 100_000
    MAX_EXPR_DEPTH: int = 200
    MAX_PATCH_WIDTH: int = 1_000_000

    # Vérification
    TRIPLE_SAMPLES: int = 100_000
    EXHAUSTIVE_TRIPLES_MAX_POINTS: int = 60
    RANDOM_SEED: int = 1729
    MAX_REPORTED_VIOLATIONS: int = 20
    ORACLE_STEP_MARGIN: int = 256
    VERIFY_WORKERS: int = 1

    # Configuration du mode debug
    DEBUG: bool = False

    # Logging
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    LOG_DIR: Optional[Path] = None

    @validator("LOG_LEVEL")
    def validate_log_level(cls, v: str) -> str:
        level = v.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Niveau de log inconnu : {v}")
        return level

    @validator("VERIFY_WORKERS", "TRIPLE_SAMPLES", "ITERATION_BUDGET", "MAX_LINE_ORBITS", "MAX_EXPR_DEPTH", "MAX_PATCH_WIDTH", "MAX_WINDOW")
    def validate_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("La valeur doit être strictement positive")
        return v

    class Config:
        case_sensitive = True
        env_file = ".env"
        env_prefix = "ZREORDER_"

@lru_cache()
def get_settings() -> Settings:
    """Obtient les paramètres de configuration."""
    return Settings()

settings = get_settings()
