from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple
from pydantic import BaseModel, validator

from zreorder.core.config import settings
from zreorder.models.run import Command, OutputFormat, RunStatus

class RunConfig(BaseModel):
    command: Command
    spec_path: Path
    window: Tuple[int, int] = (settings.DEFAULT_WINDOW_LO, settings.DEFAULT_WINDOW_HI)
    format: OutputFormat = OutputFormat.TEXT
    emit_diagram: Optional[Path] = None
    timestamp: bool = True
    triple_samples: int = settings.TRIPLE_SAMPLES

    @validator("window")
    def validate_window(cls, v: Tuple[int, int]) -> Tuple[int, int]:
        if v[0] >= v[1]:
            raise ValueError(f"fenêtre invalide {v[0]}:{v[1]} : la borne inférieure doit être < la borne supérieure")
        return v

    @validator("triple_samples")
    def validate_triple_samples(cls, v: int) -> int:
        if v < 1:
            raise ValueError("--triple-samples doit être strictement positif")
        return v

class CommandResult(BaseModel):
    """Résultat d'une commande, avant rendu texte ou structuré."""
    result: Dict[str, Any] = {}
    verification: Optional[Dict[str, Any]] = None
    witnesses: List[Any] = []
    lines: List[str] = []
    status: RunStatus = RunStatus.OK

class RunRecord(BaseModel):
    schema_version: int = settings.SCHEMA_VERSION
    command: Command
    input_digest: Optional[str] = None
    window: Tuple[int, int]
    result: Dict[str, Any] = {}
    verification: Optional[Dict[str, Any]] = None
    witnesses: List[Any] = []
    status: RunStatus
    error: Optional[Dict[str, Any]] = None
    timestamp: Optional[str] = None
