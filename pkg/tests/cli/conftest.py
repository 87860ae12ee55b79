import io
from pathlib import Path
from typing import Tuple

import pytest

from zreorder.cli.main import run
from zreorder.schemas.run import RunConfig



@pytest.fixture
def spec_file(tmp_path):
    """Écrit un fichier de spécification temporaire."""

    def _write(text, name: str = "spec.zr") -> Path:
        path = tmp_path / name
        if isinstance(text, bytes):
            path.write_bytes(text)
        else:
            path.write_text(text, encoding="utf-8")
        return path

    return _write


@pytest.fixture
def invoke():
    """Lance une commande et renvoie (code de sortie, stdout, stderr)."""

    def _invoke(command: str, spec: Path, **options) -> Tuple[int, str, str]:
        out, err = io.StringIO(), io.StringIO()
        options.setdefault("timestamp", False)
        code = run(RunConfig(command=command, spec_path=spec, **options), out=out, err=err)
        return code, out.getvalue(), err.getvalue()

    return _invoke
