import json

import pytest

from zreorder.cli.main import main, parse_window
from zreorder.core.config import settings
from tests.cli.samples import PAIRED_SHIFT, SWAP, TRANSLATION_BY_TWO


def test_validate(spec_file, invoke):
    """Test la commande validate et la forme canonique."""
    code, out, err = invoke("validate", spec_file("map{tail+=1;tail-=1;patch{0->1}}"), format="structured")
    assert code == 0
    record = json.loads(out)
    assert record["status"] == "ok"
    assert record["result"]["family"] == "family_a"
    assert record["result"]["canonical"] == "map { tail+ = 1; tail- = 1; patch { } }"
    assert len(record["input_digest"]) == 64
    assert err == ""


def test_reorder_translation_by_two(spec_file, invoke):
    """Test reorder : k = 2 et vérifications réussies."""
    code, out, _ = invoke("reorder", spec_file(TRANSLATION_BY_TWO), window=(-30, 30), format="structured")
    assert code == 0
    record = json.loads(out)
    assert record["result"]["k"] == "2"
    assert record["verification"]["passed"]
    assert {r["name"] for r in record["verification"]["reports"]} == {"order", "normal_form"}


def test_reorder_swap_refused(spec_file, invoke):
    """Test le refus de reorder sur une bijection à point périodique."""
    code, out, err = invoke("reorder", spec_file(SWAP), format="structured")
    assert code == 1
    assert "[0, 1]" in err
    record = json.loads(out)
    assert record["status"] == "refused"
    assert record["error"]["error"] == "PeriodicPointFound"
    assert record["error"]["cycle"] == [0, 1]


def test_reorder_text_output(spec_file, invoke):
    """Test le rendu texte des étiquettes."""
    code, out, _ = invoke("reorder", spec_file(TRANSLATION_BY_TWO), window=(-10, 10))
    assert code == 0
    assert out.startswith("reorder [ok] fenêtre -10:10")
    assert "label(2) = (0, 1, 0)" in out


def test_conjugacy_paired_shift(spec_file, invoke):
    """Test conjugacy sur le décalage apparié : non conjuguée, sortie 0."""
    code, out, _ = invoke("conjugacy", spec_file(PAIRED_SHIFT), format="structured")
    assert code == 0
    result = json.loads(out)["result"]
    assert result["verdict"] == "not_conjugate"
    assert result["reason"] == "infinitely_many_orbits"


def test_conjugacy_translation(spec_file, invoke):
    """Test conjugacy sur une translation par 3."""
    code, out, _ = invoke("conjugacy", spec_file("map{tail+=3;tail-=3;patch{}}"), format="structured")
    assert code == 0
    record = json.loads(out)
    assert record["result"]["verdict"] == "conjugate"
    assert record["result"]["k"] == 3
    assert record["verification"]["passed"]


def test_color(spec_file, invoke):
    """Test color sur une translation par 1."""
    code, out, _ = invoke("color", spec_file("map{tail+=1;tail-=1;patch{}}"), window=(-3, 3), format="structured")
    assert code == 0
    result = json.loads(out)["result"]
    assert result["chromatic_number"] == 2
    assert result["classes"] == {"A": [-2, 0, 2], "B": [-3, -1, 1, 3]}
    assert result["window_is_color"] is False


def test_orbits(spec_file, invoke):
    """Test orbits : cycle, queue de points fixes et accord avec l'oracle."""
    code, out, _ = invoke("orbits", spec_file(SWAP), window=(-3, 3), format="structured")
    assert code == 0
    record = json.loads(out)
    assert record["result"]["cycles"][0] == [0, 1]
    assert record["result"]["cofinite_fixed_tail"] is True
    assert record["verification"]["passed"]


def test_orbits_paired_shift(spec_file, invoke):
    """Test orbits sur la famille B."""
    code, out, _ = invoke("orbits", spec_file(PAIRED_SHIFT), window=(-10, 10), format="structured")
    assert code == 0
    result = json.loads(out)["result"]
    assert result["line_count"] == "countably_infinite"
    assert result["cycles"] == []


@pytest.mark.parametrize("text", [TRANSLATION_BY_TWO, SWAP, PAIRED_SHIFT])
def test_verify(spec_file, invoke, text):
    """Test verify : toutes les vérifications applicables réussissent."""
    code, out, _ = invoke("verify", spec_file(text), window=(-15, 15), format="structured")
    assert code == 0
    assert json.loads(out)["result"]["passed"]


def test_verify_opaque(spec_file, invoke):
    """Test verify sur une présentation opaque : aller-retour seulement."""
    spec = spec_file("compose(paired_shift, map{tail+=1;tail-=1;patch{}})")
    code, out, _ = invoke("verify", spec, window=(-10, 10), format="structured")
    assert code == 0
    record = json.loads(out)
    assert [r["name"] for r in record["verification"]["reports"]] == ["inverse_round_trip"]
    assert record["result"]["skipped"]


def test_opaque_refused(spec_file, invoke):
    """Test le refus d'analyse d'une présentation opaque."""
    spec = spec_file("compose(paired_shift, map{tail+=1;tail-=1;patch{}})")
    code, _, err = invoke("orbits", spec)
    assert code == 1
    assert "non supportée" in err


def test_missing_file(tmp_path, invoke):
    """Test qu'un fichier absent est une erreur d'entrée."""
    code, out, err = invoke("validate", tmp_path / "absent.zr", format="structured")
    assert code == 2
    assert json.loads(out)["status"] == "input_error"
    assert "absent.zr" in err


def test_syntax_error(spec_file, invoke):
    """Test la position de l'erreur de syntaxe."""
    code, out, err = invoke("validate", spec_file("map { tail+ = 1;\n tail- = ; patch { } }"), format="structured")
    assert code == 2
    error = json.loads(out)["error"]
    assert error["error"] == "PresentationSyntaxError"
    assert error["line"] == 2
    assert "ligne 2" in err


def test_not_bijective(spec_file, invoke):
    """Test qu'une présentation non bijective est une erreur d'entrée."""
    code, _, err = invoke("validate", spec_file("map{tail+=1;tail-=2;patch{}}"))
    assert code == 2
    assert "bijection" in err


def test_invalid_utf8(spec_file, invoke):
    """Test qu'un fichier mal encodé est une erreur d'entrée."""
    code, _, _ = invoke("validate", spec_file(b"map{tail+=1;\xff}"))
    assert code == 2


def test_deterministic_output(spec_file, invoke):
    """Test que deux exécutions sans horodatage sont identiques à l'octet près."""
    spec = spec_file(TRANSLATION_BY_TWO)
    for fmt in ("text", "structured"):
        first = invoke("reorder", spec, window=(-20, 20), format=fmt)
        second = invoke("reorder", spec, window=(-20, 20), format=fmt)
        assert first == second


def test_timestamp_included(spec_file, invoke):
    """Test que l'horodatage est présent par défaut."""
    _, out, _ = invoke("validate", spec_file(SWAP), format="structured", timestamp=True)
    assert "timestamp" in json.loads(out)


def test_parse_window():
    """Test l'analyse de --window."""
    assert parse_window("-5:7") == (-5, 7)


@pytest.mark.parametrize("window", ["5", "a:b", "5:1"])
def test_main_bad_window(spec_file, window):
    """Test qu'une fenêtre invalide termine avec le code 2."""
    with pytest.raises(SystemExit) as exc:
        main(["reorder", "--spec", str(spec_file(SWAP)), "--window", window])
    assert exc.value.code == 2


def test_main_runs(spec_file, capsys):
    """Test le point d'entrée complet."""
    code = main(["validate", "--spec", str(spec_file(SWAP)), "--no-timestamp", "--format", "structured"])
    assert code == 0
    assert '"status": "ok"' in capsys.readouterr().out


def test_window_too_wide_refused(spec_file, invoke):
    """Test qu'une fenêtre trop large est refusée au lieu de bloquer."""
    spec = spec_file("map{tail+=0;tail-=0;patch{}}")
    code, out, err = invoke("verify", spec, window=(-10_000_000, 10_000_000), format="structured")
    assert code == 1
    error = json.loads(out)["error"]
    assert error["error"] == "AnalysisLimitExceeded"
    assert error["limit"] == settings.MAX_WINDOW
    assert "largeur de fenêtre" in err


def test_window_at_limit_accepted(spec_file, invoke):
    """Test qu'une fenêtre de MAX_WINDOW points reste acceptée."""
    half = (settings.MAX_WINDOW - 1) // 2
    code, _, _ = invoke("validate", spec_file(SWAP), window=(-half, half))
    assert code == 0


def test_main_window_too_wide(spec_file, capsys):
    """Test le refus d'une fenêtre trop large depuis la ligne de commande."""
    code = main(["orbits", "--spec", str(spec_file(SWAP)), "--window", "-10000000:10000000", "--no-timestamp"])
    assert code == 1
    assert "largeur de fenêtre" in capsys.readouterr().err
