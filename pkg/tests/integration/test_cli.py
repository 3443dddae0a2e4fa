"""Integration tests for the norms-lab command line."""

import json

import pytest
import typer
from typer.testing import CliRunner

from normslab import __version__
from normslab.cli.main import app, handle_errors
from normslab.cli.render import canonical_json
from normslab.core.config import CONFIG_ENV, PRECISION_ENV
from normslab.core.cyclotomic import lam
from normslab.core.errors import (
    CompatibilityFailure,
    HasseArfViolation,
    InvalidInput,
    PrecisionExhausted,
)
from normslab.core.normsfield import NormSequence, uniformizer_sequence
from normslab.core.powerseries import PowerSeriesElt, ZpRing

runner = CliRunner()


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv(CONFIG_ENV, raising=False)
    monkeypatch.delenv(PRECISION_ENV, raising=False)


@pytest.fixture
def pi_file(tmp_path):
    path = tmp_path / "pi.json"
    path.write_text(canonical_json(uniformizer_sequence(3, 1, 3).to_document()), encoding="utf-8")
    return path


def _json(result):
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


def test_version():
    """Test --version."""
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    assert f"norms-lab {__version__}" in result.stdout


# -- exit codes ------------------------------------------------------------


def _app_raising(error):
    mini = typer.Typer()

    @mini.command()
    @handle_errors
    def run():
        raise error

    return mini


@pytest.mark.parametrize(
    "error, code",
    [
        (InvalidInput("bad"), 2),
        (CompatibilityFailure("no"), 2),
        (PrecisionExhausted("short"), 3),
        (HasseArfViolation("jump 1/2"), 1),
    ],
)
def test_handle_errors_exit_codes(error, code):
    """Test the mapping from library errors to exit codes."""
    result = runner.invoke(_app_raising(error), [])
    assert result.exit_code == code
    assert type(error).__name__ in result.output


# -- ram -------------------------------------------------------------------


def test_ram_profile():
    """Test L^1 | Q_3 end to end."""
    data = _json(runner.invoke(app, ["ram", "profile", "--p", "3", "--top", "1"]))
    assert data["different_degree"] == 1
    assert data["different_oracle"] == 1
    assert data["lower_jumps"] == [0]


def test_ram_profile_is_deterministic():
    """Test that two runs give identical bytes."""
    args = ["ram", "profile", "--p", "3", "--base", "0", "--top", "2"]
    first = runner.invoke(app, args)
    second = runner.invoke(app, args)
    assert first.exit_code == 0
    assert first.stdout == second.stdout
    assert json.loads(first.stdout)["upper_jumps"] == ["0", "1"]


def test_ram_profile_rejects_input():
    """Test a composite prime and a level above the maximum."""
    assert runner.invoke(app, ["ram", "profile", "--p", "9", "--top", "1"]).exit_code == 2
    assert runner.invoke(app, ["ram", "profile", "--p", "3", "--top", "6"]).exit_code == 2


def test_ram_apf():
    """Test i(L | L^1) and r(1) at p = 3."""
    data = _json(runner.invoke(app, ["ram", "apf", "--p", "3", "--level", "1"]))
    assert data == {"p": 3, "level": 1, "first_jump": "2", "r": 2}


# -- global options --------------------------------------------------------


def test_table_format():
    """Test --format table."""
    result = runner.invoke(app, ["--format", "table", "ram", "apf", "--p", "3", "--level", "2"])
    assert result.exit_code == 0
    assert "first_jump" in result.stdout
    assert "field" in result.stdout


def test_output_file(tmp_path):
    """Test --output writes the document instead of stdout."""
    out = tmp_path / "apf.json"
    result = runner.invoke(app, ["--output", str(out), "ram", "apf", "--p", "3", "--level", "1"])
    assert result.exit_code == 0
    assert result.stdout == ""
    assert json.loads(out.read_text(encoding="utf-8"))["r"] == 2


def test_timings():
    """Test that --timings reports tracked operations."""
    result = runner.invoke(
        app, ["--timings", "oort", "verify", "--p", "3", "--c", "1", "--levels", "2..2"]
    )
    assert result.exit_code == 0
    assert "operation.duration.oort_verify: 1 call(s)" in result.output


def test_precision_from_env_and_flag(monkeypatch):
    """Test NORMS_LAB_PRECISION and the --precision flag."""
    monkeypatch.setenv(PRECISION_ENV, "30")
    data = _json(runner.invoke(app, ["padic", "teich", "--p", "3", "--r", "2"]))
    assert data["relprec"] == 30
    data = _json(runner.invoke(app, ["--precision", "40", "padic", "teich", "--p", "3", "--r", "2"]))
    assert data["relprec"] == 40


def test_config_file(tmp_path):
    """Test --config limits the tower depth."""
    config = tmp_path / "lab.toml"
    config.write_text("[arithmetic]\nmax_level = 2\n", encoding="utf-8")
    args = ["--config", str(config), "ram", "profile", "--p", "3", "--top", "3"]
    assert runner.invoke(app, args).exit_code == 2
    missing = runner.invoke(app, ["--config", str(tmp_path / "nope.toml"), "ram", "apf"])
    assert missing.exit_code == 2


# -- padic -----------------------------------------------------------------


def test_padic_teich():
    """Test tau(2) = -1 at p = 3."""
    data = _json(runner.invoke(app, ["padic", "teich", "--p", "3", "--r", "2"]))
    assert data["val"] == 0
    assert set(data["digits"]) == {2}
    assert runner.invoke(app, ["padic", "teich", "--p", "3", "--r", "3"]).exit_code == 2


def test_padic_parse():
    """Test the text format."""
    data = _json(runner.invoke(app, ["padic", "parse", "3^1 * (1 + 2*3) [2]"]))
    assert data == {"p": 3, "val": 1, "digits": [1, 2], "relprec": 2}


def test_padic_hensel():
    """Test a square root of 7 in Z_3 and a failing hypothesis."""
    data = _json(runner.invoke(app, ["padic", "hensel", "--p", "3", "--poly", "Z^2 - 7", "--x0", "1"]))
    assert data["digits"][0] == 1
    failed = runner.invoke(app, ["padic", "hensel", "--p", "3", "--poly", "Z^3 - 4", "--x0", "1"])
    assert failed.exit_code == 2


# -- weierstrass -----------------------------------------------------------


def test_weierstrass_prep(tmp_path):
    """Test 9 (Z + 3) read from a document."""
    g = PowerSeriesElt.from_ints(ZpRing(3, 60), [27, 9], exact=True)
    path = tmp_path / "g.json"
    path.write_text(canonical_json(g.to_document()), encoding="utf-8")
    data = _json(runner.invoke(app, ["weierstrass", "prep", str(path)]))
    assert data["c"] == 2
    assert data["f"]["exact"]


def test_unreadable_document(tmp_path):
    """Test malformed JSON and schema errors."""
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert runner.invoke(app, ["weierstrass", "prep", str(bad)]).exit_code == 2
    wrong = tmp_path / "wrong.json"
    wrong.write_text('{"ring": "Qp"}', encoding="utf-8")
    assert runner.invoke(app, ["fon", "check", str(wrong)]).exit_code == 2
    assert runner.invoke(app, ["fon", "check", str(tmp_path / "none.json")]).exit_code == 2


# -- fon -------------------------------------------------------------------


def test_fon_check(pi_file, tmp_path):
    """Test a compatible and an incompatible sequence."""
    data = _json(runner.invoke(app, ["fon", "check", str(pi_file)]))
    assert data["passed"]
    assert data["range"] == [1, 3]

    bad = NormSequence(3, 1, [lam(3, 1), lam(3, 2) * 2], verify=False)
    path = tmp_path / "bad.json"
    path.write_text(canonical_json(bad.to_document()), encoding="utf-8")
    result = runner.invoke(app, ["fon", "check", str(path)])
    assert result.exit_code == 1
    assert json.loads(result.stdout)["first_failure"] == 1


def test_fon_check_uses_coercion_margin(tmp_path):
    """Test a two-digit component: exit 3 by default, accepted with a margin of 1."""
    short = NormSequence(3, 1, [lam(3, 1), lam(3, 2, prec=2)], verify=False)
    path = tmp_path / "short.json"
    path.write_text(canonical_json(short.to_document()), encoding="utf-8")
    assert runner.invoke(app, ["fon", "check", str(path)]).exit_code == 3
    config = tmp_path / "lab.toml"
    config.write_text("[arithmetic]\ncoercion_margin = 1\n", encoding="utf-8")
    data = _json(runner.invoke(app, ["--config", str(config), "fon", "check", str(path)]))
    assert data["passed"]


def test_fon_add(pi_file):
    """Test pi + pi at probe depth 3."""
    data = _json(runner.invoke(app, ["fon", "add", str(pi_file), str(pi_file), "--probe", "3"]))
    assert data["sum"]["range"] == [1, 3]
    assert data["stability"]["stable"]
    assert data["congruence"]["passed"]
    result = runner.invoke(app, ["fon", "add", str(pi_file), str(pi_file), "--probe", "4"])
    assert result.exit_code == 2


def test_fon_from_series():
    """Test g = z over depths 1..2."""
    data = _json(
        runner.invoke(
            app, ["fon", "from-series", "--p", "3", "--series", "z", "--range", "1..2", "--probe", "2"]
        )
    )
    assert data["range"] == [1, 2]
    assert len(data["components"]) == 2


def test_fon_approx(tmp_path):
    """Test lifting 1 + lambda_1."""
    path = tmp_path / "x.json"
    path.write_text(canonical_json((1 + lam(3, 1)).to_document()), encoding="utf-8")
    data = _json(runner.invoke(app, ["fon", "approx", str(path), "--range", "1..2", "--probe", "2"]))
    assert data["congruence"]["passed"]
    assert data["sequence"]["range"] == [1, 2]


# -- oort ------------------------------------------------------------------


def test_oort_verify_passes():
    """Test p = 3, c = 2 at levels 3 and 4."""
    data = _json(runner.invoke(app, ["oort", "verify", "--p", "3", "--c", "2", "--levels", "3..4"]))
    assert data["verdict"] == "pass"
    assert data["d_eta"] == 6
    assert [level["d_m"] for level in data["levels"]] == [6, 6]


def test_oort_verify_table():
    """Test the human view of a verification."""
    result = runner.invoke(
        app, ["-f", "table", "oort", "verify", "--p", "3", "--c", "1", "--levels", "2..2"]
    )
    assert result.exit_code == 0
    assert "verdict: pass" in result.stdout


def test_oort_verify_auto_levels_stop_at_max_level(tmp_path):
    """Test that auto+2 past max_level is cut off instead of refused."""
    config = tmp_path / "lab.toml"
    config.write_text("[arithmetic]\nmax_level = 4\n", encoding="utf-8")
    args = ["--config", str(config), "oort", "verify", "--p", "3", "--c", "5"]
    data = _json(runner.invoke(app, args))
    assert data["m_0"] == 4
    assert data["level_cap"] == 4
    assert [level["m"] for level in data["levels"]] == [4]


def test_oort_verify_rejects_input():
    """Test c divisible by p and a non-Teichmuller W."""
    result = runner.invoke(app, ["oort", "verify", "--p", "3", "--c", "3"])
    assert result.exit_code == 2
    assert "divisible" in result.output
    result = runner.invoke(app, ["oort", "verify", "--p", "3", "--c", "1", "--w", "1 + 2*Z"])
    assert result.exit_code == 2
