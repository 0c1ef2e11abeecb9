"""Tests for the simpfib command line."""

import json
import runpy
import sys

import pytest
import typer
from typer.testing import CliRunner

from simpfib import __version__
from simpfib.cli import app
from simpfib.cli_commands.demo import resolve_example
from simpfib.dtos.report import Report

runner = CliRunner()


@pytest.fixture(autouse=True)
def isolated_cwd(tmp_path, monkeypatch):
    """Keep a developer's own .simpfib.toml out of the way."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("SIMPFIB_JOBS", "1")
    return tmp_path


def test_version():
    """--version prints the package version."""
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    assert f"simpfib {__version__}" in result.output


class TestVerifySes:
    """Test the verify-ses command."""

    def test_bundled_z4_passes(self, data_dir):
        """The bundled Z/4 example passes and lists the bijectivity check."""
        result = runner.invoke(
            app, ["verify-ses", "--ses", str(data_dir / "z4.json"), "--max-dim", "2", "--samples", "20"]
        )
        assert result.exit_code == 0, result.output
        assert "All checks passed" in result.output
        assert "psi-bijective" in result.output

    def test_json_report_for_a_split_extension(self, data_dir):
        """The JSON report for S3 records the section and the Φ checks."""
        result = runner.invoke(
            app,
            [
                "verify-ses",
                "--ses",
                str(data_dir / "s3_split.json"),
                "--max-dim",
                "2",
                "--samples",
                "20",
                "--format",
                "json",
            ],
        )
        assert result.exit_code == 0, result.output
        payload = json.loads(result.stdout)
        assert payload["suite"] == "verify-ses"
        assert payload["passed"] is True
        assert payload["config"]["ses"] == "s3_split"
        assert payload["config"]["section"] == [0, 1]
        names = {record["name"] for record in payload["records"]}
        assert "phi-agrees-psi" in names
        assert any(name.startswith("phi ") for name in names)
        assert "exactness" in names

    def test_report_can_be_written_to_a_file(self, data_dir, tmp_path):
        """--out writes a report that loads back and passed."""
        out = tmp_path / "report.json"
        result = runner.invoke(
            app,
            ["vs", "--ses", str(data_dir / "z4.json"), "--max-dim", "2", "--samples", "10", "--out", str(out)],
        )
        assert result.exit_code == 0, result.output
        assert Report.from_json(out.read_text(encoding="utf-8")).passed

    def test_json_stdout_stays_parseable_with_out(self, data_dir, tmp_path):
        """The 'report written' notice goes to stderr, not into the JSON on stdout."""
        out = tmp_path / "report.json"
        result = runner.invoke(
            app,
            [
                "verify-ses",
                "--ses",
                str(data_dir / "z4.json"),
                "--max-dim",
                "2",
                "--samples",
                "10",
                "--format",
                "json",
                "--out",
                str(out),
            ],
        )
        assert result.exit_code == 0, result.output
        payload = json.loads(result.stdout)
        assert payload == json.loads(out.read_text(encoding="utf-8"))
        assert "Report written to" in result.stderr

    def test_missing_spec_file(self, tmp_path):
        """A missing spec file exits with code 2."""
        result = runner.invoke(app, ["verify-ses", "--ses", str(tmp_path / "nope.json")])
        assert result.exit_code == 2
        assert "Spec file not found" in result.output

    def test_malformed_spec_file(self, tmp_path):
        """A spec without K or L exits with code 2."""
        spec = tmp_path / "bad.json"
        spec.write_text(json.dumps({"G": {"kind": "cyclic", "n": 4}}), encoding="utf-8")
        result = runner.invoke(app, ["verify-ses", "--ses", str(spec)])
        assert result.exit_code == 2
        assert "Invalid spec" in result.output

    def test_non_normalized_section_fails(self, data_dir, tmp_path):
        """A section with σ(1) ≠ 1 fails with a counterexample and exit code 1."""
        section = tmp_path / "section.json"
        section.write_text(json.dumps([2, 1]), encoding="utf-8")
        result = runner.invoke(
            app,
            [
                "verify-ses",
                "--ses",
                str(data_dir / "z4.json"),
                "--section",
                str(section),
                "--max-dim",
                "2",
                "--samples",
                "10",
                "--format",
                "json",
            ],
        )
        assert result.exit_code == 1
        payload = json.loads(result.stdout)
        failing = {r["name"] for r in payload["records"] if r["status"] == "fail"}
        assert "section-normalized" in failing

    def test_section_of_the_wrong_length(self, data_dir, tmp_path):
        """A section file of the wrong length is a usage error."""
        section = tmp_path / "section.json"
        section.write_text(json.dumps([0, 1, 2]), encoding="utf-8")
        result = runner.invoke(
            app, ["verify-ses", "--ses", str(data_dir / "z4.json"), "--section", str(section)]
        )
        assert result.exit_code == 2
        assert "Invalid section" in result.output


class TestVerifyTwist:
    """Test the verify-twist command."""

    @pytest.mark.parametrize("which", ["canonical", "loop"])
    def test_cyclic_group_passes(self, which):
        """Both twisting suites pass for Z/3."""
        result = runner.invoke(
            app, ["verify-twist", "--group", "cyclic:3", "--which", which, "--max-dim", "3"]
        )
        assert result.exit_code == 0, result.output

    def test_loop_report_includes_the_canonical_morphism(self):
        """The loop suite also checks ΩBG → G and the loop relations."""
        result = runner.invoke(
            app, ["vt", "--group", "cyclic:2", "--which", "loop", "--max-dim", "3", "--format", "json"]
        )
        assert result.exit_code == 0, result.output
        payload = json.loads(result.stdout)
        assert payload["suite"] == "verify-twist"
        assert payload["config"]["which"] == "loop"
        names = {record["name"] for record in payload["records"]}
        assert "canonical-morphism-homomorphism" in names
        assert "loop-relations" in names

    def test_unknown_group_family(self):
        """An unknown group family exits with code 2."""
        result = runner.invoke(app, ["verify-twist", "--group", "circle:3"])
        assert result.exit_code == 2
        assert "Invalid spec" in result.output

    def test_invalid_config_file(self, tmp_path):
        """An invalid config file exits with code 2."""
        config = tmp_path / "bad.toml"
        config.write_text("[verify]\nmax_dim = 0\n", encoding="utf-8")
        result = runner.invoke(app, ["verify-twist", "--group", "cyclic:2", "--config", str(config)])
        assert result.exit_code == 2


class TestHomology:
    """Test the homology command."""

    def test_bz4(self):
        """H_0(BZ/4) = Z and H_1(BZ/4) = Z/4."""
        result = runner.invoke(app, ["homology", "--group", "cyclic:4", "--max-dim", "2"])
        assert result.exit_code == 0, result.output
        assert "H_0 = Z" in result.output
        assert "H_1 = Z/4" in result.output

    def test_alias(self):
        """hom runs the homology command."""
        result = runner.invoke(app, ["hom", "--group", "klein", "--max-dim", "2"])
        assert result.exit_code == 0, result.output
        assert "H_1 = Z/2 + Z/2" in result.output

    def test_twisted_product_matches_bg(self, data_dir):
        """BK ×_τ BL and BG have the same homology."""
        def groups(space):
            result = runner.invoke(
                app,
                [
                    "homology",
                    "--ses",
                    str(data_dir / "z4.json"),
                    "--space",
                    space,
                    "--max-dim",
                    "3",
                    "--format",
                    "json",
                ],
            )
            assert result.exit_code == 0, result.output
            return json.loads(result.stdout)["groups"]

        bar = groups("bar")
        assert bar == groups("twisted")
        assert bar[1] == {"dimension": 1, "betti": 0, "torsion": [4]}

    def test_trivial_group(self):
        """B of the trivial group is acyclic."""
        result = runner.invoke(app, ["homology", "--group", "trivial", "--max-dim", "3", "--format", "json"])
        assert result.exit_code == 0, result.output
        assert json.loads(result.stdout)["text"] == ["Z", "0", "0"]

    def test_out_and_jobs(self, tmp_path, monkeypatch):
        """--out writes the JSON result while stdout stays parseable; --jobs does not change it."""
        monkeypatch.delenv("SIMPFIB_JOBS")
        out = tmp_path / "homology.json"
        result = runner.invoke(
            app,
            ["homology", "--group", "cyclic:4", "--max-dim", "3", "--format", "json", "--jobs", "3", "--out", str(out)],
        )
        assert result.exit_code == 0, result.output
        payload = json.loads(result.stdout)
        assert payload == json.loads(out.read_text(encoding="utf-8"))
        assert payload["text"] == ["Z", "Z/4", "0"]
        assert "Report written to" in result.stderr

    def test_out_in_text_mode(self, tmp_path):
        """Text output still goes to the terminal when --out is given."""
        out = tmp_path / "homology.json"
        result = runner.invoke(app, ["homology", "--group", "cyclic:2", "--max-dim", "2", "--out", str(out)])
        assert result.exit_code == 0, result.output
        assert "H_1 = Z/2" in result.stdout
        assert json.loads(out.read_text(encoding="utf-8"))["groups"][1]["torsion"] == [2]

    @pytest.mark.parametrize(
        "args, message",
        [
            ([], "Pass either --group or --ses"),
            (["--group", "cyclic:2", "--ses", "z4.json"], "Pass only one"),
            (["--group", "cyclic:2", "--space", "twisted"], "--space twisted needs --ses"),
            (["--group", "cyclic:2", "--max-dim", "0"], "Invalid --max-dim"),
        ],
    )
    def test_usage_errors(self, args, message):
        """Conflicting or missing options exit with code 2."""
        result = runner.invoke(app, ["homology", *args])
        assert result.exit_code == 2
        assert message in result.output


class TestDemo:
    """Test the demo command."""

    def test_list(self):
        """--list names every bundled example."""
        result = runner.invoke(app, ["demo", "--list"])
        assert result.exit_code == 0
        for name in ("d8_center", "s3_split", "z4"):
            assert name in result.output

    def test_z4_walkthrough(self):
        """The Z/4 walkthrough shows Ψ and explains why Φ is skipped."""
        result = runner.invoke(app, ["demo", "--example", "z4"])
        assert result.exit_code == 0, result.output
        assert "Ψ[3|1] = ([1|1], [1|1])" in result.output
        assert "σ is not multiplicative; Φ not defined" in result.output
        assert "Φ[" not in result.output

    def test_leading_products_start_with_the_identity(self):
        """P_j multiplies the first j base entries; P_0 is the identity in the top level."""
        result = runner.invoke(app, ["demo", "-e", "z4", "-d", "2"])
        assert result.exit_code == 0, result.output
        lines = [line.strip() for line in result.output.splitlines()]
        assert "P_0 (level 2) = 0" in lines
        assert "P_1 (level 1) = 1" in lines
        assert "P_2 (level 0) = 0" in lines

    def test_split_walkthrough_by_prefix(self):
        """A unique prefix selects s3_split, whose walkthrough shows Φ."""
        result = runner.invoke(app, ["demo", "-e", "s3"])
        assert result.exit_code == 0, result.output
        assert "Φ[(c,t)|(c²,e)] = ([c|c], [t|e])" in result.output
        assert "Φ agrees with Ψ" in result.output

    def test_other_degree_uses_the_largest_ids(self):
        """Without a bundled simplex the demo uses the largest ids."""
        result = runner.invoke(app, ["demo", "-e", "z4", "-d", "1"])
        assert result.exit_code == 0, result.output
        assert "g = [3]" in result.output

    def test_unknown_example(self):
        """An unknown example exits with code 2."""
        result = runner.invoke(app, ["demo", "-e", "quaternion"])
        assert result.exit_code == 2
        assert "Unknown example" in result.output

    def test_ambiguous_prefix(self):
        """An ambiguous prefix is refused; an exact name wins over longer ones."""
        with pytest.raises(typer.Exit) as excinfo:
            resolve_example("a", ["ab", "ac"])
        assert excinfo.value.exit_code == 2
        assert resolve_example("ab", ["ab", "abc"]) == "ab"


class TestInitConfig:
    """Test the init-config command."""

    def test_writes_a_loadable_file(self, tmp_path):
        """init-config writes a file the other commands accept."""
        path = tmp_path / ".simpfib.toml"
        result = runner.invoke(app, ["init-config", "--path", str(path)])
        assert result.exit_code == 0
        assert path.exists()

        check = runner.invoke(app, ["homology", "--group", "cyclic:2", "--config", str(path)])
        assert check.exit_code == 0, check.output

    def test_keeps_existing_file_when_declined(self, tmp_path):
        """Declining the overwrite prompt keeps the old file."""
        path = tmp_path / ".simpfib.toml"
        path.write_text("# mine\n", encoding="utf-8")
        result = runner.invoke(app, ["init", "--path", str(path)], input="n\n")
        assert result.exit_code == 0
        assert "Cancelled." in result.output
        assert path.read_text(encoding="utf-8") == "# mine\n"


def test_module_entry_point(monkeypatch, capsys):
    """python -m simpfib runs the same app."""
    monkeypatch.setattr(sys, "argv", ["simpfib", "--version"])
    with pytest.raises(SystemExit) as excinfo:
        runpy.run_module("simpfib", run_name="__main__")
    assert excinfo.value.code == 0
    assert f"simpfib {__version__}" in capsys.readouterr().out
