"""End-to-end tests of the command line through main()."""

import json

import pytest

from src.config import settings
from src.main import build_parser, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    return code, json.loads(out)


class TestExitCodes:
    """Exit codes for each error class."""

    def test_success(self, capsys, fixtures_dir):
        code, report = run_json(capsys, "is-sos", str(fixtures_dir / "motzkin.json"))
        assert code == 0
        assert report["exit_code"] == 0
        assert report["result"]["sos"] is False

    def test_validation_error(self, capsys, fixtures_dir):
        code, report = run_json(capsys, "mediated", str(fixtures_dir / "odd_vertex.json"))
        assert code == 2
        assert report["success"] is False
        assert report["errors"][0]["error_type"] == "OddVertex"

    def test_not_sos_is_a_validation_error(self, capsys, fixtures_dir):
        code, report = run_json(capsys, "decompose", str(fixtures_dir / "motzkin.json"))
        assert code == 2
        assert report["errors"][0]["error_type"] == "NotSos"

    def test_budget_exceeded(self, capsys, fixtures_dir):
        code, report = run_json(
            capsys,
            "enumerate",
            str(fixtures_dir / "motzkin.json"),
            "--k",
            "3",
            "--max-box-points",
            "1",
        )
        assert code == 3
        assert report["errors"][0]["error_type"] == "BudgetExceeded"

    def test_witness_budget_exceeded(self, capsys, fixtures_dir):
        code, report = run_json(
            capsys,
            "witness",
            str(fixtures_dir / "standard_4.json"),
            "--k",
            "2",
            "--point",
            "2,1,1,0",
            "--max-box-points",
            "1",
        )
        assert code == 3
        assert report["errors"][0]["error_type"] == "BudgetExceeded"
        assert report["errors"][0]["step"] == "Witness"

    def test_theorem_precondition(self, capsys, fixtures_dir):
        code, report = run_json(
            capsys, "witness", str(fixtures_dir / "motzkin.json"), "--k", "1", "--point", "2,2,2"
        )
        assert code == 4
        assert report["errors"][0]["error_type"] == "KTooSmall"

    def test_missing_file(self, capsys, tmp_path):
        code, report = run_json(capsys, "mediated", str(tmp_path / "absent.json"))
        assert code == 2
        assert report["errors"][0]["step"] == "LoadDocument"


class TestCommands:
    """Report payloads of the individual commands."""

    def test_enumerate(self, capsys, fixtures_dir):
        code, report = run_json(capsys, "enumerate", str(fixtures_dir / "motzkin.json"))
        assert code == 0
        points = report["result"]["points"]
        assert len(points) == 10
        vertices = [p["point"] for p in points if p["vertex"]]
        assert vertices == [[0, 0, 6], [2, 4, 0], [4, 2, 0]]

    def test_mediated(self, capsys, fixtures_dir):
        code, report = run_json(capsys, "mediated", str(fixtures_dir / "motzkin.json"))
        assert code == 0
        assert report["result"]["maximal_set"] == [
            [0, 0, 6],
            [1, 2, 3],
            [2, 1, 3],
            [2, 4, 0],
            [3, 3, 0],
            [4, 2, 0],
        ]

    def test_witness(self, capsys, fixtures_dir):
        code, report = run_json(
            capsys, "witness", str(fixtures_dir / "motzkin.json"), "--k", "2", "--point", "4,4,4"
        )
        assert code == 0
        assert report["result"]["witness"] == {
            "target": [4, 4, 4],
            "z1": [6, 6, 0],
            "z2": [2, 2, 8],
            "path": "GreedyBead",
        }
        assert report["arguments"] == {"k": 2, "point": [4, 4, 4]}

    def test_verify_theorem(self, capsys, fixtures_dir):
        code, report = run_json(
            capsys, "verify-theorem", str(fixtures_dir / "standard_4.json"), "--k", "2"
        )
        assert code == 0
        assert report["result"]["ok"] is True
        assert report["result"]["lattice_point_count"] == 35
        assert report["result"]["failures"] == []

    def test_demo_horn_identities(self, capsys):
        code, report = run_json(capsys, "demo", "horn", "--check-identity")
        assert code == 0
        assert report["result"]["identity"] is True
        assert report["result"]["cyclic_symmetric"] is True
        assert report["result"]["restriction_identity"] is True

    def test_demo_default_seed(self, capsys):
        code, report = run_json(capsys, "demo", "horn", "--samples", "20")
        assert code == 0
        assert report["arguments"]["seed"] == 0
        assert report["result"]["sampling"]["seed"] == 0


class TestOutput:
    """Output formats and stability."""

    def test_byte_identical_reruns(self, capsys, fixtures_dir):
        argv = ("decompose", str(fixtures_dir / "hurwitz.json"))
        _, first = run_cli(capsys, *argv)
        _, second = run_cli(capsys, *argv)
        assert first == second

    def test_timing_is_opt_in(self, capsys, fixtures_dir):
        _, report = run_json(capsys, "mediated", str(fixtures_dir / "hurwitz.json"))
        assert "timing" not in report
        _, timed = run_json(capsys, "mediated", str(fixtures_dir / "hurwitz.json"), "--timing")
        assert "LoadDocument" in timed["timing"]["steps"]

    def test_input_digest(self, capsys, fixtures_dir):
        _, report = run_json(capsys, "is-sos", str(fixtures_dir / "hurwitz.json"))
        assert len(report["input_digest"]) == 16

    def test_text_output(self, capsys, fixtures_dir):
        code, out = run_cli(
            capsys, "is-sos", str(fixtures_dir / "motzkin.json"), "--output", "text"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "command: is-sos"
        assert "status: ok (exit 0)" in lines
        assert "result.sos: False" in lines

    def test_text_output_shows_errors(self, capsys, fixtures_dir):
        code, out = run_cli(
            capsys, "mediated", str(fixtures_dir / "ragged.json"), "--output", "text"
        )
        assert code == 2
        assert "error [LoadDocument] RaggedInput:" in out


class TestParser:
    """Argument parsing."""

    def test_bad_point(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["witness", "u.json", "--k", "2", "--point", "a,b"])

    def test_k_must_be_positive(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["enumerate", "u.json", "--k", "0"])

    def test_bare_samples_flag_uses_default(self):
        args = build_parser().parse_args(["demo", "horn", "--samples"])
        assert args.samples == settings.sampling.default_samples
