"""The command-line front end: report shapes, determinism, exit codes."""

import json

import pytest

from a6k3.cli import COMMANDS, REPORT_VERSION, build_report, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_all_json(capsys):
    code, out = run_cli(capsys, "all", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["version"] == REPORT_VERSION
    assert report["verdict"] == "M10_2"
    assert all(check["status"] == "pass" for check in report["checks"])
    for check in report["checks"]:
        assert {"id", "paper_ref", "status", "witnesses", "axioms_used"} <= set(check)


def test_output_is_deterministic(capsys):
    _, first = run_cli(capsys, "all", "--format", "json")
    _, second = run_cli(capsys, "all", "--format", "json")
    assert first == second
    _, t1 = run_cli(capsys, "all", "--format", "text")
    _, t2 = run_cli(capsys, "all", "--format", "text")
    assert t1 == t2


def test_decompose_text(capsys):
    code, out = run_cli(capsys, "decompose", "--format", "text")
    assert code == 0
    assert "multiplicity vector: (1, 1, 0, 0, 1, 0)" in out


def test_chartab_text(capsys):
    code, out = run_cli(capsys, "chartab", "--format", "text")
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("chi")]
    assert len(lines) == 7
    header = next(l for l in out.splitlines() if "1A" in l)
    assert header.split() == ["1A", "2A", "3A", "3B", "4A", "5A", "5B"]


def test_exclude_verdict(capsys):
    code, out = run_cli(capsys, "exclude", "--format", "text")
    assert code == 0
    assert "VERDICT: M10_2" in out


def test_groups_and_lattice(capsys):
    for cmd in ("groups", "lattice"):
        code, out = run_cli(capsys, cmd, "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["verdict"] is None
        assert all(check["status"] == "pass" for check in report["checks"])


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out = run_cli(capsys, "lattice", "--format", "json", "--out", str(target))
    assert code == 0
    assert out == ""
    data = json.loads(target.read_text())
    assert data["version"] == REPORT_VERSION


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        main(["all", "--format", "yaml"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_report_commands_cover_all_stages():
    assert set(COMMANDS) == {"all", "groups", "chartab", "decompose", "exclude", "lattice"}
    report = build_report("all")
    ids = [check["id"] for check in report["checks"]]
    assert ids == [
        "groups.tower",
        "groups.overgroups",
        "groups.m10_coset",
        "ext.candidates",
        "ext.structure",
        "chartab.a6",
        "chartab.prime_stability",
        "lefschetz.rank",
        "decompose.solve",
        "exclude.sign_cases",
        "exclude.pipeline",
        "exclude.free_order4",
        "lattice.forms",
    ]


def test_verbose_goes_to_stderr(capsys):
    code = main(["lattice", "--format", "json", "-v"])
    captured = capsys.readouterr()
    assert code == 0
    json.loads(captured.out)  # stdout stays parseable
