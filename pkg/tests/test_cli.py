import io
import json

import pytest

from line_dispersal.cli import build_parser, run


@pytest.fixture
def instance_file(tmp_path):
    def write(text, name="inst.txt"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write


def _json_out(capsys):
    return json.loads(capsys.readouterr().out)


def test_solve_plain_instance(instance_file, capsys):
    path = instance_file("# two points\n2\n0 1\n")
    assert run(["solve", path]) == 0
    assert _json_out(capsys) == {
        "delta": "2",
        "total_cost": "1",
        "positions": ["-1", "1"],
        "displacements": ["-1", "0"],
    }


def test_solve_decimal_instance_with_chains(instance_file, capsys):
    path = instance_file("2\n0 3 3.5\n")
    assert run(["solve", path, "--chains", "--check"]) == 0
    payload = _json_out(capsys)
    assert payload["total_cost"] == "1.5"
    assert payload["positions"] == ["0", "2", "4"]
    assert payload["chains"] == [{"start": 0, "end": 2, "L": 1, "O": 1, "R": 1}]


def test_solve_reports_input_order(instance_file, capsys):
    path = instance_file("2\n1 0\n")
    assert run(["solve", path, "--out", "plain"]) == 0
    assert capsys.readouterr().out.splitlines() == ["delta 2", "total_cost 1", "1 0", "-1 -1"]


def test_solve_is_byte_identical_across_runs(instance_file, capsys):
    path = instance_file("3\n5 1 4 1 5 9 2 6\n")
    run(["solve", path])
    first = capsys.readouterr().out
    run(["solve", path])
    assert capsys.readouterr().out == first


def test_solve_from_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("1\n5 5 5\n"))
    assert run(["solve", "-"]) == 0
    assert _json_out(capsys)["positions"] == ["4", "5", "6"]


def test_solve_csv_and_json(instance_file, capsys):
    csv_path = instance_file("id,position\na,0\nb,1\n", name="inst.csv")
    assert run(["solve", csv_path, "--delta", "2"]) == 0
    assert _json_out(capsys)["positions"] == ["-1", "1"]

    json_path = instance_file(json.dumps({"delta": "2", "points": ["0", "4", "4.5"]}), name="inst.json")
    assert run(["solve", json_path]) == 0
    assert _json_out(capsys)["positions"] == ["0", "2.5", "4.5"]


@pytest.mark.parametrize("text, name", [
    ("0\n1 2\n", "inst.txt"),
    ("2\n1 x\n", "inst.txt"),
    ("", "inst.txt"),
    ("position\n1\n", "inst.csv"),
    ('{"delta": 2, "points": [1]}', "inst.json"),
    ("{not json", "inst.json"),
    ('{"delta": "2", "points": 5}', "inst.json"),
    ('{"delta": "2", "points": "01"}', "inst.json"),
])
def test_solve_input_errors(instance_file, text, name, capsys):
    assert run(["solve", instance_file(text, name)]) == 3
    assert "error:" in capsys.readouterr().err


def test_solve_missing_file(tmp_path):
    assert run(["solve", str(tmp_path / "absent.txt")]) == 3


def test_solve_overflow(instance_file):
    path = instance_file("1\n0 1" + "0" * 38 + "\n")
    assert run(["solve", path]) == 4


def test_trace_and_replay(instance_file, tmp_path, capsys):
    path = instance_file("2\n0 3 4 4 9\n")
    trace = tmp_path / "run" / "trace.jsonl"
    assert run(["solve", path, "--trace", str(trace)]) == 0
    solved = _json_out(capsys)
    records = [json.loads(line) for line in trace.read_text().splitlines()]
    assert {"iter", "kind", "chain_start", "amount", "merged_with_start"} == set(records[0])
    assert run(["replay", path, str(trace)]) == 0
    replayed = _json_out(capsys)
    assert replayed["positions"] == solved["positions"]
    assert replayed["total_cost"] == solved["total_cost"]


def test_replay_rejects_broken_trace(instance_file, tmp_path):
    path = instance_file("2\n0 1\n")
    trace = tmp_path / "trace.jsonl"
    trace.write_text('{"iter": 0, "kind": "teleport", "chain_start": 0}\n')
    assert run(["replay", path, str(trace)]) == 3
    trace.write_text('{"kind": "shift"}\n')
    assert run(["replay", path, str(trace)]) == 3


def test_replay_is_hidden_from_help():
    assert "replay" not in build_parser().format_help()


def test_gen_is_deterministic(tmp_path, capsys):
    args = ["gen", "--n", "6", "--range", "50", "--delta", "1.5", "--seed", "3"]
    assert run(args) == 0
    first = capsys.readouterr().out
    assert run(args) == 0
    assert capsys.readouterr().out == first
    lines = [line for line in first.splitlines() if not line.startswith("#")]
    assert lines[0] == "1.5"
    assert len(lines) == 7

    out = tmp_path / "gen.txt"
    assert run(args + ["--out", str(out)]) == 0
    assert out.read_text() == first
    assert run(["solve", str(out), "--check"]) == 0


def test_gen_rejects_bad_spec():
    assert run(["gen", "--n", "5", "--range", "10", "--delta", "1", "--family", "adversarial_single_chain"]) == 2
    assert run(["gen", "--n", "5", "--range", "0", "--delta", "1"]) == 2


def test_audit_subcommand(instance_file, capsys):
    inst = instance_file("2\n1 0\n")
    good = instance_file("1 -1\n", name="good.txt")
    assert run(["audit", inst, good]) == 0
    assert _json_out(capsys)["independent"] is True

    bad = instance_file("1 0\n", name="bad.txt")
    assert run(["audit", inst, bad]) == 1
    assert _json_out(capsys)["independent"] is False

    short = instance_file("1\n", name="short.txt")
    assert run(["audit", inst, short]) == 3


def test_verify_subcommand(capsys):
    assert run(["verify", "--oracle", "naive", "--count", "8", "--nmax", "9", "--seed", "5"]) == 0
    report = _json_out(capsys)
    assert report["mismatches"] == 0
    assert report["count"] == 8
    assert run(["verify", "--oracle", "exhaustive", "--nmax", "15"]) == 2


def test_bench_subcommand(capsys):
    assert run(["bench", "--sizes", "10,40", "--families", "uniform", "--repeats", "1", "--out", "json"]) == 0
    report = _json_out(capsys)
    assert report["ok"] is True
    assert [row["n"] for row in report["rows"]] == [10, 40]
    assert run(["bench", "--sizes", "16", "--families", "uniform", "--repeats", "1"]) == 0
    assert "heap_ops" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [[], ["teleport"], ["verify"], ["bench", "--sizes", "a,b"],
                                  ["bench", "--families", "spiral"],
                                  ["--log-level", "loud", "solve", "inst.txt"]])
def test_usage_errors(argv):
    assert run(argv) == 2


def test_help_exits_cleanly():
    assert run(["--help"]) == 0


def test_log_level_is_case_insensitive(instance_file, capsys):
    path = instance_file("2\n0 1\n")
    assert run(["--log-level", "debug", "solve", path]) == 0
    assert _json_out(capsys)["total_cost"] == "1"


def test_unknown_log_level_in_environment(monkeypatch, instance_file):
    monkeypatch.setattr("line_dispersal.config.LOG_LEVEL", "LOUD")
    assert run(["solve", instance_file("2\n0 1\n")]) == 2
