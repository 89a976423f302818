"""CLI behavior: exit codes, report files, determinism, rendering."""

import json
from pathlib import Path

import pytest

from qedkit.cli import main, parse_instance_file

GOLDEN = Path(__file__).parent / "golden"


def read_json(path: Path):
    return json.loads(path.read_text())


def test_verify_single_problem(tmp_path, capsys):
    code = main(["verify", "p42", "-o", str(tmp_path)])
    assert code == 0
    report = read_json(tmp_path / "p42.json")
    assert report["problem"] == "p42"
    assert report["status"] == "pass"
    distances = next(c["witness"] for c in report["certificates"]
                     if "15" in c["claim"])
    assert distances.count(",") == 14  # fifteen listed integer distances
    out = capsys.readouterr().out
    assert "✓ p42" in out


def test_verify_unknown_problem_usage_error(tmp_path):
    with pytest.raises(SystemExit) as exit_info:
        main(["verify", "p99", "-o", str(tmp_path)])
    assert exit_info.value.code == 2


def test_verify_exact_subset_json_mode(tmp_path, capsys):
    code = main(["verify", "p52", "p61", "--json", "-o", str(tmp_path)])
    assert code == 0
    summary = json.loads(capsys.readouterr().out)
    assert [r["problem"] for r in summary["results"]] == ["p52", "p61"]
    assert summary["all_pass"] is True
    assert set(summary["elapsed_ms"]) == {"p52", "p61"}
    on_disk = read_json(tmp_path / "summary.json")
    assert on_disk["results"] == summary["results"]


def test_reports_are_deterministic_across_runs(tmp_path):
    ids = ["p12", "p22", "p45"]
    main(["verify", *ids, "-o", str(tmp_path / "a")])
    main(["verify", *ids, "-o", str(tmp_path / "b")])
    for pid in ids:
        first = (tmp_path / "a" / f"{pid}.json").read_bytes()
        second = (tmp_path / "b" / f"{pid}.json").read_bytes()
        assert first == second


def test_parallel_matches_serial(tmp_path):
    ids = ["p10", "p38", "p52", "p61"]
    main(["verify", *ids, "-o", str(tmp_path / "serial")])
    main(["verify", *ids, "--jobs", "4", "-o", str(tmp_path / "par")])
    for pid in ids:
        assert ((tmp_path / "serial" / f"{pid}.json").read_bytes()
                == (tmp_path / "par" / f"{pid}.json").read_bytes())


def test_figures_flag_writes_svgs(tmp_path):
    code = main(["verify", "p22", "--figures", "-o", str(tmp_path)])
    assert code == 0
    report = read_json(tmp_path / "p22.json")
    assert report["figures"], "expected a rendered figure path"
    fig = Path(report["figures"][0])
    assert fig.exists() and fig.suffix == ".svg"


def test_render_constructions(tmp_path):
    out = tmp_path / "p10.svg"
    assert main(["render", "p10", "-o", str(out)]) == 0
    text = out.read_text()
    assert text.startswith('<?xml version="1.0"')
    assert "<svg" in text and "</svg>" in text


def test_render_golden_p22(tmp_path):
    out = tmp_path / "p22.svg"
    assert main(["render", "p22", "-o", str(out)]) == 0
    assert out.read_text() == (GOLDEN / "p22.svg").read_text()


def test_render_non_construction_exits_2(tmp_path):
    assert main(["render", "p61", "-o", str(tmp_path / "no.svg")]) == 2
    assert main(["render", "p19", "-o", str(tmp_path / "no2.svg")]) == 2


def test_render_with_instance_file(tmp_path):
    inst = {
        "params": {
            "c": {"circle": {"center": ["0", "0"], "radius_sq": "4"}},
            "A": {"point": ["-2", "0"]},
            "B": {"point": ["2", "0"]},
            "M": {"point": ["1", "3"]},
        }
    }
    inst_file = tmp_path / "instance.json"
    inst_file.write_text(json.dumps(inst))
    out = tmp_path / "custom.svg"
    assert main(["render", "p22", "--instance", str(inst_file), "-o", str(out)]) == 0
    assert "<svg" in out.read_text()


def test_parse_instance_file_kinds(tmp_path):
    from qedkit.euclid import Circle, Line, Point
    payload = {
        "params": {
            "P": {"point": ["3/5", "-2"]},
            "l": {"line": ["1", "0", "-3"]},
            "c": {"circle": {"center": ["0", "0"], "radius_sq": "9/4"}},
        }
    }
    path = tmp_path / "inst.json"
    path.write_text(json.dumps(payload))
    objs = parse_instance_file(path)
    assert isinstance(objs["P"], Point)
    assert isinstance(objs["l"], Line)
    assert isinstance(objs["c"], Circle)
    from fractions import Fraction
    assert objs["P"].x.to_fraction() == Fraction(3, 5)


def test_list_shows_all_problems(capsys):
    assert main(["list"]) == 0
    lines = [l for l in capsys.readouterr().out.splitlines() if l.strip()]
    assert len(lines) == 21
    kinds = {line.split()[1] for line in lines}
    assert kinds == {"exact-certificate", "construction", "oracle"}
    p65_line = next(l for l in lines if l.startswith("p65"))
    assert "exact-certificate" in p65_line
    p31_line = next(l for l in lines if l.startswith("p31"))
    assert "oracle" in p31_line


def test_failing_problem_yields_exit_1(tmp_path, monkeypatch):
    import qedkit.problems.registry as registry
    from qedkit.problems.report import Certificate

    def failing_body(seed, figures_dir):
        return [Certificate("forced failure", "exact", "testing exit code",
                            False)], []

    monkeypatch.setitem(registry.PROBLEMS, "p42",
                        ("tampered", "exact-certificate", failing_body))
    code = main(["verify", "p42", "-o", str(tmp_path)])
    assert code == 1
    assert read_json(tmp_path / "p42.json")["status"] == "fail"


def test_error_is_recorded_without_aborting_batch(tmp_path, monkeypatch):
    import qedkit.problems.registry as registry

    def exploding_body(seed, figures_dir):
        raise RuntimeError("synthetic failure")

    monkeypatch.setitem(registry.PROBLEMS, "p42",
                        ("tampered", "exact-certificate", exploding_body))
    code = main(["verify", "p42", "p61", "-o", str(tmp_path)])
    assert code == 1
    assert read_json(tmp_path / "p42.json")["status"] == "error"
    assert "synthetic failure" in read_json(tmp_path / "p42.json")["error"]
    assert read_json(tmp_path / "p61.json")["status"] == "pass"
