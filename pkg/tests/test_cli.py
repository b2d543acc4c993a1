"""Harness behaviour: ranges, selection, report formats, exit codes."""

import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from catb2 import BiPoly, clear_caches
from catb2 import constructions as cons
from catb2.cli import SweepConfig, UsageError, build_tasks, main, parse_checks, parse_range, run_verify


def _cfg(**kwargs) -> SweepConfig:
    base = dict(
        i_range=(0, 1),
        m_range=(0, 1),
        k_extra=1,
        checks=("theorem",),
        format="text",
        jobs=1,
    )
    base.update(kwargs)
    return SweepConfig(**base)


def _verify_lines(cfg: SweepConfig) -> tuple[int, list[str]]:
    out = io.StringIO()
    code = run_verify(cfg, out=out)
    return code, out.getvalue().splitlines()


def test_parse_range():
    assert parse_range("0..4") == (0, 4)
    assert parse_range("3") == (3, 3)
    with pytest.raises(UsageError):
        parse_range("a..b")


def test_range_validation():
    with pytest.raises(UsageError):
        _cfg(i_range=(2, 1))
    with pytest.raises(UsageError):
        _cfg(m_range=(-1, 0))
    with pytest.raises(UsageError):
        _cfg(jobs=0)


def test_parse_checks():
    assert parse_checks("all")[0] == "expansion"
    assert parse_checks("saito,theorem") == ("theorem", "saito")  # registry order
    with pytest.raises(UsageError):
        parse_checks("nosuch")


def test_verify_text_report_grid():
    code, lines = _verify_lines(_cfg(i_range=(0, 2), m_range=(0, 2)))
    assert code == 0
    assert len(lines) == 9
    assert lines[0] == "CHECK=theorem i=0 m=0 RESULT=PASS"
    assert all(line.endswith("RESULT=PASS") for line in lines)


def test_verify_skip_lines():
    code, lines = _verify_lines(_cfg(checks=("prop1",), i_range=(0, 1), m_range=(0, 0)))
    assert code == 0  # skips do not fail the run
    assert lines[0] == "CHECK=prop1 i=0 m=0 RESULT=SKIP"
    assert lines[1] == "CHECK=prop1 i=1 m=0 RESULT=PASS"


def test_verify_vrec_skip_at_m0():
    _, lines = _verify_lines(_cfg(checks=("v-recurrence",), m_range=(0, 1)))
    assert "CHECK=v-recurrence i=0 m=0 RESULT=SKIP" in lines
    assert "CHECK=v-recurrence i=0 m=1 RESULT=PASS" in lines


def test_verify_json_records_parse():
    cfg = _cfg(checks=("saito",), i_range=(0, 0), m_range=(0, 0), format="json")
    code, lines = _verify_lines(cfg)
    assert code == 0
    assert len(lines) == 1
    record = json.loads(lines[0])
    assert record == {
        "check": "saito",
        "params": {"m": 0},
        "result": "PASS",
        "C": "-1/3",
    }


def test_verify_json_prop3_carries_constants():
    cfg = _cfg(checks=("prop3",), i_range=(0, 0), m_range=(0, 0), format="json")
    _, lines = _verify_lines(cfg)
    record = json.loads(lines[0])
    assert record["A"] == "2" and record["B"] == "2"


def test_lemma2_lines_use_its_parameter_names():
    _, lines = _verify_lines(_cfg(checks=("lemma2",), i_range=(1, 1), m_range=(2, 2)))
    assert lines == ["CHECK=lemma2 a=1 b=2 RESULT=PASS"]


def test_task_order_is_deterministic():
    cfg = _cfg(checks=("theorem", "saito"), i_range=(0, 1), m_range=(0, 1))
    assert build_tasks(cfg) == build_tasks(cfg)
    names = [task[1] for task in build_tasks(cfg)]
    assert names == ["theorem"] * 4 + ["saito"] * 2


def test_jobs_do_not_change_output():
    cfg1 = _cfg(i_range=(0, 2), m_range=(0, 2), checks=("parity", "degree"))
    cfg2 = _cfg(i_range=(0, 2), m_range=(0, 2), checks=("parity", "degree"), jobs=3)
    assert _verify_lines(cfg1) == _verify_lines(cfg2)


def test_exit_one_on_failure(monkeypatch):
    original = cons.integral_poly_coeff

    def fake(i: int, m: int, k: int) -> Fraction:
        value = original(i, m, k)
        return value + 1 if (i, m, k) == (1, 1, 0) else value

    clear_caches()
    monkeypatch.setattr(cons, "integral_poly_coeff", fake)
    try:
        code, lines = _verify_lines(
            _cfg(checks=("expansion",), i_range=(1, 1), m_range=(1, 1))
        )
        assert code == 1
        assert lines[0].startswith("CHECK=expansion i=1 m=1 RESULT=FAIL WITNESS=")
        witness = lines[0].split("WITNESS=", 1)[1]
        assert BiPoly.from_text(witness)
    finally:
        monkeypatch.undo()
        clear_caches()


def test_main_unknown_check_is_usage_error(capsys):
    assert main(["verify", "--checks", "nosuch"]) == 2
    assert "unknown checks" in capsys.readouterr().err


def test_main_bad_range_is_usage_error(capsys):
    assert main(["verify", "--i", "5..1"]) == 2
    capsys.readouterr()


def test_main_verify_small_grid(capsys):
    code = main(["verify", "--i", "0..0", "--m", "0..0", "--checks", "degree"])
    captured = capsys.readouterr()
    assert code == 0
    assert captured.out == "CHECK=degree i=0 m=0 RESULT=PASS\n"


def test_basis_text_base_case(capsys):
    assert main(["basis", "--m", "0"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == [
        "f0=1 * x^1",
        "f1=1/3 * x^3 + -1/3 * x^1",
        "C=-1/3",
        "A0=2",
        "A1=2/3",
        "B0=2",
        "B1=2/3",
    ]


def test_basis_m1_constant(capsys):
    assert main(["basis", "--m", "1"]) == 0
    assert "C=4/105" in capsys.readouterr().out.splitlines()


def test_basis_json_round_trips(capsys):
    assert main(["basis", "--m", "1", "--format", "json"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert list(record) == ["f0", "f1", "C", "A0", "A1", "B0", "B1"]
    f0 = BiPoly.from_text(record["f0"])
    f1 = BiPoly.from_text(record["f1"])
    assert f0.to_text() == record["f0"]
    assert f1.to_text() == record["f1"]
    assert Fraction(record["C"]) == Fraction(4, 105)


def test_basis_rejects_negative_m(capsys):
    assert main(["basis", "--m", "-1"]) == 2
    capsys.readouterr()


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "catb2", "verify", "--i", "0..1", "--m", "0..0",
         "--checks", "parity", "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    records = [json.loads(line) for line in proc.stdout.splitlines()]
    assert [r["params"]["i"] for r in records] == [0, 1]


def test_console_usage_error_exit_code():
    proc = subprocess.run(
        [sys.executable, "-m", "catb2", "verify", "--checks", "nosuch"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
