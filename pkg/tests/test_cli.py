import csv
import importlib
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bellkit.bell import bell
from bellkit.cli import main
from bellkit.polyalgebra import Polynomial
from bellkit.reference import PUBLISHED_B7
from bellkit.render import from_json_obj, parse_text, render_json, render_latex, render_text
from oracles import bell_two_direct


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestRender:
    def test_text(self):
        assert render_text(parse_text("378*x1^5*x2^2 + 84*x1^6*x3")) == "378*x1^5*x2^2 + 84*x1^6*x3"
        assert render_text(Polynomial.zero()) == "0"
        assert render_text(Polynomial.one()) == "1"
        assert render_text(parse_text("x1^2 - x2^2")) == "-x2^2 + x1^2"

    def test_latex(self):
        assert render_latex(parse_text("28*x1^6*x2")) == "28 x_{1}^{6} x_{2}"
        assert render_latex(Polynomial.var(1, Fraction(-1, 2))) == "-\\frac{1}{2} x_{1}"

    @pytest.mark.parametrize("n", sorted(PUBLISHED_B7))
    def test_published_text_round_trip(self, n):
        p = parse_text(PUBLISHED_B7[n])
        assert parse_text(render_text(p)) == p

    @given(st.dictionaries(st.lists(st.integers(0, 3), max_size=4).map(tuple), st.integers(-10**30, 10**30), max_size=6))
    def test_json_round_trip_is_byte_identical(self, terms):
        p = Polynomial(terms.items())
        s = render_json(p, 3, 2)
        assert from_json_obj(json.loads(s)) == p
        assert render_json(from_json_obj(json.loads(s)), 3, 2) == s


class TestBellCommand:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "bell", "--n", "8", "--k", "7", "--format", "text")
        assert (code, out) == (0, "28*x1^6*x2\n")

    def test_latex(self, capsys):
        assert run(capsys, "bell", "--n", "3", "--k", "3", "--format", "latex")[:2] == (0, "x_{1}^{3}\n")

    def test_json(self, capsys):
        code, out, _ = run(capsys, "bell", "--n", "4", "--k", "2", "--format", "json")
        obj = json.loads(out)
        assert code == 0 and (obj["n"], obj["k"]) == (4, 2)
        # canonical order puts x2^2 (no x1) ahead of x1*x3
        assert obj["terms"] == [
            {"coeff": "3", "exps": {"2": 2}},
            {"coeff": "4", "exps": {"1": 1, "3": 1}},
        ]
        assert render_json(from_json_obj(obj), 4, 2) == out.strip()

    @pytest.mark.parametrize("algo", ["partition", "recurrence", "convolution", "closed_form", "series_oracle"])
    def test_every_algorithm(self, capsys, algo):
        assert run(capsys, "bell", "--n", "10", "--k", "7", "--algo", algo)[1].strip() == render_text(
            parse_text(PUBLISHED_B7[10])
        )

    def test_invalid_index_is_usage_error(self, capsys):
        code, out, err = run(capsys, "bell", "--n", "3", "--k", "5")
        assert code == 2 and out == "" and "n >= k" in err

    def test_max_n_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("BELLKIT_MAX_N", "10")
        code, out, err = run(capsys, "bell", "--n", "11", "--k", "2")
        assert code == 2 and "BELLKIT_MAX_N" in err and out == ""

    def test_argparse_errors_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["bell", "--n", "x", "--k", "1"])
        assert exc.value.code == 2


class TestStirlingCommand:
    @pytest.mark.parametrize("n,k,expected", [(7, 2, "63"), (5, 5, "1"), (12, 7, "627396")])
    def test_values(self, capsys, n, k, expected):
        assert run(capsys, "stirling", "--n", str(n), "--k", str(k))[:2] == (0, expected + "\n")

    @pytest.mark.parametrize("method", ["explicit", "nested", "closed", "bell"])
    def test_methods(self, capsys, method):
        assert run(capsys, "stirling", "--n", "9", "--k", "4", "--method", method)[1] == "7770\n"

    def test_json(self, capsys):
        out = run(capsys, "stirling", "--n", "7", "--k", "2", "--format", "json")[1]
        assert json.loads(out) == {"n": 7, "k": 2, "method": "explicit", "value": "63"}

    def test_unsupported_closed_form(self, capsys):
        assert run(capsys, "stirling", "--n", "9", "--k", "7", "--method", "closed")[0] == 2


class TestTableCommand:
    def test_published_rows(self, capsys):
        code, out, _ = run(capsys, "table", "--n-range", "8..10", "--k", "7")
        lines = out.splitlines()
        assert code == 0 and len(lines) == 3
        assert [parse_text(l) for l in lines] == [parse_text(PUBLISHED_B7[n]) for n in (8, 9, 10)]

    def test_single(self, capsys):
        assert run(capsys, "table", "--n-range", "5..5", "--k", "5")[1] == "x1^5\n"

    def test_k2_rows(self, capsys):
        lines = run(capsys, "table", "--n-range", "2..6", "--k", "2")[1].splitlines()
        assert [parse_text(l) for l in lines] == [bell_two_direct(n) for n in range(2, 7)]

    def test_latex_labels(self, capsys):
        out = run(capsys, "table", "--n-range", "8..8", "--k", "7", "--format", "latex")[1]
        assert out == "B_{8,7} = 28 x_{1}^{6} x_{2}\n"

    def test_json(self, capsys):
        rows = json.loads(run(capsys, "table", "--n-range", "2..4", "--k", "2", "--format", "json")[1])
        assert [from_json_obj(r) for r in rows] == [bell(n, 2) for n in (2, 3, 4)]

    def test_bad_range(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["table", "--n-range", "9..3", "--k", "2"])
        assert exc.value.code == 2


class TestVerifyCommand:
    def test_max_n_1(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-n", "1")
        assert code == 0 and "all checks passed" in out

    def test_max_n_13_includes_published(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-n", "13")
        assert code == 0 and "published polynomials compared: 6" in out

    def test_parallel_matches_serial(self, capsys):
        serial = run(capsys, "verify", "--max-n", "9")[1]
        parallel = run(capsys, "verify", "--max-n", "9", "--jobs", "2")[1]
        assert serial == parallel

    def test_mismatch_exits_1(self, capsys, monkeypatch):
        bell_mod = importlib.import_module("bellkit.bell")

        real = bell_mod._DISPATCH[bell_mod.AlgorithmId.RECURRENCE]
        broken = lambda n, k: real(n, k) + (Polynomial.var(1) if (n, k) == (4, 2) else 0)
        monkeypatch.setitem(bell_mod._DISPATCH, bell_mod.AlgorithmId.RECURRENCE, broken)
        code, out, _ = run(capsys, "verify", "--max-n", "5")
        assert code == 1
        assert "first mismatch at n=4 k=2 [five_way]" in out and "recurrence" in out

    def test_zero_is_usage_error(self, capsys):
        assert run(capsys, "verify", "--max-n", "0")[0] == 2


class TestBenchCommand:
    def test_rows_and_digests(self, capsys):
        code, out, _ = run(capsys, "bench", "--max-n", "13", "--k-list", "7")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0 and len(rows) == 30
        assert out.splitlines()[0] == "n,k,algo,term_count,wall_time_ns,digest"
        assert [(int(r["n"]), r["algo"]) for r in rows[:5]] == [
            (8, a) for a in ("partition", "recurrence", "convolution", "closed_form", "series_oracle")
        ]
        group = {r["digest"] for r in rows if r["n"] == "12"}
        assert len(group) == 1
        assert all(int(r["wall_time_ns"]) > 0 for r in rows)

    def test_multiple_k_ordering(self, capsys):
        rows = list(csv.DictReader(io.StringIO(run(capsys, "bench", "--max-n", "5", "--k-list", "3,2", "--repetitions", "2")[1])))
        keys = [(int(r["n"]), int(r["k"])) for r in rows]
        assert keys == sorted(keys) and len(rows) == 5 * 5

    def test_digest_mismatch_exits_1(self, capsys, monkeypatch):
        bell_mod = importlib.import_module("bellkit.bell")

        monkeypatch.setitem(bell_mod._DISPATCH, bell_mod.AlgorithmId.PARTITION, lambda n, k: Polynomial.var(1))
        code, _, err = run(capsys, "bench", "--max-n", "4", "--k-list", "2")
        assert code == 1 and "digest mismatch" in err

    def test_repetitions_validated(self, capsys):
        assert run(capsys, "bench", "--max-n", "4", "--k-list", "2", "--repetitions", "0")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bellkit", "bell", "--n", "9", "--k", "7"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "378*x1^5*x2^2 + 84*x1^6*x3\n" and proc.stderr == ""
