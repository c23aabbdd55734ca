import json
import os

import pytest
from hypothesis import given, strategies as st

from qkzstrip import cache
from qkzstrip.cli import main
from qkzstrip.exactalg import BiPoly, LaurentScalar, TauPoly
from qkzstrip.linkpat import enumerate_patterns
from qkzstrip.serialize import (
    ResultTable, dec_bi, dec_laurent, dec_pattern, dec_tau, enc_bi, enc_laurent, enc_pattern, enc_tau,
)

big = st.integers(-10**30, 10**30)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@given(st.lists(big, max_size=8))
def test_tau_roundtrip(c):
    p = TauPoly(c)
    assert dec_tau(json.loads(json.dumps(enc_tau(p)))) == p


@given(st.lists(st.lists(big, max_size=4), max_size=4))
def test_bipoly_roundtrip(rows):
    p = BiPoly(rows)
    assert dec_bi(enc_bi(p)) == p


@given(st.dictionaries(st.integers(-20, 20), big, max_size=6))
def test_laurent_roundtrip(terms):
    x = LaurentScalar.from_terms(terms)
    assert dec_laurent(enc_laurent(x)) == x


def test_pattern_roundtrip():
    for N in range(1, 9):
        for p in enumerate_patterns(N):
            assert dec_pattern(enc_pattern(p)) == p


@pytest.mark.parametrize("argv", [
    ["lp", "list", "--size", "5"], ["lp", "matrix", "--n", "3", "--inverse"], ["psi", "--size", "6"],
    ["sumrule", "--n", "2", "--parity", "odd"], ["verify", "--max-n", "1"], ["oracle", "qkz", "--n", "2"],
])
def test_table_roundtrip(capsys, no_cache, argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    t = ResultTable.loads(out)
    assert ResultTable.loads(t.dumps()) == t
    assert t.dumps() == out
    assert t.schema_version == 1


def test_psi_n4(capsys, no_cache):
    code, out, _ = run(capsys, "psi", "--size", "4", "--format", "json")
    rows = json.loads(out)["payload"]["rows"]
    assert code == 0
    assert [r[5] for r in rows] == ["tau", "1 + tau^2"]


def test_psi_tau_at(capsys, no_cache):
    code, out, _ = run(capsys, "psi", "--size", "4", "--tau-at", "1/3", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1].endswith(",1/3")
    assert out.splitlines()[2].endswith(",10/9")


def test_sumrule_values(capsys, no_cache):
    code, out, _ = run(capsys, "sumrule", "--n", "3", "--parity", "even", "--t", "1", "--format", "json")
    assert code == 0
    assert all(r[3] == "26" for r in json.loads(out)["payload"]["rows"])
    code, out, _ = run(capsys, "sumrule", "--n", "1", "--parity", "odd")
    assert "tau + t" in out and "1 + tau*t" in out and "complementary" in out


@pytest.mark.parametrize("argv", [
    ["psi", "--size", "0"], ["psi", "--size", "99"], ["psi", "--size", "x"], ["sumrule", "--n", "2"],
    ["sumrule", "--n", "2", "--parity", "even", "--t", "2"], ["verify", "--suite", "nope"],
    ["oracle", "vsasm", "--size", "4"], ["oracle", "nilp", "--b", "1", "4"], ["bogus"], [],
    ["psi", "--size", "4", "--jobs", "0"],
])
def test_usage_errors(capsys, no_cache, argv):
    assert main(argv) == 2
    capsys.readouterr()


def test_oracles(capsys):
    assert run(capsys, "oracle", "vsasm", "--size", "5")[1].splitlines()[-1].split() == ["VSASM", "3"]
    assert run(capsys, "oracle", "nilp", "--b", "1", "2", "4")[0] == 0
    code, out, _ = run(capsys, "oracle", "arrays", "--n", "2", "--variant", "1")
    assert code == 0 and "2 + x" in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    from qkzstrip import verify
    from qkzstrip.verify import Check

    monkeypatch.setitem(verify._RUNNERS, "tl", lambda max_n: [Check("tl", "forced", "", False)])
    code, out, _ = run(capsys, "verify", "--suite", "tl")
    assert code == 1 and "FAIL" in out


def test_output_independent_of_jobs(capsys, no_cache):
    outs = [run(capsys, "psi", "--size", "7", "--jobs", j, "--format", "json")[1] for j in ("1", "2")]
    assert outs[0] == outs[1]
    outs = [run(capsys, "verify", "--max-n", "2", "--suite", "tl", "basis", "--jobs", j, "--format", "json")[1]
            for j in ("1", "2")]
    assert outs[0] == outs[1]


def test_cache(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    fresh = run(capsys, "psi", "--size", "6", "--format", "json")[1]
    files = sorted(p.name for p in tmp_path.iterdir())
    assert files == [f"cinv-3-v{cache.__version__}.json", f"kvec-6-v{cache.__version__}.json"]
    assert run(capsys, "psi", "--size", "6", "--format", "json")[1] == fresh
    assert all(ok for _, ok in cache.audit())
    # a corrupted entry is caught by the audit and by verify
    path = tmp_path / files[1]
    data = json.loads(path.read_text())
    data["data"][0] = ["7"]
    path.write_text(json.dumps(data))
    assert not all(ok for _, ok in cache.audit())
    assert run(capsys, "verify", "--max-n", "1", "--suite", "tl")[0] == 1


def test_cache_disabled(no_cache, tmp_path):
    assert cache.cache_dir() is None
    assert cache.entry_path("kvec", 4) is None


def test_atomic_write_leaves_no_temp(tmp_path, monkeypatch):
    target = tmp_path / "sub" / "x.json"
    cache.write_atomic(target, "{}")
    assert target.read_text() == "{}"

    def boom(*a, **k):
        raise OSError("disk full")

    monkeypatch.setattr(os, "replace", boom)
    with pytest.raises(OSError):
        cache.write_atomic(target, "[1]")
    assert target.read_text() == "{}"
    assert [p.name for p in target.parent.iterdir()] == ["x.json"]
