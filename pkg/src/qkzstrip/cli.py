"""Command-line interface.

    qkzstrip lp list --size N
    qkzstrip lp matrix --n N [--inverse]
    qkzstrip psi --size N [--tau-at R] [--format json|csv|pretty]
    qkzstrip sumrule --n N --parity even|odd [--t SPEC]
    qkzstrip verify [--max-n K] [--suite NAME ...] [--jobs J]
    qkzstrip oracle {vsasm|nilp|arrays|qkz} ...

Exit status: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import cache
from .exactalg import BiPoly, TauPoly
from .linkpat import enumerate_patterns
from .serialize import ResultTable, dec_laurent, dec_tau, enc_bi, enc_laurent, enc_pattern, enc_tau, provenance

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MAX_PSI_SIZE = 14
MAX_SUMRULE_N = 6
T_SPECS = ("symbolic", "0", "1", "inf", "tau", "inv-tau")
FORMATS = ("pretty", "json", "csv")


class UsageError(ValueError):
    pass


def _range_check(name: str, value: int, lo: int, hi: int) -> int:
    if not lo <= value <= hi:
        raise UsageError(f"{name} must lie in {lo}..{hi}, got {value}")
    return value


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _frac_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _table(kind: str, params: dict, payload: dict) -> ResultTable:
    cmd = [kind] + [f"--{k}={v}" for k, v in sorted(params.items())]
    return ResultTable(kind, params, payload, provenance(cmd))


# -- commands ------------------------------------------------------------------

def cmd_lp_list(size: int) -> tuple[ResultTable, int]:
    _range_check("size", size, 1, 2 * MAX_PSI_SIZE)
    rows = []
    for k, p in enumerate(enumerate_patterns(size)):
        rows.append([k, enc_pattern(p), str(p)[3:-1], list(p.openings()), list(p.closings()), p.beta])
    cols = ["index", "pairing", "arches", "openings", "closings", "boxes"]
    return _table("patterns", {"size": size}, {"columns": cols, "rows": rows}), EXIT_OK


def cmd_lp_matrix(n: int, inverse: bool) -> tuple[ResultTable, int]:
    from .basischange import build_matrix

    _range_check("n", n, 1, 6)
    C = cache.cinv(n) if inverse else build_matrix(n)
    rows = [[str(p)[3:-1]] + [str(x) for x in row] for p, row in zip(C.index, C.entries)]
    cols = ["opening sequence of"] + [str(k) for k in range(C.dim)]
    payload = {"columns": cols, "rows": rows,
               "entries": [[enc_tau(x) for x in row] for row in C.entries],
               "index": [enc_pattern(p) for p in C.index]}
    return _table("matrix", {"n": n, "inverse": inverse}, payload), EXIT_OK


def cmd_psi(size: int, tau_at: Fraction | None = None, jobs: int = 1) -> tuple[ResultTable, int]:
    from .psivec import assemble

    _range_check("size", size, 1, MAX_PSI_SIZE)
    v = assemble(size, cache.kvec(size, jobs), cache.cinv((size + 1) // 2))
    cols = ["pattern", "pairing", "valuation", "degree", "coefficients", "polynomial", "at tau=1"]
    if tau_at is not None:
        cols.append(f"at tau={_frac_str(tau_at)}")
    rows = []
    for p, val in v:
        row = [str(p)[3:-1], enc_pattern(p), val.valuation, val.degree, enc_tau(val), str(val), str(val(1))]
        if tau_at is not None:
            row.append(_frac_str(val(tau_at)))
        rows.append(row)
    payload = {"columns": cols, "rows": rows, "normalization": v.normalization,
               "total": enc_tau(v.total())}
    params: dict[str, Any] = {"size": size}
    if tau_at is not None:
        params["tau_at"] = _frac_str(tau_at)
    return _table("psi", params, payload), EXIT_OK


def _specialize(p: BiPoly, spec: str):
    if spec == "symbolic":
        return p
    if spec in ("0", "1"):
        return p.at_t(int(spec))
    if spec == "inf":
        return p.coeff_t(p.t_degree) if p else TauPoly.zero()
    if spec == "tau":
        return p.at_t(TauPoly.monomial(1))
    return p.at_t_inverse_tau()


def _enc_value(x) -> Any:
    return enc_bi(x) if isinstance(x, BiPoly) else enc_tau(x)


def cmd_sumrule(n: int, parity: str, t: str = "symbolic") -> tuple[ResultTable, int]:
    from .sumrules import EVEN, build_report, gen_det_odd_raw

    _range_check("n", n, 1, MAX_SUMRULE_N)
    rep = build_report(n, parity)
    raw = rep.determinant if parity == EVEN else gen_det_odd_raw(n)
    routes = [("direct", rep.direct), ("determinant", raw),
              (f"determinant under the {rep.convention_map} map", rep.determinant)]
    rows = []
    for name, val in routes:
        s = _specialize(val, t)
        at1 = s(1, 1) if isinstance(s, BiPoly) else s(1)
        rows.append([name, _enc_value(s), str(s), str(at1)])
    payload = {"columns": ["route", "value", "polynomial", "at t=tau=1" if t == "symbolic" else "at tau=1"],
               "rows": rows, "convention_map": rep.convention_map, "agree": rep.agree}
    code = EXIT_OK if rep.agree else EXIT_FAIL
    return _table("sumrule", {"n": n, "parity": parity, "t": t}, payload), code


def cmd_verify(max_n: int, suites: Sequence[str], jobs: int = 1) -> tuple[ResultTable, int]:
    from .verify import SUITES, run

    _range_check("max-n", max_n, 1, 6)
    bad = [s for s in suites if s not in SUITES]
    if bad:
        raise UsageError(f"unknown suite(s) {bad}; choose from {', '.join(SUITES)}")
    checks, timings = run(max_n, list(suites), jobs)
    for name, dt in timings.items():
        print(f"[{name}] {dt:.2f}s", file=sys.stderr)
    ok = all(c.ok for c in checks)
    rows = [["PASS" if c.ok else "FAIL", c.suite, c.name, c.anchor, c.detail] for c in checks]
    payload = {"columns": ["status", "suite", "check", "anchor", "detail"], "rows": rows,
               "passed": sum(c.ok for c in checks), "failed": sum(not c.ok for c in checks)}
    table = _table("verify-report", {"max_n": max_n, "suites": list(suites)}, payload)
    return table, EXIT_OK if ok else EXIT_FAIL


def cmd_oracle_vsasm(size: int) -> tuple[ResultTable, int]:
    from .tilingsoracle import MAX_ASM_SIZE, asm_count, vsasm_count

    _range_check("size", size, 1, MAX_ASM_SIZE)
    if size % 2 == 0:
        raise UsageError("vertically symmetric ASMs need an odd size")
    rows = [["ASM", asm_count(size)], ["VSASM", vsasm_count(size)]]
    return _table("oracle", {"oracle": "vsasm", "size": size},
                  {"columns": ["class", "count"], "rows": rows}), EXIT_OK


def cmd_oracle_nilp(b: Sequence[int]) -> tuple[ResultTable, int]:
    from .ctengine import ClosingIndex
    from .tilingsoracle import MAX_NILP_N, count_nilp, nilp_det

    b = tuple(b)
    _range_check("len(b)", len(b), 1, MAX_NILP_N)
    if not ClosingIndex(b).is_canonical():
        raise UsageError(f"b={list(b)} must be strictly increasing with b_i <= 2i-1")
    c, d = count_nilp(b), nilp_det(b)
    rows = [["enumeration", c], ["determinant", d]]
    return (_table("oracle", {"oracle": "nilp", "b": list(b)}, {"columns": ["route", "count"], "rows": rows}),
            EXIT_OK if c == d else EXIT_FAIL)


def cmd_oracle_arrays(n: int, variant: int) -> tuple[ResultTable, int]:
    from .tilingsoracle import MAX_ARRAY_N, t_poly

    _range_check("n", n, 1, MAX_ARRAY_N)
    p = t_poly(n, variant)
    rows = [[f"T_{n}(x,{variant})", enc_tau(p), str(p).replace("tau", "x"), str(p(1))]]
    return _table("oracle", {"oracle": "arrays", "n": n, "variant": variant},
                  {"columns": ["series", "coefficients", "polynomial", "at x=1"], "rows": rows}), EXIT_OK


def cmd_oracle_qkz(n: int, odd: bool) -> tuple[ResultTable, int]:
    from . import qkzoracle as qo
    from .psivec import psi

    _range_check("n", n, 1, 3)
    v = qo.solve_exchange(n)
    rep = qo.verify_qkz_system(v)
    w = qo.odd_reduce(v) if odd else v
    pipe = psi(w.N)
    hom = qo.homogeneous(w)
    failures = list(rep.failures)
    try:
        const = enc_laurent(qo.homogeneous_constant(w, pipe.components))
    except qo.OracleError as exc:
        const = None
        failures.append(str(exc))
    rows = [[str(p)[3:-1], str(hom[p]), str(pipe[p])] for p in enumerate_patterns(w.N)]
    payload = {"columns": ["pattern", "oracle at z=1", "pipeline"], "rows": rows,
               "global_factor": const, "global_factor_text": str(dec_laurent(const)) if const else None, "checks": rep.checked, "failures": failures}
    return (_table("oracle", {"oracle": "qkz", "n": n, "odd": odd}, payload),
            EXIT_FAIL if failures else EXIT_OK)


# -- rendering -------------------------------------------------------------------

def _cell(x) -> str:
    if isinstance(x, list):
        return " ".join(_cell(y) for y in x) if not any(isinstance(y, list) for y in x) \
            else "; ".join(_cell(y) for y in x)
    return "" if x is None else str(x)


def render(table: ResultTable, fmt: str) -> str:
    if fmt == "json":
        return table.dumps()
    cols, rows = table.payload["columns"], table.payload["rows"]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([_cell(x) for x in r])
        return buf.getvalue()
    skip = {"pairing", "coefficients", "value", "entries"}
    keep = [k for k, c in enumerate(cols) if c not in skip]
    grid = [[cols[k] for k in keep]] + [[_cell(r[k]) for k in keep] for r in rows]
    widths = [max(len(g[k]) for g in grid) for k in range(len(keep))]
    lines = ["  ".join(s.ljust(wd) for s, wd in zip(g, widths)).rstrip() for g in grid]
    lines.insert(1, "  ".join("-" * wd for wd in widths))
    hidden = ("columns", "rows", "entries", "index", "global_factor")
    extras = {k: v for k, v in table.payload.items() if k not in hidden}
    for k, v in extras.items():
        if k == "total":
            tot = dec_tau(v)
            v = f"{tot} (= {tot(1)} at tau=1)"
        lines.append(f"{k}: {_cell(v)}")
    return "\n".join(lines) + "\n"


# -- argument parsing ------------------------------------------------------------

def _fmt(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=FORMATS, default="pretty")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qkzstrip", description="Exact reflecting-boundary qKZ components.")
    sub = ap.add_subparsers(dest="command", required=True)

    lp = sub.add_parser("lp", help="link patterns").add_subparsers(dest="lp_command", required=True)
    p = lp.add_parser("list", help="enumerate link patterns in canonical order")
    p.add_argument("--size", type=int, required=True)
    _fmt(p)
    p = lp.add_parser("matrix", help="change of basis C or its inverse")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--inverse", action="store_true")
    _fmt(p)

    p = sub.add_parser("psi", help="components Psi_pi(tau)")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--tau-at", type=_fraction, default=None, metavar="R")
    p.add_argument("--jobs", type=int, default=1)
    _fmt(p)

    p = sub.add_parser("sumrule", help="refined sum rule by both routes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--parity", choices=("even", "odd"), required=True)
    p.add_argument("--t", choices=T_SPECS, default="symbolic")
    _fmt(p)

    from .verify import SUITES
    p = sub.add_parser("verify", help="run the invariant checks")
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--suite", nargs="+", default=list(SUITES), metavar="NAME")
    p.add_argument("--jobs", type=int, default=1)
    _fmt(p)

    orc = sub.add_parser("oracle", help="independent ground truth").add_subparsers(dest="oracle", required=True)
    p = orc.add_parser("vsasm")
    p.add_argument("--size", type=int, required=True)
    _fmt(p)
    p = orc.add_parser("nilp")
    p.add_argument("--b", type=int, nargs="+", required=True)
    _fmt(p)
    p = orc.add_parser("arrays")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", type=int, choices=(0, 1), required=True)
    _fmt(p)
    p = orc.add_parser("qkz")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--odd", action="store_true", help="reduce to size 2n-1")
    _fmt(p)
    return ap


def dispatch(args: argparse.Namespace) -> tuple[ResultTable, int]:
    jobs = getattr(args, "jobs", 1)
    if jobs < 1:
        raise UsageError("--jobs must be at least 1")
    if args.command == "lp":
        if args.lp_command == "list":
            return cmd_lp_list(args.size)
        return cmd_lp_matrix(args.n, args.inverse)
    if args.command == "psi":
        return cmd_psi(args.size, args.tau_at, jobs)
    if args.command == "sumrule":
        return cmd_sumrule(args.n, args.parity, args.t)
    if args.command == "verify":
        return cmd_verify(args.max_n, args.suite, jobs)
    if args.oracle == "vsasm":
        return cmd_oracle_vsasm(args.size)
    if args.oracle == "nilp":
        return cmd_oracle_nilp(args.b)
    if args.oracle == "arrays":
        return cmd_oracle_arrays(args.n, args.variant)
    return cmd_oracle_qkz(args.n, args.odd)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        table, code = dispatch(args)
    except UsageError as exc:
        print(f"qkzstrip: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(render(table, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
