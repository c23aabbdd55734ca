"""The invariant matrix behind ``qkzstrip verify``.

Each suite returns a list of :class:`Check`; a run passes iff every check
does.  Sizes are clipped to what each brute-force oracle can reach.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import partial
from typing import Callable, Sequence

from .parallel import pmap

SUITES = ("tl", "basis", "lemmas", "limits", "sumrules", "oracle", "tilings")


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    anchor: str
    ok: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {"suite": self.suite, "name": self.name, "anchor": self.anchor,
                "ok": self.ok, "detail": self.detail}


def _summary(bad: Sequence) -> str:
    bad = list(bad)
    if not bad:
        return ""
    more = f" (+{len(bad) - 3} more)" if len(bad) > 3 else ""
    return "; ".join(str(b) for b in bad[:3]) + more


# -- suites --------------------------------------------------------------------

def suite_tl(max_n: int) -> list[Check]:
    from .linkpat import tl_relation_failures

    out = []
    for N in range(2, 2 * max_n + 1):
        bad = tl_relation_failures(N)
        out.append(Check("tl", f"TL relations N={N}", "Temperley-Lieb algebra", not bad, _summary(bad)))
    return out


def suite_basis(max_n: int) -> list[Check]:
    from . import basischange as bc

    out = []
    for n in range(1, min(max_n, 4) + 1):
        C, Ci = bc.build_matrix(n), bc.inverse_matrix(n)
        out.append(Check("basis", f"C unitriangular n={n}", "change of basis", C.is_lower_unitriangular()))
        bad = bc.route_mismatches(n)
        out.append(Check("basis", f"closed form = arch removal n={n}", "change of basis", not bad, _summary(bad)))
        out.append(Check("basis", f"C C^-1 = I n={n}", "change of basis", (C @ Ci).is_identity()))
        bad = bc.degree_law_failures(n)
        out.append(Check("basis", f"degree law n={n}", "box-count grading", not bad, _summary(bad)))
    if max_n >= 5:
        out.append(Check("basis", "C unitriangular n=5", "change of basis",
                         bc.build_matrix(5).is_lower_unitriangular()))
    for n in range(1, min(max_n, 3) + 1):
        bad = [(i, a, p) for i in range(1, 2 * n) for a in bc.weak_sequences(n)
               for p in bc.verify_e_action(n, i, a)]
        out.append(Check("basis", f"e_i action in the opening basis n={n}", "opening-basis action",
                         not bad, _summary(bad)))
    if max_n >= 2:
        bad = [(k, p, r) for k in range(9) for p in range(9) for r in range(9)
               if not all(bc.cheb_case_identities(k, p, r).values())]
        out.append(Check("basis", "Chebyshev case identities (parameters <= 8)", "opening-basis action",
                         not bad, _summary(bad)))
    return out


def suite_lemmas(max_n: int) -> list[Check]:
    from .ctengine import verify_lemma_suite

    rep = verify_lemma_suite(max_n=min(max_n, 4), max_k=min(max_n + 1, 5), max_p=6)
    out = [Check("lemmas", label, "constant-term identities", True) for label in rep.checked]
    out += [Check("lemmas", label, "constant-term identities", False) for label in rep.failures]
    return out


def suite_limits(max_n: int) -> list[Check]:
    from .ctengine import canonical_closings, check_limits
    from .psivec import check_properties, psi

    out = []
    for n in range(1, max_n + 1):
        for odd in (False, True):
            bad = [(b, issue) for b in canonical_closings(n, odd) for issue in check_limits(b, odd)]
            kind = "K'" if odd else "K"
            out.append(Check("limits", f"{kind}_b tau asymptotics n={n}", "small and large tau",
                             not bad, _summary(bad)))
    for N in range(1, 2 * max_n + 2):
        rep = check_properties(psi(N))
        out.append(Check("limits", f"Psi component properties N={N}", "small and large tau",
                         rep.ok, _summary(rep.failures)))
        note = "nonnegative" if rep.nonnegative else "NEGATIVE coefficient found"
        out.append(Check("limits", f"Psi coefficient sign N={N}", "positivity (reported)", True, note))
    return out


def suite_sumrules(max_n: int) -> list[Check]:
    from .linkpat import pi_max
    from .psivec import psi
    from .sumrules import EVEN, ODD, build_report, maxcomp_det, odd_convention_uniform, rotcomp_det

    out = []
    for n in range(1, max_n + 1):
        ev = build_report(n, EVEN)
        out.append(Check("sumrules", f"even routes agree n={n}", "refined sum rule", ev.agree))
        sp = ev.specializations
        out.append(Check("sumrules", f"K(0|tau) = max component n={n}", "refined sum rule",
                         sp["K(0|tau)"] == maxcomp_det(n) == psi(2 * n)[pi_max(2 * n)]))
        out.append(Check("sumrules", f"top-t coefficient determinant n={n}", "refined sum rule",
                         sp["K top-t coefficient"] == rotcomp_det(n)))
        od = build_report(n, ODD)
        out.append(Check("sumrules", f"odd routes agree n={n}", "refined sum rule", od.agree,
                         f"convention {od.convention_map}"))
        out.append(Check("sumrules", f"odd t=tau value = max component of size {2 * n + 2}",
                         "refined sum rule", od.specializations["K'(tau|tau)"] == maxcomp_det(n + 1)))
        out.append(Check("sumrules", f"sum of components = K(1|tau) n={n}", "refined sum rule",
                         psi(2 * n).total() == sp["K(1|tau)"]
                         and psi(2 * n + 1).total() == od.specializations["K'(1|tau)"]))
    try:
        conv = odd_convention_uniform(max_n)
        out.append(Check("sumrules", f"one odd t-convention for n <= {max_n}", "refined sum rule", True, conv))
    except AssertionError as exc:
        out.append(Check("sumrules", f"one odd t-convention for n <= {max_n}", "refined sum rule",
                         False, str(exc)))
    return out


def suite_oracle(max_n: int) -> list[Check]:
    from . import qkzoracle as qo
    from .psivec import psi

    out = []
    for n in range(1, min(max_n, 3) + 1):
        v = qo.solve_exchange(n)
        rep = qo.verify_qkz_system(v)
        out.append(Check("oracle", f"qKZ system n={n}", "exchange, boundary and reflection relations",
                         rep.ok, _summary(rep.failures)))
        for N, w in ((2 * n, v), (2 * n - 1, qo.odd_reduce(v))):
            try:
                c = qo.homogeneous_constant(w, psi(N).components)
                out.append(Check("oracle", f"homogeneous limit N={N}", "oracle vs pipeline", True,
                                 f"global factor {c}"))
            except qo.OracleError as exc:
                out.append(Check("oracle", f"homogeneous limit N={N}", "oracle vs pipeline", False, str(exc)))
    if max_n >= 1:
        out.append(Check("oracle", "residue integral a=(1)", "integral formula",
                         qo.residue_eval_openpsi((1,)) == qo.seed_psi0(1)))
    if max_n >= 2:
        v = qo.solve_exchange(2)
        out.append(Check("oracle", "residue integral a=(1,2) = seed", "integral formula",
                         qo.residue_eval_openpsi((1, 2)) == qo.seed_psi0(2)))
        out.append(Check("oracle", "residue integral a=(1,3) = basis contraction", "integral formula",
                         qo.residue_eval_openpsi((1, 3)) == qo.contract_with_basis(v, (1, 3))))
    return out


def suite_tilings(max_n: int) -> list[Check]:
    from .ctengine import canonical_closings
    from .sumrules import EVEN, ODD, build_report
    from .tilingsoracle import count_nilp, nilp_det, t_poly, vsasm_count, x_to_tau_squared

    out = []
    for n in range(1, min(max_n, 3) + 1):
        k = build_report(n, EVEN).direct(1, 1)
        a = vsasm_count(2 * n + 1)
        out.append(Check("tilings", f"VSASM({2 * n + 1}) = K(1|1)", "VSASM enumeration", a == k, f"{a} vs {k}"))
    for n in range(1, min(max_n, 4) + 1):
        bad = [b for b in canonical_closings(n, False) if count_nilp(b) != nilp_det(b)]
        out.append(Check("tilings", f"NILP count = binomial determinant n={n}", "lattice paths",
                         not bad, _summary(bad)))
    for n in range(1, min(max_n, 4) + 1):
        ev = build_report(n, EVEN).specializations["K(1/tau|tau)"]
        out.append(Check("tilings", f"K(1/tau|tau) = T_{n}(tau^2,1)", "triangular arrays",
                         ev == x_to_tau_squared(t_poly(n, 1))))
        od = build_report(n, ODD).specializations["K'(tau|tau)"]
        out.append(Check("tilings", f"odd t=tau value = T_{n + 1}(tau^2,0)", "triangular arrays",
                         od == x_to_tau_squared(t_poly(n + 1, 0))))
    return out


def suite_cache() -> list[Check]:
    from .cache import audit

    return [Check("cache", f"cached {name} matches recomputation", "cache integrity", ok)
            for name, ok in audit()]


_RUNNERS: dict[str, Callable[..., list[Check]]] = {
    "tl": suite_tl, "basis": suite_basis, "lemmas": suite_lemmas, "limits": suite_limits,
    "sumrules": suite_sumrules, "oracle": suite_oracle, "tilings": suite_tilings,
}


def _run_one(name: str, max_n: int) -> tuple[list[Check], float]:
    t0 = time.perf_counter()
    try:
        checks = _RUNNERS[name](max_n)
    except Exception as exc:  # a crash is a failed check, not a lost report
        checks = [Check(name, "suite raised", "", False, f"{type(exc).__name__}: {exc}")]
    return checks, time.perf_counter() - t0


def run(max_n: int, suites: Sequence[str] = SUITES, jobs: int = 1) -> tuple[list[Check], dict[str, float]]:
    unknown = [s for s in suites if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites {unknown}; choose from {list(SUITES)}")
    results = pmap(partial(_run_one, max_n=max_n), list(suites), jobs)
    checks: list[Check] = []
    timings = {}
    for name, (cs, dt) in zip(suites, results):
        checks.extend(cs)
        timings[name] = dt
    checks.extend(suite_cache())
    return checks, timings
