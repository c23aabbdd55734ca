"""Inhomogeneous oracle: Psi_pi(z_1, ..., z_N) over Z[q, 1/q].

The exchange relation is used in the form obtained by expanding the
R-matrix relation R_i(z_{i+1}, z_i) Psi = tau_i Psi.  With tau = -q - 1/q,
for every pattern p carrying a little arch (i, i+1):

    sum_{r != p, e_i r = p} Psi_r = (q z_i - z_{i+1}/q) * d_i Psi_p

where d_i f = (f - f|_{z_i <-> z_{i+1}}) / (z_i - z_{i+1}) is the divided
difference.  Exactly one preimage has fewer boxes than p; the solve
isolates it and walks patterns by decreasing box count from the rainbow.

Variables are 0-based in code (z_1 is slot 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .basischange import c_entry
from .exactalg import ExactDivisionError, LaurentScalar, MultiPoly, TauPoly, tau_to_q
from .linkpat import LinkPattern, apply_e, enumerate_patterns, from_dyck, preimages, rainbow

MAX_N = 6
ONE = LaurentScalar.const(1)
TAU_Q = tau_to_q(TauPoly.monomial(1))

# sign of the exchange relation; +1 is what the R-matrix gives, -1 the opposite
DERIVED_SIGN = 1


def qpow(k: int) -> LaurentScalar:
    return LaurentScalar.q(k)


def _lin(N: int, pairs, const=None) -> MultiPoly:
    return MultiPoly.linear(N, [(i, c) for i, c in pairs], const=const)


def qdiff(N: int, a: int, b: int) -> MultiPoly:
    """q z_a - z_b / q (0-based slots)."""
    return _lin(N, [(a, qpow(1)), (b, -qpow(-1))])


def zdiff(N: int, a: int, b: int) -> MultiPoly:
    return _lin(N, [(a, ONE), (b, -ONE)])


def qprod(N: int, k: int, a: int, b: int) -> MultiPoly:
    """q^k - z_a z_b."""
    e = [0] * N
    e[a] += 1
    e[b] += 1
    return MultiPoly(N, {(0,) * N: qpow(k), tuple(e): -ONE})


def seed_psi0(n: int) -> MultiPoly:
    """The rainbow component."""
    N = 2 * n
    acc = MultiPoly.const(N, ONE)
    for i in range(n):
        for j in range(i + 1, n):
            acc = acc * qdiff(N, i, j) * qprod(N, 2, i, j)
    for i in range(n, N):
        for j in range(i + 1, N):
            acc = acc * qdiff(N, i, j) * qprod(N, 4, i, j)
    return acc


def divided_difference(p: MultiPoly, i: int) -> MultiPoly:
    """(p - p with slots i, i+1 swapped) / (z_i - z_{i+1}), term by term."""
    j = i + 1
    out: dict[tuple[int, ...], object] = {}
    for e, c in p.terms.items():
        a, b = e[i], e[j]
        if a == b:
            continue
        lo, hi, sgn = (b, a, 1) if a > b else (a, b, -1)
        coeff = c if sgn > 0 else -c
        for k in range(hi - lo):
            ne = list(e)
            ne[i] = lo + (hi - lo - 1 - k)
            ne[j] = lo + k
            ne = tuple(ne)
            out[ne] = out[ne] + coeff if ne in out else coeff
    return MultiPoly(p.nvars, {e: c for e, c in out.items() if c})


@dataclass(frozen=True)
class ZPolyVector:
    N: int
    components: dict[LinkPattern, MultiPoly]

    @property
    def n(self) -> int:
        return self.N // 2

    def __getitem__(self, p):
        return self.components[p]


class OracleError(ArithmeticError):
    pass


def _guard(N: int) -> None:
    if N > MAX_N:
        raise ValueError(f"size {N} exceeds the oracle bound {MAX_N}")


def _valley(h: Sequence[int]) -> int | None:
    for i in range(1, len(h) - 1):
        if h[i - 1] > h[i] < h[i + 1]:
            return i
    return None


def solve_exchange(n: int, sign: int = DERIVED_SIGN) -> ZPolyVector:
    """Triangular solve of the exchange relation from the rainbow seed."""
    _guard(2 * n)
    return _solve(n, sign)


@lru_cache(maxsize=None)
def _solve(n: int, sign: int) -> ZPolyVector:
    N = 2 * n
    pats = enumerate_patterns(N)
    order = sorted(range(len(pats)), key=lambda k: (-pats[k].beta, k))
    known: dict[LinkPattern, MultiPoly] = {}
    for k in order:
        target = pats[k]
        if target == rainbow(N):
            known[target] = seed_psi0(n)
            continue
        h = list(target.heights)
        i = _valley(h)
        if i is None:
            raise OracleError(f"{target} exposes no usable little arch")
        h[i] += 2
        p = from_dyck(h)
        if apply_e(i, target)[0] != p:
            raise OracleError(f"e_{i} does not map {target} onto {p}")
        rhs = qdiff(N, i - 1, i) * divided_difference(known[p], i - 1)
        if sign < 0:
            rhs = -rhs
        for r in preimages(i, p):
            if r == target:
                continue
            if r not in known:
                raise OracleError(f"{r} needed before {target}")
            rhs = rhs - known[r]
        known[target] = rhs
    return ZPolyVector(N, {p: known[p] for p in pats})


# -- verification ----------------------------------------------------------------

def e_matrix(N: int, i: int) -> dict[tuple[int, int], LaurentScalar]:
    """Sparse matrix of e_i on LP_N: (row image, column source) -> weight."""
    idx = {p: k for k, p in enumerate(enumerate_patterns(N))}
    out = {}
    for p, k in idx.items():
        img, w, _ = apply_e(i, p)
        out[(idx[img], k)] = tau_to_q(w)
    return out


def exchange_residuals(v: ZPolyVector, i: int) -> list[LinkPattern]:
    """Components violating (q z_{i+1} - z_i/q) Psi + (z_{i+1} - z_i) e_i Psi = (q z_i - z_{i+1}/q) s_i Psi."""
    N = v.N
    pats = enumerate_patterns(N)
    a, b = i - 1, i
    left = qdiff(N, b, a)
    mid = zdiff(N, b, a)
    right = qdiff(N, a, b)
    ePsi = {p: MultiPoly(N) for p in pats}
    for p in pats:
        img, w, _ = apply_e(i, p)
        ePsi[img] = ePsi[img] + v[p] * tau_to_q(w)
    bad = []
    for p in pats:
        lhs = left * v[p] + mid * ePsi[p]
        if lhs != right * v[p].swap(a, b):
            bad.append(p)
    return bad


def invert_slot(p: MultiPoly, k: int, qexp: int, degree: int) -> MultiPoly:
    """z_k^degree * p(z_k -> q^qexp / z_k); needs deg_{z_k} p <= degree."""
    out: dict[tuple[int, ...], object] = {}
    for e, c in p.terms.items():
        x = e[k]
        if x > degree:
            raise OracleError(f"degree {x} in slot {k} exceeds {degree}")
        ne = e[:k] + (degree - x,) + e[k + 1:]
        v = c * qpow(qexp * x)
        out[ne] = out[ne] + v if ne in out else v
    return MultiPoly(p.nvars, {e: c for e, c in out.items() if c})


def per_variable_degree(v: ZPolyVector) -> int:
    return max(p.degree_in(k) for p in v.components.values() for k in range(v.N))


def check_boundaries(v: ZPolyVector) -> list[str]:
    """z_1 -> 1/z_1 with c_1(x) = x^-(2n-2); z_N -> q^6/z_N with c_N(x) = (q^3/x)^(2n-2)."""
    N, D = v.N, 2 * v.n - 2
    bad = []
    for p, f in v.components.items():
        if invert_slot(f, 0, 0, D) != f:
            bad.append(f"left boundary at {p}")
        if invert_slot(f, N - 1, 6, D) != f * qpow(3 * D):
            bad.append(f"right boundary at {p}")
    return bad


def reflect(f: MultiPoly, D: int) -> MultiPoly:
    """prod z_i^D * f(q^3/z_N, ..., q^3/z_1)."""
    N = f.nvars
    g = f.permute([N - 1 - k for k in range(N)])
    for k in range(N):
        g = invert_slot(g, k, 3, D)
    return g


def check_reflection(v: ZPolyVector) -> list[str]:
    """Psi_p(z) = prod (z_i^2 / q^3)^(n-1) * Psi_mirror(p)(q^3/z_N, ..., q^3/z_1)."""
    N, n = v.N, v.n
    D = 2 * n - 2
    scale = qpow(3 * (n - 1) * N)
    return [f"reflection at {p}" for p, f in v.components.items()
            if f * scale != reflect(v[p.mirror()], D)]


def check_printed_reflection(v: ZPolyVector) -> bool:
    """The prefactor prod (z_i / q^3)^(n-1) taken literally (n >= 2 only makes sense)."""
    N, n = v.N, v.n
    D = n - 1
    scale = qpow(3 * (n - 1) * N)
    try:
        return all(f * scale == reflect(v[p.mirror()], D) for p, f in v.components.items())
    except OracleError:
        return False


def _mat_mul(A, B, dim):
    out = {}
    for (r, k), x in A.items():
        for c in range(dim):
            y = B.get((k, c))
            if y is not None:
                val = x * y
                out[(r, c)] = out[(r, c)] + val if (r, c) in out else val
    return {rc: x for rc, x in out.items() if x}


def _r_numerator(N: int, i: int, z: int, w: int, nv: int = 3):
    """(q z - w/q) I + (z - w) e_i with spectral slots z, w among ``nv`` symbols."""
    dim = len(enumerate_patterns(N))
    out = {(k, k): qdiff(nv, z, w) for k in range(dim)}
    for (r, c), wt in e_matrix(N, i).items():
        term = zdiff(nv, z, w) * wt
        out[(r, c)] = out[(r, c)] + term if (r, c) in out else term
    return {rc: x for rc, x in out.items() if x}


def check_unitarity(N: int, i: int) -> bool:
    dim = len(enumerate_patterns(N))
    prod = _mat_mul(_r_numerator(N, i, 0, 1), _r_numerator(N, i, 1, 0), dim)
    den = qdiff(3, 1, 0) * qdiff(3, 0, 1)
    want = {(k, k): den for k in range(dim)}
    return prod == want


def check_yang_baxter(N: int, i: int) -> bool:
    """Numerators of both sides agree; their denominators coincide as products."""
    dim = len(enumerate_patterns(N))
    z, w, x = 0, 1, 2
    lhs = _mat_mul(_mat_mul(_r_numerator(N, i, z, w), _r_numerator(N, i + 1, z, x), dim),
                   _r_numerator(N, i, w, x), dim)
    rhs = _mat_mul(_mat_mul(_r_numerator(N, i + 1, w, x), _r_numerator(N, i, z, x), dim),
                   _r_numerator(N, i + 1, z, w), dim)
    return lhs == rhs


@dataclass
class QKZReport:
    N: int
    failures: list[str] = field(default_factory=list)
    checked: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, label: str, bad: list) -> None:
        if bad:
            self.failures.extend(f"{label}: {b}" for b in bad)
        else:
            self.checked.append(label)


def verify_qkz_system(v: ZPolyVector) -> QKZReport:
    N, n = v.N, v.n
    rep = QKZReport(N)
    for i in range(1, N):
        rep.record(f"exchange relation i={i}", exchange_residuals(v, i))
    want = 3 * n * (n - 1)
    rep.record("total degree", [str(p) for p, f in v.components.items() if f.total_degree() != want])
    rep.record("boundaries", check_boundaries(v))
    rep.record("reflection", check_reflection(v))
    for i in range(1, N):
        rep.record(f"unitarity i={i}", [] if check_unitarity(N, i) else ["operator mismatch"])
    for i in range(1, N - 1):
        rep.record(f"Yang-Baxter i={i}", [] if check_yang_baxter(N, i) else ["operator mismatch"])
    return rep


# -- integral formula by residues -------------------------------------------------

def _factor_poly(N: int, f: tuple) -> MultiPoly:
    kind = f[0]
    if kind == "d":
        return zdiff(N, f[1], f[2])
    if kind == "qd":
        return qdiff(N, f[1], f[2])
    return qprod(N, f[1], f[2], f[3])


def _norm(f: tuple) -> tuple[tuple, int]:
    if f[0] == "d" and f[1] > f[2]:
        return ("d", f[2], f[1]), -1
    if f[0] == "p" and f[2] > f[3]:
        return ("p", f[1], f[3], f[2]), 1
    return f, 1


def _multiset(factors) -> tuple[dict[tuple, int], int]:
    out: dict[tuple, int] = {}
    sign = 1
    for f in factors:
        g, s = _norm(f)
        sign *= s
        out[g] = out.get(g, 0) + 1
    return out, sign


def residue_eval_openpsi(a: Sequence[int], N: int | None = None) -> MultiPoly:
    """The multiple contour integral over w, as a sum of residues at w_l = z_j, j <= a_l."""
    a = tuple(a)
    n = len(a)
    if n > 2:
        raise ValueError("residue evaluation is limited to n <= 2")
    N = 2 * n if N is None else N
    if any(x < 1 or x > N for x in a):
        raise ValueError(f"sequence {a} out of range")
    pref = []
    for i in range(N):
        for j in range(i + 1, N):
            pref += [("qd", i, j), ("p", 4, i, j)]
    terms = []
    for js in permutations(range(N), n):
        if any(js[l] >= a[l] for l in range(n)):
            continue
        num = list(pref)
        den = []
        for m in range(n):
            for l in range(m):
                num += [("d", js[m], js[l]), ("qd", js[l], js[m]), ("p", 2, js[l], js[m])]
            for l in range(m + 1):
                num.append(("p", 4, js[l], js[m]))
        for l in range(n):
            j = js[l]
            for i in range(N):
                den.append(("p", 4, j, i))
            for i in range(a[l]):
                if i != j:
                    den.append(("d", j, i))
            for i in range(a[l], N):
                den.append(("qd", j, i))
        nm, s1 = _multiset(num)
        dn, s2 = _multiset(den)
        for f in list(dn):
            c = min(dn[f], nm.get(f, 0))
            if c:
                dn[f] -= c
                nm[f] -= c
        terms.append(({f: k for f, k in nm.items() if k}, {f: k for f, k in dn.items() if k}, s1 * s2))
    if not terms:
        return MultiPoly(N)
    lcm: dict[tuple, int] = {}
    for _, dn, _ in terms:
        for f, k in dn.items():
            lcm[f] = max(lcm.get(f, 0), k)
    total = MultiPoly(N)
    for nm, dn, s in terms:
        acc = MultiPoly.const(N, ONE if s > 0 else -ONE)
        for f, k in nm.items():
            acc = acc * _factor_poly(N, f) ** k
        for f, k in lcm.items():
            extra = k - dn.get(f, 0)
            if extra:
                acc = acc * _factor_poly(N, f) ** extra
        total = total + acc
    for f, k in lcm.items():
        for _ in range(k):
            try:
                total = total.exact_div(_factor_poly(N, f))
            except ExactDivisionError as exc:
                raise OracleError(f"residue sum is not a polynomial (factor {f})") from exc
    return total


def contract_with_basis(v: ZPolyVector, a: Sequence[int]) -> MultiPoly:
    """sum_p C_{a,p}(tau = -q - 1/q) Psi_p."""
    acc = MultiPoly(v.N)
    for p, f in v.components.items():
        c = c_entry(a, p, check=False)
        if c:
            acc = acc + f * tau_to_q(c)
    return acc


# -- odd sizes and the homogeneous limit --------------------------------------------

def odd_reduce(v: ZPolyVector) -> ZPolyVector:
    """Set z_N = 0 and drop the last arch of every pattern."""
    N = v.N
    comps = {}
    for p, f in v.components.items():
        comps[p.erase_last_arch()] = f.eval_var(N - 1, 0).drop_var(N - 1)
    return ZPolyVector(N - 1, comps)


def homogeneous(v: ZPolyVector) -> dict[LinkPattern, LaurentScalar]:
    return {p: f.at_ones() if f else LaurentScalar() for p, f in v.components.items()}


def homogeneous_constant(v: ZPolyVector, pipeline: dict[LinkPattern, TauPoly]) -> LaurentScalar:
    """The single c with oracle(z=1) = c * pipeline(tau = -q - 1/q); raises if none exists."""
    hom = homogeneous(v)
    ref = next(p for p in hom if pipeline[p])
    base = tau_to_q(pipeline[ref])
    for p, val in hom.items():
        if val * base != hom[ref] * tau_to_q(pipeline[p]):
            raise OracleError(f"component {p} breaks proportionality")
    try:
        return hom[ref].exact_div(base)
    except ExactDivisionError as exc:
        raise OracleError("proportionality constant is not a Laurent polynomial") from exc
