"""The homogeneous solution Psi_pi(tau) in the link pattern basis.

With v_a = K_{b(a)} built from the closings of each pattern, the components
are Psi = (R C R)^-1 v, where R is the left-right mirror on link patterns.
The plain inverse C^-1 v produces a vector that still satisfies the
asymptotic checks but breaks the mirror symmetry at tau = 1 from size 5 on;
the conjugated form is the one that solves the exchange equations.

Odd size 2n+1 embeds each pattern in size 2n+2 by joining its unmatched
point to a new last point and uses v_a = K'_{b(a)} with the odd closings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .basischange import BasisMatrix, inverse_matrix
from .ctengine import k_batch, tau_limits_even, tau_limits_odd
from .exactalg import TauPoly
from .linkpat import LinkPattern, enumerate_patterns, pi_max, rainbow

NORMALIZATION = "Psi(rainbow) = tau^(n(n-1)/2), the constant-term normalization"


@dataclass(frozen=True)
class PsiVector:
    N: int
    components: dict[LinkPattern, TauPoly]
    normalization: str = NORMALIZATION

    @property
    def n(self) -> int:
        return self.N // 2

    @property
    def odd(self) -> bool:
        return self.N % 2 == 1

    def __getitem__(self, p: LinkPattern) -> TauPoly:
        return self.components[p]

    def __iter__(self):
        return iter(self.components.items())

    def total(self) -> TauPoly:
        acc = TauPoly.zero()
        for v in self.components.values():
            acc = acc + v
        return acc

    def nonnegative(self) -> bool:
        return all(c >= 0 for v in self.components.values() for c in v.coeffs)


def k_vector(N: int, jobs: int | None = None) -> list[TauPoly]:
    """v_a for every pattern of size N, in canonical order."""
    return k_batch([p.closings() for p in enumerate_patterns(N)], odd=N % 2 == 1, jobs=jobs)


def assemble(N: int, ks: Sequence[TauPoly], Cinv: BasisMatrix) -> PsiVector:
    """Psi = (R C R)^-1 v from a K-vector and the inverse change of basis of size 2 * ceil(N/2)."""
    pats = enumerate_patterns(N)
    order = [p.embed() for p in pats] if N % 2 else list(pats)
    if tuple(order) != Cinv.index:
        raise AssertionError("pattern order differs from the change-of-basis index")
    pos = {p: k for k, p in enumerate(Cinv.index)}
    mir = [pos[p.mirror()] for p in Cinv.index]
    psi = []
    for r in mir:
        row = Cinv.entries[r]
        acc = TauPoly.zero()
        for c, v in zip(mir, ks):
            x = row[c]
            if x and v:
                acc = acc + x * v
        psi.append(acc)
    return PsiVector(N, dict(zip(pats, psi)))


def _assemble(N: int, jobs: int | None) -> PsiVector:
    return assemble(N, k_vector(N, jobs), inverse_matrix((N + 1) // 2))


@lru_cache(maxsize=None)
def _psi(N: int) -> PsiVector:
    return _assemble(N, None)


def psi_even(n: int, jobs: int | None = None) -> PsiVector:
    if n < 1:
        raise ValueError("n must be positive")
    return _psi(2 * n) if jobs is None else _assemble(2 * n, jobs)


def psi_odd(n: int, jobs: int | None = None) -> PsiVector:
    """Size 2n+1 (n >= 0)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _psi(2 * n + 1) if jobs is None else _assemble(2 * n + 1, jobs)


def psi(N: int, jobs: int | None = None) -> PsiVector:
    return psi_odd(N // 2, jobs) if N % 2 else psi_even(N // 2, jobs)


@dataclass
class PropertyReport:
    N: int
    failures: list[str] = field(default_factory=list)
    nonnegative: bool = True
    suppressed: list[LinkPattern] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_properties(v: PsiVector) -> PropertyReport:
    """Small/large tau asymptotics, mirror symmetry at tau = 1, normalization, sum rule."""
    from .sumrules import EVEN, ODD, gen_direct

    rep = PropertyReport(v.N, nonnegative=v.nonnegative())
    n = v.n
    for p, val in v:
        b = p.closings()
        if not val:
            rep.failures.append(f"{p}: zero component")
            continue
        if v.odd:
            lim = tau_limits_odd(b)
            if lim.valuation is None:
                rep.suppressed.append(p)
            elif val.valuation != lim.valuation or val.lowest() != lim.low:
                rep.failures.append(f"{p}: low term {val} vs tau^{lim.valuation}*{lim.low}")
        else:
            lim = tau_limits_even(b)
            if val.valuation != p.beta or lim.valuation != p.beta:
                rep.failures.append(f"{p}: valuation {val.valuation}, boxes {p.beta}")
            if val.lowest() != lim.low:
                rep.failures.append(f"{p}: lowest coefficient {val.lowest()} vs {lim.low}")
            if val.degree != n * (n - 1) - p.beta:
                rep.failures.append(f"{p}: degree {val.degree} vs {n * (n - 1) - p.beta}")
        if val.degree != lim.degree or val.leading() != lim.top:
            rep.failures.append(f"{p}: top term {val} vs tau^{lim.degree}*{lim.top}")
    for p, val in v:
        if val(1) != v[p.mirror()](1):
            rep.failures.append(f"{p}: tau = 1 value differs from its mirror image")
    if not v.odd:
        want = TauPoly.monomial(n * (n - 1) // 2)
        if v[rainbow(v.N)] != want:
            rep.failures.append(f"rainbow component {v[rainbow(v.N)]} is not {want}")
    if n >= 1:
        k1 = gen_direct(n, ODD if v.odd else EVEN).at_t(1)
        if v.total() != k1:
            rep.failures.append(f"component sum {v.total()} differs from K(1|tau) = {k1}")
    return rep


def max_component(N: int) -> TauPoly:
    return psi(N)[pi_max(N)]
