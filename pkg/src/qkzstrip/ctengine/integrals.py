"""Homogeneous constant-term components K_b(tau) and K'_b(tau).

K_b is the coefficient of prod u_l^(b_l - 1) in

    prod_{l<=m} (1 - u_l u_m) * prod_{l<m} (u_m - u_l)(1 + tau u_m + u_l u_m)(tau + u_l + u_m)

and K'_b carries the extra factor prod_m (1 + tau u_m + u_m^2).  Only
exponents up to b_l - 1 can reach the answer, so every product is taken in
the ring truncated at those caps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, partial
from math import comb
from typing import NamedTuple, Sequence

from ..exactalg import MultiPoly, TauPoly, bareiss_det
from ..parallel import pmap
from .kernel import expand_dense


@dataclass(frozen=True)
class ClosingIndex:
    """Closing positions b_1 < ... < b_n counted from the right."""

    b: tuple[int, ...]
    odd: bool = False

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if any(x < 0 for x in self.b):
            raise ValueError(f"negative closing index in {self.b}")

    @property
    def n(self) -> int:
        return len(self.b)

    def is_canonical(self) -> bool:
        b = self.b
        slack = 0 if self.odd else 1
        return all(x < y for x, y in zip(b, b[1:])) and all(
            1 <= x <= 2 * i - slack for i, x in enumerate(b, 1)
        )


# -- factor lists --------------------------------------------------------------
# A factor is a list of (shift, coeff); shift has one slot per u variable and a
# final slot for the power of tau.

def _unit(nv: int, *pos: int, tau: int = 0) -> tuple[int, ...]:
    e = [0] * (nv + 1)
    for p in pos:
        e[p] += 1
    e[nv] = tau
    return tuple(e)


def integrand_factors(n: int, odd: bool) -> list[list[tuple[tuple[int, ...], int]]]:
    """The integrand as a list of sparse factors, cheapest first."""
    facs = []
    for m in range(n):
        for l in range(m + 1):
            facs.append((m, [(_unit(n), 1), (_unit(n, l, m), -1)]))
        for l in range(m):
            facs.append((m, [(_unit(n, m), 1), (_unit(n, l), -1)]))
            facs.append((m, [(_unit(n), 1), (_unit(n, m, tau=1), 1), (_unit(n, l, m), 1)]))
            facs.append((m, [(_unit(n, tau=1), 1), (_unit(n, l), 1), (_unit(n, m), 1)]))
        if odd:
            facs.append((m, [(_unit(n), 1), (_unit(n, m, tau=1), 1), (_unit(n, m, m), 1)]))
    facs.sort(key=lambda f: (f[0], max(sum(s[:-1]) for s, _ in f[1])))
    return [f for _, f in facs]


def tau_bound(n: int, odd: bool) -> int:
    """Largest tau power the integrand can carry."""
    return n * (n - 1) + (n if odd else 0)


def canonical_caps(n: int, odd: bool) -> tuple[int, ...]:
    return tuple(2 * l - (1 if odd else 2) for l in range(1, n + 1))


def _grid_to_tau(cell) -> TauPoly:
    return TauPoly([int(x) for x in cell])


# -- dense route -----------------------------------------------------------------

def expand(caps: Sequence[int], odd: bool, backend: str | None = None):
    """Dense coefficient grid of the integrand truncated at ``caps``; last axis is tau."""
    n = len(caps)
    dims = tuple(c + 1 for c in caps) + (tau_bound(n, odd) + 1,)
    return expand_dense(dims, integrand_factors(n, odd), backend=backend)


@lru_cache(maxsize=None)
def _table(n: int, odd: bool):
    return expand(canonical_caps(n, odd), odd)


def _k(b: Sequence[int], odd: bool, method: str = "auto") -> TauPoly:
    b = ClosingIndex(b, odd).b
    if not b:
        return TauPoly.one()
    if any(x == 0 for x in b):
        return TauPoly.zero()
    n = len(b)
    exps = tuple(x - 1 for x in b)
    if method == "sparse":
        return _k_sparse(exps, odd)
    if method == "uncapped":
        return _k_sparse(exps, odd, capped=False)
    caps = canonical_caps(n, odd)
    if method in ("auto", "table") and all(e <= c for e, c in zip(exps, caps)):
        return _grid_to_tau(_table(n, odd)[exps])
    if method == "table":
        raise ValueError(f"{b} lies outside the canonical table")
    if method not in ("auto", "dense"):
        raise ValueError(f"unknown method {method!r}")
    return _grid_to_tau(expand(exps, odd)[exps])


def k_even(b: Sequence[int], method: str = "auto") -> TauPoly:
    """K_b(tau); ``method`` is auto, table, dense, sparse or uncapped."""
    return _k(b, False, method)


def k_odd(b: Sequence[int], method: str = "auto") -> TauPoly:
    """K'_b(tau), same extraction with the extra odd factor."""
    return _k(b, True, method)


def k_batch(bs: Sequence[Sequence[int]], odd: bool, jobs: int | None = None) -> list[TauPoly]:
    """Independent evaluations, order preserved."""
    return pmap(partial(_k, odd=odd), [tuple(b) for b in bs], jobs)


# -- sparse route (independent of the dense kernel) ------------------------------

def _k_sparse(exps: tuple[int, ...], odd: bool, capped: bool = True) -> TauPoly:
    n = len(exps)
    caps = exps if capped else None
    acc = MultiPoly.const(n, TauPoly.one(), caps)
    for factor in integrand_factors(n, odd):
        terms: dict[tuple[int, ...], TauPoly] = {}
        for shift, c in factor:
            e = shift[:-1]
            terms[e] = terms.get(e, TauPoly.zero()) + TauPoly.monomial(shift[-1], c)
        acc = acc * MultiPoly(n, terms, caps)
    c = acc.coeff(exps)
    return c if isinstance(c, TauPoly) else TauPoly.const(c)


# -- tau -> 0 and tau -> infinity ------------------------------------------------

class TauLimits(NamedTuple):
    valuation: int | None
    low: int | None
    degree: int
    top: int


def binom(a: int, k: int) -> int:
    if a < 0 or k < 0 or k > a:
        return 0
    return comb(a, k)


def _det(rows) -> int:
    return bareiss_det(rows) if rows else 1


def tau_limits_even(b: Sequence[int]) -> TauLimits:
    """Predicted lowest and highest terms of K_b from the binomial determinants."""
    b = tuple(b)
    n = len(b)
    low = _det([[binom(m - 1, b[l - 1] - m) for m in range(1, n + 1)] for l in range(1, n + 1)])
    top = _det([[binom(l - 1, b[l - 1] - m) for m in range(1, n + 1)] for l in range(1, n + 1)])
    return TauLimits(n * n - sum(b), low, sum(x - 1 for x in b), top)


def tau_limits_odd(b: Sequence[int]) -> TauLimits:
    """As for the even case; the small-tau data is withheld when some b_j = 2j."""
    b = tuple(b)
    n = len(b)
    top = _det([[binom(l, b[l - 1] - m) for m in range(1, n + 1)] for l in range(1, n + 1)])
    degree = sum(x - 1 for x in b)
    if any(x == 2 * j for j, x in enumerate(b, 1)):
        return TauLimits(None, None, degree, top)
    low = _det([[binom(m - 1, b[l - 1] - m) for m in range(1, n + 1)] for l in range(1, n + 1)])
    return TauLimits(n * (n - 1) - degree, low, degree, top)


def canonical_closings(n: int, odd: bool):
    """All strictly increasing b with 1 <= b_i <= 2i - 1 (even) or 2i (odd)."""
    slack = 0 if odd else 1

    def rec(prefix):
        i = len(prefix) + 1
        if i > n:
            yield tuple(prefix)
            return
        lo = prefix[-1] + 1 if prefix else 1
        for x in range(lo, 2 * i - slack + 1):
            prefix.append(x)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([])


def check_limits(b: Sequence[int], odd: bool) -> list[str]:
    """Disagreements between K_b and its predicted end terms (empty when they match)."""
    k = k_odd(b) if odd else k_even(b)
    lim = tau_limits_odd(b) if odd else tau_limits_even(b)
    issues = []
    if k.degree != lim.degree or k.leading() != lim.top:
        issues.append(f"top term of {k} vs tau^{lim.degree}*{lim.top}")
    if lim.valuation is not None:
        if lim.low == 0:
            # the prediction vanishes, so the true valuation only has to lie above it
            if k and k.valuation <= lim.valuation:
                issues.append(f"low term of {k} should be above tau^{lim.valuation}")
        elif k.valuation != lim.valuation or k.lowest() != lim.low:
            issues.append(f"low term of {k} vs tau^{lim.valuation}*{lim.low}")
    return issues
