"""Refined sum rules K(t|tau) and K'(t|tau), each by two routes.

The direct route sums the constant-term components over closing sequences
b_i = 2i - 1 - eps_i (even) or 2i - eps_i (odd), weighting each by t^(sum eps).
The determinant route evaluates the closed binomial determinants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .ctengine import binom, k_even, k_odd
from .exactalg import BiPoly, TauPoly, bareiss_det

EVEN, ODD = "even", "odd"
IDENTITY, COMPLEMENTARY = "identity", "complementary"


class SumRuleMismatch(AssertionError):
    pass


def _check_parity(parity: str) -> str:
    if parity not in (EVEN, ODD):
        raise ValueError(f"parity must be {EVEN!r} or {ODD!r}, got {parity!r}")
    return parity


def gen_direct(n: int, parity: str) -> BiPoly:
    if n < 1:
        raise ValueError("n must be positive")
    odd = _check_parity(parity) == ODD
    k = k_odd if odd else k_even
    total = BiPoly.zero()
    for eps in product((0, 1), repeat=n):
        b = tuple(2 * i - (0 if odd else 1) - e for i, e in enumerate(eps, 1))
        val = k(b)
        if val:
            total = total + BiPoly.from_terms((sum(eps), j, c) for j, c in enumerate(val.coeffs))
    return total


def _tau_poly_det(terms_of, size: int, one):
    rows = [[terms_of(i, j) for j in range(1, size + 1)] for i in range(1, size + 1)]
    return bareiss_det(rows, one=one)


def _even_entry(i: int, j: int) -> BiPoly:
    terms = []
    for s in range(i, 2 * i + 1):
        a = binom(i, 2 * i - s)
        e = 2 * i + 2 * j - 2 * s
        if a and (binom(j, 2 * j - s + 1) or binom(j, 2 * j - s)):
            if e < 0:
                raise ArithmeticError("negative tau power in even determinant entry")
            terms.append((1, e + 1, a * binom(j, 2 * j - s + 1)))
            terms.append((0, e, a * binom(j, 2 * j - s)))
    return BiPoly.from_terms(terms)


def gen_det_even(n: int) -> BiPoly:
    if n < 1:
        raise ValueError("n must be positive")
    return _tau_poly_det(_even_entry, n - 1, BiPoly.one())


def _g_entry_shifted(l: int, m: int) -> BiPoly:
    """tau * g_{l,m}; the shift clears the tau^-1 that single terms may carry."""
    terms = []
    for r in range(l, 2 * l + 1):
        a = binom(l, r - l)
        e = 2 * l + 2 * m - 2 * r
        x, y = binom(m - 1, 2 * m - r), binom(m - 1, 2 * m - 1 - r)
        if a and (x or y):
            if e < 0:
                raise ArithmeticError("tau power below -1 in odd determinant entry")
            terms.append((0, e + 1, a * x))
            terms.append((1, e, a * y))
    return BiPoly.from_terms(terms)


def gen_det_odd_raw(n: int) -> BiPoly:
    """det g exactly as the closed form states it, before any convention map."""
    if n < 1:
        raise ValueError("n must be positive")
    shifted = _tau_poly_det(_g_entry_shifted, n, BiPoly.one())
    return shifted.exact_div(BiPoly.from_tau(TauPoly.monomial(n)))


def odd_convention(n: int) -> str:
    """The t-weighting under which det g equals the direct odd sum."""
    direct, det = gen_direct(n, ODD), gen_det_odd_raw(n)
    if det.at_t(1) != direct.at_t(1):
        raise SumRuleMismatch(f"odd routes differ at t=1 for n={n}")
    if det == direct:
        return IDENTITY
    if det == direct.reversed_t(n):
        return COMPLEMENTARY
    raise SumRuleMismatch(f"no t-convention reconciles the odd routes at n={n}")


def gen_det_odd(n: int) -> tuple[BiPoly, str]:
    """det g mapped onto the direct t-convention, plus the map applied."""
    conv = odd_convention(n)
    det = gen_det_odd_raw(n)
    return (det if conv == IDENTITY else det.reversed_t(n)), conv


def odd_convention_uniform(max_n: int) -> str:
    """The convention shared by every n up to ``max_n``; mixed answers are a failure."""
    seen = {odd_convention(n) for n in range(1, max_n + 1)}
    if len(seen) != 1:
        raise SumRuleMismatch(f"odd t-convention changes with n: {sorted(seen)}")
    return seen.pop()


# -- closed-form component determinants ---------------------------------------

def maxcomp_det(n: int) -> TauPoly:
    """The t = 0 determinant: the little-arch component."""
    def entry(i, j):
        acc = TauPoly.zero()
        for s in range(i, 2 * i + 1):
            c = binom(i, 2 * i - s) * binom(j, 2 * j - s)
            if c:
                acc = acc + TauPoly.monomial(2 * i + 2 * j - 2 * s, c)
        return acc

    return _tau_poly_det(entry, n - 1, TauPoly.one())


def rotcomp_det(n: int) -> TauPoly:
    """The top-t determinant."""
    def entry(i, j):
        acc = TauPoly.zero()
        for s in range(i, 2 * i + 1):
            c = binom(i, 2 * i - s) * binom(j, 2 * j - s + 1)
            if c:
                acc = acc + TauPoly.monomial(2 * i + 2 * j - 2 * s + 1, c)
        return acc

    return _tau_poly_det(entry, n - 1, TauPoly.one())


# -- reports -------------------------------------------------------------------

@dataclass(frozen=True)
class SumRuleReport:
    n: int
    parity: str
    direct: BiPoly
    determinant: BiPoly
    convention_map: str
    specializations: dict[str, TauPoly] = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return self.direct == self.determinant


def build_report(n: int, parity: str) -> SumRuleReport:
    parity = _check_parity(parity)
    direct = gen_direct(n, parity)
    if parity == EVEN:
        det, conv = gen_det_even(n), IDENTITY
    else:
        det, conv = gen_det_odd(n)
    if det.at_t(1) != direct.at_t(1):
        raise SumRuleMismatch(f"{parity} routes differ at t=1 for n={n}")
    rep = SumRuleReport(n, parity, direct, det, conv)
    rep.specializations.update(specialize(rep))
    return rep


def specialize(report: SumRuleReport) -> dict[str, TauPoly]:
    k = report.direct
    out: dict[str, TauPoly] = {}
    if report.parity == EVEN:
        out["K(0|tau)"] = k.at_t(0)
        out["K top-t coefficient"] = k.coeff_t(report.n - 1)
        out["K(1|tau)"] = k.at_t(1)
        out["K(1/tau|tau)"] = k.at_t_inverse_tau()
    else:
        out["K'(1|tau)"] = k.at_t(1)
        out["K'(tau|tau)"] = gen_det_odd_raw(report.n).at_t(TauPoly.monomial(1))
    return out
