"""Identity checks behind the determinant sum rules and the e_i action.

* the antisymmetrized constant-term identity, compared on the part of the
  Laurent expansion with non-positive exponents;
* the antisymmetrization of the q-Vandermonde;
* two rational identities, evaluated at exact rational points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..exactalg import LaurentScalar, MultiPoly, TauPoly, antisymmetrize, u_q


@dataclass
class LemmaReport:
    checked: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, label: str, good: bool) -> None:
        (self.checked if good else self.failures).append(label)


# -- constant-term identity ---------------------------------------------------

def _shift_vec(n: int, i: int, j: int | None = None) -> tuple[int, ...]:
    e = [0] * n
    e[i] += 1
    if j is not None:
        e[j] += 1
    return tuple(e)


def antisym_ct_sides(n: int) -> tuple[MultiPoly, MultiPoly]:
    """Both sides of the identity, multiplied through by prod u_m^(2n-2).

    After the shift every exponent is non-negative, and "non-positive part"
    becomes "exponents at most 2n-2 in every variable", which is exactly
    what the caps keep.
    """
    S = 2 * n - 2
    caps = (S,) * n
    one = TauPoly.one()

    def lin(terms):
        out: dict[tuple[int, ...], TauPoly] = {}
        for e, c in terms:
            out[e] = out.get(e, TauPoly.zero()) + c
        return MultiPoly(n, out)

    zero = (0,) * n
    inner = MultiPoly.monomial(tuple(S + 2 - 2 * m for m in range(1, n + 1)), one)
    for m in range(n):
        for l in range(m):
            inner = inner * lin([(zero, one), (_shift_vec(n, m), TauPoly.monomial(1)),
                                 (_shift_vec(n, l, m), one)])
    lhs = antisymmetrize(inner, list(range(n))).with_caps(caps)
    for m in range(n):
        for l in range(m + 1):
            lhs = lhs * lin([(zero, one), (_shift_vec(n, l, m), -one)]).with_caps(caps)
    # (1/u_m - 1/u_l)(tau + 1/u_l + 1/u_m) times u_l^2 u_m^2 for each pair
    rhs = MultiPoly.const(n, one)
    for m in range(n):
        for l in range(m):
            diff = lin([(_shift_vec(n, l), one), (_shift_vec(n, m), -one)])
            plus = lin([(_shift_vec(n, l, m), TauPoly.monomial(1)),
                        (_shift_vec(n, m), one), (_shift_vec(n, l), one)])
            rhs = rhs * diff * plus
    # each variable picked up 2 per pair it sits in; top up to the common shift S
    pad = tuple(S - 2 * (n - 1) for _ in range(n))
    rhs = rhs * MultiPoly.monomial(pad, one)
    return lhs, rhs.with_caps(caps)


def check_antisym_ct(n: int) -> bool:
    lhs, rhs = antisym_ct_sides(n)
    return lhs == rhs


# -- q-Vandermonde -------------------------------------------------------------

def antiqvander_sides(k: int) -> tuple[MultiPoly, MultiPoly]:
    q, qi = LaurentScalar.q(1), LaurentScalar.q(-1)
    one = LaurentScalar.const(1)
    dq = MultiPoly.const(k, one)
    van = MultiPoly.const(k, one)
    for m in range(k):
        for l in range(m):
            dq = dq * MultiPoly.linear(k, [(l, q), (m, -qi)])
            van = van * MultiPoly.linear(k, [(m, one), (l, -one)])
    lhs = antisymmetrize(dq, list(range(k)))
    c = LaurentScalar.const((-1) ** (k * (k - 1) // 2))
    for j in range(1, k):
        c = c * u_q(j)
    return lhs, van * c


def check_antiqvander(k: int) -> bool:
    lhs, rhs = antiqvander_sides(k)
    return lhs == rhs


# -- rational identities --------------------------------------------------------

def u_frac(p: int, q: Fraction) -> Fraction:
    """U_p at a numeric q, via (q^(p+1) - q^(-p-1)) / (q - 1/q)."""
    return (q ** (p + 1) - q ** (-p - 1)) / (q - 1 / q)


def _ratio(q, a, b):
    return (q * a - b / q) / (a - b)


def phi(us, q: Fraction) -> Fraction:
    k = len(us)
    total = Fraction(0)
    for m in range(k):
        prod = Fraction(1)
        for l in range(k):
            if l != m:
                prod *= _ratio(q, us[m], us[l])
        total += prod
    return total


def lemafu_lhs(us, z, q: Fraction) -> Fraction:
    p = len(us)
    f = [(u - z) / (q * u - z / q) for u in us]
    prod = Fraction(1)
    for x in f:
        prod *= x
    s = Fraction(0)
    for j in range(p):
        term = f[j]
        for l in range(p):
            if l != j:
                term *= _ratio(q, us[j], us[l])
        s += term
    return prod - s + u_frac(p - 2, q)


def _distinct_points(rng: random.Random, k: int) -> list[Fraction]:
    pts: set[Fraction] = set()
    while len(pts) < k:
        pts.add(Fraction(rng.randint(-40, 40), rng.randint(1, 9)))
    return sorted(pts)


def check_rational(k_max: int = 6, q: Fraction = Fraction(2), samples: int = 3,
                   seed: int = 0) -> list[str]:
    """Failures of the phi and f-sum identities on random rational points."""
    rng = random.Random(seed)
    bad = []
    for k in range(1, k_max + 1):
        for _ in range(samples):
            us = _distinct_points(rng, k)
            if phi(us, q) != u_frac(k - 1, q):
                bad.append(f"phi_{k} at u={us}")
            z = Fraction(rng.randint(-30, 30), rng.randint(1, 7))
            if any(q * u == z / q for u in us):
                continue
            if lemafu_lhs(us, z, q) != 0:
                bad.append(f"f-sum identity p={k} at u={us}, z={z}")
    return bad


def verify_lemma_suite(max_n: int = 4, max_k: int = 5, max_p: int = 6) -> LemmaReport:
    rep = LemmaReport()
    for n in range(1, max_n + 1):
        rep.record(f"constant-term antisymmetrization n={n}", check_antisym_ct(n))
    for k in range(1, max_k + 1):
        rep.record(f"q-Vandermonde antisymmetrization k={k}", check_antiqvander(k))
    bad = check_rational(max_p)
    rep.record(f"rational identities p,k<={max_p}", not bad)
    rep.failures.extend(bad)
    return rep

