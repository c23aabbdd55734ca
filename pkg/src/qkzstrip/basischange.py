"""Change of basis between link patterns and arch-opening sequences.

For a weakly increasing sequence a and a pattern p of size 2n the entry is
a product of Chebyshev factors U_mu, one per arch (i, j) of p, with
mu = #{a_l : i <= a_l < j} + (i - j - 1) / 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, partial
from typing import Sequence

from .exactalg import TAU, TauPoly, cheb_u, cheb_u_ext
from .linkpat import LinkPattern, apply_e, enumerate_patterns, MAX
from .parallel import pmap


def _check_seq(a: Sequence[int], n: int) -> tuple[int, ...]:
    a = tuple(a)
    if len(a) != n:
        raise ValueError(f"sequence {a} must have length {n}")
    if any(x > y for x, y in zip(a, a[1:])):
        raise ValueError(f"sequence {a} is not weakly increasing")
    if a and not (1 <= a[0] and a[-1] <= 2 * n - 1):
        raise ValueError(f"sequence {a} leaves the range 1..{2 * n - 1}")
    return a


def mu(a: Sequence[int], i: int, j: int) -> int:
    return sum(1 for x in a if i <= x < j) + (i - j - 1) // 2


def c_entry(a: Sequence[int], p: LinkPattern, *, check: bool = True) -> TauPoly:
    """Closed-form entry C_{a, p}.

    ``check=False`` admits sequences with entries 0 or 2n, which the
    expansion of the e_i action produces at the boundary.
    """
    if p.size % 2:
        raise ValueError("the change of basis is defined for even sizes")
    if check:
        a = _check_seq(a, p.n)
    out = TauPoly.one()
    for i, j in p.arches:
        m = mu(a, i, j)
        if m < 0:
            return TauPoly.zero()
        out = out * cheb_u(m)
        if not out:
            return out
    return out


def c_entry_by_removal(a: Sequence[int], p: LinkPattern) -> TauPoly:
    """Same entry by repeatedly stripping little arches.

    A little arch (i, i+1) holding m marks contributes U_{m-1}; the points
    i, i+1 disappear, and the marks left at i-1 and i+1 plus m-1 fresh ones
    merge onto the segment that now joins the old neighbours.
    """
    if p.size % 2:
        raise ValueError("the change of basis is defined for even sizes")
    counts: dict[int, int] = {}
    for x in a:
        counts[x] = counts.get(x, 0) + 1
    pair = list(p.pair)
    out = TauPoly.one()
    while pair:
        i = next(k for k in range(1, len(pair)) if pair[k - 1] == k + 1)
        m = counts.get(i, 0)
        if m == 0:
            return TauPoly.zero()
        out = out * cheb_u(m - 1)
        merged = counts.get(i - 1, 0) + counts.get(i + 1, 0) + m - 1
        new_counts = {x: c for x, c in counts.items() if x < i - 1}
        if merged:
            new_counts[i - 1] = merged
        for x, c in counts.items():
            if x >= i + 2:
                new_counts[x - 2] = new_counts.get(x - 2, 0) + c
        counts = new_counts
        new_pair = []
        for k, q in enumerate(pair, 1):
            if k in (i, i + 1):
                continue
            new_pair.append(q - 2 if q > i + 1 else q)
        pair = new_pair
    return out


@dataclass(frozen=True)
class BasisMatrix:
    """Square matrix over TauPoly indexed by patterns of size 2n.

    Rows are labelled by the opening sequence of ``index[r]``, columns by the
    pattern ``index[c]``; both follow the lexicographic order on openings.
    """

    n: int
    index: tuple[LinkPattern, ...]
    entries: tuple[tuple[TauPoly, ...], ...]

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]

    @property
    def dim(self) -> int:
        return len(self.index)

    def is_lower_unitriangular(self) -> bool:
        for r, row in enumerate(self.entries):
            if row[r] != 1:
                return False
            if any(row[c] for c in range(r + 1, self.dim)):
                return False
        return True

    def __matmul__(self, other: "BasisMatrix") -> "BasisMatrix":
        if self.index != other.index:
            raise ValueError("index mismatch")
        d = self.dim
        rows = []
        for r in range(d):
            row = []
            for c in range(d):
                acc = TauPoly.zero()
                for k in range(d):
                    x = self.entries[r][k]
                    if x:
                        y = other.entries[k][c]
                        if y:
                            acc = acc + x * y
                row.append(acc)
            rows.append(tuple(row))
        return BasisMatrix(self.n, self.index, tuple(rows))

    def is_identity(self) -> bool:
        return all(
            self.entries[r][c] == (1 if r == c else 0) for r in range(self.dim) for c in range(self.dim)
        )

    def apply(self, vec: Sequence[TauPoly]) -> list[TauPoly]:
        out = []
        for row in self.entries:
            acc = TauPoly.zero()
            for x, v in zip(row, vec):
                if x and v:
                    acc = acc + x * v
            out.append(acc)
        return out


def _row(a: tuple[int, ...], n: int) -> tuple[TauPoly, ...]:
    return tuple(c_entry(a, p) for p in enumerate_patterns(2 * n))


def build_matrix(n: int, jobs: int | None = None) -> BasisMatrix:
    if n < 1:
        raise ValueError("n must be positive")
    return _build_matrix(n, jobs or 1)


@lru_cache(maxsize=None)
def _build_matrix(n: int, jobs: int) -> BasisMatrix:
    index = enumerate_patterns(2 * n)
    rows = pmap(partial(_row, n=n), [p.openings() for p in index], jobs)
    return BasisMatrix(n, index, tuple(rows))


class TriangularityError(ArithmeticError):
    pass


def invert(C: BasisMatrix) -> BasisMatrix:
    """Inverse of a lower unitriangular matrix by forward substitution."""
    d = C.dim
    if not C.is_lower_unitriangular():
        raise TriangularityError("matrix is not lower unitriangular; inversion would need division")
    X = [[TauPoly.zero()] * d for _ in range(d)]
    for j in range(d):
        X[j][j] = TauPoly.one()
        for i in range(j + 1, d):
            acc = TauPoly.zero()
            for k in range(j, i):
                c = C.entries[i][k]
                if c and X[k][j]:
                    acc = acc + c * X[k][j]
            X[i][j] = -acc
    return BasisMatrix(C.n, C.index, tuple(tuple(r) for r in X))


@lru_cache(maxsize=None)
def inverse_matrix(n: int) -> BasisMatrix:
    return invert(build_matrix(n))


# -- action of e_i in the opening basis -------------------------------------

def _replace(a: tuple[int, ...], old: int, new: int) -> tuple[int, ...]:
    """Replace one occurrence of ``old`` (the first for new < old, else the last)."""
    lst = list(a)
    idx = lst.index(old) if new < old else len(lst) - 1 - lst[::-1].index(old)
    lst[idx] = new
    return tuple(sorted(lst))


def e_action_sides(n: int, i: int, a: Sequence[int]) -> tuple[dict, dict]:
    """Both sides of the e_i formula as {pattern: coefficient}."""
    a = tuple(a)
    pats = enumerate_patterns(2 * n)
    k = a.count(i)
    lhs = {}
    for p in pats:
        img, w, case = apply_e(i, p)
        coeff = c_entry(a, img, check=False)
        if case == MAX:
            coeff = coeff * TAU
        lhs[p] = coeff
    rhs = {p: TauPoly.zero() for p in pats}
    if k:
        terms = [(cheb_u_ext(k - 1) * cheb_u_ext(k - 4), a)]
        c3 = -(cheb_u_ext(k - 1) * cheb_u_ext(k - 3))
        terms.append((c3, _replace(a, i, i - 1)))
        terms.append((c3, _replace(a, i, i + 1)))
        if k >= 2:
            both = _replace(_replace(a, i, i - 1), i, i + 1)
            terms.append((cheb_u_ext(k - 1) * cheb_u_ext(k - 2), both))
        for coeff, seq in terms:
            if not coeff:
                continue
            for p in pats:
                e = c_entry(seq, p, check=False)
                if e:
                    rhs[p] = rhs[p] + coeff * e
    return lhs, rhs


def verify_e_action(n: int, i: int, a: Sequence[int]) -> list[LinkPattern]:
    """Patterns at which the two sides differ (empty list means equality)."""
    lhs, rhs = e_action_sides(n, i, a)
    return [p for p in lhs if lhs[p] != rhs[p]]


def weak_sequences(n: int):
    """Weakly increasing a with 1 <= a_j <= 2j - 1."""

    def rec(prefix):
        j = len(prefix) + 1
        if j > n:
            yield tuple(prefix)
            return
        lo = prefix[-1] if prefix else 1
        for x in range(lo, 2 * j):
            prefix.append(x)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([])


# -- Chebyshev identities behind the e_i action ------------------------------

def cheb_case_identities(k: int, p: int, r: int) -> dict[str, bool]:
    U = cheb_u_ext
    A = U(k - 1) * U(k - 4) - TAU == U(k - 2) * U(k - 3)
    lhs_a = TAU * U(k - 1)
    rhs_a = (U(k - 1) * U(k - 4) * U(k - 1) - U(k - 1) * U(k - 3) * U(k - 2) * 2
             + U(k - 1) * U(k - 2) * U(k - 3))
    B_l = U(k - 1) * U(r - 1)
    B_r = (U(k - 1) * U(k - 4) * U(p - 1) * U(k + p + r - 2)
           - U(k - 1) * U(k - 3) * U(p - 1) * U(k + p + r - 3)
           - U(k - 1) * U(k - 3) * U(p) * U(k + p + r - 2)
           + U(k - 1) * U(k - 2) * U(p) * U(k + p + r - 3))
    C_l = U(k - 1) * U(k + p + r - 2)
    C_r = (U(k - 1) * U(k - 4) * U(p - 1) * U(r - 1)
           - U(k - 1) * U(k - 3) * U(p) * U(r - 1)
           - U(k - 1) * U(k - 3) * U(p - 1) * U(r)
           + U(k - 1) * U(k - 2) * U(p) * U(r))
    return {"product": A, "little_arch": lhs_a == rhs_a, "two_openings": B_l == B_r,
            "closing_opening": C_l == C_r}


# -- structural checks ---------------------------------------------------------

def degree_law_failures(n: int) -> list[str]:
    """deg C_{a(alpha), pi} = h(pi, alpha) - h(pi, pi) on every nonzero entry."""
    from .linkpat import h_weight

    C = build_matrix(n)
    bad = []
    for r, alpha in enumerate(C.index):
        for c, p in enumerate(C.index):
            e = C[r, c]
            if e and e.degree != h_weight(p, alpha) - h_weight(p, p):
                bad.append(f"C[{alpha}, {p}] has degree {e.degree}")
    return bad


def route_mismatches(n: int) -> list[tuple[LinkPattern, LinkPattern]]:
    """Entries where the closed form and the arch-removal route disagree."""
    pats = enumerate_patterns(2 * n)
    return [(a, p) for a in pats for p in pats
            if c_entry(a.openings(), p) != c_entry_by_removal(a.openings(), p)]
