"""Brute-force enumerations used as ground truth.

Alternating sign matrices are generated as monotone triangles; the NILP
count walks every tuple of lattice paths; triangular arrays are built cell
by cell.  Nothing here shares code with the constant-term pipeline.
"""

from __future__ import annotations

from itertools import product
from math import comb
from typing import Iterator, Sequence

from .exactalg import TauPoly, bareiss_det

MAX_ASM_SIZE = 7
MAX_NILP_N = 4
MAX_ARRAY_N = 5


# -- alternating sign matrices ----------------------------------------------------

def _rows_above(row: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Rows of length len(row)-1 interlacing ``row`` in a monotone triangle."""
    k = len(row) - 1

    def rec(j, prev, acc):
        if j == k:
            yield tuple(acc)
            return
        lo = max(row[j], prev + 1)
        for x in range(lo, row[j + 1] + 1):
            acc.append(x)
            yield from rec(j + 1, x, acc)
            acc.pop()

    yield from rec(0, 0, [])


def monotone_triangles(size: int, symmetric: bool = False) -> Iterator[list[tuple[int, ...]]]:
    """All monotone triangles with bottom row 1..size, listed bottom-up.

    With ``symmetric`` only triangles whose rows are invariant under
    j -> size+1-j survive; these are the vertically symmetric ASMs.
    """
    def is_sym(row):
        return set(row) == {size + 1 - x for x in row}

    def rec(rows):
        if len(rows[-1]) == 1:
            yield list(rows)
            return
        for r in _rows_above(rows[-1]):
            if symmetric and not is_sym(r):
                continue
            rows.append(r)
            yield from rec(rows)
            rows.pop()

    yield from rec([tuple(range(1, size + 1))])


def triangle_to_asm(rows: Sequence[tuple[int, ...]], size: int) -> list[list[int]]:
    top_down = [()] + list(reversed(rows))
    mat = []
    for prev, cur in zip(top_down, top_down[1:]):
        mat.append([(j in cur) - (j in prev) for j in range(1, size + 1)])
    return mat


def _guard(size: int) -> None:
    if size < 1:
        raise ValueError("size must be positive")
    if size > MAX_ASM_SIZE:
        raise ValueError(f"size {size} exceeds the enumeration guard {MAX_ASM_SIZE}")


def asm_count(size: int) -> int:
    _guard(size)
    return sum(1 for _ in monotone_triangles(size))


def vsasm_count(size: int) -> int:
    """Vertically symmetric ASMs, found by filtering the full enumeration."""
    _guard(size)
    if size % 2 == 0:
        raise ValueError("vertically symmetric ASMs need odd size")
    count = 0
    for tri in monotone_triangles(size):
        mat = triangle_to_asm(tri, size)
        if all(row == row[::-1] for row in mat):
            count += 1
    return count


# -- non-intersecting lattice paths ---------------------------------------------

def _paths(start: tuple[int, int], end: tuple[int, int]) -> list[tuple[tuple[int, int], ...]]:
    """All north/east unit-step paths, as vertex tuples."""
    (x0, y0), (x1, y1) = start, end
    if x1 < x0 or y1 < y0:
        return []
    out = []

    def rec(x, y, acc):
        if (x, y) == (x1, y1):
            out.append(tuple(acc))
            return
        if x < x1:
            acc.append((x + 1, y))
            rec(x + 1, y, acc)
            acc.pop()
        if y < y1:
            acc.append((x, y + 1))
            rec(x, y + 1, acc)
            acc.pop()

    rec(x0, y0, [(x0, y0)])
    return out


def nilp_start(m: int) -> tuple[int, int]:
    return (m, -2 * m)


def nilp_end(b: int) -> tuple[int, int]:
    return (b, -1 - b)


def count_nilp(b: Sequence[int]) -> int:
    """Vertex-disjoint path families from start m to end b_m, counted one by one.

    Between start m and end b there are binom(m-1, b-m) paths, so the
    count must agree with det binom(m-1, b_l - m).
    """
    b = tuple(b)
    n = len(b)
    if n > MAX_NILP_N:
        raise ValueError(f"n={n} exceeds the enumeration guard {MAX_NILP_N}")
    families = [_paths(nilp_start(m), nilp_end(b[m - 1])) for m in range(1, n + 1)]
    count = 0
    for fam in product(*families):
        seen: set[tuple[int, int]] = set()
        ok = True
        for path in fam:
            if seen.intersection(path):
                ok = False
                break
            seen.update(path)
        count += ok
    return count


def nilp_det(b: Sequence[int]) -> int:
    n = len(b)
    rows = [[_binom(m - 1, b[l - 1] - m) for m in range(1, n + 1)] for l in range(1, n + 1)]
    return bareiss_det(rows) if rows else 1


def _binom(a: int, k: int) -> int:
    return comb(a, k) if 0 <= k <= a else 0


# -- triangular arrays ------------------------------------------------------------

def tri_arrays(n: int, variant: int) -> Iterator[dict[tuple[int, int], int]]:
    """Arrays a_ij (i, j >= 1, i + j <= n), rows and columns weakly decreasing.

    The first column obeys a_i1 <= n - i + 1 (variant 1) or n - i (variant 0).
    """
    if variant not in (0, 1):
        raise ValueError("variant must be 0 or 1")
    cells = [(i, j) for i in range(1, n) for j in range(1, n - i + 1)]

    def rec(k, a):
        if k == len(cells):
            yield dict(a)
            return
        i, j = cells[k]
        hi = n - i + variant if j == 1 else a[(i, j - 1)]
        if i > 1:
            hi = min(hi, a[(i - 1, j)])
        for v in range(hi + 1):
            a[(i, j)] = v
            yield from rec(k + 1, a)
        a.pop((i, j), None)

    yield from rec(0, {})


def t_poly(n: int, variant: int) -> TauPoly:
    """Generating polynomial in x (coefficients listed by power of x).

    A part a_ij contributes a factor x when a_ij <= j - 1.
    """
    if not 1 <= n <= MAX_ARRAY_N:
        raise ValueError(f"n must lie in 1..{MAX_ARRAY_N}")
    counts: dict[int, int] = {}
    for arr in tri_arrays(n, variant):
        w = sum(1 for (i, j), v in arr.items() if v <= j - 1)
        counts[w] = counts.get(w, 0) + 1
    return TauPoly([counts.get(k, 0) for k in range(max(counts) + 1)])


def x_to_tau_squared(p: TauPoly) -> TauPoly:
    """Substitute x = tau^2."""
    out = [0] * (2 * len(p.coeffs))
    for k, c in enumerate(p.coeffs):
        out[2 * k] = c
    return TauPoly(out)
