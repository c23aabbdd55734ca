"""Ring-generic helpers: exact division, determinants, antisymmetrization."""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

from .multipoly import MultiPoly, coeff_exact_div


def poly_exact_div(num, den):
    """num / den, which must divide exactly in the common ring.

    Works for ints, TauPoly, BiPoly, LaurentScalar and MultiPoly; a nonzero
    remainder raises :class:`ExactDivisionError` carrying it.
    """
    if isinstance(den, int) and den == 1:
        return num
    return coeff_exact_div(num, den)


def perm_sign(perm: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _is_zero(x) -> bool:
    return not x


def bareiss_det(matrix: Sequence[Sequence], one=1):
    """Determinant by fraction-free (Bareiss) elimination.

    Every division performed is exact over an integral domain; a failure
    means the input was not a matrix over one.  ``one`` is returned for the
    empty matrix.
    """
    n = len(matrix)
    if n == 0:
        return one
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    if n == 1:
        return matrix[0][0]
    if n == 2:
        (a, b), (c, d) = matrix
        return a * d - b * c
    m = [list(row) for row in matrix]
    sign = 1
    prev = None
    for k in range(n - 1):
        if _is_zero(m[k][k]):
            for r in range(k + 1, n):
                if not _is_zero(m[r][k]):
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return one * 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                val = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = val if prev is None else poly_exact_div(val, prev)
            m[i][k] = 0
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def cofactor_det(matrix: Sequence[Sequence], one=1):
    """Laplace expansion along the first row; the independent check for Bareiss."""
    n = len(matrix)
    if n == 0:
        return one
    if n == 1:
        return matrix[0][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = matrix[0][j] * cofactor_det(minor, one)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def leibniz_det(matrix: Sequence[Sequence], one=1):
    n = len(matrix)
    total = None
    for p in permutations(range(n)):
        term = one
        for i in range(n):
            term = term * matrix[i][p[i]]
        if perm_sign(p) < 0:
            term = -term
        total = term if total is None else total + term
    return one if total is None else total


def antisymmetrize(p: MultiPoly, vars: Sequence[int]) -> MultiPoly:
    """sum over permutations s of ``vars`` of sign(s) * p(permuted variables)."""
    vars = list(vars)
    acc = MultiPoly(p.nvars)
    for perm in permutations(range(len(vars))):
        full = list(range(p.nvars))
        for slot, target in enumerate(perm):
            full[vars[slot]] = vars[target]
        term = p.permute(full)
        acc = acc + term if perm_sign(perm) > 0 else acc - term
    return acc
