import pytest

from qkzstrip.basischange import (
    build_matrix, c_entry, c_entry_by_removal, cheb_case_identities, degree_law_failures, inverse_matrix,
    route_mismatches, verify_e_action, weak_sequences,
)
from qkzstrip.exactalg import TauPoly
from qkzstrip.linkpat import enumerate_patterns, pi_max, rainbow


def test_identity_at_n2():
    C = build_matrix(2)
    assert C.is_identity()


def test_single_off_diagonal_entry_at_n3():
    C = build_matrix(3)
    off = [(r, c) for r in range(C.dim) for c in range(C.dim) if r != c and C[r, c]]
    assert len(off) == 1
    r, c = off[0]
    assert C[r, c] == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_unitriangular_and_inverse(n):
    C, Ci = build_matrix(n), inverse_matrix(n)
    assert C.is_lower_unitriangular()
    assert (C @ Ci).is_identity() and (Ci @ C).is_identity()


def test_triangular_at_n5():
    assert build_matrix(5).is_lower_unitriangular()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_routes_and_degree_law(n):
    assert route_mismatches(n) == []
    assert degree_law_failures(n) == []


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_inverse_has_integer_polynomial_entries(n):
    Ci = inverse_matrix(n)
    assert all(isinstance(c, int) for row in Ci.entries for x in row for c in x.coeffs)


def test_closed_form_examples():
    # rainbow openings against the all-little-arch pattern: one U_1 per nested level
    assert c_entry((1, 2), pi_max(4)) == TauPoly.zero()
    assert c_entry((1, 2), rainbow(4)) == 1
    assert c_entry_by_removal((1, 3), pi_max(4)) == 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_e_action_exhaustive(n):
    for i in range(1, 2 * n):
        for a in weak_sequences(n):
            assert verify_e_action(n, i, a) == []


def test_chebyshev_case_identities():
    for k in range(9):
        for p in range(9):
            for r in range(9):
                assert all(cheb_case_identities(k, p, r).values()), (k, p, r)


def test_weak_sequences_count():
    # weakly increasing a with a_j <= 2j-1 are counted by the Catalan numbers times ...
    assert sum(1 for _ in weak_sequences(1)) == 1
    assert sum(1 for _ in weak_sequences(2)) == 3
