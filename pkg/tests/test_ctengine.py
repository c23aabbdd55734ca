import numpy as np
import pytest

from qkzstrip.ctengine import (
    ClosingIndex, available_backends, canonical_caps, canonical_closings, check_limits, expand, k_batch,
    k_even, k_odd, tau_limits_even, verify_lemma_suite,
)
from qkzstrip.ctengine.lemmas import check_antiqvander, check_antisym_ct, check_rational
from qkzstrip.exactalg import TauPoly
from qkzstrip.tilingsoracle import count_nilp

# frozen K values; each was cross-checked against the sparse route
EVEN = {
    (1, 2): (0, 1),
    (1, 3): (1, 0, 1),
    (1, 2, 3): (0, 0, 0, 1),
    (1, 2, 4): (0, 0, 2, 0, 2),
    (1, 2, 5): (0, 1, 0, 3, 0, 1),
    (1, 3, 5): (1, 0, 5, 0, 4, 0, 1),
}
ODD = {
    (1,): (1,),
    (2,): (0, 1),
    (1, 2): (0, 1),
    (1, 3): (1, 0, 2),
    (1, 4): (0, 2, 0, 1),
    (2, 3): (0, 1, 0, 1),
    (2, 4): (0, 0, 2, 0, 1),
}


@pytest.mark.parametrize("b,coeffs", EVEN.items())
def test_frozen_even(b, coeffs):
    assert k_even(b) == TauPoly(coeffs)


@pytest.mark.parametrize("b,coeffs", ODD.items())
def test_frozen_odd(b, coeffs):
    assert k_odd(b) == TauPoly(coeffs)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_routes_agree(n):
    for odd in (False, True):
        for b in canonical_closings(n, odd):
            k = k_odd if odd else k_even
            ref = k(b, method="table")
            assert k(b, method="dense") == ref
            assert k(b, method="sparse") == ref
            if n <= 2:
                assert k(b, method="uncapped") == ref


def test_backends_agree():
    for n in range(1, 5):
        for odd in (False, True):
            grids = [expand(canonical_caps(n, odd), odd, backend=b) for b in available_backends()]
            assert all(np.array_equal(grids[0], g) for g in grids[1:])


def test_batch_matches_serial():
    bs = list(canonical_closings(3, False))
    assert k_batch(bs, odd=False, jobs=2) == [k_even(b) for b in bs]


def test_closing_index():
    assert ClosingIndex((1, 3)).is_canonical()
    assert not ClosingIndex((1, 4)).is_canonical()
    assert ClosingIndex((1, 4), odd=True).is_canonical()
    with pytest.raises(ValueError):
        ClosingIndex((-1, 2))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_tau_limits(n):
    for odd in (False, True):
        for b in canonical_closings(n, odd):
            assert check_limits(b, odd) == []


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_low_coefficient_counts_paths(n):
    for b in canonical_closings(n, False):
        assert tau_limits_even(b).low == count_nilp(b)


def test_lemmas():
    for n in range(1, 5):
        assert check_antisym_ct(n)
    for k in range(1, 6):
        assert check_antiqvander(k)
    assert check_rational(6) == []
    assert verify_lemma_suite().ok


@pytest.mark.parametrize("n", [1, 2, 3])
def test_odd_even_bridge(n):
    # top coefficients match; the tau powers are offset by exactly n
    for b in canonical_closings(n, True):
        odd, even = k_odd(b), k_even((1,) + tuple(x + 1 for x in b))
        assert odd.leading() == even.leading()
        assert even.degree - odd.degree == n
