import pytest

from qkzstrip.exactalg import TauPoly
from qkzstrip.linkpat import LinkPattern, enumerate_patterns, pi_max, rainbow
from qkzstrip.psivec import check_properties, max_component, psi, psi_even, psi_odd
from qkzstrip.sumrules import EVEN, ODD, gen_direct, maxcomp_det

T = TauPoly


def lp(pair):
    return LinkPattern(tuple(pair))


def test_small_sizes():
    assert list(psi(2).components.values()) == [1]
    v = psi(4)
    assert v[rainbow(4)] == T([0, 1]) and v[pi_max(4)] == T([1, 0, 1])
    assert psi(3)[lp((0, 3, 2))] == 1 and psi(3)[lp((2, 1, 0))] == T([0, 1])


def test_frozen_size6():
    v = psi(6)
    assert v[lp((6, 5, 4, 3, 2, 1))] == T([0, 0, 0, 1])
    assert v[lp((6, 3, 2, 5, 4, 1))] == T([0, 0, 2, 0, 2])
    assert v[lp((4, 3, 2, 1, 6, 5))] == T([0, 2, 0, 2, 0, 1])
    assert v[lp((2, 1, 6, 5, 4, 3))] == T([0, 1, 0, 3, 0, 1])
    assert v[lp((2, 1, 4, 3, 6, 5))] == T([1, 0, 5, 0, 4, 0, 1])


def test_frozen_size5():
    v = psi(5)
    assert v[lp((0, 5, 4, 3, 2))] == T([0, 1])
    assert v[lp((0, 3, 2, 5, 4))] == T([1, 0, 2])
    assert v[lp((4, 3, 2, 1, 0))] == T([0, 0, 0, 1])
    assert v[lp((2, 1, 0, 5, 4))] == T([0, 2, 0, 1])
    assert v[lp((2, 1, 4, 3, 0))] == T([0, 0, 2, 0, 1])


@pytest.mark.parametrize("N", range(1, 12))
def test_properties(N):
    rep = check_properties(psi(N))
    assert rep.ok, rep.failures
    assert rep.nonnegative


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_sum_rules(n):
    assert psi_even(n).total() == gen_direct(n, EVEN).at_t(1)
    assert psi_odd(n).total() == gen_direct(n, ODD).at_t(1)
    assert max_component(2 * n) == maxcomp_det(n)


def test_even_sums_at_one():
    assert [psi(2 * n).total()(1) for n in range(1, 6)] == [1, 3, 26, 646, 45885]


def test_mirror_symmetry_at_one():
    for N in range(1, 10):
        v = psi(N)
        assert all(v[p](1) == v[p.mirror()](1) for p in enumerate_patterns(N))


def test_parallel_assembly_is_identical():
    assert psi_even(3, jobs=2).components == psi(6).components


def test_rejects_bad_sizes():
    with pytest.raises(ValueError):
        psi_even(0)
    with pytest.raises(ValueError):
        psi_odd(-1)
