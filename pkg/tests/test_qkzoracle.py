import pytest

from qkzstrip import qkzoracle as qo
from qkzstrip.exactalg import LaurentScalar
from qkzstrip.linkpat import pi_max, rainbow
from qkzstrip.psivec import psi

q = LaurentScalar.q


def test_seed():
    assert qo.seed_psi0(1).at_ones() == 1 and qo.seed_psi0(1).total_degree() == 0
    s = qo.seed_psi0(2)
    d = q(1) - q(-1)
    assert s.at_ones() == q(3) * d ** 4 * (q(1) + q(-1))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_qkz_system(n):
    rep = qo.verify_qkz_system(qo.solve_exchange(n))
    assert rep.ok, rep.failures


def test_degrees():
    for n in (1, 2, 3):
        v = qo.solve_exchange(n)
        assert all(f.total_degree() == 3 * n * (n - 1) for f in v.components.values())
        assert qo.per_variable_degree(v) == 2 * n - 2


def test_printed_reflection_prefactor_fails():
    assert not qo.check_printed_reflection(qo.solve_exchange(2))


def test_opposite_exchange_sign_fails():
    v = qo.solve_exchange(2, sign=-1)
    assert any(qo.exchange_residuals(v, i) for i in range(1, 4))


def test_n2_ratio():
    h = qo.homogeneous(qo.solve_exchange(2))
    tau = -q(1) - q(-1)
    assert h[pi_max(4)] * tau == h[rainbow(4)] * (1 + tau * tau)


@pytest.mark.parametrize("N", [3, 4, 5, 6])
def test_homogeneous_match(N):
    n = (N + 1) // 2
    v = qo.solve_exchange(n)
    w = qo.odd_reduce(v) if N % 2 else v
    c = qo.homogeneous_constant(w, psi(N).components)
    d = q(1) - q(-1)
    consts = {3: q(6) * d ** 2, 4: -q(3) * d ** 4, 5: -q(15) * d ** 8, 6: -q(9) * d ** 12}
    assert c == consts[N]


def test_residues():
    assert qo.residue_eval_openpsi((1,)) == qo.seed_psi0(1)
    assert qo.residue_eval_openpsi((1, 2)) == qo.seed_psi0(2)
    v = qo.solve_exchange(2)
    assert qo.residue_eval_openpsi((1, 3)) == qo.contract_with_basis(v, (1, 3))


def test_r_matrix():
    assert qo.check_unitarity(4, 2)
    assert qo.check_yang_baxter(4, 1)


def test_size_guard():
    with pytest.raises(ValueError):
        qo.solve_exchange(4)
