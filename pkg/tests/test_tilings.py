import pytest

from qkzstrip.ctengine import canonical_closings
from qkzstrip.exactalg import TauPoly
from qkzstrip.tilingsoracle import (
    asm_count, count_nilp, monotone_triangles, nilp_det, t_poly, triangle_to_asm, vsasm_count, x_to_tau_squared,
)


def test_asm_counts():
    assert [asm_count(k) for k in range(1, 6)] == [1, 2, 7, 42, 429]


@pytest.mark.slow
def test_asm_count_size7():
    assert asm_count(7) == 218348


def test_vsasm_counts():
    assert [vsasm_count(k) for k in (1, 3, 5)] == [1, 1, 3]


@pytest.mark.slow
def test_vsasm_size7():
    assert vsasm_count(7) == 26


def test_asm_shape():
    for tri in monotone_triangles(4):
        m = triangle_to_asm(tri, 4)
        assert all(sum(r) == 1 for r in m)
        assert all(sum(m[i][j] for i in range(4)) == 1 for j in range(4))


def test_guards():
    with pytest.raises(ValueError):
        vsasm_count(9)
    with pytest.raises(ValueError):
        vsasm_count(4)
    with pytest.raises(ValueError):
        count_nilp((1, 2, 3, 4, 5))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_lgv(n):
    for b in canonical_closings(n, False):
        assert count_nilp(b) == nilp_det(b)


def test_nilp_totals():
    assert [sum(count_nilp(b) for b in canonical_closings(n, False)) for n in range(1, 5)] == [1, 2, 7, 42]


def test_arrays():
    assert t_poly(1, 1) == 1
    assert t_poly(2, 1) == TauPoly([2, 1])
    assert t_poly(2, 0) == TauPoly([1, 1])
    assert x_to_tau_squared(TauPoly([2, 1])) == TauPoly([2, 0, 1])
