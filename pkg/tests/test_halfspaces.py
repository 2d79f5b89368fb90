from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from clawpoly.errors import DimensionError, LeafCountError, NotAMemberError, UnsupportedGroupError
from clawpoly.halfspaces import (
    ARow,
    BColumn,
    Box,
    ColumnSimplex,
    NonNeg,
    demihypercube_system,
    kimura3_prime_system,
    kimura3_system,
    model_system,
    odd_subsets,
    row_projection,
)
from clawpoly.matrices import Matrix


def test_odd_subsets_lex_order():
    assert odd_subsets(3) == ((1,), (1, 2, 3), (2,), (3,))
    assert len(odd_subsets(5)) == 16
    subs = odd_subsets(4)
    assert subs == tuple(sorted(subs))
    assert all(len(s) % 2 == 1 for s in subs)


def test_family_counts():
    assert len(kimura3_system(3).inequalities) == 24
    assert len(kimura3_system(4).inequalities) == 40
    assert len(kimura3_system(5).inequalities) == 68
    assert len(kimura3_prime_system(3).inequalities) == 24
    assert len(demihypercube_system(3).inequalities) == 10
    assert len(demihypercube_system(5).inequalities) == 26


def test_ids_are_dense_and_ordered():
    for sys_ in (kimura3_system(4), kimura3_prime_system(4), demihypercube_system(4)):
        assert [q.id for q in sys_.inequalities] == list(range(len(sys_.inequalities)))


def test_family_layout_kimura3():
    sys_ = kimura3_system(3)
    assert sys_.inequalities[0].family == NonNeg(1, 1)
    assert sys_.inequalities[8].family == NonNeg(3, 3)
    assert sys_.inequalities[9].family == ColumnSimplex(1)
    assert sys_.inequalities[12].family == ARow((1, 2), (1,))
    assert sys_.inequalities[13].family == ARow((1, 2), (1, 2, 3))
    assert sys_.inequalities[16].family == ARow((1, 3), (1,))
    assert sys_.inequalities[23].family == ARow((2, 3), (3,))


def test_family_layout_prime():
    sys_ = kimura3_prime_system(3)
    assert sys_.inequalities[0].family == ARow((1,), (1,))
    assert sys_.inequalities[11].family == ARow((3,), (3,))
    assert sys_.inequalities[12].family == BColumn((1,), 1)
    assert sys_.inequalities[23].family == BColumn((3,), 3)


def test_family_layout_demihypercube():
    sys_ = demihypercube_system(3)
    assert sys_.inequalities[0].family == Box(1, False)
    assert sys_.inequalities[3].family == Box(1, True)
    assert sys_.inequalities[6].family == ARow((1,), (1,))


def test_arow_normal_form():
    q = kimura3_system(3).by_family(ARow((1, 2), (1, 2, 3)))
    assert q.coeffs == (1, 1, 1, 1, 1, 1, 0, 0, 0)
    assert q.rhs == 2
    q1 = kimura3_system(3).by_family(ARow((1, 3), (1,)))
    assert q1.coeffs == (1, -1, -1, 0, 0, 0, 1, -1, -1)
    assert q1.rhs == 0


def test_membership_statuses():
    sys_ = kimura3_system(3)
    quarter = Matrix.from_flat([Fraction(1, 4)] * 9, 3, 3)
    assert sys_.membership(quarter).status == "inside"
    zero = Matrix.from_flat([0] * 9, 3, 3)
    assert sys_.membership(zero).status == "boundary"
    e1 = Matrix.from_rows([(1, 1, 1), (0, 0, 0), (0, 0, 0)])
    res = sys_.membership(e1)
    assert res.status == "outside"
    assert res.violated == (13, 17)


def test_tight_sets_frozen():
    dh = demihypercube_system(3)
    ts = dh.tight_set((1, 1, 0))
    assert ts.ids == (2, 3, 4, 6, 7, 8)
    half = dh.tight_set((Fraction(1, 2), Fraction(1, 2), 0))
    assert dict(half.by_family)["box"] == (2,)
    assert dict(half.by_family)["arow"] == (6, 8)

    prime = kimura3_prime_system(3)
    ts0 = prime.tight_set(Matrix.from_flat([0] * 9, 3, 3))
    assert len(ts0.ids) == 18
    assert dict(ts0.by_family)["arow"] == (0, 2, 3, 4, 6, 7, 8, 10, 11)


def test_tight_set_requires_membership():
    with pytest.raises(NotAMemberError):
        demihypercube_system(3).tight_set((2, 0, 0))


def test_flatten_accepts_matrix_and_sequence():
    sys_ = kimura3_system(3)
    mat = Matrix.from_flat([0] * 9, 3, 3)
    assert sys_.flatten(mat) == (0,) * 9
    assert sys_.flatten([0] * 9) == (0,) * 9
    with pytest.raises(DimensionError):
        sys_.flatten([0] * 8)


def test_model_system_dispatch():
    assert model_system("binary", 4) is demihypercube_system(4)
    assert model_system("kimura3", 3) is kimura3_system(3)
    assert model_system("kimura3-prime", 3) is kimura3_prime_system(3)
    with pytest.raises(UnsupportedGroupError):
        model_system("jukes", 3)


def test_leaf_bounds():
    with pytest.raises(LeafCountError):
        kimura3_system(2)
    with pytest.raises(LeafCountError):
        kimura3_prime_system(1)
    assert len(demihypercube_system(1).inequalities) == 3


def test_row_projection():
    mat = Matrix.from_rows([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert row_projection(mat, 2) == (0, 1, 0)
    with pytest.raises(DimensionError):
        row_projection(mat, 4)


@given(st.integers(min_value=0, max_value=2 ** 9 - 1))
def test_binary_violation_agrees_with_membership(mask):
    sys_ = kimura3_system(3)
    point = tuple((mask >> i) & 1 for i in range(9))
    violated_id = sys_.binary_violation(mask)
    res = sys_.membership(point)
    if violated_id is None:
        assert res.status != "outside"
    else:
        assert res.status == "outside"
        assert violated_id in res.violated


@given(st.integers(min_value=3, max_value=6))
def test_row_count_formulas(m):
    assert len(kimura3_system(m).inequalities) == 3 * m + m + 3 * 2 ** (m - 1)
    assert len(kimura3_prime_system(m).inequalities) == 3 * 2 ** (m - 1) + 4 * m
    assert len(demihypercube_system(m).inequalities) == 2 * m + 2 ** (m - 1)
