import pytest

from qspecht.core import degree_parity, is_2_restricted, partitions
from qspecht.fock import (
    FockVector,
    canonical_basis,
    decomposition_matrix,
    divided_induct,
    induct,
    ladder_vector,
    ladder_word,
    simple_qdims,
)
from qspecht.laurent import LaurentPoly, ONE, Q, ZERO, q_power
from qspecht.specht import qdim_specht

K0 = (0,)
EMPTY = FockVector.basis(())


def test_fock_vector_basics():
    v = FockVector({(2,): Q, (1, 1): ONE})
    assert v.coefficient((2,)) == Q
    assert v.coefficient((3,)) == ZERO
    assert v.support() == ((2,), (1, 1))
    assert v + v == 2 * v
    assert v - v == FockVector()
    assert FockVector({(1,): ZERO}) == FockVector()


def test_induct_examples():
    assert induct(EMPTY, K0, 0) == FockVector.basis((1,))
    assert induct(FockVector.basis((1,)), K0, 1) == FockVector(
        {(2,): Q, (1, 1): ONE}
    )
    assert induct(FockVector.basis((2,)), K0, 1) == FockVector.basis((2, 1))


def test_induct_level_one_only():
    with pytest.raises(ValueError):
        induct(EMPTY, (0, 1), 0)


def test_divided_induct_examples():
    one_box = induct(EMPTY, K0, 0)
    assert divided_induct(one_box, K0, 1, 2) == FockVector.basis((2, 1))
    assert divided_induct(one_box, K0, 1, 1) == induct(one_box, K0, 1)
    assert divided_induct(one_box, K0, 1, 0) == one_box


def test_ladder_word_examples():
    assert ladder_word((1, 1)) == [(0, 1), (1, 1)]
    assert ladder_word((1,)) == [(0, 1)]
    assert ladder_word((2, 1)) == [(0, 1), (1, 2)]
    assert ladder_word(()) == []
    with pytest.raises(ValueError):
        ladder_word((2,))


def test_ladder_vector_leading_coefficient():
    for d in range(9):
        for mu in partitions(d):
            if is_2_restricted(mu):
                assert ladder_vector(mu, K0).coefficient(mu) == ONE


def test_canonical_basis_small():
    assert canonical_basis(1) == [((1,), FockVector.basis((1,)))]
    (mu, g), = canonical_basis(2)
    assert mu == (1, 1)
    assert g == FockVector({(2,): Q, (1, 1): ONE})


def test_canonical_basis_frozen_d4():
    basis = dict(canonical_basis(4))
    assert basis[(2, 1, 1)] == FockVector(
        {(3, 1): q_power(2), (2, 2): Q, (2, 1, 1): ONE}
    )
    assert basis[(1, 1, 1, 1)] == FockVector(
        {(4,): q_power(2), (3, 1): Q, (2, 1, 1): Q, (1, 1, 1, 1): ONE}
    )


def test_column_vector_coefficients_at_d8():
    # every coefficient in the d=8 canonical vector of the column shape is
    # pure of the combined parity; the (3,2,2,1)-coefficient in particular is
    # zero (the characteristic-2 value arises entirely through adjustment)
    basis = dict(canonical_basis(8))
    vector = basis[(1,) * 8]
    assert vector.coefficient((3, 2, 2, 1)) == ZERO
    assert vector.coefficient((3, 2, 2, 1)).is_pure_parity(1)
    assert vector.coefficient((7, 1)) == q_power(3)
    for lam, coeff in vector.items():
        parity = degree_parity((lam,), K0)  # the column shape has parity 0
        assert coeff.is_pure_parity(parity)


def test_decomposition_matrix_d2():
    matrix = decomposition_matrix(2)
    assert matrix.rows == ((2,), (1, 1))
    assert matrix.cols == ((1, 1),)
    assert matrix.entry((2,), (1, 1)) == Q
    assert matrix.entry((1, 1), (1, 1)) == ONE


def test_decomposition_matrix_invariants():
    for d in range(1, 8):
        matrix = decomposition_matrix(d)
        for mu in matrix.cols:
            assert matrix.entry(mu, mu) == ONE
        for lam in matrix.rows:
            for mu in matrix.cols:
                entry = matrix.entry(lam, mu)
                if lam == mu or not entry:
                    continue
                assert entry.min_exponent() >= 1
                assert all(c > 0 for _, c in entry.to_pairs())


def test_simple_qdims_small():
    assert simple_qdims(2) == {(1, 1): ONE}
    d3 = simple_qdims(3)
    assert d3[(1, 1, 1)] == ONE
    assert d3[(2, 1)] == Q + q_power(-1)
    d4 = simple_qdims(4)
    assert d4[(2, 1, 1)] == Q + q_power(-1)


def test_reconstruction_identity():
    # entry-weighted sums of simple graded dimensions rebuild every Specht
    # graded dimension; this pins all convention choices at once
    for d in range(1, 8):
        matrix = decomposition_matrix(d)
        simples = simple_qdims(d, K0, matrix)
        for lam in matrix.rows:
            total = LaurentPoly()
            for mu in matrix.cols:
                total = total + matrix.entry(lam, mu) * simples[mu]
            assert total == qdim_specht((lam,), K0), lam


def test_entries_pure_of_combined_parity():
    for d in range(1, 8):
        matrix = decomposition_matrix(d)
        for lam in matrix.rows:
            for mu in matrix.cols:
                parity = (degree_parity((lam,), K0) + degree_parity((mu,), K0)) % 2
                assert matrix.entry(lam, mu).is_pure_parity(parity)


def test_simples_bar_symmetric_and_pure():
    for d in range(1, 8):
        for mu, poly in simple_qdims(d).items():
            assert poly.is_bar_symmetric()
            assert poly.is_pure_parity(degree_parity((mu,), K0))
            if degree_parity((mu,), K0) == 1:
                assert poly.eval_at_one() % 2 == 0


def test_matrix_json_shape():
    blob = decomposition_matrix(3).to_json()
    assert blob["rows"] == ["3", "2,1", "1,1,1"]
    assert blob["cols"] == ["2,1", "1,1,1"]
    assert blob["entries"][0][1] == [[1, 1]]  # coefficient q at ((3), (1^3))
