import pytest

from qspecht.adjustment import (
    AdjustmentEvidence,
    UndeterminedEntryError,
    adjusted_entry,
    candidate_entries,
    default_bound,
    evidence_report,
    pin_via_truncation,
    published_evidence,
)
from qspecht.core import degree_parity
from qspecht.fock import decomposition_matrix
from qspecht.laurent import LaurentPoly, ONE, Q, ZERO, q_power

K0 = (0,)


def test_published_evidence_table():
    table = published_evidence()
    assert len(table) == 4
    first = table[0]
    assert first == AdjustmentEvidence((3, 2, 2, 1), (1,) * 8, 2, 2)
    assert all(ev.ungraded_value == 2 and ev.p == 2 for ev in table)
    assert {sum(ev.lam) for ev in table} == {8, 9, 10}


def test_published_pairs_have_opposite_parities():
    for ev in published_evidence():
        assert degree_parity((ev.lam,), K0) != degree_parity((ev.mu,), K0)


def test_evidence_validation():
    with pytest.raises(ValueError):
        AdjustmentEvidence((2,), (1, 1, 1), 1, 2)
    with pytest.raises(ValueError):
        AdjustmentEvidence((2,), (1, 1), -1, 2)


def test_candidate_entries_odd_value_two():
    ev = published_evidence()[0]
    found = candidate_entries(ev, K0, bound=5)
    assert found == [
        Q + q_power(-1),
        q_power(3) + q_power(-3),
        q_power(5) + q_power(-5),
    ]


def test_candidate_entries_degenerate_cases():
    zero = AdjustmentEvidence((2, 1), (1, 1, 1), 0, 2)
    assert candidate_entries(zero, K0, bound=4) == [ZERO]
    same_parity = AdjustmentEvidence((2, 2, 1), (1,) * 5, 1, 2)
    assert degree_parity(((2, 2, 1),), K0) == degree_parity(((1,) * 5,), K0)
    assert candidate_entries(same_parity, K0, bound=3) == [ONE]


def test_candidate_entries_mixed_even_value():
    ev = AdjustmentEvidence((2, 2, 1), (1,) * 5, 2, 2)
    found = candidate_entries(ev, K0, bound=2)
    assert set(found) == {
        LaurentPoly({0: 2}),
        q_power(2) + q_power(-2),
    }


def test_candidates_satisfy_all_constraints():
    for ev in published_evidence():
        parity = (degree_parity((ev.lam,), K0) + degree_parity((ev.mu,), K0)) % 2
        for f in candidate_entries(ev, K0, bound=4):
            assert f.bar() == f
            assert f.eval_at_one() == ev.ungraded_value
            assert f.is_pure_parity(parity)


def test_pin_via_truncation_published_columns():
    expected = Q + q_power(-1)
    for ev in published_evidence()[:3]:
        assert pin_via_truncation(ev, K0) == expected


def test_pin_fourth_pair_is_undetermined():
    with pytest.raises(UndeterminedEntryError):
        pin_via_truncation(published_evidence()[3], K0)


def test_pinned_entry_witnesses_negative_degree():
    # a pinned non-constant bar-symmetric entry has a negative exponent, so
    # the corresponding graded numbers leave the polynomial ring
    entry = pin_via_truncation(published_evidence()[0], K0)
    assert entry.min_exponent() < 0
    assert entry != LaurentPoly({0: entry.eval_at_one()})


def test_default_bound_comes_from_specht_support():
    ev = published_evidence()[0]
    bound = default_bound(ev, K0)
    assert bound >= 1
    assert pin_via_truncation(ev, K0, bound=bound) == Q + q_power(-1)


def test_adjusted_entry_identity_and_errors():
    row = [Q, ONE, ZERO]
    identity_col = [ZERO, ONE, ZERO]
    assert adjusted_entry(row, identity_col) == ONE
    assert adjusted_entry([ZERO, ZERO], [ONE, Q]) == ZERO
    with pytest.raises(ValueError):
        adjusted_entry([ONE], [ONE, Q])


def test_adjusted_entry_for_pinned_column():
    # multiply the d=8 characteristic-0 row of (3,2,2,1) with the adjustment
    # column of the column-shape, filled with the pinned entry
    matrix = decomposition_matrix(8)
    lam = (3, 2, 2, 1)
    pinned = pin_via_truncation(published_evidence()[0], K0)
    column = []
    for nu in matrix.cols:
        if nu == lam:
            column.append(pinned)
        elif nu == (1,) * 8:
            column.append(ONE)
        else:
            column.append(ZERO)
    result = adjusted_entry(matrix.row(lam), column)
    assert result.coefficient(-1) == 1
    assert all(c >= 0 for _, c in result.to_pairs())


def test_evidence_reports():
    reports = [evidence_report(ev, K0) for ev in published_evidence()]
    for r in reports[:3]:
        assert r.pinned == Q + q_power(-1)
        assert r.note == "pinned"
    assert reports[0].tableau_count == 4
    assert sorted(reports[0].degrees) == [-1, 1, 1, 1]
    last = reports[3]
    assert last.pinned is None
    assert last.note.startswith("undetermined")
    assert last.tableau_count is None
    assert len(last.candidates) >= 1
