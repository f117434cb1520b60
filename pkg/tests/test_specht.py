from math import factorial

import pytest

from qspecht.core import degree_parity, multipartitions, partitions
from qspecht.laurent import LaurentPoly, ONE, Q, q_power
from qspecht.specht import (
    crossing_degree,
    qdim_hecke,
    qdim_specht,
    qdim_truncation,
    verify_hecke_even,
    verify_row_degree_parity,
    verify_specht_parity,
)
from oracles import hook_length_count

K0 = (0,)


def test_qdim_specht_examples():
    assert qdim_specht(((2,),), K0) == Q
    assert qdim_specht(((1, 1),), K0) == ONE
    assert qdim_specht(((),), K0) == ONE


def test_qdim_specht_frozen_values():
    assert qdim_specht(((2, 1),), K0) == Q + q_power(-1)
    assert qdim_specht(((2, 1, 1),), K0) == q_power(-1) + 2 * Q
    assert qdim_specht(((3, 1),), K0) == 2 * Q + q_power(3)


def test_qdim_specht_counts_tableaux():
    for d in range(9):
        for p in partitions(d):
            assert qdim_specht((p,), K0).eval_at_one() == hook_length_count(p)


def test_qdim_truncation_examples():
    lam = ((3, 2, 2, 1),)
    assert qdim_truncation(lam, K0, (0, 1, 0, 1, 0, 1, 0, 1)) == q_power(-1) + 3 * Q
    assert qdim_truncation(((2,),), K0, (0, 1)) == Q
    assert qdim_truncation(((2,),), K0, (1, 0)) == LaurentPoly()


def test_qdim_truncation_length_check():
    with pytest.raises(ValueError):
        qdim_truncation(((2,),), K0, (0,))


def test_truncations_partition_the_graded_dimension():
    import itertools

    for lam in [((3, 2),), ((2, 2, 1),), ((2, 1), (1,))]:
        kappa = K0 if len(lam) == 1 else (0, 1)
        d = sum(sum(c) for c in lam)
        total = LaurentPoly()
        for seq in itertools.product((0, 1), repeat=d):
            total = total + qdim_truncation(lam, kappa, seq)
        assert total == qdim_specht(lam, kappa)


def test_qdim_hecke_examples():
    assert qdim_hecke(0, K0) == ONE
    assert qdim_hecke(2, K0) == q_power(2) + ONE
    assert qdim_hecke(3, K0).eval_at_one() == 6


def test_qdim_hecke_dimension_identity():
    for d in range(7):
        assert qdim_hecke(d, K0).eval_at_one() == factorial(d)
    for d in range(5):
        assert qdim_hecke(d, (0, 1)).eval_at_one() == 2**d * factorial(d)


def test_qdim_hecke_has_even_parity_only():
    for d in range(7):
        assert qdim_hecke(d, K0).parity_project().odd == 0


def test_crossing_degree():
    assert crossing_degree((0, 0, 1), 1) == -2
    assert crossing_degree((0, 1, 1), 1) == 2
    assert crossing_degree((1, 1), 1) == -2
    with pytest.raises(ValueError):
        crossing_degree((0, 1), 2)
    with pytest.raises(ValueError):
        crossing_degree((0, 1), 0)


def test_truncations_are_pure_of_the_shape_parity():
    import itertools

    for lam in [((3, 2),), ((2, 2, 1),)]:
        parity = degree_parity(lam, K0)
        d = sum(sum(c) for c in lam)
        for seq in itertools.product((0, 1), repeat=d):
            assert qdim_truncation(lam, K0, seq).is_pure_parity(parity)


def test_verify_specht_parity_sweep():
    for kappa, d in [(K0, 8), ((0, 1), 5)]:
        report = verify_specht_parity(d, kappa)
        assert report.ok
        assert report.checked == len(list(multipartitions(d, len(kappa))))
    assert verify_specht_parity(0, K0).ok


def test_verify_row_degree_parity_sweep():
    for kappa, d in [(K0, 10), ((1, 1), 5)]:
        assert verify_row_degree_parity(d, kappa).ok


def test_verify_hecke_even_report():
    report = verify_hecke_even(5, K0)
    assert report.ok
    assert report.checked == 6
    assert any("squared" in note for note in report.notes)


def test_report_is_json_serialisable():
    import json

    report = verify_specht_parity(3, K0)
    blob = json.dumps(report.to_json())
    assert '"ok": true' in blob


def test_sweep_parallel_matches_serial():
    serial = verify_specht_parity(6, K0)
    parallel = verify_specht_parity(6, K0, parallel=True)
    assert serial == parallel
