"""Parity-driven pinning of graded adjustment-matrix entries.

Graded adjustment entries are bar-symmetric, have nonnegative coefficients,
and are pure of the combined parity of their two indexing shapes.  Together
with a published ungraded value and the negative-degree support of a residue
truncation of the relevant Specht module, those constraints can pin an entry
exactly.  Characteristic-2 adjustment matrices themselves are out of scope:
only the published ungraded values below are embedded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Multicharge, Partition, as_partition, degree_parity
from .laurent import LaurentPoly, ZERO, q_power
from .specht import qdim_specht, qdim_truncation
from .tableaux import _search, residue_sequence, row_filled_tableau


class UndeterminedEntryError(Exception):
    """The constraints admit zero or several entries; nothing is guessed."""


@dataclass(frozen=True)
class AdjustmentEvidence:
    """One published ungraded adjustment value a_{lam,mu}(1) in characteristic p."""

    lam: Partition
    mu: Partition
    ungraded_value: int
    p: int

    def __post_init__(self):
        as_partition(self.lam)
        as_partition(self.mu)
        if sum(self.lam) != sum(self.mu):
            raise ValueError("both shapes must have the same size")
        if self.ungraded_value < 0:
            raise ValueError("ungraded values are nonnegative")


# Ungraded adjustment-matrix values for symmetric groups in characteristic 2,
# from the published decomposition-matrix tables in the appendix of Mathas,
# "Iwahori-Hecke algebras and Schur algebras of the symmetric group" (1999).
_PUBLISHED = (
    AdjustmentEvidence(lam=(3, 2, 2, 1), mu=(1,) * 8, ungraded_value=2, p=2),
    AdjustmentEvidence(lam=(3, 2, 2, 1, 1), mu=(1,) * 9, ungraded_value=2, p=2),
    AdjustmentEvidence(lam=(3, 3, 2, 1, 1), mu=(1,) * 10, ungraded_value=2, p=2),
    AdjustmentEvidence(lam=(5, 2, 2, 1), mu=(3,) + (1,) * 7, ungraded_value=2, p=2),
)


def published_evidence() -> tuple[AdjustmentEvidence, ...]:
    return _PUBLISHED


def _poly_sort_key(f: LaurentPoly):
    breadth = f.max_exponent() if f else 0
    return (breadth, tuple(tuple(pair) for pair in f.to_pairs()))


def default_bound(ev: AdjustmentEvidence, kappa: Multicharge) -> int:
    """Largest |degree| in the Specht graded dimension of ``ev.lam``; no valid
    entry can reach beyond it, by the truncation argument."""
    qdim = qdim_specht((ev.lam,), kappa)
    if not qdim:
        return 0
    return max(abs(qdim.min_exponent()), abs(qdim.max_exponent()))


def candidate_entries(
    ev: AdjustmentEvidence, kappa: Multicharge, bound: int | None = None
) -> list[LaurentPoly]:
    """All bar-symmetric polynomials with nonnegative coefficients, pure of
    the combined parity of the two shapes, evaluating at 1 to the published
    value, with exponents bounded in absolute value.

    Returned sorted by exponent profile for determinism.
    """
    if bound is None:
        bound = default_bound(ev, kappa)
    parity = (degree_parity((ev.lam,), kappa) + degree_parity((ev.mu,), kappa)) % 2
    exponents = [m for m in range(1, bound + 1) if m % 2 == parity]
    found: list[LaurentPoly] = []

    def assign(idx: int, remaining: int, acc: LaurentPoly) -> None:
        if idx == len(exponents):
            if parity == 1:
                if remaining == 0:
                    found.append(acc)
            else:
                # the constant term soaks up whatever is left
                found.append(acc + remaining)
            return
        m = exponents[idx]
        c = 0
        while 2 * c <= remaining:
            assign(idx + 1, remaining - 2 * c, acc + c * (q_power(m) + q_power(-m)))
            c += 1

    assign(0, ev.ungraded_value, ZERO)
    return sorted(set(found), key=_poly_sort_key)


def pin_via_truncation(
    ev: AdjustmentEvidence,
    kappa: Multicharge,
    bound: int | None = None,
    residues: tuple[int, ...] | None = None,
) -> LaurentPoly:
    """Pin the graded entry: keep the candidates q^m + q^-m whose degree -m
    actually occurs in the residue truncation of the Specht module of
    ``ev.lam``, and return the survivor if it is unique.

    Without an explicit residue sequence, ``ev.mu`` must be a single column,
    whose simple module is fixed by the idempotent of the row-filled residue
    sequence; that sequence is computed, not hard-coded.
    """
    if residues is None:
        d = sum(ev.mu)
        if ev.mu != (1,) * d:
            raise UndeterminedEntryError(
                f"no distinguished residue sequence: {ev.mu!r} is not a column"
            )
        residues = residue_sequence(row_filled_tableau((ev.mu,)), kappa)
    truncation = qdim_truncation((ev.lam,), kappa, residues)
    allowed = {
        q_power(m) + q_power(-m)
        for m in (-e for e in truncation.support() if e < 0)
    }
    survivors = [f for f in candidate_entries(ev, kappa, bound) if f in allowed]
    if len(survivors) != 1:
        raise UndeterminedEntryError(
            f"{len(survivors)} candidates survive the truncation filter: "
            f"{[str(f) for f in survivors]}"
        )
    return survivors[0]


def adjusted_entry(
    d0_row: list[LaurentPoly], adjustment_col: list[LaurentPoly]
) -> LaurentPoly:
    """One entry of the product of a characteristic-0 decomposition row with
    an adjustment column."""
    if len(d0_row) != len(adjustment_col):
        raise ValueError(
            f"row length {len(d0_row)} does not match column length {len(adjustment_col)}"
        )
    total: LaurentPoly = ZERO
    for a, b in zip(d0_row, adjustment_col):
        total = total + a * b
    return total


@dataclass(frozen=True)
class EvidenceReport:
    """Everything the pipeline derives from one published value."""

    evidence: AdjustmentEvidence
    tableau_count: int | None
    degrees: tuple[int, ...]
    candidates: tuple[LaurentPoly, ...]
    pinned: LaurentPoly | None
    note: str

    def to_json(self) -> dict:
        return {
            "lambda": ",".join(map(str, self.evidence.lam)),
            "mu": ",".join(map(str, self.evidence.mu)),
            "ungraded_value": self.evidence.ungraded_value,
            "p": self.evidence.p,
            "tableau_count": self.tableau_count,
            "degrees": list(self.degrees),
            "candidates": [f.to_pairs() for f in self.candidates],
            "pinned": self.pinned.to_pairs() if self.pinned is not None else None,
            "note": self.note,
        }


def evidence_report(
    ev: AdjustmentEvidence, kappa: Multicharge, bound: int | None = None
) -> EvidenceReport:
    """Run the pinning pipeline for one evidence pair, never raising: an
    undetermined entry is reported as such."""
    candidates = tuple(candidate_entries(ev, kappa, bound))
    d = sum(ev.mu)
    if ev.mu == (1,) * d:
        residues = residue_sequence(row_filled_tableau((ev.mu,)), kappa)
        degrees = tuple(sorted(deg for _, deg in _search((ev.lam,), kappa, residues)))
        count: int | None = len(degrees)
    else:
        residues = None
        degrees = ()
        count = None
    try:
        pinned = pin_via_truncation(ev, kappa, bound, residues)
        note = "pinned"
    except UndeterminedEntryError as exc:
        pinned = None
        note = f"undetermined: {exc}"
    return EvidenceReport(
        evidence=ev,
        tableau_count=count,
        degrees=degrees,
        candidates=candidates,
        pinned=pinned,
        note=note,
    )
