"""Graded dimensions of Specht modules and their parity verification sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .core import (
    Multicharge,
    Multipartition,
    degree_parity,
    format_multipartition,
    multipartition_size,
    multipartitions,
)
from .laurent import LaurentPoly
from .tableaux import _search, degree, row_filled_tableau


@lru_cache(maxsize=None)
def qdim_specht(lam: Multipartition, kappa: Multicharge) -> LaurentPoly:
    """Graded dimension of the Specht module: the degree-generating function
    q^deg(t) summed over all standard tableaux of the shape."""
    counts: dict[int, int] = {}
    for _, deg in _search(lam, kappa, None):
        counts[deg] = counts.get(deg, 0) + 1
    return LaurentPoly(counts)


def qdim_truncation(
    lam: Multipartition, kappa: Multicharge, residues: tuple[int, ...]
) -> LaurentPoly:
    """Graded dimension of the residue-idempotent truncation: q^deg(t) summed
    over the standard tableaux with the given residue sequence."""
    if len(residues) != multipartition_size(lam):
        raise ValueError("residue sequence length does not match the shape size")
    counts: dict[int, int] = {}
    for _, deg in _search(lam, kappa, tuple(residues)):
        counts[deg] = counts.get(deg, 0) + 1
    return LaurentPoly(counts)


def qdim_hecke(d: int, kappa: Multicharge) -> LaurentPoly:
    """Graded dimension of the whole cyclotomic algebra in rank d, computed
    as the sum of the squared cell-module graded dimensions over all shapes.

    At q = 1 this is l^d * d! (checked by :func:`verify_hecke_even`).
    """
    total: LaurentPoly = LaurentPoly()
    for lam in multipartitions(d, len(kappa)):
        s = qdim_specht(lam, kappa)
        total = total + s * s
    return total


def crossing_degree(residues: tuple[int, ...], r: int) -> int:
    """Degree of the r-th crossing generator on the idempotent of a residue
    sequence: -2 when the two strands carry equal residues, +2 otherwise."""
    if not 1 <= r <= len(residues) - 1:
        raise ValueError(f"position {r} out of range for a sequence of length {len(residues)}")
    return -2 if residues[r - 1] == residues[r] else 2


@dataclass(frozen=True)
class SweepReport:
    """Outcome of an exhaustive check; directly assertable in tests."""

    check: str
    parameters: dict[str, object]
    checked: int
    violations: tuple[str, ...]
    notes: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "parameters": self.parameters,
            "checked": self.checked,
            "violations": list(self.violations),
            "notes": list(self.notes),
            "ok": self.ok,
        }


def _parity_violation(args: tuple[Multipartition, Multicharge]) -> str | None:
    lam, kappa = args
    qdim = qdim_specht(lam, kappa)
    parity = degree_parity(lam, kappa)
    if not qdim.is_pure_parity(parity):
        return f"{format_multipartition(lam)}: qdim {qdim} not pure of parity {parity}"
    return None


def _row_degree_violation(args: tuple[Multipartition, Multicharge]) -> str | None:
    lam, kappa = args
    deg = degree(row_filled_tableau(lam), kappa)
    parity = degree_parity(lam, kappa)
    if deg % 2 != parity:
        return f"{format_multipartition(lam)}: row-filled degree {deg} vs parity {parity}"
    return None


def _sweep(checker, d: int, kappa: Multicharge, parallel: bool) -> tuple[int, tuple[str, ...]]:
    jobs = [(lam, kappa) for lam in multipartitions(d, len(kappa))]
    if parallel and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor() as pool:
            results = list(pool.map(checker, jobs, chunksize=8))
    else:
        results = [checker(job) for job in jobs]
    return len(jobs), tuple(r for r in results if r is not None)


def verify_specht_parity(
    d: int, kappa: Multicharge, parallel: bool = False
) -> SweepReport:
    """Check every shape of size d: its Specht graded dimension must be pure
    of the shape's combinatorial parity."""
    checked, violations = _sweep(_parity_violation, d, kappa, parallel)
    return SweepReport(
        check="specht-parity",
        parameters={"d": d, "charge": list(kappa)},
        checked=checked,
        violations=violations,
    )


def verify_row_degree_parity(
    d: int, kappa: Multicharge, parallel: bool = False
) -> SweepReport:
    """Check every shape of size d: the degree of its row-filled tableau must
    agree mod 2 with the shape's combinatorial parity."""
    checked, violations = _sweep(_row_degree_violation, d, kappa, parallel)
    return SweepReport(
        check="row-degree-parity",
        parameters={"d": d, "charge": list(kappa)},
        checked=checked,
        violations=violations,
    )


def verify_hecke_even(max_d: int, kappa: Multicharge) -> SweepReport:
    """Check for every rank up to max_d that the algebra's graded dimension
    has no odd-degree part and evaluates at 1 to l^d * d!."""
    violations = []
    level = len(kappa)
    factorial = 1
    for d in range(max_d + 1):
        if d:
            factorial *= d
        qdim = qdim_hecke(d, kappa)
        projected = qdim.parity_project()
        if projected.odd != 0:
            violations.append(f"d={d}: odd part {projected.odd} is nonzero")
        expected = level**d * factorial
        if qdim.eval_at_one() != expected:
            violations.append(
                f"d={d}: total dimension {qdim.eval_at_one()} != {expected}"
            )
    return SweepReport(
        check="hecke-even",
        parameters={"max_d": max_d, "charge": list(kappa)},
        checked=max_d + 1,
        violations=tuple(violations),
        notes=(
            "graded dimension computed from the sum of squared cell-module dimensions",
        ),
    )
