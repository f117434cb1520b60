"""Standard tableaux of multipartitions: enumeration, residue sequences, degrees.

A standard tableau is stored through its placement sequence: entry r sits in
``places[r-1]``, and every prefix of the placements is the Young diagram of a
multipartition.  Enumeration grows tableaux one entry at a time, trying the
addable corners in below-order, which fixes a stable deterministic order; the
degree is accumulated during the search from the signed node counts of the
grown shapes.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .core import (
    Multicharge,
    Multipartition,
    Node,
    _addable_cells,
    _removable_cells,
    degree_contribution,
    format_multipartition,
    multipartition_size,
    with_node_added,
)


@dataclass(frozen=True)
class StandardTableau:
    shape: Multipartition
    places: tuple[Node, ...]

    def entry_rows(self) -> list[list[list[int]]]:
        """Entries arranged per component and row, as displayed on the diagram."""
        grid: list[list[list[int]]] = [
            [[0] * part for part in comp] for comp in self.shape
        ]
        for entry, (a, b, m) in enumerate(self.places, start=1):
            grid[m - 1][a - 1][b - 1] = entry
        return grid

    def compact(self) -> str:
        """One-line form: rows '/'-joined, components '|'-joined, '-' if empty."""
        comps = []
        for rows in self.entry_rows():
            comps.append(
                "/".join(",".join(str(e) for e in row) for row in rows) if rows else "-"
            )
        return "|".join(comps)

    def __str__(self) -> str:
        blocks = []
        for rows in self.entry_rows():
            if not rows:
                blocks.append("-")
                continue
            width = max(len(str(e)) for row in rows for e in row)
            blocks.append(
                "\n".join(" ".join(str(e).rjust(width) for e in row) for row in rows)
            )
        return "\n---\n".join(blocks)

    def to_json(self) -> dict:
        return {
            "shape": format_multipartition(self.shape),
            "places": [list(node) for node in self.places],
        }

    def check(self) -> None:
        """Validate standardness: every placement prefix must be a diagram."""
        if len(self.places) != multipartition_size(self.shape):
            raise ValueError("placement length does not match the shape size")
        partial: Multipartition = ((),) * len(self.shape)
        for node in self.places:
            partial = with_node_added(partial, node)
        if partial != self.shape:
            raise ValueError("placements do not fill the shape")


def row_filled_tableau(lam: Multipartition) -> StandardTableau:
    """The tableau filling 1..d along successive rows, first component first."""
    places: list[Node] = []
    for m, comp in enumerate(lam, start=1):
        for a, part in enumerate(comp, start=1):
            places.extend((a, b, m) for b in range(1, part + 1))
    return StandardTableau(lam, tuple(places))


def _dn_grown(rows: list[list[int]], kappa: Multicharge, node: Node) -> int:
    """Signed node count of ``node`` in the shape ``rows`` (which contains it).

    Fast path over mutable row-length lists; agrees with
    :func:`qspecht.core.degree_contribution` on the corresponding tuples.
    """
    a0, b0, m0 = node
    i = (kappa[m0 - 1] + b0 - a0) % 2
    count = 0
    for m in range(m0, len(rows) + 1):
        comp = rows[m - 1]
        k = kappa[m - 1]
        first_row = a0 + 1 if m == m0 else 1
        for a, b in _addable_cells(comp):
            if a >= first_row and (k + b - a) % 2 == i:
                count += 1
        for a, b in _removable_cells(comp):
            if a >= first_row and (k + b - a) % 2 == i:
                count -= 1
    return count


def _search(
    lam: Multipartition,
    kappa: Multicharge,
    target: tuple[int, ...] | None,
) -> Iterator[tuple[tuple[Node, ...], int]]:
    """Yield (places, degree) for the standard tableaux of ``lam``.

    With ``target`` set, branches whose next residue disagrees are pruned, so
    only tableaux with that residue sequence are produced.
    """
    d = multipartition_size(lam)
    rows: list[list[int]] = [[] for _ in lam]
    places: list[Node] = []

    def grow(r: int, degree: int) -> Iterator[tuple[tuple[Node, ...], int]]:
        if r > d:
            yield tuple(places), degree
            return
        for m, comp in enumerate(lam, start=1):
            cur = rows[m - 1]
            for a in range(1, len(cur) + 2):
                if a > len(comp):
                    break
                have = cur[a - 1] if a <= len(cur) else 0
                if have >= comp[a - 1]:
                    continue
                if a > 1 and cur[a - 2] <= have:
                    continue
                b = have + 1
                if target is not None and (kappa[m - 1] + b - a) % 2 != target[r - 1]:
                    continue
                node = (a, b, m)
                if a == len(cur) + 1:
                    cur.append(1)
                else:
                    cur[a - 1] += 1
                places.append(node)
                yield from grow(r + 1, degree + _dn_grown(rows, kappa, node))
                places.pop()
                if a == len(cur) and cur[a - 1] == 1:
                    cur.pop()
                else:
                    cur[a - 1] -= 1

    yield from grow(1, 0)


def standard_tableaux(lam: Multipartition) -> Iterator[StandardTableau]:
    """All standard tableaux of ``lam``, generated incrementally."""
    kappa = (0,) * len(lam)  # residues are irrelevant without a target
    for places, _ in _search(lam, kappa, None):
        yield StandardTableau(lam, places)


def standard_tableaux_with_degrees(
    lam: Multipartition, kappa: Multicharge
) -> Iterator[tuple[StandardTableau, int]]:
    if len(lam) != len(kappa):
        raise ValueError("shape level does not match the multicharge length")
    for places, deg in _search(lam, kappa, None):
        yield StandardTableau(lam, places), deg


def tableaux_with_residue_sequence(
    lam: Multipartition, kappa: Multicharge, residues: tuple[int, ...]
) -> list[StandardTableau]:
    """Standard tableaux of ``lam`` whose residue sequence equals ``residues``."""
    if len(lam) != len(kappa):
        raise ValueError("shape level does not match the multicharge length")
    if len(residues) != multipartition_size(lam):
        raise ValueError("residue sequence length does not match the shape size")
    return [
        StandardTableau(lam, places)
        for places, _ in _search(lam, kappa, tuple(residues))
    ]


def residue_sequence(t: StandardTableau, kappa: Multicharge) -> tuple[int, ...]:
    """Entrywise residues of the occupied nodes."""
    if len(t.shape) != len(kappa):
        raise ValueError("shape level does not match the multicharge length")
    return tuple((kappa[m - 1] + b - a) % 2 for (a, b, m) in t.places)


def degree(t: StandardTableau, kappa: Multicharge) -> int:
    """Degree of a standard tableau, by the literal recursion over prefixes:
    the signed node count of the last-placed entry in the grown shape, plus
    the degree of the rest."""
    if len(t.shape) != len(kappa):
        raise ValueError("shape level does not match the multicharge length")
    partial: Multipartition = ((),) * len(t.shape)
    total = 0
    for node in t.places:
        partial = with_node_added(partial, node)
        total += degree_contribution(partial, kappa, node)
    return total
