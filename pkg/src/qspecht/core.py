"""Partitions, multipartitions, nodes and residues in quantum characteristic 2.

Conventions used throughout the package:

* residues live in {0, 1} (integers mod 2);
* nodes are 1-based triples ``(row, column, component)``;
* a node is *below* another if its component is larger, or the components
  agree and its row is larger;
* addable/removable node lists are returned in below-order (first
  component's top row first), so signed counts are reproducible.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Multipartition = tuple[Partition, ...]
Multicharge = tuple[int, ...]
Node = tuple[int, int, int]

RESIDUES = (0, 1)


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate and normalise a weakly decreasing tuple of positive parts."""
    p = tuple(parts)
    for k, part in enumerate(p):
        if not isinstance(part, int) or part < 1:
            raise ValueError(f"partition parts must be positive integers, got {p!r}")
        if k > 0 and p[k - 1] < part:
            raise ValueError(f"partition parts must be weakly decreasing, got {p!r}")
    return p


def as_multipartition(components: Iterable[Iterable[int]]) -> Multipartition:
    return tuple(as_partition(c) for c in components)


def as_multicharge(charges: Iterable[int]) -> Multicharge:
    kappa = tuple(charges)
    if not kappa:
        raise ValueError("a multicharge needs at least one component")
    if any(k not in RESIDUES for k in kappa):
        raise ValueError(f"charges must lie in {{0, 1}}, got {kappa!r}")
    return kappa


def multipartition_size(lam: Multipartition) -> int:
    return sum(sum(comp) for comp in lam)


def empty_multipartition(level: int) -> Multipartition:
    return ((),) * level


def young_nodes(lam: Multipartition) -> Iterator[Node]:
    """All nodes of the Young diagram, component by component, row by row."""
    for m, comp in enumerate(lam, start=1):
        for a, part in enumerate(comp, start=1):
            for b in range(1, part + 1):
                yield (a, b, m)


def contains_node(lam: Multipartition, node: Node) -> bool:
    a, b, m = node
    if not (1 <= m <= len(lam) and a >= 1 and b >= 1):
        return False
    comp = lam[m - 1]
    return a <= len(comp) and b <= comp[a - 1]


def residue_of(node: Node, kappa: Multicharge) -> int:
    """Residue of a node: charge of its component plus (column - row), mod 2."""
    a, b, m = node
    if a < 1 or b < 1:
        raise ValueError(f"node coordinates must be positive, got {node!r}")
    if not 1 <= m <= len(kappa):
        raise ValueError(f"component {m} out of range for multicharge {kappa!r}")
    return (kappa[m - 1] + b - a) % 2


def is_below(node: Node, other: Node) -> bool:
    """True if ``node`` lies strictly below ``other``."""
    return node[2] > other[2] or (node[2] == other[2] and node[0] > other[0])


def _addable_cells(parts: Sequence[int]) -> Iterator[tuple[int, int]]:
    """(row, column) positions where a cell can be added, ascending by row."""
    for a, part in enumerate(parts, start=1):
        if a == 1 or parts[a - 2] > part:
            yield (a, part + 1)
    yield (len(parts) + 1, 1)


def _removable_cells(parts: Sequence[int]) -> Iterator[tuple[int, int]]:
    """(row, column) positions of cells at the end of their row and column."""
    for a, part in enumerate(parts, start=1):
        below = parts[a] if a < len(parts) else 0
        if part > below:
            yield (a, part)


def addable_nodes(lam: Multipartition, kappa: Multicharge, i: int) -> list[Node]:
    """Addable i-nodes of the diagram, in below-order."""
    out = []
    for m, comp in enumerate(lam, start=1):
        k = kappa[m - 1]
        for a, b in _addable_cells(comp):
            if (k + b - a) % 2 == i:
                out.append((a, b, m))
    return out


def removable_nodes(lam: Multipartition, kappa: Multicharge, i: int) -> list[Node]:
    """Removable i-nodes of the diagram, in below-order."""
    out = []
    for m, comp in enumerate(lam, start=1):
        k = kappa[m - 1]
        for a, b in _removable_cells(comp):
            if (k + b - a) % 2 == i:
                out.append((a, b, m))
    return out


def with_node_added(lam: Multipartition, node: Node) -> Multipartition:
    a, b, m = node
    if not 1 <= m <= len(lam):
        raise ValueError(f"component {m} out of range for {lam!r}")
    comp = list(lam[m - 1])
    if a == len(comp) + 1 and b == 1:
        comp.append(1)
    elif 1 <= a <= len(comp) and b == comp[a - 1] + 1 and (a == 1 or comp[a - 2] >= b):
        comp[a - 1] = b
    else:
        raise ValueError(f"node {node!r} is not addable for {lam!r}")
    return lam[: m - 1] + (tuple(comp),) + lam[m:]


def with_node_removed(lam: Multipartition, node: Node) -> Multipartition:
    a, b, m = node
    if not 1 <= m <= len(lam):
        raise ValueError(f"component {m} out of range for {lam!r}")
    comp = list(lam[m - 1])
    below = comp[a] if a < len(comp) else 0
    if not (1 <= a <= len(comp) and b == comp[a - 1] and b > below):
        raise ValueError(f"node {node!r} is not removable from {lam!r}")
    comp[a - 1] -= 1
    if comp[a - 1] == 0:
        comp.pop()
    return lam[: m - 1] + (tuple(comp),) + lam[m:]


def degree_contribution(lam: Multipartition, kappa: Multicharge, node: Node) -> int:
    """Signed count for a node of the diagram: addable nodes of the node's
    residue strictly below it, minus removable ones strictly below it.

    Summing these contributions over the growth of a standard tableau gives
    the tableau's degree.
    """
    if not contains_node(lam, node):
        raise ValueError(f"node {node!r} is not in the diagram of {lam!r}")
    i = residue_of(node, kappa)
    a0, _, m0 = node
    count = 0
    for m in range(m0, len(lam) + 1):
        comp = lam[m - 1]
        k = kappa[m - 1]
        first_row = a0 + 1 if m == m0 else 1
        for a, b in _addable_cells(comp):
            if a >= first_row and (k + b - a) % 2 == i:
                count += 1
        for a, b in _removable_cells(comp):
            if a >= first_row and (k + b - a) % 2 == i:
                count -= 1
    return count


def partition_parity(p: Partition) -> int:
    """Sum of the half-parts (rounded down), mod 2."""
    return sum(part // 2 for part in p) % 2


def residue_node_count(p: Partition, charge: int, i: int) -> int:
    """Number of i-nodes of a single partition whose component carries ``charge``."""
    count = 0
    for a, part in enumerate(p, start=1):
        # residues along a row alternate, starting at charge + 1 - a
        start = (charge + 1 - a) % 2
        count += (part + 1) // 2 if start == i else part // 2
    return count


def degree_parity(lam: Multipartition, kappa: Multicharge) -> int:
    """Combinatorial parity of a multipartition: the common value, mod 2, of
    the degrees of its standard tableaux.

    Computed as the sum of the component parities plus, for each pair of
    components j < m, the number of nodes in component j whose residue equals
    the charge of component m.
    """
    if len(lam) != len(kappa):
        raise ValueError(
            f"multipartition has {len(lam)} components but multicharge has {len(kappa)}"
        )
    total = sum(partition_parity(comp) for comp in lam)
    for j in range(len(lam)):
        for m in range(j + 1, len(lam)):
            total += residue_node_count(lam[j], kappa[j], kappa[m])
    return total % 2


def is_2_restricted(p: Partition) -> bool:
    """True if successive part differences (with a trailing zero) are at most 1."""
    for a, part in enumerate(p):
        below = p[a + 1] if a + 1 < len(p) else 0
        if part - below > 1:
            return False
    return True


def partitions(d: int) -> Iterator[Partition]:
    """Partitions of ``d`` in reverse-lexicographic order: (d) first, (1^d) last."""
    if d < 0:
        raise ValueError("size must be nonnegative")
    if d == 0:
        yield ()
        return
    parts = [d]
    yield (d,)
    while parts != [1] * d:
        k = len(parts) - 1
        while parts[k] == 1:
            k -= 1
        trailing = len(parts) - k - 1
        parts[k] -= 1
        cap = parts[k]
        rest = trailing + 1
        del parts[k + 1 :]
        while rest:
            take = min(cap, rest)
            parts.append(take)
            rest -= take
        yield tuple(parts)


def _compositions(d: int, length: int) -> Iterator[tuple[int, ...]]:
    if length == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _compositions(d - first, length - 1):
            yield (first,) + rest


def multipartitions(d: int, level: int) -> Iterator[Multipartition]:
    """All ``level``-multipartitions of ``d``, each exactly once.

    Order: size compositions (|lam^(1)|, ..., |lam^(l)|) in descending
    lexicographic order; within a composition, the Cartesian product of the
    per-component reverse-lexicographic lists, rightmost component fastest.
    Downstream matrices index by this order, so it is stable by contract.
    """
    if level < 1:
        raise ValueError("level must be at least 1")
    for sizes in _compositions(d, level):
        pools = [list(partitions(k)) for k in sizes]
        for combo in itertools.product(*pools):
            yield combo


def format_multipartition(lam: Multipartition) -> str:
    """Textual form: parts comma-separated, components '|'-separated, '-' if empty."""
    return "|".join(",".join(str(p) for p in comp) if comp else "-" for comp in lam)


def parse_multipartition(text: str) -> Multipartition:
    """Inverse of :func:`format_multipartition`; also accepts surrounding blanks."""
    components = []
    for chunk in text.split("|"):
        chunk = chunk.strip()
        if chunk in ("", "-"):
            components.append(())
            continue
        try:
            parts = tuple(int(s) for s in chunk.split(","))
        except ValueError:
            raise ValueError(f"malformed partition {chunk!r} in {text!r}") from None
        components.append(as_partition(parts))
    return tuple(components)


def parse_residues(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        seq = tuple(int(s) for s in text.split(","))
    except ValueError:
        raise ValueError(f"malformed residue sequence {text!r}") from None
    if any(i not in RESIDUES for i in seq):
        raise ValueError(f"residues must be 0 or 1, got {text!r}")
    return seq
