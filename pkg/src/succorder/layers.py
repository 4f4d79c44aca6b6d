"""Duplicate-free enumeration of independent sets, streamed by cardinality.

Sets are generated by canonical extension: a set is extended only by
vertices greater than its maximum that avoid its closed neighbourhood, so
every independent set is produced exactly once, from its own
maximum-element-removed parent.  Layers are emitted in strictly increasing
mask order, which makes golden files and downstream accumulation orders
stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, VertexSet, closed_neighborhood


@dataclass(frozen=True)
class Layer:
    """All independent sets of one cardinality, mask-ascending."""

    k: int
    sets: tuple[VertexSet, ...]

    def __len__(self) -> int:
        return len(self.sets)


def iter_layers(g: Graph, universe: VertexSet | None = None) -> Iterator[Layer]:
    """Yield layers k = 0, 1, ... of independent sets contained in ``universe``.

    Only the previous layer is kept resident, so memory is bounded by the
    two largest layers.  Stops after the last nonempty layer.
    """
    if universe is None:
        universe = g.full_mask
    current: list[VertexSet] = [0]
    k = 0
    while current:
        yield Layer(k, tuple(current))
        nxt: list[VertexSet] = []
        for members in current:
            cand = universe & ~closed_neighborhood(g, members)
            if members:
                # only vertices above the current maximum keep extension canonical
                cand &= ~((1 << members.bit_length()) - 1)
            while cand:
                low = cand & -cand
                cand ^= low
                nxt.append(members | low)
        nxt.sort()
        current = nxt
        k += 1


def enumerate_layers(g: Graph) -> list[Layer]:
    """All layers of independent sets of the graph."""
    return list(iter_layers(g))


def independence_number(g: Graph) -> int:
    """Size of the largest independent set."""
    alpha = 0
    for layer in iter_layers(g):
        alpha = layer.k
    return alpha
