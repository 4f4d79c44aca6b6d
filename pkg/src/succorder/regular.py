"""Fully regular graphs: detection and the closed-form ordering count.

A graph is fully regular when a(I), the number of vertices outside the
closed neighbourhood of an independent set I, depends only on |I|.  For
such graphs the layer sizes and the successive-ordering count collapse to
closed forms in the constants a_0..a_alpha, which this module evaluates
and cross-validates against the general engine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import require_internal
from .graph import Graph, VertexSet, a_value
from .layers import iter_layers


@dataclass(frozen=True)
class RegularityProfile:
    """The constants a_0..a_alpha of a fully regular graph (a_0 = n)."""

    alpha: int
    a_seq: tuple[int, ...]


@dataclass(frozen=True)
class RegularityWitness:
    """Two same-size independent sets with different outside counts."""

    size: int
    first_set: VertexSet
    first_value: int
    other_set: VertexSet
    other_value: int


def detect_fully_regular(g: Graph) -> RegularityProfile | RegularityWitness:
    """Group a(I) by |I| over all independent sets.

    Returns the profile when each group is constant, otherwise the first
    witness pair in enumeration order (layer by layer, mask-ascending).
    Detection is by exhaustive grouping; its cost is dominated by the
    enumeration itself.
    """
    a_seq: list[int] = []
    for layer in iter_layers(g):
        first_mask = layer.sets[0]
        first_value = a_value(g, first_mask)
        for mask in layer.sets[1:]:
            value = a_value(g, mask)
            if value != first_value:
                return RegularityWitness(layer.k, first_mask, first_value, mask, value)
        a_seq.append(first_value)
    return RegularityProfile(len(a_seq) - 1, tuple(a_seq))


def count_check(g: Graph, profile: RegularityProfile) -> bool:
    """Check the layer sizes against a_0 a_1 ... a_{i-1} / i! for every i."""
    for layer in iter_layers(g):
        if layer.k > profile.alpha:
            return False
        numerator = 1
        for j in range(layer.k):
            numerator *= profile.a_seq[j]
        count, rem = divmod(numerator, math.factorial(layer.k))
        if rem or count != len(layer):
            return False
    return True


def sigma_closed_form(profile: RegularityProfile) -> int:
    """Closed-form ordering count a_0! * sum_i prod_{j<=i} (-a_j)/(a_0 - a_j).

    Defined for fully regular profiles; a_0 - a_j > 0 for j >= 1 because
    a_j < n.  The result is asserted integral.
    """
    a = profile.a_seq
    total = Fraction(0)
    term = Fraction(1)
    for i in range(profile.alpha + 1):
        if i:
            term *= Fraction(-a[i], a[0] - a[i])
        total += term
    scaled = math.factorial(a[0]) * total
    require_internal(scaled.denominator == 1, f"closed form {scaled} is not an integer")
    return scaled.numerator
