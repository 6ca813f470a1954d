"""Constructive combinatorics: the subset-sum index lemma and the two-block
component partition.

``index_subset`` realizes the inductive proof of the lemma: positive integers
x_1..x_c with sum at most 2c-1 hit every target between 0 and the sum via a
subset.  ``claim2_partition`` uses it to split the components left by a
vertex cut into two blocks X, Y with no edges between them and at least c
vertices each.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import PreconditionViolated
from .graph import Graph, VertexSet, e_between


@dataclass(frozen=True)
class PartitionWitness:
    x: VertexSet
    y: VertexSet
    size_x: int
    size_y: int
    cross_edges: int

    def to_json_dict(self) -> dict:
        return {
            "X": list(self.x.members()),
            "Y": list(self.y.members()),
            "size_x": self.size_x,
            "size_y": self.size_y,
            "cross_edges": self.cross_edges,
        }


def index_subset(sizes: Sequence[int], ell: int) -> frozenset[int]:
    """Indices (0-based, in the caller's order) whose sizes sum to ``ell``.

    Requires every entry positive and sum(sizes) <= 2*len(sizes) - 1; under
    that budget every target 0 <= ell <= sum is reachable, and the inductive
    choice below is deterministic.
    """
    c = len(sizes)
    if c == 0:
        raise PreconditionViolated("sizes must be nonempty")
    if any(x < 1 for x in sizes):
        raise PreconditionViolated(f"all sizes must be positive, got {list(sizes)}")
    total = sum(sizes)
    if total > 2 * c - 1:
        raise PreconditionViolated(f"sum {total} exceeds budget {2 * c - 1} for c={c}")
    if not 0 <= ell <= total:
        raise PreconditionViolated(f"target {ell} outside 0..{total}")
    order = sorted(range(c), key=lambda i: sizes[i])
    xs = [sizes[i] for i in order]

    def rec(k: int, target: int) -> list[int]:
        # k entries xs[0..k-1], ascending, sum <= 2k-1; target in [0, sum].
        if k == 1:
            return [] if target == 0 else [0]
        if target <= k - 1:
            return rec(k - 1, target)
        return rec(k - 1, target - xs[k - 1]) + [k - 1]

    chosen = rec(c, ell)
    result = frozenset(order[i] for i in chosen)
    assert sum(sizes[i] for i in result) == ell
    return result


def check_claim1_hypothesis(comps: Sequence[VertexSet]) -> bool:
    """Do the components below the largest carry at least c vertices in total?

    This is the condition the two-block partition needs in its first case; on
    arbitrary graphs it can fail, in which case the partition refuses.
    """
    if not comps:
        raise PreconditionViolated("component list must be nonempty")
    c = len(comps)
    return sum(len(v) for v in comps[:-1]) >= c


def _validate_components(comps: Sequence[VertexSet]) -> list[int]:
    c = len(comps)
    if c < 2:
        raise PreconditionViolated("need at least two components")
    sizes = [len(v) for v in comps]
    if any(s < 1 for s in sizes):
        raise PreconditionViolated("components must be nonempty")
    if sizes != sorted(sizes):
        raise PreconditionViolated("components must be sorted ascending by size")
    seen = 0
    for v in comps:
        if seen & v.bits:
            raise PreconditionViolated("components must be pairwise disjoint")
        seen |= v.bits
    return sizes


def _trim_sizes(sizes: list[int], budget: int) -> list[int]:
    # Decrement the currently largest entry (ties to the lowest index) until
    # the total matches the budget; every entry stays >= 1.
    trimmed = list(sizes)
    total = sum(trimmed)
    while total > budget:
        i = max(range(len(trimmed)), key=lambda j: (trimmed[j], -j))
        trimmed[i] -= 1
        total -= 1
    return trimmed


def claim2_partition(comps: Sequence[VertexSet],
                     graph: Graph | None = None) -> PartitionWitness:
    """Split components into blocks X, Y with e(X,Y)=0 and |X|,|Y| >= c.

    ``comps`` must be the components of some vertex-deleted graph, ascending
    by size, with at least 2c+1 vertices in total.  When a ``graph`` is
    supplied the cross-edge count is measured against it rather than trusted.
    """
    sizes = _validate_components(comps)
    c = len(comps)
    total = sum(sizes)
    if total < 2 * c + 1:
        raise PreconditionViolated(f"need at least {2 * c + 1} vertices, got {total}")
    n = comps[0].n
    largest = sizes[-1]
    if largest >= c:
        if sum(sizes[:-1]) < c:
            raise PreconditionViolated(
                f"components below the largest total {sum(sizes[:-1])} < c={c}"
            )
        x = VertexSet(n)
        for v in comps[:-1]:
            x = x | v
        y = comps[-1]
    else:
        # largest <= c-1; total >= 2c+1 then forces largest >= 3.
        ell = c - largest
        rest = sizes[:-1]
        if sum(rest) <= 2 * c - 3:
            idx = index_subset(rest, ell)
        else:
            trimmed = _trim_sizes(rest, 2 * c - 3)
            idx = index_subset(trimmed, ell)
            assert 2 * c - 3 - ell >= c
        x = comps[-1]
        y = VertexSet(n)
        for i, v in enumerate(comps[:-1]):
            if i in idx:
                x = x | v
            else:
                y = y | v
    size_x, size_y = len(x), len(y)
    if size_x < c or size_y < c:
        raise PreconditionViolated(
            f"construction produced blocks of sizes {size_x}, {size_y} < c={c}"
        )
    cross = e_between(graph, x, y) if graph is not None else 0
    return PartitionWitness(x, y, size_x, size_y, cross)
