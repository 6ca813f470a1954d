"""Exact graph toughness t(G) = min |S| / c(G-S) over disconnecting sets S.

Two independent code paths: a pruned size-class search (the production route)
and a naive all-subsets oracle used only for cross-validation in tests.
Ratios are exact ``fractions.Fraction`` values; floats would make ties
ambiguous.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import DisconnectedGraph, GraphTooLarge, SNotProper
from .graph import Graph, VertexSet, count_components, is_connected

# Past this the subset space is no longer a desk-scale computation.
DEFAULT_MAX_N = 24
MAX_N_ENV = "TOUGHLAB_MAX_N"


@dataclass(frozen=True)
class ToughnessResult:
    t: Fraction
    witness: VertexSet
    components: int


def toughness_search_cap() -> int:
    raw = os.environ.get(MAX_N_ENV)
    if raw is None:
        return DEFAULT_MAX_N
    return int(raw)


def _subsets_of_size(n: int, k: int) -> Iterator[int]:
    """All k-subsets of 0..n-1 as bitmasks, ascending (Gosper's hack)."""
    if k == 0:
        yield 0
        return
    if k > n:
        return
    mask = (1 << k) - 1
    limit = 1 << n
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = ((ripple ^ mask) >> 2) // low | ripple


def exact_toughness(g: Graph, max_n: int | None = None) -> ToughnessResult | None:
    """Globally minimal |S|/c(G-S) with a witness cut set.

    Returns None when no proper S disconnects the graph (complete graphs):
    the minimization domain is empty and we do not invent a value.
    Enumerates S by increasing size s; a whole size class is pruned once
    s/(n-s) can no longer beat the incumbent (c <= n-s always), at which
    point no later class can either.
    """
    cap = toughness_search_cap() if max_n is None else max_n
    if g.n > cap:
        raise GraphTooLarge(
            f"exact toughness on n={g.n} exceeds the cap {cap}; "
            f"raise it explicitly or via {MAX_N_ENV} if you mean it"
        )
    if not is_connected(g):
        raise DisconnectedGraph("toughness is defined for connected graphs only")
    if g.n < 2:
        raise DisconnectedGraph("toughness needs at least two vertices")
    n = g.n
    best: Fraction | None = None
    best_mask = 0
    best_c = 0
    for s in range(0, n - 1):
        if best is not None and Fraction(s, n - s) >= best:
            break
        for mask in _subsets_of_size(n, s):
            c = count_components(g, mask)
            if c <= 1:
                continue
            ratio = Fraction(s, c)
            if best is None or ratio < best:
                best = ratio
                best_mask = mask
                best_c = c
    if best is None:
        return None
    return ToughnessResult(best, VertexSet(n, best_mask), best_c)


def naive_toughness(g: Graph) -> ToughnessResult | None:
    """Unpruned all-subsets oracle.  Test cross-check only; O(2^n)."""
    if not is_connected(g):
        raise DisconnectedGraph("toughness is defined for connected graphs only")
    n = g.n
    best: Fraction | None = None
    best_mask = 0
    best_c = 0
    for mask in range((1 << n) - 1):
        c = count_components(g, mask)
        if c <= 1:
            continue
        ratio = Fraction(mask.bit_count(), c)
        if best is None or ratio < best:
            best = ratio
            best_mask = mask
            best_c = c
    if best is None:
        return None
    return ToughnessResult(best, VertexSet(n, best_mask), best_c)


def toughness_of_cut(g: Graph, s: VertexSet) -> Fraction | None:
    """|S|/c(G-S) for one candidate cut, or None if S does not disconnect."""
    if s.n != g.n:
        raise ValueError("cut set has wrong ambient size")
    if s.bits == (1 << g.n) - 1:
        raise SNotProper("S must be a proper subset of V")
    c = count_components(g, s.bits)
    if c <= 1:
        return None
    return Fraction(len(s), c)


def is_k_tough(g: Graph, k: Fraction, max_n: int | None = None) -> bool:
    """True iff every disconnecting S has |S| >= k * c(G-S).

    Early-exits on the first violator; size classes with s/(n-s) >= k cannot
    contain one, and neither can any later class.
    """
    cap = toughness_search_cap() if max_n is None else max_n
    if g.n > cap:
        raise GraphTooLarge(f"is_k_tough on n={g.n} exceeds the cap {cap}")
    if not is_connected(g):
        raise DisconnectedGraph("k-toughness is defined for connected graphs only")
    n = g.n
    for s in range(0, n - 1):
        if Fraction(s, n - s) >= k:
            break
        for mask in _subsets_of_size(n, s):
            c = count_components(g, mask)
            if c > 1 and Fraction(s, c) < k:
                return False
    return True
