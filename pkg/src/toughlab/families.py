"""Deterministic generators for the verification corpus."""

from __future__ import annotations

import random
from dataclasses import dataclass
from importlib import resources
from itertools import combinations

from .errors import InvalidParams, RetriesExhausted
from .graph import Graph, from_edge_list, is_connected

RANDOM_REGULAR_MAX_ATTEMPTS = 1000


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParams(f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParams(f"complete needs n >= 1, got {n}")
    return from_edge_list(n, list(combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    """Balanced complete bipartite K_{a,a}; unbalanced sides are refused
    because every consumer here wants a regular graph."""
    if a != b:
        raise InvalidParams(f"only balanced K_a,a supported, got ({a},{b})")
    if a < 1:
        raise InvalidParams(f"complete_bipartite needs a >= 1, got {a}")
    return from_edge_list(2 * a, [(i, a + j) for i in range(a) for j in range(a)])


def hypercube(k: int) -> Graph:
    if not 1 <= k <= 6:
        raise InvalidParams(f"hypercube needs 1 <= k <= 6, got {k}")
    n = 1 << k
    edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(k) if v < v ^ (1 << b)]
    return from_edge_list(n, edges)


def kneser(n: int, k: int) -> Graph:
    """Vertices are the k-subsets of {0..n-1}, adjacent when disjoint.

    Vertex order is colexicographic (equivalently: increasing subset
    bitmask), fixed so graph6 goldens are stable.
    """
    if k < 1 or n < 2 * k + 1:
        raise InvalidParams(f"kneser needs k >= 1 and n >= 2k+1, got ({n},{k})")
    subsets = sorted(
        (sum(1 << e for e in combo) for combo in combinations(range(n), k))
    )
    edges = [
        (i, j)
        for i in range(len(subsets))
        for j in range(i + 1, len(subsets))
        if not subsets[i] & subsets[j]
    ]
    return from_edge_list(len(subsets), edges)


def petersen() -> Graph:
    return kneser(5, 2)


def circulant(n: int, connections: list[int]) -> Graph:
    if n < 3:
        raise InvalidParams(f"circulant needs n >= 3, got {n}")
    offsets = sorted(set(connections))
    if not offsets:
        raise InvalidParams("circulant needs at least one offset")
    if any(not 1 <= s <= n // 2 for s in offsets):
        raise InvalidParams(f"offsets {offsets} outside 1..{n // 2} for n={n}")
    edges = [(i, (i + s) % n) for s in offsets for i in range(n)]
    return from_edge_list(n, edges)


def random_regular(n: int, d: int, seed: int) -> Graph:
    """Uniform pairing model: match d*n half-edges, reject bad outcomes.

    An attempt is rejected if the matching yields a loop, a repeated edge, or
    a disconnected graph.  Deterministic for a fixed seed.
    """
    if d < 0 or d >= n:
        raise InvalidParams(f"need 0 <= d < n, got d={d}, n={n}")
    if n * d % 2:
        raise InvalidParams(f"n*d must be even, got n={n}, d={d}")
    rng = random.Random(seed)
    for _ in range(RANDOM_REGULAR_MAX_ATTEMPTS):
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            edge = (u, v) if u < v else (v, u)
            if edge in edges:
                ok = False
                break
            edges.add(edge)
        if not ok:
            continue
        g = from_edge_list(n, sorted(edges))
        if is_connected(g):
            return g
    raise RetriesExhausted(
        f"no valid ({n},{d})-regular graph in {RANDOM_REGULAR_MAX_ATTEMPTS} attempts"
    )


# ---------------------------------------------------------------------------
# Family specs and the shipped corpus manifest


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...]

    def label(self) -> str:
        return " ".join([self.family, *map(str, self.params)])


def parse_family_spec(line: str) -> FamilySpec:
    parts = line.split()
    if not parts:
        raise InvalidParams("empty family spec")
    family, raw = parts[0], parts[1:]
    try:
        params = tuple(int(p) for p in raw)
    except ValueError as exc:
        raise InvalidParams(f"non-integer parameter in {line!r}") from exc
    return FamilySpec(family, params)


def build(spec: FamilySpec) -> Graph:
    family, params = spec.family, spec.params

    def arity(k: int) -> tuple[int, ...]:
        if len(params) != k:
            raise InvalidParams(f"{family} takes {k} parameter(s), got {len(params)}")
        return params

    if family == "cycle":
        return cycle(*arity(1))
    if family == "complete":
        return complete(*arity(1))
    if family == "complete_bipartite":
        a, b = arity(2)
        return complete_bipartite(a, b)
    if family == "hypercube":
        return hypercube(*arity(1))
    if family == "kneser":
        n, k = arity(2)
        return kneser(n, k)
    if family == "petersen":
        arity(0)
        return petersen()
    if family == "circulant":
        if len(params) < 2:
            raise InvalidParams("circulant takes n followed by offsets")
        return circulant(params[0], list(params[1:]))
    if family == "random_regular":
        n, d, seed = arity(3)
        return random_regular(n, d, seed)
    raise InvalidParams(f"unknown family {family!r}")


def load_manifest(text: str) -> list[FamilySpec]:
    specs = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            specs.append(parse_family_spec(line))
    return specs


def default_corpus() -> list[FamilySpec]:
    """The shipped verification corpus."""
    text = resources.files("toughlab.data").joinpath("corpus.manifest").read_text()
    return load_manifest(text)
