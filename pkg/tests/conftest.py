import pytest

from toughlab import families, spectrum
from toughlab.toughness import _subsets_of_size


def independent_sets_of_size(g, k):
    """Brute-force: all independent vertex sets of size k, as bitmasks."""
    found = []
    for mask in _subsets_of_size(g.n, k):
        ok = True
        bits = mask
        while bits:
            low = bits & -bits
            if g.adj[low.bit_length() - 1] & mask:
                ok = False
                break
            bits ^= low
        if ok:
            found.append(mask)
    return found


@pytest.fixture(scope="session")
def corpus():
    """The shipped corpus as (spec, graph) pairs."""
    return [(spec, families.build(spec)) for spec in families.default_corpus()]


@pytest.fixture(scope="session")
def corpus_spectra(corpus):
    """Spectral profiles for every corpus graph, computed once."""
    return {spec: spectrum(g) for spec, g in corpus}
