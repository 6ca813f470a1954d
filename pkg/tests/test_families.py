import pytest

from toughlab import is_connected, regularity, spectrum
from toughlab.errors import InvalidParams
from toughlab.families import (
    FamilySpec,
    build,
    circulant,
    complete,
    complete_bipartite,
    cycle,
    default_corpus,
    hypercube,
    kneser,
    load_manifest,
    parse_family_spec,
    petersen,
    random_regular,
)


def test_cycle():
    assert cycle(3).m == 3
    assert spectrum(cycle(4)).eigenvalues == pytest.approx([2, 0, 0, -2], abs=1e-9)
    with pytest.raises(InvalidParams):
        cycle(2)


def test_complete():
    assert complete(2).m == 1
    assert regularity(complete(5)) == 4
    with pytest.raises(InvalidParams):
        complete(0)


def test_complete_bipartite():
    assert complete_bipartite(1, 1).m == 1
    k33 = complete_bipartite(3, 3)
    assert regularity(k33) == 3
    assert spectrum(k33).lam == pytest.approx(3, abs=1e-9)
    with pytest.raises(InvalidParams):
        complete_bipartite(2, 3)


def test_hypercube():
    assert hypercube(1).m == 1
    q2 = hypercube(2)
    assert q2.n == 4 and regularity(q2) == 2 and is_connected(q2)
    q3 = hypercube(3)
    assert regularity(q3) == 3 and q3.m == 12
    with pytest.raises(InvalidParams):
        hypercube(7)


def test_kneser():
    p = kneser(5, 2)
    assert p.n == 10 and regularity(p) == 3
    big = kneser(7, 3)
    assert big.n == 35 and regularity(big) == 4
    with pytest.raises(InvalidParams):
        kneser(4, 2)


def test_petersen_spectrum_golden():
    prof = spectrum(petersen())
    assert prof.eigenvalues == pytest.approx([3] + [1] * 5 + [-2] * 4, abs=1e-9)


def test_circulant():
    assert circulant(6, [1]) == cycle(6)
    assert circulant(5, [1, 2]) == complete(5)
    with pytest.raises(InvalidParams):
        circulant(6, [7])


def test_random_regular():
    g = random_regular(8, 3, seed=1)
    assert regularity(g) == 3 and is_connected(g)
    with pytest.raises(InvalidParams):
        random_regular(5, 3, seed=1)
    assert random_regular(8, 3, seed=1) == g  # deterministic
    assert random_regular(8, 3, seed=2) != g  # seed actually matters


def test_family_spec_parsing_and_build():
    spec = parse_family_spec("kneser 5 2")
    assert spec == FamilySpec("kneser", (5, 2))
    assert build(spec) == petersen()
    with pytest.raises(InvalidParams):
        build(parse_family_spec("frobnicate 3"))
    with pytest.raises(InvalidParams):
        parse_family_spec("cycle x")


def test_load_manifest_skips_comments_and_blanks():
    specs = load_manifest("# header\n\ncycle 5\npetersen  # inline\n")
    assert specs == [FamilySpec("cycle", (5,)), FamilySpec("petersen", ())]


def test_default_corpus_builds_and_is_valid():
    specs = default_corpus()
    assert len(specs) >= 60
    labels = {s.label() for s in specs}
    assert "petersen" in labels and "kneser 7 3" in labels
    for spec in specs:
        g = build(spec)
        assert is_connected(g)
        assert isinstance(regularity(g), int)  # every corpus graph is regular
