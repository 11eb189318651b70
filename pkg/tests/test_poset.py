import pytest

from posetcheck import (
    CoverDigraph,
    CyclicCoversError,
    NotAntisymmetricError,
    NotReflexiveError,
    NotTransitiveError,
    Poset,
    depth,
    format_poset_text,
    from_covers,
    hasse_dot,
    invariants,
    parse_poset_text,
    poset_from_json,
    poset_to_json,
    to_covers,
    validate_poset,
    width,
    width_and_chain_partition,
)
from posetcheck.gadgets import bowtie, crossed_chains_pair, grid_poset

from helpers import all_posets, brute_width


def test_validate_accepts_bowtie_relation():
    pairs = [(x, x) for x in (1, 2, 3, 4)]
    pairs += [(1, 3), (1, 4), (2, 3), (2, 4)]
    p = validate_poset((1, 2, 3, 4), pairs)
    assert p.leq(1, 3) and not p.leq(3, 1)
    assert p.incomparable(1, 2) and p.incomparable(3, 4)


def test_validate_reflexivity_error():
    with pytest.raises(NotReflexiveError):
        validate_poset((1, 2), [(1, 1)])


def test_validate_antisymmetry_error():
    pairs = [(1, 1), (2, 2), (1, 2), (2, 1)]
    with pytest.raises(NotAntisymmetricError):
        validate_poset((1, 2), pairs)


def test_validate_transitivity_error():
    pairs = [(1, 1), (2, 2), (3, 3), (1, 2), (2, 3)]
    with pytest.raises(NotTransitiveError):
        validate_poset((1, 2, 3), pairs)


def test_from_covers_closes_transitively():
    p = from_covers(CoverDigraph((1, 2, 3), ((1, 2), (2, 3))))
    assert p.leq(1, 3)


def test_from_covers_rejects_cycles():
    with pytest.raises(CyclicCoversError):
        from_covers(CoverDigraph((1, 2, 3), ((1, 2), (2, 3), (3, 1))))


def test_covers_round_trip():
    for n in range(1, 6):
        for p in all_posets(n):
            again = from_covers(to_covers(p))
            assert again.elements == p.elements
            assert all(again.leq(a, b) == p.leq(a, b)
                       for a in p.elements for b in p.elements)


def test_bowtie_invariants():
    report = invariants(bowtie())
    assert (report.size, report.width, report.depth) == (4, 2, 2)
    assert (report.degree, report.cover_degree) == (2, 2)


def test_width_matches_brute_force():
    for n in range(1, 6):
        for p in all_posets(n):
            w, partition = width_and_chain_partition(p)
            assert w == brute_width(p)
            assert len(partition) == w
            seen = [x for chain in partition for x in chain]
            assert sorted(seen) == sorted(p.elements)
            for chain in partition:
                assert all(p.lt(a, b) for a, b in zip(chain, chain[1:]))


def test_crossed_chains_partition():
    _, p = crossed_chains_pair()
    w, partition = width_and_chain_partition(p)
    assert w == 2
    assert {len(c) for c in partition} == {6}


def test_grid_poset_invariants():
    for i in (1, 2, 3):
        g = grid_poset(i)
        assert len(g) == 2 * i * i
        report = invariants(g)
        assert report.width == 2
        assert report.cover_degree <= 4


def test_depth_on_chain_and_antichain():
    chain = from_covers(CoverDigraph((1, 2, 3), ((1, 2), (2, 3))))
    assert depth(chain) == 3 and width(chain) == 1
    anti = Poset((1, 2, 3), [1, 2, 4])
    assert depth(anti) == 1 and width(anti) == 3


def test_text_format_round_trip():
    p = bowtie()
    text = format_poset_text(p)
    again = parse_poset_text(text)
    assert [str(e) for e in p.elements] == list(again.elements)
    assert to_covers(again).covers == tuple(
        (str(a), str(b)) for a, b in to_covers(p).covers
    )


def test_text_format_order_pairs_allowed():
    p = parse_poset_text("elements: a b c\na <= b\nb <= c\na <= c\n")
    assert p.leq("a", "c")


def test_text_format_errors():
    with pytest.raises(ValueError):
        parse_poset_text("a < b\n")
    with pytest.raises(ValueError):
        parse_poset_text("elements: a b\na ! b\n")
    with pytest.raises(ValueError):
        parse_poset_text("elements: a b\na < c\n")


def test_json_round_trip():
    p = grid_poset(2)
    again = poset_from_json(poset_to_json(p))
    assert list(again.elements) == [str(e) for e in p.elements]
    assert invariants(again) == invariants(p)


def test_hasse_dot_mentions_covers():
    dot = hasse_dot(bowtie())
    assert '"1" -> "3";' in dot and "rankdir=BT" in dot


def test_induced_subposet():
    p = bowtie()
    sub = p.induced([1, 3])
    assert len(sub) == 2 and sub.lt(1, 3)
