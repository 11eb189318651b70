import random

import pytest

from posetcheck import (
    LatticeTooLargeError,
    Poset,
    antichain_lattice,
    brute_iso,
    invariants,
    iso,
    join_irreducibles,
)
from posetcheck.gadgets import bowtie, crossed_chains_pair, grid_poset
from posetcheck.randgen import random_poset

from helpers import all_posets


def _relabel(p, rng):
    names = [f"e{i}" for i in range(len(p))]
    rng.shuffle(names)
    table = dict(zip(p.elements, names))
    pairs = [(table[a], table[b]) for a in p.elements for b in p.elements
             if p.leq(a, b)]
    from posetcheck import validate_poset
    return validate_poset(tuple(names), pairs), table


def test_bowtie_antichain_lattice():
    lattice = antichain_lattice(bowtie())
    antichains = {frozenset(a) for a in lattice.poset.elements}
    assert antichains == {
        frozenset(), frozenset({1}), frozenset({2}), frozenset({3}),
        frozenset({4}), frozenset({1, 2}), frozenset({3, 4}),
    }


def test_lattice_meet_and_join():
    lattice = antichain_lattice(bowtie())
    a = next(e for e in lattice.poset.elements if set(e) == {1, 2})
    b = next(e for e in lattice.poset.elements if set(e) == {3})
    assert set(lattice.join(a, b)) == {3}
    assert set(lattice.meet(a, b)) == {1, 2}


def test_join_irreducibles_recover_base():
    for n in range(1, 6):
        for p in all_posets(n):
            j = join_irreducibles(antichain_lattice(p))
            mapping = iso(p, j)
            assert mapping is not None


def test_lattice_cap():
    anti = Poset(tuple(range(12)), [1 << i for i in range(12)])
    with pytest.raises(LatticeTooLargeError):
        antichain_lattice(anti, cap=100)


def test_iso_falls_back_when_lattice_too_large():
    anti = Poset(tuple(range(12)), [1 << i for i in range(12)])
    anti2 = Poset(tuple("abcdefghijkl"), [1 << i for i in range(12)])
    mapping = iso(anti, anti2, lattice_cap=100)
    assert mapping is not None and len(set(mapping.values())) == 12


def test_iso_on_relabeled_posets():
    rng = random.Random(17)
    for _ in range(25):
        p = random_poset(rng, rng.randint(1, 8))
        q, table = _relabel(p, rng)
        mapping = iso(p, q)
        assert mapping is not None
        assert all(q.leq(mapping[a], mapping[b]) == p.leq(a, b)
                   for a in p.elements for b in p.elements)


def test_iso_rejects_nonisomorphic():
    q, p = crossed_chains_pair()
    assert iso(q, p.induced(list(p.elements)[:8])) is None
    assert iso(bowtie(), grid_poset(1).induced(list(grid_poset(1).elements))) is None
    chain = Poset((1, 2, 3, 4), [1, 3, 7, 15])
    anti = Poset((1, 2, 3, 4), [1, 2, 4, 8])
    assert iso(chain, anti) is None


def test_bowtie_self_dual():
    p = bowtie()
    flipped = Poset(p.elements, [
        sum(1 << p.index(b) for b in p.elements if p.leq(b, a))
        for a in p.elements
    ])
    mapping = iso(p, flipped)
    assert mapping is not None
    assert verifies_dual(p, mapping)


def verifies_dual(p, mapping):
    return all(p.leq(mapping[b], mapping[a]) == p.leq(a, b)
               for a in p.elements for b in p.elements)


def test_iso_agrees_with_oracle_small():
    rng = random.Random(19)
    for _ in range(40):
        a = random_poset(rng, rng.randint(1, 5))
        b = random_poset(rng, rng.randint(1, 5))
        assert (iso(a, b) is None) == (brute_iso(a, b) is None)


def test_invariants_shortcut_consistency():
    # isomorphic posets must share all invariants
    rng = random.Random(23)
    for _ in range(10):
        p = random_poset(rng, 7)
        q, _ = _relabel(p, rng)
        assert invariants(p) == invariants(q)
