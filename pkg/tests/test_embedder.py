import random

import pytest

from posetcheck import (
    BudgetExceededError,
    Poset,
    SearchBudget,
    brute_embed,
    embed,
    verify_embedding,
    verify_k_perfect,
    width,
)
from posetcheck.embedder import enumerate_chain_partitions, family_for
from posetcheck.gadgets import (
    bowtie,
    crossed_chains_pair,
    crossed_chains_witness,
    grid_poset,
)
from posetcheck.randgen import random_bounded_width_poset, random_poset

from helpers import all_posets


def _set_partitions(items, blocks):
    if not items:
        if blocks == 0:
            yield []
        return
    head, rest = items[0], items[1:]
    for sub in _set_partitions(rest, blocks):
        for i in range(len(sub)):
            yield sub[:i] + [[head] + sub[i]] + sub[i + 1:]
    for sub in _set_partitions(rest, blocks - 1):
        yield [[head]] + sub


def test_chain_partition_enumeration_matches_brute_filter():
    q = bowtie()
    for w in (2, 3):
        found = {frozenset(map(frozenset, part))
                 for part in enumerate_chain_partitions(q, w)}
        expected = set()
        for part in _set_partitions(list(q.elements), w):
            if all(all(not q.incomparable(a, b) for a in blk for b in blk)
                   for blk in part):
                expected.add(frozenset(map(frozenset, part)))
        assert found == expected
        assert found


def test_chain_partitions_are_sorted_chains():
    q = grid_poset(2)
    for part in enumerate_chain_partitions(q, width(q)):
        for chain in part:
            assert all(q.lt(a, b) for a, b in zip(chain, chain[1:]))


def test_verify_embedding_checks_everything():
    q = Poset(("a", "b"), [3, 2])
    p = bowtie()
    assert verify_embedding(q, p, {"a": 1, "b": 3})
    assert not verify_embedding(q, p, {"a": 1, "b": 2})  # not order-preserving
    assert not verify_embedding(q, p, {"a": 1, "b": 1})  # not injective
    assert not verify_embedding(q, p, {"a": 1})  # not total
    anti = Poset(("a", "b"), [1, 2])
    assert not verify_embedding(anti, p, {"a": 1, "b": 3})  # not reflecting


def test_crossed_chains_embeds_with_valid_witness():
    q, p = crossed_chains_pair()
    witness = embed(q, p)
    assert witness is not None
    assert verify_embedding(q, p, witness.mapping)
    assert verify_embedding(q, p, crossed_chains_witness())


def test_antichain_does_not_embed_into_width_two_target():
    anti = Poset((1, 2, 3), [1, 2, 4])
    assert embed(anti, grid_poset(2)) is None


def test_embed_agrees_with_oracle_on_small_pairs():
    rng = random.Random(11)
    for _ in range(40):
        q = random_poset(rng, rng.randint(1, 4))
        p = random_poset(rng, rng.randint(1, 6))
        witness = embed(q, p, seed=rng.randint(0, 99))
        brute = brute_embed(q, p)
        assert (witness is None) == (brute is None)
        if witness is not None:
            assert verify_embedding(q, p, witness.mapping)


def test_embed_into_self_is_identityish():
    for p in all_posets(4):
        witness = embed(p, p)
        assert witness is not None
        assert verify_embedding(p, p, witness.mapping)


def test_budget_cap_raises():
    q, p = crossed_chains_pair()
    with pytest.raises(BudgetExceededError):
        embed(q, p, budget=SearchBudget(partition_cap=1))
    with pytest.raises(ValueError):
        SearchBudget(partition_cap=0)


def test_threads_do_not_change_verdict():
    rng = random.Random(13)
    for _ in range(10):
        q = random_poset(rng, 4)
        p = random_bounded_width_poset(rng, 10, 2)
        one = embed(q, p, threads=1)
        two = embed(q, p, threads=2)
        assert (one is None) == (two is None)
        if two is not None:
            assert verify_embedding(q, p, two.mapping)


def test_family_for_is_cached_and_verified():
    fam = family_for(8, 3, seed=0)
    assert verify_k_perfect(fam)
    assert family_for(8, 3, seed=0) is fam


def test_stats_are_populated():
    q, p = crossed_chains_pair()
    stats = {}
    embed(q, p, stats=stats)
    assert stats.get("branches", 0) >= 1
