import pytest

from posetcheck import (
    CapExceededError,
    Poset,
    brute_embed,
    brute_hom,
    brute_iso,
    brute_mc,
    parse_sentence,
)
from posetcheck.gadgets import bowtie, crossed_chains_pair, grid_poset


def test_brute_embed_positive_and_negative():
    chain = Poset((1, 2), [3, 2])
    mapping = brute_embed(chain, bowtie())
    assert mapping is not None
    assert bowtie().lt(mapping[1], mapping[2])
    anti = Poset((1, 2, 3), [1, 2, 4])
    assert brute_embed(anti, bowtie()) is None


def test_brute_embed_reflects_order():
    # a homomorphism exists but no strong injective one
    anti = Poset((1, 2), [1, 2])
    chain = Poset(("a", "b"), [3, 2])
    assert brute_hom(anti, chain) is not None
    assert brute_embed(anti, chain) is None


def test_brute_iso():
    assert brute_iso(bowtie(), bowtie()) is not None
    chain = Poset((1, 2, 3, 4), [1, 3, 7, 15])
    assert brute_iso(bowtie(), chain) is None


def test_brute_mc():
    strict = parse_sentence("exists x. exists y. (x <= y & !(y <= x))")
    assert brute_mc(bowtie(), strict)
    assert not brute_mc(Poset((1,), [1]), strict)


def test_size_cap():
    _, p = crossed_chains_pair()
    with pytest.raises(CapExceededError):
        brute_embed(p, p)
    assert brute_embed(bowtie(), p, size_cap=12) is not None


def test_node_budget():
    q = grid_poset(2)
    with pytest.raises(CapExceededError):
        brute_embed(q, grid_poset(3), size_cap=30, node_budget=3)


def test_mc_cap():
    strict = parse_sentence("exists x. exists y. (x <= y & !(y <= x))")
    with pytest.raises(CapExceededError):
        brute_mc(bowtie(), strict, cap=3)
