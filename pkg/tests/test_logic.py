import random

import pytest

from posetcheck import (
    BlowupLimitExceededError,
    FreeVariableError,
    NonExistentialQuantifierError,
    SentenceSyntaxError,
    brute_mc,
    evaluate,
    format_sentence,
    mc,
    parse_sentence,
    reduced_completion,
    sentence_of_structure,
    structure_of_poset,
)
from posetcheck.gadgets import bowtie
from posetcheck.logic import And, Eq, Not, Or, Rel
from posetcheck.randgen import random_poset, random_sentence

from helpers import all_posets


def test_parse_and_format_round_trip():
    text = "exists x. exists y. (x <= y & !(y <= x))"
    s = parse_sentence(text)
    assert s.prefix == ("x", "y")
    again = parse_sentence(format_sentence(s))
    assert again == s


def test_parse_sugar_and_symbol_form_agree():
    assert parse_sentence("exists x. exists y. (x <= y)") == \
        parse_sentence("exists x. exists y. (leq(x, y))")


def test_parse_disjunction_and_equality():
    s = parse_sentence("exists x. exists y. (x = y | !(x = y))")
    assert isinstance(s.body, Or)


def test_syntax_error_position():
    with pytest.raises(SentenceSyntaxError) as info:
        parse_sentence("exists x. (x <= )")
    assert info.value.position >= 0


def test_free_variable_rejected():
    with pytest.raises(FreeVariableError):
        parse_sentence("exists x. (x <= y)")


def test_forall_rejected():
    with pytest.raises(NonExistentialQuantifierError):
        parse_sentence("forall x. (x <= x)")


def test_evaluate_under_assignment():
    b = structure_of_poset(bowtie())
    s = parse_sentence("exists x. exists y. (x <= y & !(y <= x))")
    assert evaluate(b, s, {"x": 1, "y": 3})
    assert not evaluate(b, s, {"x": 1, "y": 2})


def test_sentence_of_structure_bowtie_shape():
    s = sentence_of_structure(structure_of_poset(bowtie()))
    assert len(s.prefix) == 4
    literals = list(s.body.parts)
    diseqs = [l for l in literals if isinstance(l, Not) and isinstance(l.atom, Eq)]
    pos = [l for l in literals if isinstance(l, Rel)]
    neg = [l for l in literals if isinstance(l, Not) and isinstance(l.atom, Rel)]
    assert (len(diseqs), len(pos), len(neg)) == (12, 8, 8)


def test_mc_strict_pair_examples():
    s = parse_sentence("exists x. exists y. (x <= y & !(y <= x))")
    assert mc(bowtie(), s)
    from posetcheck import Poset
    antichain = Poset(("a", "b", "c"), [1, 2, 4])
    assert not mc(antichain, s)


def test_mc_incomparability_iff_width_two():
    s = parse_sentence("exists x. exists y. (!(x <= y) & !(y <= x))")
    from posetcheck import width
    for n in range(1, 5):
        for p in all_posets(n):
            assert mc(p, s) == (width(p) >= 2)


def test_mc_agrees_with_brute_on_random_instances():
    rng = random.Random(7)
    for _ in range(60):
        p = random_poset(rng, rng.randint(1, 6))
        s = random_sentence(rng, max_vars=3)
        assert mc(p, s) == brute_mc(p, s)


def test_mc_unfiltered_path_agrees():
    rng = random.Random(8)
    for _ in range(20):
        p = random_poset(rng, rng.randint(1, 5))
        s = random_sentence(rng, max_vars=2)
        assert mc(p, s) == mc(p, s, filter_non_posets=False)


def test_reduced_completion_determinate():
    s = parse_sentence("exists x. exists y. (x <= y)")
    candidates = reduced_completion(s)
    assert candidates
    for c in candidates:
        # every atom over the universe is determined: relations are explicit
        assert all(isinstance(t, tuple) for t in c.relations["leq"])


def test_reduced_completion_cap():
    text = "exists x1. exists x2. exists x3. exists x4. (x1 <= x2)"
    with pytest.raises(BlowupLimitExceededError):
        reduced_completion(parse_sentence(text), cap=2)


def test_positive_sentence_true_everywhere_small():
    rng = random.Random(9)
    for _ in range(20):
        p = random_poset(rng, rng.randint(1, 6))
        s = random_sentence(rng, max_vars=3, allow_negation=False)
        assert mc(p, s)
