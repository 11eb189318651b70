"""Brute-force reference implementations used as ground truth in tests.

These use only the textbook definitions (homomorphism, embedding,
isomorphism, quantifier expansion) and deliberately avoid every algorithmic
idea of the main solvers.
"""

from __future__ import annotations

import itertools
from typing import Optional

from .errors import CapExceededError
from .logic import Sentence, evaluate
from .poset import Poset
from .structures import Structure, check_same_vocabulary, structure_of_poset

DEFAULT_SIZE_CAP = 8
DEFAULT_MC_CAP = 10 ** 7


def _as_structure(x) -> Structure:
    return structure_of_poset(x) if isinstance(x, Poset) else x


def _search(a: Structure, b: Structure, injective: bool, strong: bool,
            size_cap: int, node_budget: Optional[int]) -> Optional[dict]:
    check_same_vocabulary(a, b)
    if len(a) > size_cap and len(b) > size_cap:
        raise CapExceededError(
            f"both sides exceed the oracle size cap ({len(a)} and {len(b)} > {size_cap})"
        )
    if injective and len(a) > len(b):
        return None
    order = sorted(
        a.universe,
        key=lambda x: (-sum(x in t for ts in a.relations.values() for t in ts),
                       a.index(x)),
    )
    arities = a.vocabulary.arities
    placed: list = []
    image: dict = {}
    used = set()
    nodes = [0]

    def consistent(new_elem) -> bool:
        for name, tuples in a.relations.items():
            arity = arities[name]
            for t in itertools.product(placed, repeat=arity):
                if new_elem not in t:
                    continue
                in_a = t in tuples
                if not strong and not in_a:
                    continue
                in_b = tuple(image[x] for x in t) in b.relations[name]
                if (in_a != in_b) if strong else not in_b:
                    return False
        return True

    def extend(depth: int) -> bool:
        if depth == len(order):
            return True
        nodes[0] += 1
        if node_budget is not None and nodes[0] > node_budget:
            raise CapExceededError(f"oracle search exceeded node budget ({node_budget})")
        x = order[depth]
        for y in b.universe:
            if injective and y in used:
                continue
            placed.append(x)
            image[x] = y
            if injective:
                used.add(y)
            if consistent(x) and extend(depth + 1):
                return True
            placed.pop()
            del image[x]
            if injective:
                used.discard(y)
        return False

    return dict(image) if extend(0) else None


def brute_embed(a, b, size_cap: int = DEFAULT_SIZE_CAP,
                node_budget: Optional[int] = None) -> Optional[dict]:
    """Exhaustive search for an injective strong homomorphism from a to b."""
    return _search(_as_structure(a), _as_structure(b), True, True, size_cap, node_budget)


def brute_hom(a, b, size_cap: int = DEFAULT_SIZE_CAP,
              node_budget: Optional[int] = None) -> Optional[dict]:
    """Exhaustive search for a homomorphism from a to b."""
    return _search(_as_structure(a), _as_structure(b), False, False, size_cap, node_budget)


def brute_iso(a, b, size_cap: int = DEFAULT_SIZE_CAP,
              node_budget: Optional[int] = None) -> Optional[dict]:
    """Exhaustive search for an isomorphism (a bijective embedding)."""
    sa, sb = _as_structure(a), _as_structure(b)
    if len(sa) != len(sb):
        return None
    return _search(sa, sb, True, True, size_cap, node_budget)


def brute_mc(b, sentence: Sentence, cap: int = DEFAULT_MC_CAP) -> bool:
    """Evaluate the sentence on b by expanding all quantifier assignments."""
    structure = _as_structure(b)
    total = len(structure) ** len(sentence.prefix)
    if total > cap:
        raise CapExceededError(f"{total} assignments exceed the oracle cap ({cap})")
    for values in itertools.product(structure.universe, repeat=len(sentence.prefix)):
        if evaluate(structure, sentence, dict(zip(sentence.prefix, values))):
            return True
    return False
