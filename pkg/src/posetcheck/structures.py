"""Finite relational structures over a vocabulary, and poset conversions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .errors import PosetAxiomError, VocabularyMismatchError
from .poset import Poset, validate_poset


@dataclass(frozen=True)
class Vocabulary:
    """A finite set of relation symbols with arities >= 1."""

    symbols: tuple

    def __post_init__(self):
        names = [name for name, _ in self.symbols]
        if len(set(names)) != len(names):
            raise ValueError("duplicate relation symbol names")
        for name, arity in self.symbols:
            if arity < 1:
                raise ValueError(f"relation {name!r} must have arity >= 1")

    @property
    def arities(self) -> dict:
        return dict(self.symbols)

    def arity(self, name: str) -> int:
        for sym, arity in self.symbols:
            if sym == name:
                return arity
        raise KeyError(name)

    def __contains__(self, name):
        return any(sym == name for sym, _ in self.symbols)


POSET_VOCABULARY = Vocabulary((("leq", 2),))


class Structure:
    """An explicit finite structure: universe plus one tuple set per symbol."""

    __slots__ = ("vocabulary", "universe", "relations", "_index")

    def __init__(self, vocabulary: Vocabulary, universe: Sequence,
                 relations: Mapping[str, Iterable[tuple]]):
        self.vocabulary = vocabulary
        self.universe = tuple(universe)
        self._index = {e: i for i, e in enumerate(self.universe)}
        if len(self._index) != len(self.universe):
            raise ValueError("duplicate universe elements")
        rels = {}
        for name, arity in vocabulary.symbols:
            tuples = frozenset(tuple(t) for t in relations.get(name, ()))
            for t in tuples:
                if len(t) != arity:
                    raise ValueError(f"tuple {t!r} has wrong arity for {name!r}")
                for x in t:
                    if x not in self._index:
                        raise ValueError(f"tuple {t!r} of {name!r} uses unknown element")
            rels[name] = tuples
        extra = set(relations) - {name for name, _ in vocabulary.symbols}
        if extra:
            raise ValueError(f"relations not in vocabulary: {sorted(extra)}")
        self.relations = rels

    def __len__(self):
        return len(self.universe)

    def __repr__(self):
        return f"Structure({len(self.universe)} elements, {len(self.relations)} relations)"

    def index(self, element) -> int:
        return self._index[element]

    def has(self, name: str, t: tuple) -> bool:
        return t in self.relations[name]

    def __eq__(self, other):
        if not isinstance(other, Structure):
            return NotImplemented
        return (self.vocabulary == other.vocabulary
                and self.universe == other.universe
                and self.relations == other.relations)

    def __hash__(self):
        return hash((self.vocabulary,
                     self.universe,
                     tuple(sorted(self.relations.items(), key=lambda kv: kv[0]))))

    def canonical_key(self):
        """A universe-order-independent key: relabel elements 0..n-1 by universe order."""
        idx = self._index
        rels = tuple(
            (name, tuple(sorted(tuple(idx[x] for x in t) for t in tuples)))
            for name, tuples in sorted(self.relations.items())
        )
        return (len(self.universe), rels)


def check_same_vocabulary(a: Structure, b) -> None:
    if a.vocabulary != b.vocabulary:
        raise VocabularyMismatchError(
            f"vocabularies differ: {a.vocabulary.symbols} vs {b.vocabulary.symbols}"
        )


def structure_of_poset(poset: Poset) -> Structure:
    """The poset viewed as a structure over the vocabulary {leq/2}."""
    return Structure(POSET_VOCABULARY, poset.elements, {"leq": poset.order_pairs()})


def poset_of_structure(structure: Structure) -> Poset:
    """Read a {leq/2}-structure back as a poset, validating the axioms."""
    if "leq" not in structure.vocabulary or structure.vocabulary.arity("leq") != 2:
        raise VocabularyMismatchError("structure lacks a binary 'leq' relation")
    return validate_poset(structure.universe, structure.relations["leq"])


def try_poset_of_structure(structure: Structure) -> Optional[Poset]:
    """poset_of_structure, or None when an axiom fails."""
    try:
        return poset_of_structure(structure)
    except PosetAxiomError:
        return None
