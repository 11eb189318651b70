"""Existential first-order sentences: parsing, normalization, and model checking.

Sentences are in prefix negation normal form: a block of existential
quantifiers followed by a positive boolean combination of atoms and negated
atoms. Model checking reduces to induced embedding via the reduced-completion
normal form: each fully determined disjunct corresponds to one candidate
structure, and the sentence holds iff some candidate embeds into the model.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from .errors import (
    BlowupLimitExceededError,
    FreeVariableError,
    NonExistentialQuantifierError,
    SentenceSyntaxError,
)
from .poset import Poset
from .structures import (
    POSET_VOCABULARY,
    Structure,
    Vocabulary,
    structure_of_poset,
    try_poset_of_structure,
)

LEQ_SYMBOL = "leq"
DEFAULT_DISJUNCT_CAP = 10 ** 6


# --- AST -------------------------------------------------------------------


@dataclass(frozen=True)
class Eq:
    left: str
    right: str

    def variables(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Rel:
    name: str
    args: tuple

    def variables(self):
        return self.args


@dataclass(frozen=True)
class Not:
    atom: object  # Eq or Rel


@dataclass(frozen=True)
class And:
    parts: tuple


@dataclass(frozen=True)
class Or:
    parts: tuple


@dataclass(frozen=True)
class Sentence:
    vocabulary: Vocabulary
    prefix: tuple
    body: object


# --- parser ----------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(<=|=|&|\||!|\(|\)|,|\.|[A-Za-z_][A-Za-z0-9_]*)")


def _tokenize(text: str) -> List[tuple]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None or not match.group(1):
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_pos = len(text) - len(stripped)
            raise SentenceSyntaxError(bad_pos, "a token", text[bad_pos])
        tokens.append((match.group(1), match.start(1)))
        pos = match.end()
    tokens.append(("<end>", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, vocabulary: Vocabulary):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.vocabulary = vocabulary

    def peek(self):
        return self.tokens[self.pos][0]

    def here(self):
        return self.tokens[self.pos][1]

    def take(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, token: str):
        got, at = self.take()
        if got != token:
            raise SentenceSyntaxError(at, repr(token), got)

    def ident(self, what: str) -> str:
        got, at = self.take()
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", got) or got in ("exists", "forall"):
            raise SentenceSyntaxError(at, what, got)
        return got

    def sentence(self) -> Sentence:
        prefix = []
        while self.peek() in ("exists", "forall"):
            word, _ = self.take()
            if word == "forall":
                raise NonExistentialQuantifierError("forall")
            name = self.ident("a variable name")
            self.expect(".")
            if name not in prefix:
                prefix.append(name)
        body = self.body()
        if self.peek() != "<end>":
            raise SentenceSyntaxError(self.here(), "end of input", self.peek())
        bound = set(prefix)
        for var in _body_variables(body):
            if var not in bound:
                raise FreeVariableError(var)
        return Sentence(self.vocabulary, tuple(prefix), body)

    def body(self):
        parts = [self.conj()]
        while self.peek() == "|":
            self.take()
            parts.append(self.conj())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def conj(self):
        parts = [self.lit()]
        while self.peek() == "&":
            self.take()
            parts.append(self.lit())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def lit(self):
        if self.peek() == "!":
            self.take()
            at = self.here()
            if self.peek() == "(":
                self.take()
                atom = self.atom()
                self.expect(")")
            else:
                atom = self.atom()
            if not isinstance(atom, (Eq, Rel)):
                raise SentenceSyntaxError(at, "an atom after '!'", self.peek())
            return Not(atom)
        if self.peek() == "(":
            start = self.pos
            self.take()
            inner = self.body()
            self.expect(")")
            return inner
        return self.atom()

    def atom(self):
        at = self.here()
        name = self.ident("a variable or relation name")
        nxt = self.peek()
        if nxt == "<=":
            self.take()
            right = self.ident("a variable name")
            if LEQ_SYMBOL not in self.vocabulary:
                raise SentenceSyntaxError(at, f"a relation of the vocabulary ({LEQ_SYMBOL!r} missing)", "<=")
            return Rel(LEQ_SYMBOL, (name, right))
        if nxt == "=":
            self.take()
            right = self.ident("a variable name")
            return Eq(name, right)
        if nxt == "(":
            if name not in self.vocabulary:
                raise SentenceSyntaxError(at, "a relation symbol of the vocabulary", name)
            self.take()
            args = [self.ident("a variable name")]
            while self.peek() == ",":
                self.take()
                args.append(self.ident("a variable name"))
            self.expect(")")
            arity = self.vocabulary.arity(name)
            if len(args) != arity:
                raise SentenceSyntaxError(at, f"{arity} arguments for {name!r}", f"{len(args)} arguments")
            return Rel(name, tuple(args))
        raise SentenceSyntaxError(self.here(), "'<=', '=', or '('", nxt)


def _body_variables(node) -> Iterator[str]:
    if isinstance(node, (Eq, Rel)):
        yield from node.variables()
    elif isinstance(node, Not):
        yield from _body_variables(node.atom)
    elif isinstance(node, (And, Or)):
        for part in node.parts:
            yield from _body_variables(part)
    else:
        raise TypeError(f"not a body node: {node!r}")


def parse_sentence(text: str, vocabulary: Vocabulary = POSET_VOCABULARY) -> Sentence:
    """Parse a sentence in the ASCII grammar (exists x. ... with &, |, ! on atoms)."""
    return _Parser(text, vocabulary).sentence()


def format_sentence(sentence: Sentence) -> str:
    def fmt(node, parent_or=False):
        if isinstance(node, Eq):
            return f"{node.left} = {node.right}"
        if isinstance(node, Rel):
            if node.name == LEQ_SYMBOL and len(node.args) == 2:
                return f"{node.args[0]} <= {node.args[1]}"
            return f"{node.name}({', '.join(node.args)})"
        if isinstance(node, Not):
            return f"!({fmt(node.atom)})"
        if isinstance(node, And):
            return " & ".join(
                f"({fmt(p)})" if isinstance(p, Or) else fmt(p) for p in node.parts
            )
        if isinstance(node, Or):
            return " | ".join(fmt(p) for p in node.parts)
        raise TypeError(f"not a body node: {node!r}")

    prefix = "".join(f"exists {v}. " for v in sentence.prefix)
    return prefix + "(" + fmt(sentence.body) + ")"


# --- evaluation ------------------------------------------------------------


def _eval_body(structure: Structure, node, env: dict) -> bool:
    if isinstance(node, Eq):
        return env[node.left] == env[node.right]
    if isinstance(node, Rel):
        return structure.has(node.name, tuple(env[a] for a in node.args))
    if isinstance(node, Not):
        return not _eval_body(structure, node.atom, env)
    if isinstance(node, And):
        return all(_eval_body(structure, p, env) for p in node.parts)
    if isinstance(node, Or):
        return any(_eval_body(structure, p, env) for p in node.parts)
    raise TypeError(f"not a body node: {node!r}")


def evaluate(structure: Structure, sentence: Sentence, env: dict) -> bool:
    """Evaluate the quantifier-free body under a full variable assignment."""
    return _eval_body(structure, sentence.body, env)


# --- reduced completion ----------------------------------------------------


def _dnf(node) -> List[List[tuple]]:
    """Expand a body into a list of conjuncts, each a list of (positive, atom)."""
    if isinstance(node, (Eq, Rel)):
        return [[(True, node)]]
    if isinstance(node, Not):
        return [[(False, node.atom)]]
    if isinstance(node, Or):
        out = []
        for part in node.parts:
            out.extend(_dnf(part))
        return out
    if isinstance(node, And):
        out = [[]]
        for part in node.parts:
            expanded = _dnf(part)
            out = [left + right for left in out for right in expanded]
        return out
    raise TypeError(f"not a body node: {node!r}")


def _partitions(items: Sequence) -> List[List[list]]:
    """All set partitions, sorted by ascending block count then block contents."""
    results = [[]]
    for item in items:
        grown = []
        for partition in results:
            for i in range(len(partition)):
                grown.append(partition[:i] + [partition[i] + [item]] + partition[i + 1:])
            grown.append(partition + [[item]])
        results = grown
    results.sort(key=lambda p: (len(p), [sorted(block) for block in p]))
    return results


def _disjunct_structures(sentence: Sentence, cap: int) -> Iterator[Structure]:
    """Stream the reduced-completion candidate structures, deduplicated.

    Candidates within a disjunct are ordered with fewer universe elements
    first and all-positive atom completions first, so positive sentences
    surface an easy candidate immediately.
    """
    prefix_pos = {v: i for i, v in enumerate(sentence.prefix)}
    vocabulary = sentence.vocabulary
    seen = set()
    count = 0
    for conjunct in _dnf(sentence.body):
        variables = sorted(
            {v for _, atom in conjunct for v in atom.variables()},
            key=lambda v: prefix_pos[v],
        )
        if not variables:
            # a sentence with no atoms cannot arise from the grammar
            continue
        for partition in _partitions(variables):
            block_of = {}
            for i, block in enumerate(partition):
                for v in block:
                    block_of[v] = i
            reps = [min(block, key=lambda v: prefix_pos[v]) for block in partition]
            order = sorted(range(len(partition)), key=lambda i: prefix_pos[reps[i]])
            rank = {old: new for new, old in enumerate(order)}
            universe = tuple(reps[i] for i in order)

            determined = {}
            consistent = True
            for positive, atom in conjunct:
                if isinstance(atom, Eq):
                    same = block_of[atom.left] == block_of[atom.right]
                    if same != positive:
                        consistent = False
                        break
                else:
                    key = (atom.name, tuple(rank[block_of[a]] for a in atom.args))
                    if determined.get(key, positive) != positive:
                        consistent = False
                        break
                    determined[key] = positive
            if not consistent:
                continue

            undetermined = []
            for name, arity in vocabulary.symbols:
                for idx in itertools.product(range(len(universe)), repeat=arity):
                    key = (name, idx)
                    if key not in determined:
                        undetermined.append(key)

            for choice in itertools.product((True, False), repeat=len(undetermined)):
                count += 1
                if count > cap:
                    raise BlowupLimitExceededError(count)
                facts = dict(determined)
                facts.update(zip(undetermined, choice))
                relations = {name: [] for name, _ in vocabulary.symbols}
                for (name, idx), positive in facts.items():
                    if positive:
                        relations[name].append(tuple(universe[i] for i in idx))
                structure = Structure(vocabulary, universe, relations)
                key = (structure.universe,
                       tuple(sorted((n, tuple(sorted(ts))) for n, ts in structure.relations.items())))
                if key in seen:
                    continue
                seen.add(key)
                yield structure


def reduced_completion(sentence: Sentence, cap: int = DEFAULT_DISJUNCT_CAP) -> List[Structure]:
    """All candidate structures of the sentence's reduced completion.

    Each structure's universe is a set of variable representatives (earliest
    quantified variable per merged class); its relations are the positive
    atoms of one fully determined disjunct.
    """
    return list(_disjunct_structures(sentence, cap))


def sentence_of_structure(structure: Structure) -> Sentence:
    """The canonical sentence that holds on B iff the structure embeds into B."""
    n = len(structure.universe)
    names = tuple(f"x{i + 1}" for i in range(n))
    literals: List[object] = []
    for i in range(n):
        for j in range(n):
            if i != j:
                literals.append(Not(Eq(names[i], names[j])))
    index = structure.index
    for name, arity in structure.vocabulary.symbols:
        for t in itertools.product(structure.universe, repeat=arity):
            atom = Rel(name, tuple(names[index(x)] for x in t))
            literals.append(atom if structure.has(name, t) else Not(atom))
    body = literals[0] if len(literals) == 1 else And(tuple(literals))
    return Sentence(structure.vocabulary, names, body)


def mc(poset: Poset, sentence: Sentence, cap: int = DEFAULT_DISJUNCT_CAP,
       filter_non_posets: bool = True) -> bool:
    """Decide whether the poset satisfies the existential sentence.

    Streams the reduced-completion candidates and accepts as soon as one
    embeds. With filtering on (the default), candidates that are not posets
    are discarded, since an induced substructure of a poset is a poset; the
    unfiltered path decides each candidate with the brute-force embedder
    instead and exists to exercise the equivalence in tests.
    """
    from . import embedder, oracle

    if sentence.vocabulary != POSET_VOCABULARY:
        raise ValueError("mc expects a sentence over the poset vocabulary")
    target = None
    for candidate in _disjunct_structures(sentence, cap):
        if filter_non_posets:
            as_poset = try_poset_of_structure(candidate)
            if as_poset is None:
                continue
            if embedder.embed(as_poset, poset) is not None:
                return True
        else:
            if target is None:
                target = structure_of_poset(poset)
            if oracle.brute_embed(candidate, target) is not None:
                return True
    return False
