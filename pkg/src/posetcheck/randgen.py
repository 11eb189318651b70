"""Seeded random generators for posets, graphs, formulas, and sentences.

Used by the test suite and the bench command. All generators take an
explicit random.Random instance so runs are reproducible.
"""

from __future__ import annotations

import random
from typing import List, Optional

from .gadgets import CnfFormula, Graph, graph
from .logic import And, Eq, Not, Or, Rel, Sentence
from .poset import CoverDigraph, Poset, from_covers
from .structures import POSET_VOCABULARY


def random_poset(rng: random.Random, n: int, density: float = 0.3) -> Poset:
    """A random n-element poset: random arcs over a shuffled linear order."""
    elements = [f"e{i}" for i in range(1, n + 1)]
    order = list(range(n))
    rng.shuffle(order)
    arcs = []
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < density:
                arcs.append((elements[order[a]], elements[order[b]]))
    return from_covers(CoverDigraph(tuple(elements), tuple(arcs)))


def random_bounded_width_poset(rng: random.Random, n: int, w: int,
                               density: float = 0.1) -> Poset:
    """A random poset whose universe splits into w chains (so width <= w).

    Elements are laid out on a random linear order, dealt round-robin-ish
    into w chains, and extra forward arcs are added between chains.
    """
    elements = [f"e{i}" for i in range(1, n + 1)]
    order = list(range(n))
    rng.shuffle(order)
    chain_of = [rng.randrange(w) for _ in range(n)]
    for c in range(min(w, n)):
        chain_of[c] = c  # keep every chain nonempty when n >= w
    arcs = []
    last: List[Optional[int]] = [None] * w
    for pos in order:
        c = chain_of[pos]
        if last[c] is not None:
            arcs.append((elements[last[c]], elements[pos]))
        last[c] = pos
    for a in range(n):
        for b in range(a + 1, n):
            if chain_of[order[a]] != chain_of[order[b]] and rng.random() < density:
                arcs.append((elements[order[a]], elements[order[b]]))
    return from_covers(CoverDigraph(tuple(elements), tuple(arcs)))


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    vertices = list(range(1, n + 1))
    edges = [(u, v) for u in vertices for v in vertices
             if u < v and rng.random() < p]
    return graph(vertices, edges)


def random_degree_formula(rng: random.Random, num_clauses: int,
                          num_vars: int = 4) -> CnfFormula:
    """A random formula with 3-distinct-variable clauses over few variables.

    Keeping num_vars <= 4 forces every pair of 3-variable clauses to share
    at least two variables, which keeps the degree gadget's cover degree
    within its stated bound.
    """
    if num_vars < 3:
        raise ValueError("need at least 3 variables")
    clauses = []
    for _ in range(num_clauses):
        variables = rng.sample(range(1, num_vars + 1), 3)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in variables))
    return CnfFormula(num_vars, tuple(clauses))


def random_width_formula(rng: random.Random, num_clauses: int,
                         num_vars: int) -> CnfFormula:
    """A random formula in the bounded-width gadget's input class."""
    if num_clauses < 3:
        raise ValueError("need at least 3 clauses")
    while True:
        clauses = []
        for _ in range(num_clauses):
            size = rng.randint(1, min(3, num_vars))
            variables = rng.sample(range(1, num_vars + 1), size)
            clauses.append(tuple(v if rng.random() < 0.5 else -v
                                 for v in variables))
        counts = {v: 0 for v in range(1, num_vars + 1)}
        for clause in clauses:
            for v in {abs(lit) for lit in clause}:
                counts[v] += 1
        if all(c >= 2 for c in counts.values()):
            return CnfFormula(num_vars, tuple(clauses))


def random_sentence(rng: random.Random, max_vars: int = 3,
                    allow_negation: bool = True, max_disjuncts: int = 3,
                    max_literals: int = 4) -> Sentence:
    """A random existential sentence over the poset vocabulary."""
    k = rng.randint(1, max_vars)
    names = [f"x{i}" for i in range(1, k + 1)]

    def literal():
        a, b = rng.choice(names), rng.choice(names)
        atom = Eq(a, b) if rng.random() < 0.3 else Rel("leq", (a, b))
        if allow_negation and rng.random() < 0.5:
            return Not(atom)
        return atom

    disjuncts = []
    for _ in range(rng.randint(1, max_disjuncts)):
        literals = [literal() for _ in range(rng.randint(1, max_literals))]
        disjuncts.append(And(tuple(literals)) if len(literals) > 1 else literals[0])
    body = Or(tuple(disjuncts)) if len(disjuncts) > 1 else disjuncts[0]
    return Sentence(POSET_VOCABULARY, tuple(names), body)
