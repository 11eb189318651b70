"""Induced embedding of a small poset into a bounded-width poset.

The pipeline: partition the target into width-many chains; for every chain
subtuple, every labeled chain partition of the source, every bijective
coloring of the source chains, and every tuple of hash functions from a
verified k-perfect family per target chain, compile both sides into
product-of-chains structures and ask the semilattice homomorphism solver.
A homomorphism yields an embedding witness, which is verified before return.
"""

from __future__ import annotations

import itertools
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .compilation import (
    Compilation,
    Coloring,
    Coordinatization,
    coordinatization_of_chains,
    compilation_vocabulary,
)
from .errors import BudgetExceededError, InternalError
from .hashfam import HashFamily, build_family
from .homsolver import HomInstance, solve_semilattice_hom
from .poset import ChainPartition, Poset, invariants, width_and_chain_partition
from .structures import Structure


@dataclass(frozen=True)
class EmbeddingWitness:
    """An injective strong homomorphism from the source to the target."""

    mapping: dict


@dataclass
class SearchBudget:
    """Caps on the branch enumeration; exceeding one raises BudgetExceeded."""

    partition_cap: int = 10 ** 7
    coloring_cap: int = 10 ** 8
    family_size_cap: int = 10 ** 4

    def __post_init__(self):
        if min(self.partition_cap, self.coloring_cap, self.family_size_cap) <= 0:
            raise ValueError("budget caps must be positive")


_FAMILY_CACHE: Dict[tuple, HashFamily] = {}
_FAMILY_LOCK = threading.Lock()


def family_for(length: int, k: int, seed: int = 0) -> HashFamily:
    """The verified k-perfect family on positions 0..length-1 used by embed."""
    key = (length, k, seed)
    with _FAMILY_LOCK:
        family = _FAMILY_CACHE.get(key)
        if family is None:
            family = build_family(tuple(range(length)), k, "auto", seed)
            _FAMILY_CACHE[key] = family
    return family


def verify_embedding(q: Poset, p: Poset, mapping: dict) -> bool:
    """True iff mapping is total on q, injective, order-preserving and -reflecting."""
    if set(mapping) != set(q.elements):
        return False
    images = list(mapping.values())
    if len(set(images)) != len(images):
        return False
    if any(v not in p for v in images):
        return False
    for a in q.elements:
        for b in q.elements:
            if q.leq(a, b) != p.leq(mapping[a], mapping[b]):
                return False
    return True


def enumerate_chain_partitions(q: Poset, w: int) -> Iterator[ChainPartition]:
    """All partitions of q into exactly w labeled nonempty chains.

    Elements are assigned in element order to chain slots 0..w-1; a slot
    accepts an element only when it is comparable with every current member.
    """
    elements = q.elements
    n = len(elements)
    slots: List[list] = [[] for _ in range(w)]

    def assign(i: int) -> Iterator[ChainPartition]:
        if i == n:
            if all(slots):
                chains = tuple(
                    tuple(sorted(slot, key=lambda x: q.down_mask(q.index(x)).bit_count()))
                    for slot in slots
                )
                yield ChainPartition(chains)
            return
        x = elements[i]
        remaining = n - i
        empty = sum(1 for slot in slots if not slot)
        if remaining < empty:
            return
        for c in range(w):
            if all(not q.incomparable(x, y) for y in slots[c]):
                slots[c].append(x)
                yield from assign(i + 1)
                slots[c].pop()

    yield from assign(0)


def _color_word_feasible(mu_word: tuple, lam_word: tuple) -> bool:
    """True when mu_word is a subsequence of lam_word."""
    it = iter(lam_word)
    return all(color in it for color in mu_word)


def _source_structure(q: Poset, d_chains: tuple, vocabulary, base_relations: dict,
                      mus: tuple) -> Structure:
    """The compiled source: base L/I/O tuples plus R buckets derived from mus."""
    relations = dict(base_relations)
    for name in vocabulary.arities:
        if name.startswith("R"):
            relations[name] = []
    for c, cp in base_relations["L"]:
        for j, mu in enumerate(mus):
            if c[j] == cp[j]:
                relations[f"R({j + 1},{mu[c[j]]})"].append((c, cp))
    return Structure(vocabulary, base_relations["universe"], {
        name: tuples for name, tuples in relations.items() if name != "universe"
    })


def _base_source_relations(q: Poset, d_chains: tuple) -> dict:
    """Universe and coloring-independent relation tuples of the compiled source."""
    w = len(d_chains)
    universe = list(itertools.product(*d_chains))
    rank = [{x: r for r, x in enumerate(chain)} for chain in d_chains]
    out: dict = {"universe": universe, "L": []}
    for c in universe:
        for cp in universe:
            if all(rank[j][c[j]] <= rank[j][cp[j]] for j in range(w)):
                out["L"].append((c, cp))
    for j in range(1, w + 1):
        for jp in range(j + 1, w + 1):
            out[f"I{{{j},{jp}}}"] = [
                (c,) for c in universe if q.incomparable(c[j - 1], c[jp - 1])
            ]
    for j in range(1, w + 1):
        for jp in range(1, w + 1):
            if j != jp:
                out[f"O({j},{jp})"] = [
                    (c,) for c in universe if q.lt(c[j - 1], c[jp - 1])
                ]
    return out


def _extract_witness(hom: dict, d_chains: tuple, universe: list) -> dict:
    mapping: dict = {}
    for j, chain in enumerate(d_chains):
        for element in chain:
            images = {hom[c][j] for c in universe if c[j] == element}
            if len(images) != 1:
                raise InternalError(
                    f"witness extraction found {len(images)} images for {element!r}"
                )
            mapping[element] = next(iter(images))
    return mapping


def _try_branch(q: Poset, p: Poset, target_chains: tuple, d_partition: ChainPartition,
                seed: int, budget: SearchBudget, stats: Optional[dict]) -> Optional[dict]:
    """Exhaust the coloring loops for one (chain subtuple, source partition)."""
    d_chains = tuple(tuple(c) for c in d_partition)
    w = len(d_chains)
    ks = tuple(len(c) for c in d_chains)
    if any(len(d) > len(c) for d, c in zip(d_chains, target_chains)):
        return None
    vocabulary = compilation_vocabulary(w, ks)
    base_relations = _base_source_relations(q, d_chains)
    target_coord = coordinatization_of_chains(p, target_chains)

    families = [family_for(len(c), k, seed) for c, k in zip(target_chains, ks)]
    if any(len(f) > budget.family_size_cap for f in families):
        raise BudgetExceededError("hash family size cap exceeded")
    if stats is not None:
        stats["families"] = stats.get("families", 0) + len(families)

    colorings_tried = 0
    for mu_rows in itertools.product(*(itertools.permutations(range(1, k + 1))
                                       for k in ks)):
        mus = tuple(dict(zip(chain, row)) for chain, row in zip(d_chains, mu_rows))
        if stats is not None:
            stats["mu"] = stats.get("mu", 0) + 1
        source = _source_structure(q, d_chains, vocabulary, base_relations, mus)
        # per chain, keep only hash functions whose color sequence along the
        # target chain contains this coloring's color word as a subsequence
        viable: List[list] = []
        for j, family in enumerate(families):
            word = mu_rows[j]
            viable.append([
                fi for fi in range(len(family.functions))
                if _color_word_feasible(word, family.functions[fi])
            ])
        if any(not v for v in viable):
            colorings_tried += 1
            continue
        for lam_choice in itertools.product(*viable):
            colorings_tried += 1
            if colorings_tried > budget.coloring_cap:
                raise BudgetExceededError("coloring enumeration cap exceeded")
            maps = []
            for j, fi in enumerate(lam_choice):
                row = families[j].functions[fi]
                maps.append({x: row[r] for r, x in enumerate(target_chains[j])})
            target = Compilation(target_coord, Coloring(tuple(maps), ks))
            if stats is not None:
                stats["hom_calls"] = stats.get("hom_calls", 0) + 1
            hom = solve_semilattice_hom(HomInstance(source, target))
            if hom is not None:
                return _extract_witness(hom, d_chains, base_relations["universe"])
    return None


def embed(q: Poset, p: Poset, budget: Optional[SearchBudget] = None, seed: int = 0,
          threads: int = 1, stats: Optional[dict] = None) -> Optional[EmbeddingWitness]:
    """Search for an embedding of q into p; returns a verified witness or None."""
    budget = budget or SearchBudget()
    if len(q) > len(p):
        return None
    if len(q) == 1:
        return EmbeddingWitness({q.elements[0]: p.elements[0]})
    wq = invariants(q).width
    wp, partition = width_and_chain_partition(p)
    if wp < wq:
        return None
    if invariants(q).depth > invariants(p).depth:
        return None

    branches: List[tuple] = []
    partitions_seen = 0
    for w in range(wq, min(wp, len(q)) + 1):
        d_partitions = list(enumerate_chain_partitions(q, w))
        partitions_seen += len(d_partitions)
        if partitions_seen > budget.partition_cap:
            raise BudgetExceededError("chain partition enumeration cap exceeded")
        for subtuple in itertools.combinations(range(wp), w):
            target_chains = tuple(tuple(partition[i]) for i in subtuple)
            for d_partition in d_partitions:
                branches.append((target_chains, d_partition))
    if stats is not None:
        stats["branches"] = len(branches)

    def run(branch) -> Optional[dict]:
        target_chains, d_partition = branch
        return _try_branch(q, p, target_chains, d_partition, seed, budget, stats)

    mapping = None
    if threads <= 1:
        for branch in branches:
            mapping = run(branch)
            if mapping is not None:
                break
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            window = threads * 2
            futures = []
            i = 0
            while i < len(branches) or futures:
                while i < len(branches) and len(futures) < window:
                    futures.append(pool.submit(run, branches[i]))
                    i += 1
                done = futures.pop(0)
                mapping = done.result()
                if mapping is not None:
                    for f in futures:
                        f.cancel()
                    break

    if mapping is None:
        return None
    if not verify_embedding(q, p, mapping):
        raise InternalError("extracted witness failed verification")
    return EmbeddingWitness(mapping)
