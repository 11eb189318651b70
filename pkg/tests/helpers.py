"""Shared test utilities: exhaustive enumerations and slow reference checks."""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Dict, List, Tuple

from posetcheck import Poset, invariants
from posetcheck.gadgets import Graph, graph
from posetcheck.isomorphism import _refine_colors, _structure_iso

# Known counts of nonisomorphic posets on n elements, n = 1..7.
POSET_COUNTS = {1: 1, 2: 2, 3: 5, 4: 16, 5: 63, 6: 318, 7: 2045}


def _downset_masks(poset: Poset) -> List[int]:
    """All down-closed subsets of the poset, as bitmasks."""
    n = len(poset)
    out = []
    for mask in range(1 << n):
        ok = True
        for i in range(n):
            if (mask >> i) & 1 and poset.down_mask(i) & ~mask:
                ok = False
                break
        if ok:
            out.append(mask)
    return out


def _signature(poset: Poset) -> tuple:
    report = invariants(poset)
    colors = tuple(sorted(_refine_colors(poset)))
    return (report.width, report.depth, report.degree, report.cover_degree, colors)


def _dedup_iso(posets: List[Poset]) -> List[Poset]:
    buckets: Dict[tuple, List[Poset]] = {}
    out = []
    for p in posets:
        sig = _signature(p)
        bucket = buckets.setdefault(sig, [])
        if not any(_structure_iso(p, q) is not None for q in bucket):
            bucket.append(p)
            out.append(p)
    return out


@lru_cache(maxsize=None)
def all_posets(n: int) -> Tuple[Poset, ...]:
    """All posets with n elements, one per isomorphism class.

    Built by extending each (n-1)-element poset with a new maximal element
    whose strict down-set ranges over all downsets, then deduplicating.
    """
    if n == 1:
        return (Poset(("e1",), [1]),)
    smaller = all_posets(n - 1)
    candidates = []
    new_bit = 1 << (n - 1)
    for p in smaller:
        for mask in _downset_masks(p):
            up = [p._up[i] | (new_bit if (mask >> i) & 1 else 0)
                  for i in range(n - 1)]
            up.append(new_bit)
            candidates.append(Poset(tuple(f"e{i + 1}" for i in range(n)), up))
    result = tuple(_dedup_iso(candidates))
    assert len(result) == POSET_COUNTS[n], (n, len(result))
    return result


@lru_cache(maxsize=None)
def all_graphs(n: int) -> Tuple[Graph, ...]:
    """All graphs with n vertices, one per isomorphism class (atlas-backed)."""
    import networkx as nx

    out = []
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() == n:
            relabel = {v: i + 1 for i, v in enumerate(sorted(g.nodes()))}
            out.append(graph(range(1, n + 1),
                             [(relabel[u], relabel[v]) for u, v in g.edges()]))
    return tuple(out)


def has_clique(g: Graph, k: int) -> bool:
    return any(
        all(g.adjacent(u, v) for u, v in itertools.combinations(subset, 2))
        for subset in itertools.combinations(g.vertices, k)
    )


def brute_width(poset: Poset) -> int:
    """Maximum antichain size by subset enumeration (small posets only)."""
    best = 0
    n = len(poset)
    for mask in range(1 << n):
        members = [i for i in range(n) if (mask >> i) & 1]
        if all(poset.incomparable(poset.elements[i], poset.elements[j])
               for i, j in itertools.combinations(members, 2)):
            best = max(best, len(members))
    return best
