"""Poset isomorphism via the distributive lattice of antichains.

Antichains of a poset, ordered by inclusion of their downsets, form a finite
distributive lattice whose join-irreducible elements (the singleton
antichains) induce a copy of the original poset. Two posets are isomorphic
iff their antichain lattices are, and a lattice isomorphism restricts to a
poset isomorphism on the join-irreducibles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .embedder import verify_embedding
from .errors import LatticeTooLargeError
from .poset import Poset, invariants, to_covers

DEFAULT_LATTICE_CAP = 10 ** 6


@dataclass(frozen=True)
class DistributiveLattice:
    """Antichain lattice: elements are antichains as tuples in base order."""

    base: Poset
    poset: Poset          # the lattice order; elements are antichain tuples
    downsets: dict        # antichain tuple -> downset bitmask over the base

    def meet(self, a: tuple, b: tuple) -> tuple:
        return self._from_downset(self.downsets[a] & self.downsets[b])

    def join(self, a: tuple, b: tuple) -> tuple:
        return self._from_downset(self.downsets[a] | self.downsets[b])

    def _from_downset(self, mask: int) -> tuple:
        base = self.base
        maximal = []
        for i, x in enumerate(base.elements):
            if not (mask >> i) & 1:
                continue
            above = base.up_mask(i) & ~(1 << i)
            if not (above & mask):
                maximal.append(x)
        return tuple(maximal)


def antichain_lattice(base: Poset, cap: int = DEFAULT_LATTICE_CAP) -> DistributiveLattice:
    """Enumerate all antichains of base and order them by downset inclusion."""
    n = len(base)
    antichains: List[tuple] = []

    def extend(start: int, current: list, blocked: int):
        if len(antichains) > cap:
            raise LatticeTooLargeError(cap)
        antichains.append(tuple(base.elements[i] for i in current))
        for i in range(start, n):
            if (blocked >> i) & 1:
                continue
            comparable = base.up_mask(i) | base.down_mask(i)
            extend(i + 1, current + [i], blocked | comparable)

    extend(0, [], 0)
    if len(antichains) > cap:
        raise LatticeTooLargeError(cap)
    downsets = {}
    for a in antichains:
        mask = 0
        for x in a:
            mask |= base.down_mask(base.index(x))
        downsets[a] = mask
    up_masks = []
    down_list = [downsets[a] for a in antichains]
    for da in down_list:
        mask = 0
        for j, db in enumerate(down_list):
            if da & ~db == 0:
                mask |= 1 << j
        up_masks.append(mask)
    lattice_poset = Poset(tuple(antichains), up_masks)
    return DistributiveLattice(base, lattice_poset, downsets)


def join_irreducibles(lattice: DistributiveLattice) -> Poset:
    """The induced subposet on lattice elements with exactly one lower cover."""
    covers = to_covers(lattice.poset).covers
    lower_count: Dict[tuple, int] = {a: 0 for a in lattice.poset.elements}
    for p, q in covers:
        lower_count[q] += 1
    irreducible = [a for a in lattice.poset.elements if lower_count[a] == 1]
    return lattice.poset.induced(irreducible)


# --- refinement + backtracking backend -------------------------------------


def _refine_colors(poset: Poset) -> List[tuple]:
    """Stable iterated neighborhood coloring over the cover digraph."""
    n = len(poset)
    covers = to_covers(poset).covers
    up: List[list] = [[] for _ in range(n)]
    down: List[list] = [[] for _ in range(n)]
    for p, q in covers:
        up[poset.index(p)].append(poset.index(q))
        down[poset.index(q)].append(poset.index(p))
    colors = [
        (poset.up_mask(i).bit_count(), poset.down_mask(i).bit_count(),
         len(up[i]), len(down[i]))
        for i in range(n)
    ]
    for _ in range(n):
        signatures = [
            (colors[i], tuple(sorted(colors[j] for j in up[i])),
             tuple(sorted(colors[j] for j in down[i])))
            for i in range(n)
        ]
        palette = {sig: rank for rank, sig in enumerate(sorted(set(signatures)))}
        new_colors = [(palette[signatures[i]],) for i in range(n)]
        if len(set(new_colors)) == len(set(colors)):
            colors = new_colors
            break
        colors = new_colors
    return colors


def _structure_iso(a: Poset, b: Poset) -> Optional[dict]:
    """Exact isomorphism search: color refinement then ordered backtracking."""
    if len(a) != len(b):
        return None
    colors_a = _refine_colors(a)
    colors_b = _refine_colors(b)
    if sorted(colors_a) != sorted(colors_b):
        return None
    n = len(a)
    candidates = [
        [j for j in range(n) if colors_b[j] == colors_a[i]]
        for i in range(n)
    ]
    order = sorted(range(n), key=lambda i: (len(candidates[i]), i))
    mapping = [-1] * n
    used = [False] * n

    def consistent(i: int, j: int) -> bool:
        for ip in range(n):
            jp = mapping[ip]
            if jp < 0:
                continue
            if ((a.up_mask(i) >> ip) & 1) != ((b.up_mask(j) >> jp) & 1):
                return False
            if ((a.up_mask(ip) >> i) & 1) != ((b.up_mask(jp) >> j) & 1):
                return False
        return True

    def search(depth: int) -> bool:
        if depth == n:
            return True
        i = order[depth]
        for j in candidates[i]:
            if used[j]:
                continue
            if consistent(i, j):
                mapping[i] = j
                used[j] = True
                if search(depth + 1):
                    return True
                mapping[i] = -1
                used[j] = False
        return False

    if not search(0):
        return None
    return {a.elements[i]: b.elements[mapping[i]] for i in range(n)}


def lattice_iso(l1: DistributiveLattice, l2: DistributiveLattice) -> Optional[dict]:
    """Isomorphism between two antichain lattices, as a map of antichains."""
    return _structure_iso(l1.poset, l2.poset)


def iso(q: Poset, p: Poset, lattice_cap: int = DEFAULT_LATTICE_CAP) -> Optional[dict]:
    """A verified isomorphism from q to p, or None.

    Prechecks size and width equality, then compares antichain lattices and
    restricts the lattice isomorphism to singleton antichains. When a lattice
    would exceed the cap, falls back to direct refinement and backtracking on
    the posets themselves.
    """
    if len(q) != len(p):
        return None
    if invariants(q).width != invariants(p).width:
        return None
    try:
        lq = antichain_lattice(q, lattice_cap)
        lp = antichain_lattice(p, lattice_cap)
    except LatticeTooLargeError:
        mapping = _structure_iso(q, p)
    else:
        lattice_mapping = lattice_iso(lq, lp)
        if lattice_mapping is None:
            return None
        mapping = {}
        for x in q.elements:
            image = lattice_mapping[(x,)]
            if len(image) != 1:
                return None
            mapping[x] = image[0]
    if mapping is None:
        return None
    if not verify_embedding(q, p, mapping) or len(set(mapping.values())) != len(p):
        return None
    return mapping
