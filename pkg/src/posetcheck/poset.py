"""Core poset representation, validation, cover conversions, invariants, and chain partitions.

Elements are opaque identifiers (any hashable, typically strings). Internally each
element gets a dense integer index and the order relation is stored as one bitset
row per element, so comparability tests are O(1) and sweeps are O(n^2 / 64).
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Optional, Sequence

from .errors import (
    CyclicCoversError,
    NotAntisymmetricError,
    NotReflexiveError,
    NotTransitiveError,
)

Element = Hashable


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class CoverDigraph:
    """An acyclic digraph of cover pairs (p, q) meaning p is covered by q."""

    elements: tuple
    covers: tuple

    def __post_init__(self):
        index = set(self.elements)
        if len(index) != len(self.elements):
            raise ValueError("duplicate elements in cover digraph")
        for p, q in self.covers:
            if p not in index or q not in index:
                raise ValueError(f"cover pair ({p!r}, {q!r}) uses unknown elements")


@dataclass(frozen=True)
class ChainPartition:
    """An ordered partition of a poset's universe into chains, bottom to top."""

    chains: tuple

    def __len__(self):
        return len(self.chains)

    def __iter__(self):
        return iter(self.chains)

    def __getitem__(self, j):
        return self.chains[j]


@dataclass(frozen=True)
class InvariantReport:
    size: int
    width: int
    depth: int
    degree: int
    cover_degree: int


class Poset:
    """An immutable finite poset.

    Use validate_poset or from_covers to construct one; the raw constructor
    trusts its inputs.
    """

    __slots__ = ("elements", "_index", "_up", "_down", "_cache")

    def __init__(self, elements: Sequence[Element], up_masks: Sequence[int]):
        self.elements = tuple(elements)
        self._index = {e: i for i, e in enumerate(self.elements)}
        self._up = list(up_masks)
        n = len(self.elements)
        down = [0] * n
        for i in range(n):
            for j in _bits(self._up[i]):
                down[j] |= 1 << i
        self._down = down
        self._cache = {}

    def __len__(self):
        return len(self.elements)

    def __contains__(self, element):
        return element in self._index

    def __repr__(self):
        return f"Poset({len(self.elements)} elements)"

    def index(self, element) -> int:
        return self._index[element]

    def leq(self, a, b) -> bool:
        return bool((self._up[self._index[a]] >> self._index[b]) & 1)

    def lt(self, a, b) -> bool:
        return a != b and self.leq(a, b)

    def incomparable(self, a, b) -> bool:
        return not self.leq(a, b) and not self.leq(b, a)

    def up_mask(self, i: int) -> int:
        """Bitset of indices j with element i <= element j (includes i)."""
        return self._up[i]

    def down_mask(self, i: int) -> int:
        return self._down[i]

    def order_pairs(self) -> Iterator[tuple]:
        """All pairs (a, b) with a <= b, in element order."""
        for i, a in enumerate(self.elements):
            for j in _bits(self._up[i]):
                yield (a, self.elements[j])

    @property
    def leq_pairs(self) -> frozenset:
        cached = self._cache.get("leq_pairs")
        if cached is None:
            cached = frozenset(self.order_pairs())
            self._cache["leq_pairs"] = cached
        return cached

    def induced(self, subset: Iterable[Element]) -> "Poset":
        """The subposet induced by subset, keeping element order."""
        keep = set(subset)
        elements = [e for e in self.elements if e in keep]
        idx = [self._index[e] for e in elements]
        remap = {old: new for new, old in enumerate(idx)}
        up = []
        for old in idx:
            mask = 0
            for j in _bits(self._up[old]):
                if j in remap:
                    mask |= 1 << remap[j]
            up.append(mask)
        return Poset(elements, up)


def validate_poset(elements: Sequence[Element], leq: Iterable[tuple]) -> Poset:
    """Check the poset axioms and return the validated Poset.

    Raises NotReflexiveError, NotAntisymmetricError, or NotTransitiveError with
    a witnessing element, pair, or triple; axioms are checked in that order.
    """
    elements = tuple(elements)
    if not elements:
        raise ValueError("poset universe must be nonempty")
    index = {e: i for i, e in enumerate(elements)}
    if len(index) != len(elements):
        raise ValueError("duplicate elements")
    n = len(elements)
    up = [0] * n
    for a, b in leq:
        if a not in index or b not in index:
            raise ValueError(f"pair ({a!r}, {b!r}) uses unknown elements")
        up[index[a]] |= 1 << index[b]
    for i in range(n):
        if not (up[i] >> i) & 1:
            raise NotReflexiveError(elements[i])
    down = [0] * n
    for i in range(n):
        for j in _bits(up[i]):
            down[j] |= 1 << i
    for i in range(n):
        bad = (up[i] & down[i]) & ~(1 << i)
        if bad:
            j = (bad & -bad).bit_length() - 1
            raise NotAntisymmetricError(elements[i], elements[j])
    for i in range(n):
        for j in _bits(up[i]):
            missing = up[j] & ~up[i]
            if missing:
                r = (missing & -missing).bit_length() - 1
                raise NotTransitiveError(elements[i], elements[j], elements[r])
    return Poset(elements, up)


def _closure_from_arcs(elements: Sequence[Element], arcs: Iterable[tuple]) -> Poset:
    """Reflexive-transitive closure of an acyclic arc set, as a Poset."""
    elements = tuple(elements)
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    succ = [0] * n
    for p, q in arcs:
        i, j = index[p], index[q]
        if i == j:
            raise CyclicCoversError([p, q])
        succ[i] |= 1 << j
    indeg = [0] * n
    for i in range(n):
        for j in _bits(succ[i]):
            indeg[j] += 1
    order = [i for i in range(n) if indeg[i] == 0]
    head = 0
    while head < len(order):
        i = order[head]
        head += 1
        for j in _bits(succ[i]):
            indeg[j] -= 1
            if indeg[j] == 0:
                order.append(j)
    if len(order) < n:
        remaining = {i for i in range(n) if indeg[i] > 0}
        start = min(remaining)
        path, seen = [start], {start}
        while True:
            cur = path[-1]
            nxt = next(j for j in _bits(succ[cur]) if j in remaining)
            if nxt in seen:
                cycle = path[path.index(nxt):] + [nxt]
                raise CyclicCoversError([elements[i] for i in cycle])
            path.append(nxt)
            seen.add(nxt)
    up = [0] * n
    for i in reversed(order):
        mask = 1 << i
        for j in _bits(succ[i]):
            mask |= up[j]
        up[i] = mask
    return Poset(elements, up)


def from_covers(digraph: CoverDigraph) -> Poset:
    """The poset whose order is the reflexive-transitive closure of the covers."""
    return _closure_from_arcs(digraph.elements, digraph.covers)


def to_covers(poset: Poset) -> CoverDigraph:
    """The transitive reduction (cover relation) of a valid poset."""
    cached = poset._cache.get("covers")
    if cached is None:
        n = len(poset)
        pairs = []
        for i in range(n):
            strict_up = poset._up[i] & ~(1 << i)
            for j in _bits(strict_up):
                between = strict_up & (poset._down[j] & ~(1 << j))
                if not between:
                    pairs.append((poset.elements[i], poset.elements[j]))
        pairs.sort(key=lambda pq: (poset._index[pq[0]], poset._index[pq[1]]))
        cached = CoverDigraph(poset.elements, tuple(pairs))
        poset._cache["covers"] = cached
    return cached


def width_and_chain_partition(poset: Poset) -> tuple:
    """Width w and a partition into exactly w chains (Dilworth via matching).

    The bipartite graph pairs each element with its strict upper bounds in the
    order relation; a maximum matching of size m yields n - m chains.
    """
    cached = poset._cache.get("width_partition")
    if cached is not None:
        return cached
    n = len(poset)
    strict_up = [poset._up[i] & ~(1 << i) for i in range(n)]
    match_left = [-1] * n
    match_right = [-1] * n
    # greedy pass: thread elements along arbitrary strict successors first
    for i in range(n):
        for j in _bits(strict_up[i]):
            if match_right[j] == -1:
                match_left[i] = j
                match_right[j] = i
                break

    limit = max(sys.getrecursionlimit(), 4 * n + 100)
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(limit)
    try:
        def augment(u: int, visited: list) -> bool:
            fresh = strict_up[u] & ~visited[0]
            visited[0] |= fresh
            for j in _bits(fresh):
                w = match_right[j]
                if w == -1 or augment(w, visited):
                    match_left[u] = j
                    match_right[j] = u
                    return True
            return False

        for u in range(n):
            if match_left[u] == -1:
                augment(u, [0])
    finally:
        sys.setrecursionlimit(old_limit)

    chains = []
    for i in range(n):
        if match_right[i] == -1:
            chain = [poset.elements[i]]
            cur = i
            while match_left[cur] != -1:
                cur = match_left[cur]
                chain.append(poset.elements[cur])
            chains.append(tuple(chain))
    partition = ChainPartition(tuple(chains))
    result = (len(chains), partition)
    poset._cache["width_partition"] = result
    return result


def invariants(poset: Poset) -> InvariantReport:
    """Exact size, width, depth, degree, and cover-degree."""
    cached = poset._cache.get("invariants")
    if cached is not None:
        return cached
    n = len(poset)
    width, _ = width_and_chain_partition(poset)
    # depth: longest chain equals the longest path in the strict order
    depth_of = [0] * n
    order = sorted(range(n), key=lambda i: poset._up[i].bit_count())
    for i in order:
        best = 0
        for j in _bits(poset._up[i] & ~(1 << i)):
            if depth_of[j] > best:
                best = depth_of[j]
        depth_of[i] = best + 1
    depth = max(depth_of) if n else 0
    degree = 0
    for i in range(n):
        neighbors = (poset._up[i] | poset._down[i]).bit_count() - 1
        if neighbors > degree:
            degree = neighbors
    cover_up = [0] * n
    cover_down = [0] * n
    for p, q in to_covers(poset).covers:
        i, j = poset._index[p], poset._index[q]
        cover_up[i] += 1
        cover_down[j] += 1
    cover_degree = max((cover_up[i] + cover_down[i] for i in range(n)), default=0)
    report = InvariantReport(n, width, depth, degree, cover_degree)
    poset._cache["invariants"] = report
    return report


def width(poset: Poset) -> int:
    return width_and_chain_partition(poset)[0]


def depth(poset: Poset) -> int:
    return invariants(poset).depth


# --- file formats ---------------------------------------------------------


def parse_poset_text(text: str) -> Poset:
    """Parse the poset text format.

    Line 1: `elements: id1 id2 ...`; later lines `a < b` (cover pair) or
    `a <= b` (order pair); blank lines and `#` comments ignored.
    """
    elements: Optional[tuple] = None
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if elements is None:
            if not line.startswith("elements:"):
                raise ValueError(f"line {lineno}: expected an 'elements:' header line")
            elements = tuple(line[len("elements:"):].split())
            if not elements:
                raise ValueError(f"line {lineno}: empty element list")
            continue
        if "<=" in line:
            a, b = (part.strip() for part in line.split("<=", 1))
        elif "<" in line:
            a, b = (part.strip() for part in line.split("<", 1))
        else:
            raise ValueError(f"line {lineno}: expected 'a < b' or 'a <= b'")
        if not a or not b:
            raise ValueError(f"line {lineno}: malformed pair")
        known = set(elements)
        if a not in known or b not in known:
            raise ValueError(f"line {lineno}: unknown element in pair ({a!r}, {b!r})")
        if a == b:
            continue
        arcs.append((a, b))
    if elements is None:
        raise ValueError("missing 'elements:' header line")
    return _closure_from_arcs(elements, arcs)


def format_poset_text(poset: Poset) -> str:
    lines = ["elements: " + " ".join(str(e) for e in poset.elements)]
    for p, q in to_covers(poset).covers:
        lines.append(f"{p} < {q}")
    return "\n".join(lines) + "\n"


def poset_to_json(poset: Poset) -> dict:
    return {
        "elements": [str(e) for e in poset.elements],
        "covers": [[str(p), str(q)] for p, q in to_covers(poset).covers],
    }


def poset_from_json(obj: dict) -> Poset:
    if not isinstance(obj, dict) or "elements" not in obj:
        raise ValueError("poset JSON must be an object with an 'elements' list")
    elements = tuple(obj["elements"])
    covers = [tuple(pair) for pair in obj.get("covers", [])]
    known = set(elements)
    for p, q in covers:
        if p not in known or q not in known:
            raise ValueError(f"cover pair ({p!r}, {q!r}) uses unknown elements")
    return _closure_from_arcs(elements, covers)


def hasse_dot(poset: Poset, name: str = "poset") -> str:
    """DOT source for the Hasse diagram (covers drawn upward)."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for e in poset.elements:
        lines.append(f'  "{e}";')
    for p, q in to_covers(poset).covers:
        lines.append(f'  "{p}" -> "{q}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
