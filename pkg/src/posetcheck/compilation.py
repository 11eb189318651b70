"""The product-of-chains relational structure built from a coordinatized poset.

Given a poset, a tuple of disjoint chains drawn from a chain partition, and a
coloring of each chain, the compilation is the structure on the Cartesian
product of the chains with relations:

  L        pairs (c, c') with c_j <= c'_j in the base poset at every coordinate;
  I{j,j'}  tuples whose j-th and j'-th coordinates are incomparable;
  O(j,j')  tuples whose j-th coordinate is strictly below the j'-th;
  R(j,k)   pairs of L whose j-th coordinates are equal with color k.

The coordinatewise within-chain minimum is a semilattice operation on the
universe and preserves all four relation kinds.
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .errors import (
    ChainMismatchError,
    ColoringRangeError,
    SizeCapExceededError,
    TooLargeToVerifyError,
)
from .poset import ChainPartition, Poset
from .structures import Structure, Vocabulary

DEFAULT_MATERIALIZE_CAP = 100_000
DEFAULT_POLY_CAP = 4_000


@dataclass(frozen=True)
class Coordinatization:
    """Selected chains (a subtuple of a chain partition) of a base poset."""

    base: Poset
    subtuple: tuple
    chains: tuple


def coordinatize(base: Poset, partition: ChainPartition, subtuple: Sequence[int]) -> Coordinatization:
    """Select chains subtuple (0-based, strictly increasing) from the partition."""
    subtuple = tuple(subtuple)
    if not subtuple:
        raise ChainMismatchError("subtuple must be nonempty")
    if any(b <= a for a, b in zip(subtuple, subtuple[1:])):
        raise ChainMismatchError(f"subtuple {subtuple} is not strictly increasing")
    if subtuple[0] < 0 or subtuple[-1] >= len(partition):
        raise ChainMismatchError(f"subtuple {subtuple} out of range for {len(partition)} chains")
    chains = tuple(tuple(partition[i]) for i in subtuple)
    return Coordinatization(base, subtuple, _checked_chains(base, chains))


def coordinatization_of_chains(base: Poset, chains: Sequence[Sequence]) -> Coordinatization:
    """Coordinatization from explicit chains (validated, ordered bottom to top)."""
    checked = _checked_chains(base, tuple(tuple(c) for c in chains))
    return Coordinatization(base, tuple(range(len(checked))), checked)


def _checked_chains(base: Poset, chains: tuple) -> tuple:
    seen = set()
    for chain in chains:
        if not chain:
            raise ChainMismatchError("empty chain")
        for x in chain:
            if x not in base:
                raise ChainMismatchError(f"element {x!r} not in the base poset")
            if x in seen:
                raise ChainMismatchError(f"element {x!r} appears in two chains")
            seen.add(x)
        for a, b in zip(chain, chain[1:]):
            if not base.lt(a, b):
                raise ChainMismatchError(f"{a!r} is not strictly below {b!r} in its chain")
    return chains


@dataclass(frozen=True)
class Coloring:
    """One total map per selected chain into [k_j], with k_j <= chain length."""

    maps: tuple  # tuple of dicts element -> color
    ks: tuple


def coloring_of_maps(coordinatization: Coordinatization, maps: Sequence[dict],
                     ks: Optional[Sequence[int]] = None) -> Coloring:
    maps = tuple(dict(m) for m in maps)
    if len(maps) != len(coordinatization.chains):
        raise ColoringRangeError("one coloring map per selected chain is required")
    if ks is None:
        ks = tuple(max(m.values()) for m in maps)
    else:
        ks = tuple(ks)
    for j, (chain, lam, k) in enumerate(zip(coordinatization.chains, maps, ks)):
        if k < 1 or k > len(chain):
            raise ColoringRangeError(f"chain {j + 1}: k={k} outside [1, {len(chain)}]")
        for x in chain:
            if x not in lam:
                raise ColoringRangeError(f"chain {j + 1}: no color for {x!r}")
            if not (1 <= lam[x] <= k):
                raise ColoringRangeError(f"chain {j + 1}: color {lam[x]} of {x!r} outside [1, {k}]")
        extra = set(lam) - set(chain)
        if extra:
            raise ColoringRangeError(f"chain {j + 1}: colors for non-chain elements {sorted(map(repr, extra))}")
    return Coloring(maps, ks)


def compilation_vocabulary(w: int, ks: Sequence[int]) -> Vocabulary:
    """The vocabulary shared by all compilations with w chains and colors ks."""
    return _vocabulary_cached(w, tuple(ks))


@functools.lru_cache(maxsize=None)
def _vocabulary_cached(w: int, ks: tuple) -> Vocabulary:
    symbols: List[tuple] = [("L", 2)]
    for j in range(1, w + 1):
        for jp in range(j + 1, w + 1):
            symbols.append((f"I{{{j},{jp}}}", 1))
    for j in range(1, w + 1):
        for jp in range(1, w + 1):
            if j != jp:
                symbols.append((f"O({j},{jp})", 1))
    for j in range(1, w + 1):
        for k in range(1, ks[j - 1] + 1):
            symbols.append((f"R({j},{k})", 2))
    return Vocabulary(tuple(symbols))


_REL_RE = re.compile(r"^(L|I\{(\d+),(\d+)\}|O\((\d+),(\d+)\)|R\((\d+),(\d+)\))$")


def parse_relation_name(name: str):
    """Decode a relation name into (kind, params); kinds: L, I, O, R."""
    m = _REL_RE.match(name)
    if m is None:
        raise KeyError(name)
    if name == "L":
        return ("L", ())
    if name.startswith("I"):
        return ("I", (int(m.group(2)), int(m.group(3))))
    if name.startswith("O"):
        return ("O", (int(m.group(4)), int(m.group(5))))
    return ("R", (int(m.group(6)), int(m.group(7))))


@functools.lru_cache(maxsize=None)
def _parsed_names(vocabulary: Vocabulary) -> dict:
    return {name: parse_relation_name(name) for name, _ in vocabulary.symbols}


class Compilation:
    """Implicit-universe structure over the product of the selected chains."""

    def __init__(self, coordinatization: Coordinatization, coloring: Coloring):
        self.coordinatization = coordinatization
        self.coloring = coloring
        self.base = coordinatization.base
        self.chains = coordinatization.chains
        self.width = len(self.chains)
        self.lengths = tuple(len(c) for c in self.chains)
        self.rank = tuple({x: r for r, x in enumerate(chain)} for chain in self.chains)
        self.vocabulary = compilation_vocabulary(self.width, coloring.ks)
        self._parsed = _parsed_names(self.vocabulary)

    @property
    def size(self) -> int:
        out = 1
        for length in self.lengths:
            out *= length
        return out

    def universe(self) -> Iterator[tuple]:
        return itertools.product(*self.chains)

    def in_universe(self, c: tuple) -> bool:
        return (len(c) == self.width
                and all(x in self.rank[j] for j, x in enumerate(c)))

    def _coord_leq(self, j: int, x, y) -> bool:
        return self.rank[j][x] <= self.rank[j][y]

    def has(self, name: str, t: tuple) -> bool:
        kind, params = self._parsed[name]
        if kind == "L":
            c, cp = t
            if not (self.in_universe(c) and self.in_universe(cp)):
                return False
            return all(self._coord_leq(j, c[j], cp[j]) for j in range(self.width))
        if kind == "I":
            (c,) = t
            j, jp = params
            return self.in_universe(c) and self.base.incomparable(c[j - 1], c[jp - 1])
        if kind == "O":
            (c,) = t
            j, jp = params
            return self.in_universe(c) and self.base.lt(c[j - 1], c[jp - 1])
        j, k = params
        c, cp = t
        return (self.has("L", t)
                and c[j - 1] == cp[j - 1]
                and self.coloring.maps[j - 1][c[j - 1]] == k)

    def meet(self, c: tuple, cp: tuple) -> tuple:
        return tuple(
            chain[min(self.rank[j][c[j]], self.rank[j][cp[j]])]
            for j, chain in enumerate(self.chains)
        )

    # --- dense index-space views used by the fast solver and checker ------

    def strides(self) -> tuple:
        strides = [1] * self.width
        for j in range(self.width - 2, -1, -1):
            strides[j] = strides[j + 1] * self.lengths[j + 1]
        return tuple(strides)

    def chain_color_masks(self, j: int) -> Dict[int, np.ndarray]:
        """For 1-based chain j: color -> boolean mask over the chain ranks."""
        lam = self.coloring.maps[j - 1]
        chain = self.chains[j - 1]
        out = {}
        for k in range(1, self.coloring.ks[j - 1] + 1):
            out[k] = np.array([lam[x] == k for x in chain], dtype=bool)
        return out

    def cross_leq(self, j: int, jp: int) -> np.ndarray:
        """Boolean matrix M[r, r'] = (chains[j][r] <= chains[jp][r']), 1-based j, jp."""
        a = self.chains[j - 1]
        b = self.chains[jp - 1]
        key = ("cross_leq", a, b)
        cached = self.base._cache.get(key)
        if cached is None:
            cached = np.empty((len(a), len(b)), dtype=bool)
            for r, x in enumerate(a):
                for rp, y in enumerate(b):
                    cached[r, rp] = self.base.leq(x, y)
            cached.setflags(write=False)
            self.base._cache[key] = cached
        return cached


def compile_poset(poset: Poset, coordinatization: Coordinatization,
                  coloring: Coloring) -> Compilation:
    """Build the compilation; validates that the pieces belong together."""
    if coordinatization.base is not poset and coordinatization.base.elements != poset.elements:
        raise ChainMismatchError("coordinatization was built for a different poset")
    coloring = coloring_of_maps(coordinatization, coloring.maps, coloring.ks)
    return Compilation(coordinatization, coloring)


def materialize(compilation: Compilation,
                size_cap: int = DEFAULT_MATERIALIZE_CAP) -> Structure:
    """Explicit structure with the same universe and relations."""
    if compilation.size > size_cap:
        raise SizeCapExceededError(compilation.size, size_cap)
    universe = list(compilation.universe())
    relations: Dict[str, list] = {}
    for name, arity in compilation.vocabulary.symbols:
        tuples = []
        if arity == 1:
            for c in universe:
                if compilation.has(name, (c,)):
                    tuples.append((c,))
        else:
            for c in universe:
                for cp in universe:
                    if compilation.has(name, (c, cp)):
                        tuples.append((c, cp))
        relations[name] = tuples
    return Structure(compilation.vocabulary, universe, relations)


def _universe_ranks(compilation: Compilation) -> np.ndarray:
    """Rank vectors of the universe in iteration order, shape (size, width)."""
    grids = np.meshgrid(*(np.arange(length) for length in compilation.lengths),
                        indexing="ij")
    return np.stack([g.reshape(-1) for g in grids], axis=1)


def _base_relation_matrices(compilation: Compilation, ranks: np.ndarray) -> dict:
    """Membership arrays of the coloring-independent relations (L, I, O)."""
    w = compilation.width
    u = ranks.shape[0]
    mats: Dict[str, np.ndarray] = {}
    leq_mat = np.ones((u, u), dtype=bool)
    for j in range(w):
        leq_mat &= ranks[:, j][:, None] <= ranks[None, :, j]
    mats["L"] = leq_mat
    for j in range(w):
        for jp in range(j + 1, w):
            fwd = compilation.cross_leq(j + 1, jp + 1)[ranks[:, j], ranks[:, jp]]
            bwd = compilation.cross_leq(jp + 1, j + 1)[ranks[:, jp], ranks[:, j]]
            mats[f"I{{{j + 1},{jp + 1}}}"] = ~fwd & ~bwd
            mats[f"O({j + 1},{jp + 1})"] = fwd
            mats[f"O({jp + 1},{j + 1})"] = bwd
    return mats


def _r_relation_matrices(compilation: Compilation, ranks: np.ndarray,
                         leq_mat: np.ndarray, same: list) -> dict:
    """Membership arrays of the color-fixed order relations R(j, k)."""
    mats: Dict[str, np.ndarray] = {}
    for j in range(compilation.width):
        lam = compilation.coloring.maps[j]
        colors = np.array([lam[x] for x in compilation.chains[j]])[ranks[:, j]]
        for k in range(1, compilation.coloring.ks[j] + 1):
            mats[f"R({j + 1},{k})"] = leq_mat & same[j] & (colors == k)[:, None]
    return mats


def _relation_matrices(compilation: Compilation, ranks: np.ndarray) -> dict:
    """Dense membership arrays over universe indices: name -> bool array."""
    mats = _base_relation_matrices(compilation, ranks)
    same = [ranks[:, j][:, None] == ranks[None, :, j]
            for j in range(compilation.width)]
    mats.update(_r_relation_matrices(compilation, ranks, mats["L"], same))
    return mats


_POLY_CACHE: Dict[Coordinatization, tuple] = {}
_POLY_CACHE_LIMIT = 64


def _poly_tables(compilation: Compilation) -> tuple:
    """Coloring-independent checker state, cached per coordinatization."""
    coord = compilation.coordinatization
    entry = _POLY_CACHE.get(coord)
    if entry is None:
        if len(_POLY_CACHE) >= _POLY_CACHE_LIMIT:
            _POLY_CACHE.clear()
        ranks = _universe_ranks(compilation)
        strides = np.array(compilation.strides())
        pair_min = np.minimum(ranks[:, None, :], ranks[None, :, :])
        meet_idx = (pair_min * strides).sum(axis=2)
        same = [ranks[:, j][:, None] == ranks[None, :, j]
                for j in range(compilation.width)]
        base_mats = _base_relation_matrices(compilation, ranks)
        entry = (ranks, meet_idx, same, base_mats, {})
        _POLY_CACHE[coord] = entry
    return entry


def _preservation_violation(name: str, mat: np.ndarray, meet_idx: np.ndarray,
                            compilation: Compilation):
    """First pair of members of mat whose meet leaves the relation, or None."""
    member = np.argwhere(mat)
    if member.size == 0:
        return None
    if member.shape[0] ** 2 > 10 ** 8:
        raise TooLargeToVerifyError(f"too many member pairs for {name}")
    met = [meet_idx[member[:, pos][:, None], member[:, pos][None, :]]
           for pos in range(member.shape[1])]
    ok = mat[tuple(met)]
    if ok.all():
        return None
    universe = list(compilation.universe())
    bad = np.argwhere(~ok)[0]
    t1 = tuple(universe[i] for i in member[bad[0]])
    t2 = tuple(universe[i] for i in member[bad[1]])
    return (name, t1, t2)


def find_polymorphism_violation(compilation: Compilation,
                                size_cap: int = DEFAULT_POLY_CAP,
                                relations: Optional[dict] = None):
    """First relation pair not preserved by the meet, or None.

    relations may override the compilation's own tuple sets (used as a
    negative control in tests); override values are iterables of tuples.
    """
    u = compilation.size
    if u > size_cap or u * u > 10 ** 8:
        raise TooLargeToVerifyError(f"universe of size {u} exceeds the checker cap ({size_cap})")

    if relations is not None:
        ranks = _universe_ranks(compilation)
        strides = np.array(compilation.strides())
        pair_min = np.minimum(ranks[:, None, :], ranks[None, :, :])
        meet_idx = (pair_min * strides).sum(axis=2)
        universe = list(compilation.universe())
        index = {c: i for i, c in enumerate(universe)}
        mats = {}
        for name, tuples in relations.items():
            arity = compilation.vocabulary.arity(name)
            mat = np.zeros((u,) * arity, dtype=bool)
            for t in tuples:
                mat[tuple(index[x] for x in t)] = True
            mats[name] = mat
        for name in sorted(mats):
            violation = _preservation_violation(name, mats[name], meet_idx,
                                                compilation)
            if violation is not None:
                return violation
        return None

    ranks, meet_idx, same, base_mats, base_verdicts = _poly_tables(compilation)
    # L, I and O do not depend on the coloring: their verdicts are shared by
    # every compilation over the same coordinatization
    for name in sorted(base_mats):
        if name not in base_verdicts:
            base_verdicts[name] = _preservation_violation(
                name, base_mats[name], meet_idx, compilation)
        if base_verdicts[name] is not None:
            return base_verdicts[name]
    r_mats = _r_relation_matrices(compilation, ranks, base_mats["L"], same)
    for name in sorted(r_mats):
        violation = _preservation_violation(name, r_mats[name], meet_idx,
                                            compilation)
        if violation is not None:
            return violation
    return None


def check_polymorphism(compilation: Compilation,
                       size_cap: int = DEFAULT_POLY_CAP) -> bool:
    """True iff the coordinatewise meet preserves every relation (exhaustive)."""
    return find_polymorphism_violation(compilation, size_cap) is None
