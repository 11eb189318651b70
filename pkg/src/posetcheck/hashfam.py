"""Construction and verification of k-perfect hash families.

A family of functions C -> [k] is k-perfect when every k-subset of C is
mapped injectively by at least one member. Families are verified exhaustively
before use; colors are 1-based.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from .errors import BudgetExhaustedError, InfeasibleKError, TooLargeToVerifyError

ALL_COLORINGS_CAP = 4096
SUBSET_VERIFY_CAP = 10 ** 7
GREEDY_ITERATION_FACTOR = 10 ** 5


@dataclass(frozen=True)
class HashFamily:
    """A verified k-perfect family; functions are color rows over the domain order."""

    domain: tuple
    k: int
    functions: tuple  # tuple of tuples, functions[f][i] = color of domain[i]
    strategy: str
    seed: int

    def __len__(self):
        return len(self.functions)

    def apply(self, f: int, element) -> int:
        return self.functions[f][self.domain.index(element)]

    def as_maps(self) -> List[dict]:
        return [dict(zip(self.domain, row)) for row in self.functions]


def _subset_count(n: int, k: int) -> int:
    return math.comb(n, k)


def _injective_rows(values: np.ndarray) -> np.ndarray:
    """values: (..., k) color array; True where the last axis has no repeat."""
    k = values.shape[-1]
    if k <= 6:
        # pairwise comparisons beat sorting for the small k used in practice
        out = np.ones(values.shape[:-1], dtype=bool)
        for i in range(k):
            for j in range(i + 1, k):
                out &= values[..., i] != values[..., j]
        return out
    ordered = np.sort(values, axis=-1)
    return (ordered[..., 1:] != ordered[..., :-1]).all(axis=-1)


def _subset_array(n: int, k: int) -> np.ndarray:
    return np.fromiter(
        itertools.chain.from_iterable(itertools.combinations(range(n), k)),
        dtype=np.int64,
    ).reshape(-1, k)


def _greedy_random(n: int, k: int, seed: int) -> List[tuple]:
    total = _subset_count(n, k)
    if total > SUBSET_VERIFY_CAP:
        raise TooLargeToVerifyError(
            f"{total} subsets exceed the verification cap ({SUBSET_VERIFY_CAP})"
        )
    remaining = _subset_array(n, k)
    rng = np.random.default_rng(seed)
    functions: List[tuple] = []
    budget = GREEDY_ITERATION_FACTOR * total
    iterations = 0
    while remaining.shape[0]:
        iterations += 1
        if iterations > budget:
            raise BudgetExhaustedError(
                f"no covering family after {iterations - 1} samples; retry with a new seed"
            )
        row = rng.integers(1, k + 1, size=n)
        injective = _injective_rows(row[remaining])
        if injective.any():
            functions.append(tuple(int(c) for c in row))
            remaining = remaining[~injective]
    return functions


def _all_colorings(n: int, k: int) -> List[tuple]:
    total = _subset_count(n, k)
    if total > SUBSET_VERIFY_CAP:
        raise TooLargeToVerifyError(
            f"{total} subsets exceed the verification cap ({SUBSET_VERIFY_CAP})"
        )
    subsets = _subset_array(n, k)
    candidates = list(itertools.product(range(1, k + 1), repeat=n))
    coverage = [_injective_rows(np.array(row)[subsets]) for row in candidates]
    covered = np.zeros(total, dtype=bool)
    functions: List[tuple] = []
    while not covered.all():
        best, best_gain = None, 0
        for i, row in enumerate(candidates):
            gain = int((coverage[i] & ~covered).sum())
            if gain > best_gain:
                best, best_gain = i, gain
        if best is None:
            raise BudgetExhaustedError("no candidate covers a remaining subset")
        functions.append(candidates[best])
        covered |= coverage[best]
    return functions


def build_family(domain: Sequence, k: int, strategy: str = "auto",
                 seed: int = 0) -> HashFamily:
    """Build and verify a k-perfect family on the domain.

    Strategies: "greedy-random" samples random colorings and keeps the useful
    ones; "all-colorings" greedily selects a covering subfamily from all k^n
    colorings (only when k^n is small); "auto" picks between them.
    """
    domain = tuple(domain)
    n = len(domain)
    if k < 1 or k > n:
        raise InfeasibleKError(k, n)
    if k == 1:
        functions = [tuple([1] * n)]
        strategy_used = "constant"
    elif k == n:
        functions = [tuple(range(1, n + 1))]
        strategy_used = "identity"
    else:
        if strategy == "auto":
            strategy = "all-colorings" if k ** n <= ALL_COLORINGS_CAP else "greedy-random"
        if strategy == "all-colorings":
            if k ** n > ALL_COLORINGS_CAP:
                raise TooLargeToVerifyError(
                    f"{k}^{n} colorings exceed the enumeration cap ({ALL_COLORINGS_CAP})"
                )
            functions = _all_colorings(n, k)
        elif strategy == "greedy-random":
            functions = _greedy_random(n, k, seed)
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        strategy_used = strategy
    family = HashFamily(domain, k, tuple(functions), strategy_used, seed)
    if not verify_k_perfect(family):
        raise BudgetExhaustedError("constructed family failed verification")
    return family


def find_uncovered_subset(family: HashFamily,
                          subset_cap: int = SUBSET_VERIFY_CAP) -> Optional[tuple]:
    """The lexicographically least k-subset no member maps injectively, if any."""
    n = len(family.domain)
    k = family.k
    total = _subset_count(n, k)
    if total > subset_cap:
        raise TooLargeToVerifyError(
            f"{total} subsets exceed the verification cap ({subset_cap})"
        )
    funcs = np.array(family.functions)  # (F, n)
    if funcs.shape[0] == 0:
        return tuple(family.domain[:k])
    chunk = 1 << 17
    combos = itertools.combinations(range(n), k)
    offset_iter = iter(lambda: list(itertools.islice(combos, chunk)), [])
    for block in offset_iter:
        # filter the block through the rows; survivors are uncovered
        alive = np.array(block)  # (M, k)
        positions = np.arange(alive.shape[0])
        for row in funcs:
            injective = _injective_rows(row[alive])
            alive = alive[~injective]
            positions = positions[~injective]
            if alive.shape[0] == 0:
                break
        if positions.shape[0]:
            return tuple(family.domain[i] for i in block[int(positions[0])])
    return None


def verify_k_perfect(family: HashFamily,
                     subset_cap: int = SUBSET_VERIFY_CAP) -> bool:
    """Exhaustively check k-perfectness (guarded by the subset cap)."""
    for row in family.functions:
        if len(row) != len(family.domain):
            return False
        if any(c < 1 or c > family.k for c in row):
            return False
    return find_uncovered_subset(family, subset_cap) is None


def family_to_json(family: HashFamily) -> dict:
    return {
        "domain": [str(x) for x in family.domain],
        "k": family.k,
        "functions": [list(row) for row in family.functions],
        "strategy": family.strategy,
        "seed": family.seed,
    }


def family_from_json(obj: dict) -> HashFamily:
    return HashFamily(
        tuple(obj["domain"]),
        int(obj["k"]),
        tuple(tuple(int(c) for c in row) for row in obj["functions"]),
        str(obj.get("strategy", "unknown")),
        int(obj.get("seed", 0)),
    )
