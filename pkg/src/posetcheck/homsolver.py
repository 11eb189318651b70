"""Homomorphism solving for targets with a semilattice polymorphism.

Arc consistency is established first; on a nonempty fixpoint the assignment
sending each variable to the meet of its surviving domain is a homomorphism
whenever the target's meet preserves all relations. Two backends share this
contract: a worklist AC-3 over explicit structures, and a vectorized variant
for compilations that stores each domain as a boolean grid over the chain
ranks and computes supports with axis-wise running ORs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from .compilation import Compilation, parse_relation_name
from .errors import InternalError, VocabularyMismatchError
from .structures import Structure


@dataclass
class HomInstance:
    """Source structure, target (Structure or Compilation), optional extras.

    meet is required for explicit targets unless arc consistency leaves
    singleton domains; domains optionally restricts initial candidate sets.
    """

    source: Structure
    target: object
    meet: Optional[Callable] = None
    domains: Optional[dict] = None


def _check_vocabulary(instance: HomInstance) -> None:
    if instance.source.vocabulary != instance.target.vocabulary:
        raise VocabularyMismatchError("source and target vocabularies differ")


def _binary_constraints(source: Structure) -> List[tuple]:
    out = []
    for name in sorted(source.relations):
        if source.vocabulary.arity(name) != 2:
            continue
        for t in sorted(source.relations[name], key=lambda t: tuple(map(source.index, t))):
            out.append((name, t))
    return out


def _unary_constraints(source: Structure) -> List[tuple]:
    out = []
    for name in sorted(source.relations):
        if source.vocabulary.arity(name) != 1:
            continue
        for t in sorted(source.relations[name], key=lambda t: source.index(t[0])):
            out.append((name, t))
    return out


def _check_arities(source: Structure) -> None:
    for name, arity in source.vocabulary.symbols:
        if arity > 2 and source.relations[name]:
            raise ValueError("the solver handles unary and binary constraints only")


# --- explicit-structure backend -------------------------------------------


def _explicit_ac(instance: HomInstance, schedule: str) -> Optional[dict]:
    source, target = instance.source, instance.target
    _check_arities(source)
    if instance.domains is not None:
        domains = {x: [v for v in target.universe if v in set(instance.domains[x])]
                   for x in source.universe}
    else:
        domains = {x: list(target.universe) for x in source.universe}
    for name, (x,) in _unary_constraints(source):
        domains[x] = [v for v in domains[x] if target.has(name, (v,))]
        if not domains[x]:
            return None
    binaries = _binary_constraints(source)
    for name, (x, y) in binaries:
        if x == y:
            domains[x] = [v for v in domains[x] if target.has(name, (v, v))]
            if not domains[x]:
                return None
    arcs = []
    arcs_of: Dict[object, list] = {x: [] for x in source.universe}
    for name, (x, y) in binaries:
        if x == y:
            continue
        for direction in (0, 1):
            arc = (name, x, y, direction)
            arcs.append(arc)
            arcs_of[x].append(arc)
            arcs_of[y].append(arc)

    worklist = deque(arcs)
    queued = set(arcs)
    pop = worklist.popleft if schedule == "fifo" else worklist.pop
    while worklist:
        arc = pop()
        queued.discard(arc)
        name, x, y, direction = arc
        if direction == 0:
            revised_var, partner = x, y
            supported = lambda v: any(target.has(name, (v, u)) for u in domains[partner])
        else:
            revised_var, partner = y, x
            supported = lambda v: any(target.has(name, (u, v)) for u in domains[partner])
        kept = [v for v in domains[revised_var] if supported(v)]
        if len(kept) != len(domains[revised_var]):
            domains[revised_var] = kept
            if not kept:
                return None
            for other in arcs_of[revised_var]:
                if other is not arc and other not in queued:
                    worklist.append(other)
                    queued.add(other)
    return domains


# --- compilation backend ---------------------------------------------------


class _GridState:
    def __init__(self, instance: HomInstance):
        self.source = instance.source
        self.comp: Compilation = instance.target
        self.shape = self.comp.lengths
        self.w = self.comp.width
        self.grids = {}
        if instance.domains is not None:
            for x in self.source.universe:
                grid = np.zeros(self.shape, dtype=bool)
                for value in instance.domains[x]:
                    grid[tuple(self.comp.rank[j][value[j]] for j in range(self.w))] = True
                self.grids[x] = grid
        else:
            for x in self.source.universe:
                self.grids[x] = np.ones(self.shape, dtype=bool)
        self._unary_masks: Dict[str, np.ndarray] = {}
        self._color_masks: Dict[tuple, np.ndarray] = {}

    def _axis_shape(self, axes: tuple) -> tuple:
        return tuple(self.shape[a] if a in axes else 1 for a in range(self.w))

    def unary_mask(self, name: str) -> np.ndarray:
        mask = self._unary_masks.get(name)
        if mask is None:
            kind, (j, jp) = parse_relation_name(name)
            fwd = self.comp.cross_leq(j, jp)
            if kind == "I":
                bwd = self.comp.cross_leq(jp, j)
                mat = ~fwd & ~bwd.T
            else:
                mat = fwd
            # broadcast mat so its rows/columns land on grid axes j-1 and jp-1
            idx_j = np.arange(self.shape[j - 1]).reshape(self._axis_shape((j - 1,)))
            idx_jp = np.arange(self.shape[jp - 1]).reshape(self._axis_shape((jp - 1,)))
            mask = mat[idx_j, idx_jp] & np.ones(self.shape, dtype=bool)
            self._unary_masks[name] = mask
        return mask

    def color_mask(self, j: int, k: int) -> np.ndarray:
        mask = self._color_masks.get((j, k))
        if mask is None:
            lam = self.comp.coloring.maps[j - 1]
            row = np.array([lam[x] == k for x in self.comp.chains[j - 1]])
            mask = row.reshape(self._axis_shape((j - 1,)))
            self._color_masks[(j, k)] = mask
        return mask

    def support(self, grid: np.ndarray, axes, upward: bool) -> np.ndarray:
        """Positions v with some u in grid that dominates (or is dominated by)
        v on the given axes and agrees elsewhere."""
        out = grid
        for a in axes:
            if upward:
                out = np.flip(np.logical_or.accumulate(np.flip(out, a), a), a)
            else:
                out = np.logical_or.accumulate(out, a)
        return out

    def element_of(self, ranks: tuple) -> tuple:
        return tuple(self.comp.chains[j][ranks[j]] for j in range(self.w))


def _grid_ac(instance: HomInstance, schedule: str) -> Optional[dict]:
    state = _GridState(instance)
    source = state.source
    _check_arities(source)
    grids = state.grids
    for name, (x,) in _unary_constraints(source):
        grids[x] &= state.unary_mask(name)
        if not grids[x].any():
            return None
    binaries = _binary_constraints(source)
    all_axes = tuple(range(state.w))
    for name, (x, y) in binaries:
        if x != y:
            continue
        kind, params = parse_relation_name(name)
        if kind == "R":
            j, k = params
            grids[x] &= state.color_mask(j, k)
            if not grids[x].any():
                return None
        # an (x, x) loop in L is satisfied by every value

    arcs = []
    arcs_of: Dict[object, list] = {x: [] for x in source.universe}
    for name, (x, y) in binaries:
        if x == y:
            continue
        for direction in (0, 1):
            arc = (name, x, y, direction)
            arcs.append(arc)
            arcs_of[x].append(arc)
            arcs_of[y].append(arc)
    worklist = deque(arcs)
    queued = set(arcs)
    pop = worklist.popleft if schedule == "fifo" else worklist.pop

    while worklist:
        arc = pop()
        queued.discard(arc)
        name, x, y, direction = arc
        kind, params = parse_relation_name(name)
        if kind == "L":
            axes, color = all_axes, None
        else:
            j, k = params
            axes = tuple(a for a in all_axes if a != j - 1)
            color = state.color_mask(j, k)
        if direction == 0:
            support = state.support(grids[y], axes, upward=True)
            revised_var = x
        else:
            support = state.support(grids[x], axes, upward=False)
            revised_var = y
        if color is not None:
            support = support & color
        new_grid = grids[revised_var] & support
        if not np.array_equal(new_grid, grids[revised_var]):
            grids[revised_var] = new_grid
            if not new_grid.any():
                return None
            for other in arcs_of[revised_var]:
                if other is not arc and other not in queued:
                    worklist.append(other)
                    queued.add(other)
    return grids


def _grid_assignment(state_grids: dict, comp: Compilation) -> dict:
    assignment = {}
    w = comp.width
    for x, grid in state_grids.items():
        ranks = []
        for a in range(w):
            axes = tuple(b for b in range(w) if b != a)
            projection = grid.any(axis=axes) if axes else grid
            ranks.append(int(np.argmax(projection)))
        assignment[x] = tuple(comp.chains[j][ranks[j]] for j in range(w))
    return assignment


# --- public API -------------------------------------------------------------


def _verify(source: Structure, target, assignment: dict) -> None:
    for name in sorted(source.relations):
        for t in source.relations[name]:
            image = tuple(assignment[x] for x in t)
            if not target.has(name, image):
                raise InternalError(f"meet assignment violates {name} on {t!r}")


def solve_semilattice_hom(instance: HomInstance, schedule: str = "fifo") -> Optional[dict]:
    """Assignment mapping each source element into the target, or None.

    Complete whenever the target admits a semilattice polymorphism (always
    the case for compilations); the returned assignment is verified against
    every source constraint before being returned.
    """
    _check_vocabulary(instance)
    if isinstance(instance.target, Compilation):
        grids = _grid_ac(instance, schedule)
        if grids is None:
            return None
        assignment = _grid_assignment(grids, instance.target)
    else:
        domains = _explicit_ac(instance, schedule)
        if domains is None:
            return None
        meet = instance.meet
        assignment = {}
        for x in instance.source.universe:
            values = domains[x]
            if len(values) == 1:
                assignment[x] = values[0]
            elif meet is None:
                raise ValueError(
                    "explicit target with non-singleton domains requires a meet function"
                )
            else:
                acc = values[0]
                for v in values[1:]:
                    acc = meet(acc, v)
                assignment[x] = acc
    _verify(instance.source, instance.target, assignment)
    return assignment


def arc_consistency_trace(instance: HomInstance, schedule: str = "fifo") -> Optional[dict]:
    """Surviving domains after propagation (None when a domain empties)."""
    _check_vocabulary(instance)
    if isinstance(instance.target, Compilation):
        grids = _grid_ac(instance, schedule)
        if grids is None:
            return None
        comp: Compilation = instance.target
        out = {}
        for x, grid in grids.items():
            values = []
            for ranks in np.argwhere(grid):
                values.append(tuple(comp.chains[j][r] for j, r in enumerate(ranks)))
            out[x] = tuple(values)
        return out
    domains = _explicit_ac(instance, schedule)
    if domains is None:
        return None
    return {x: tuple(vs) for x, vs in domains.items()}
