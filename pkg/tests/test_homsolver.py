import random

import pytest

from posetcheck import (
    Coloring,
    HomInstance,
    Structure,
    VocabularyMismatchError,
    Vocabulary,
    arc_consistency_trace,
    brute_hom,
    materialize,
    solve_semilattice_hom,
    width_and_chain_partition,
)
from posetcheck.compilation import Compilation, coordinatize
from posetcheck.gadgets import crossed_chains_pair
from posetcheck.randgen import random_bounded_width_poset

VOC = Vocabulary((("E", 2),))


def _chain_structure(n):
    universe = list(range(n))
    edges = [(a, b) for a in universe for b in universe if a <= b]
    return Structure(VOC, universe, {"E": edges})


def test_explicit_backend_finds_hom():
    source = Structure(VOC, ["x", "y"], {"E": [("x", "y")]})
    target = _chain_structure(3)
    hom = solve_semilattice_hom(HomInstance(source, target, meet=min))
    assert hom is not None
    assert target.has("E", (hom["x"], hom["y"]))


def test_explicit_backend_detects_no_hom():
    source = Structure(VOC, ["x"], {"E": [("x", "x")]})
    target = Structure(VOC, [0, 1], {"E": [(0, 1)]})
    assert solve_semilattice_hom(HomInstance(source, target, meet=min)) is None


def test_explicit_requires_meet_for_wide_domains():
    source = Structure(VOC, ["x"], {"E": []})
    target = _chain_structure(3)
    with pytest.raises(ValueError):
        solve_semilattice_hom(HomInstance(source, target))


def test_vocabulary_mismatch():
    source = Structure(VOC, ["x"], {"E": []})
    other = Structure(Vocabulary((("F", 2),)), [0], {"F": []})
    with pytest.raises(VocabularyMismatchError):
        solve_semilattice_hom(HomInstance(source, other))


def test_domain_restriction_respected():
    source = Structure(VOC, ["x"], {"E": []})
    target = _chain_structure(3)
    hom = solve_semilattice_hom(
        HomInstance(source, target, meet=min, domains={"x": [2]})
    )
    assert hom == {"x": 2}


def test_schedules_agree():
    source = Structure(VOC, ["x", "y", "z"],
                       {"E": [("x", "y"), ("y", "z"), ("x", "z")]})
    target = _chain_structure(4)
    a = solve_semilattice_hom(HomInstance(source, target, meet=min), "fifo")
    b = solve_semilattice_hom(HomInstance(source, target, meet=min), "lifo")
    assert (a is None) == (b is None)


def test_trace_reports_surviving_domains():
    source = Structure(VOC, ["x", "y"], {"E": [("x", "y")]})
    target = Structure(VOC, [0, 1], {"E": [(0, 1)]})
    trace = arc_consistency_trace(HomInstance(source, target, meet=min))
    assert trace == {"x": (0,), "y": (1,)}


def _compilation_instance(seed):
    rng = random.Random(seed)
    p = random_bounded_width_poset(rng, 8, 2)
    w, partition = width_and_chain_partition(p)
    coord = coordinatize(p, partition, range(w))
    maps = tuple({x: r + 1 for r, x in enumerate(c)} for c in coord.chains)
    comp = Compilation(coord, Coloring(maps, tuple(len(c) for c in coord.chains)))
    explicit = materialize(comp)
    universe = list(comp.universe())
    rng.shuffle(universe)
    chosen = universe[: rng.randint(2, 4)]
    relations = {name: [] for name, _ in comp.vocabulary.symbols}
    names = [f"v{i}" for i in range(len(chosen))]
    for i, c in enumerate(chosen):
        for j, cp in enumerate(chosen):
            if comp.has("L", (c, cp)):
                relations["L"].append((names[i], names[j]))
    source = Structure(comp.vocabulary, names, relations)
    return source, comp, explicit


def test_grid_backend_agrees_with_explicit():
    for seed in range(8):
        source, comp, explicit = _compilation_instance(seed)
        grid = solve_semilattice_hom(HomInstance(source, comp))
        flat = solve_semilattice_hom(
            HomInstance(source, explicit, meet=comp.meet)
        )
        assert (grid is None) == (flat is None)
        if grid is not None:
            for x, y in source.relations["L"]:
                assert comp.has("L", (grid[x], grid[y]))


def test_grid_backend_agrees_with_oracle():
    for seed in range(4):
        source, comp, explicit = _compilation_instance(seed + 100)
        grid = solve_semilattice_hom(HomInstance(source, comp))
        brute = brute_hom(source, explicit, size_cap=len(explicit.universe))
        assert (grid is None) == (brute is None)
