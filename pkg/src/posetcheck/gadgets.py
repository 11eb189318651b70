"""Generators for the hardness gadgets and fixture posets.

Includes the bowtie and crossed-chains fixtures, the grid family, the
depth-3 and cover-degree-3 clique reductions, and the two satisfiability
reductions (bounded width and bounded degree) together with witness
builders that turn a satisfying assignment into a verified embedding.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import FormulaNotInClassError
from .poset import CoverDigraph, Poset, from_covers, invariants


# --- graphs and formulas -----------------------------------------------------


@dataclass(frozen=True)
class Graph:
    """A finite graph: loop-free with a symmetric edge set of ordered pairs."""

    vertices: tuple
    edges: frozenset

    def __post_init__(self):
        index = set(self.vertices)
        if len(index) != len(self.vertices):
            raise ValueError("duplicate vertices")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at {u!r}")
            if u not in index or v not in index:
                raise ValueError(f"edge ({u!r}, {v!r}) uses unknown vertices")
            if (v, u) not in self.edges:
                raise ValueError(f"edge ({u!r}, {v!r}) lacks its reverse")

    def adjacent(self, u, v) -> bool:
        return (u, v) in self.edges

    def neighbors(self, u) -> list:
        return [v for v in self.vertices if (u, v) in self.edges]


def graph(vertices: Sequence, edges: Sequence) -> Graph:
    """Build a Graph from undirected edge pairs (symmetric closure applied)."""
    sym = set()
    for u, v in edges:
        sym.add((u, v))
        sym.add((v, u))
    return Graph(tuple(vertices), frozenset(sym))


def complete_graph(k: int) -> Graph:
    vertices = list(range(1, k + 1))
    return graph(vertices, [(u, v) for u in vertices for v in vertices if u < v])


def parse_graph_text(text: str) -> Graph:
    """Edge-list format: first line lists vertices, each further line 'u v'."""
    lines = [line.strip() for line in text.splitlines()
             if line.strip() and not line.strip().startswith("#")]
    if not lines:
        raise ValueError("empty graph text")
    vertices = lines[0].split()
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {line!r}")
        edges.append((parts[0], parts[1]))
    return graph(vertices, edges)


@dataclass(frozen=True)
class CnfFormula:
    """A CNF formula; clauses are tuples of nonzero literal ints (DIMACS signs)."""

    num_vars: int
    clauses: tuple

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("formula needs at least one variable")
        for clause in self.clauses:
            for lit in clause:
                if not isinstance(lit, int) or lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"bad literal {lit!r}")

    def clause_vars(self, i: int) -> list:
        """Sorted variable indices of clause i (1-based clause index)."""
        return sorted({abs(lit) for lit in self.clauses[i - 1]})


def parse_dimacs(text: str) -> CnfFormula:
    num_vars = None
    clauses: List[tuple] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad problem line: {line!r}")
            num_vars = int(parts[2])
            continue
        lits = [int(tok) for tok in line.split()]
        if lits and lits[-1] == 0:
            lits = lits[:-1]
        if lits:
            clauses.append(tuple(lits))
    if num_vars is None:
        raise ValueError("missing 'p cnf' problem line")
    return CnfFormula(num_vars, tuple(clauses))


def _has_complementary_pair(clause: tuple) -> bool:
    lits = set(clause)
    return any(-lit in lits for lit in lits)


def check_width_class(formula: CnfFormula) -> None:
    """Accept formulas with >= 3 clauses, <= 3 literals per clause, no
    complementary pair in a clause, and every variable in >= 2 clauses."""
    if len(formula.clauses) < 3:
        raise FormulaNotInClassError("fewer than 3 clauses")
    for i, clause in enumerate(formula.clauses, start=1):
        if not 1 <= len(clause) <= 3:
            raise FormulaNotInClassError(f"clause {i} has {len(clause)} literals")
        if _has_complementary_pair(clause):
            raise FormulaNotInClassError(f"clause {i} contains complementary literals")
    for v in range(1, formula.num_vars + 1):
        count = sum(1 for clause in formula.clauses
                    if any(abs(lit) == v for lit in clause))
        if count < 2:
            raise FormulaNotInClassError(f"variable x{v} occurs in {count} clauses")


def check_degree_class(formula: CnfFormula) -> None:
    """Accept formulas with >= 2 clauses of 1..3 pairwise non-complementary
    literals over distinct variables."""
    if len(formula.clauses) < 2:
        raise FormulaNotInClassError("fewer than 2 clauses")
    for i, clause in enumerate(formula.clauses, start=1):
        if not 1 <= len(clause) <= 3:
            raise FormulaNotInClassError(f"clause {i} has {len(clause)} literals")
        if len({abs(lit) for lit in clause}) != len(clause):
            raise FormulaNotInClassError(f"clause {i} repeats a variable")


def satisfying_assignments(clause: tuple) -> List[dict]:
    """Assignments over the clause's variables that satisfy it, ordered
    lexicographically over the variables sorted by index (0 before 1)."""
    variables = sorted({abs(lit) for lit in clause})
    out = []
    for values in itertools.product((0, 1), repeat=len(variables)):
        f = dict(zip(variables, values))
        if any((f[abs(lit)] == 1) == (lit > 0) for lit in clause):
            out.append(f)
    return out


def satisfies(formula: CnfFormula, assignment: dict) -> bool:
    return all(
        any((assignment[abs(lit)] == 1) == (lit > 0) for lit in clause)
        for clause in formula.clauses
    )


# --- small fixtures ----------------------------------------------------------


def bowtie() -> Poset:
    """Four elements with 1 and 2 both covered by 3 and 4."""
    return from_covers(CoverDigraph(
        (1, 2, 3, 4), ((1, 3), (1, 4), (2, 3), (2, 4))
    ))


def crossed_chains_pair() -> Tuple[Poset, Poset]:
    """Two posets of crossing chains; the first embeds into the second."""
    q_covers = [(f"d1{i}", f"d1{i + 1}") for i in range(1, 4)]
    q_covers += [(f"d2{i}", f"d2{i + 1}") for i in range(1, 4)]
    q_covers += [("d11", "d23"), ("d12", "d24"), ("d22", "d13")]
    q_elements = tuple(f"d{a}{i}" for a in (1, 2) for i in range(1, 5))
    q = from_covers(CoverDigraph(q_elements, tuple(q_covers)))

    p_covers = [(f"c1{i}", f"c1{i + 1}") for i in range(1, 6)]
    p_covers += [(f"c2{i}", f"c2{i + 1}") for i in range(1, 6)]
    p_covers += [("c11", "c24"), ("c12", "c25"), ("c13", "c26"),
                 ("c21", "c14"), ("c22", "c15"), ("c23", "c16")]
    p_elements = tuple(f"c{a}{i}" for a in (1, 2) for i in range(1, 7))
    p = from_covers(CoverDigraph(p_elements, tuple(p_covers)))
    return q, p


def crossed_chains_witness() -> dict:
    """A known embedding of the first crossed-chains poset into the second."""
    return {
        "d11": "c11", "d12": "c12", "d13": "c15", "d14": "c16",
        "d21": "c21", "d22": "c22", "d23": "c24", "d24": "c25",
    }


def grid_poset(i: int) -> Poset:
    """Two interleaved i*i grids of width 2 and cover degree at most 4."""
    if i < 1:
        raise ValueError("grid parameter must be positive")
    elements = [f"{s}:{a},{b}" for s in ("p", "q")
                for a in range(1, i + 1) for b in range(1, i + 1)]
    covers = []
    for s in ("p", "q"):
        for a in range(1, i + 1):
            for b in range(1, i):
                covers.append((f"{s}:{a},{b}", f"{s}:{a},{b + 1}"))
        for a in range(1, i):
            covers.append((f"{s}:{a},{i}", f"{s}:{a + 1},1"))
    for a in range(1, i):
        for b in range(1, i + 1):
            covers.append((f"p:{a},{b}", f"q:{a + 1},{b}"))
            covers.append((f"q:{a},{b}", f"p:{a + 1},{b}"))
    return from_covers(CoverDigraph(tuple(elements), tuple(covers)))


# --- clique reductions -------------------------------------------------------


def depth_gadget(g: Graph) -> Poset:
    """One 3-chain per vertex; an edge (u, v) puts u's bottom below v's top."""
    elements = [f"{layer}:{v}" for v in g.vertices for layer in ("bot", "mid", "top")]
    covers = []
    for v in g.vertices:
        covers.append((f"bot:{v}", f"mid:{v}"))
        covers.append((f"mid:{v}", f"top:{v}"))
    for u, v in sorted(g.edges, key=str):
        covers.append((f"bot:{u}", f"top:{v}"))
    return from_covers(CoverDigraph(tuple(elements), tuple(covers)))


def cover_degree_gadget(g: Graph) -> Poset:
    """Per-vertex diamond blocks joined by ladders; cover degree at most 3.

    Block i holds bot_i < l-ladder < a_i < {b_i, c_i} < d_i < u-ladder < top_i,
    and an edge (i, j) adds the single cross cover l(i,j) below u(j,i), which
    makes bot_i < top_j hold exactly for edges.
    """
    elements: List[str] = []
    covers: List[tuple] = []
    for i in g.vertices:
        nbrs = sorted(g.neighbors(i), key=lambda v: g.vertices.index(v))
        block = [f"bot:{i}"] + [f"l:{i},{j}" for j in nbrs] + [f"a:{i}"]
        for lo, hi in zip(block, block[1:]):
            covers.append((lo, hi))
        covers += [(f"a:{i}", f"b:{i}"), (f"a:{i}", f"c:{i}"),
                   (f"b:{i}", f"d:{i}"), (f"c:{i}", f"d:{i}")]
        block = [f"d:{i}"] + [f"u:{i},{j}" for j in nbrs] + [f"top:{i}"]
        for lo, hi in zip(block, block[1:]):
            covers.append((lo, hi))
        elements += [f"bot:{i}"] + [f"l:{i},{j}" for j in nbrs]
        elements += [f"a:{i}", f"b:{i}", f"c:{i}", f"d:{i}"]
        elements += [f"u:{i},{j}" for j in nbrs] + [f"top:{i}"]
    for i, j in sorted(g.edges, key=str):
        covers.append((f"l:{i},{j}", f"u:{j},{i}"))
    return from_covers(CoverDigraph(tuple(elements), tuple(covers)))


def clique_pattern(k: int) -> Poset:
    """k diamond blocks with every bottom below every other block's top."""
    if k < 2:
        raise ValueError("clique pattern needs k >= 2")
    elements: List[str] = []
    covers: List[tuple] = []
    for i in range(1, k + 1):
        elements += [f"bot:{i}", f"a:{i}", f"b:{i}", f"c:{i}", f"d:{i}", f"top:{i}"]
        covers += [(f"bot:{i}", f"a:{i}"), (f"a:{i}", f"b:{i}"), (f"a:{i}", f"c:{i}"),
                   (f"b:{i}", f"d:{i}"), (f"c:{i}", f"d:{i}"), (f"d:{i}", f"top:{i}")]
    for i in range(1, k + 1):
        for ip in range(1, k + 1):
            if i != ip:
                covers.append((f"bot:{i}", f"top:{ip}"))
    return from_covers(CoverDigraph(tuple(elements), tuple(covers)))


# --- bounded-width satisfiability reduction ----------------------------------


def _enc(f: dict) -> str:
    return ",".join(f"x{v}={f[v]}" for v in sorted(f))


class _ArcBuilder:
    """Collects elements and cover arcs, expanding long links into fresh
    auxiliary chains of a fixed length."""

    def __init__(self, aux_len: int):
        self.aux_len = aux_len
        self.elements: List[str] = []
        self.arcs: List[tuple] = []
        self.aux: Dict[tuple, tuple] = {}

    def add(self, *names: str) -> None:
        self.elements.extend(names)

    def link(self, src: str, dst: str, long: bool = False) -> None:
        if not long:
            self.arcs.append((src, dst))
            return
        names = tuple(f"aux:{src}-{dst}:{t}" for t in range(1, self.aux_len + 1))
        self.aux[(src, dst)] = names
        self.elements.extend(names)
        chain = (src,) + names + (dst,)
        for lo, hi in zip(chain, chain[1:]):
            self.arcs.append((lo, hi))

    def poset(self) -> Poset:
        return from_covers(CoverDigraph(tuple(self.elements), tuple(self.arcs)))


def _width_gadget(formula: CnfFormula):
    check_width_class(formula)
    m = len(formula.clauses)
    n = formula.num_vars
    occ = {
        v: [i for i in range(1, m + 1)
            if any(abs(lit) == v for lit in formula.clauses[i - 1])]
        for v in range(1, n + 1)
    }
    sat = {i: satisfying_assignments(formula.clauses[i - 1]) for i in range(1, m + 1)}
    aux_len = m * n

    def qa(i, j):
        return f"a:{i},{j}"

    def qc(i, j):
        return f"c:{i},{j}"

    def qv(v, c1, c2):
        return f"v:x{v},{c1},{c2}"

    v_elements = {
        v: [(v, c1, c2) for c1, c2 in zip(occ[v], occ[v][1:])]
        for v in range(1, n + 1)
    }

    q = _ArcBuilder(aux_len)
    q.add(*(qa(i, j) for j in range(1, n + 1) for i in range(1, m + 1)))
    q.add(*(qc(i, j) for j in range(1, n) for i in range(1, m + 1)))
    q.add(*(qv(*t) for v in range(1, n + 1) for t in v_elements[v]))

    # one long chain through the a-elements, column by column
    a_links = []
    for j in range(1, n + 1):
        lo, hi = occ[j][0], occ[j][-1]
        for i in range(1, m):
            a_links.append((qa(i, j), qa(i + 1, j), i + 1 <= lo or hi <= i))
        if j < n:
            a_links.append((qa(m, j), qa(1, j + 1), True))
    for src, dst, long in a_links:
        q.link(src, dst, long)
    # one plain chain through the c-elements
    for j in range(1, n):
        for i in range(1, m):
            q.link(qc(i, j), qc(i + 1, j))
        if j < n - 1:
            q.link(qc(m, j), qc(1, j + 1))
    # one chain through the v-elements
    for v in range(1, n + 1):
        for t, tp in zip(v_elements[v], v_elements[v][1:]):
            q.link(qv(*t), qv(*tp))
        if v < n and v_elements[v] and v_elements[v + 1]:
            q.link(qv(*v_elements[v][-1]), qv(*v_elements[v + 1][0]))
    # c-elements sit between consecutive a-columns of the same clause
    for j in range(1, n):
        for i in range(1, m + 1):
            q.link(qa(i, j), qc(i, j))
            q.link(qc(i, j), qa(i, j + 1))
    # v-elements sit between the a-elements of their two clauses
    for v in range(1, n + 1):
        for (_, c1, c2) in v_elements[v]:
            q.link(qa(c1, v), qv(v, c1, c2), True)
            q.link(qv(v, c1, c2), qa(c2, v), True)

    def pa(i, j, f):
        return f"a:{i},{j}|{_enc(f)}"

    def pc(i, j, f):
        return f"c:{i},{j}|{_enc(f)}"

    def pv(v, c1, c2, value):
        sign = "" if value == 1 else "!"
        return f"v:{sign}x{v},{c1},{c2}"

    p = _ArcBuilder(aux_len)
    p.add(*(pa(i, j, f) for j in range(1, n + 1) for i in range(1, m + 1)
            for f in sat[i]))
    p.add(*(pc(i, j, f) for j in range(1, n) for i in range(1, m + 1)
            for f in sat[i]))
    p.add(*(pv(v, c1, c2, value) for v in range(1, n + 1)
            for (_, c1, c2) in v_elements[v] for value in (1, 0)))

    # a-chain links replicated over every pair of satisfying assignments
    for j in range(1, n + 1):
        lo, hi = occ[j][0], occ[j][-1]
        for i in range(1, m):
            long = i + 1 <= lo or hi <= i
            for f in sat[i]:
                for fp in sat[i + 1]:
                    p.link(pa(i, j, f), pa(i + 1, j, fp), long)
        if j < n:
            for f in sat[m]:
                for fp in sat[1]:
                    p.link(pa(m, j, f), pa(1, j + 1, fp), True)
    # c-chain links
    for j in range(1, n):
        for i in range(1, m):
            for f in sat[i]:
                for fp in sat[i + 1]:
                    p.link(pc(i, j, f), pc(i + 1, j, fp))
        if j < n - 1:
            for f in sat[m]:
                for fp in sat[1]:
                    p.link(pc(m, j, f), pc(1, j + 1, fp))
    # v-chains, one per polarity
    for v in range(1, n + 1):
        for t, tp in zip(v_elements[v], v_elements[v][1:]):
            for value in (1, 0):
                p.link(pv(t[0], t[1], t[2], value), pv(tp[0], tp[1], tp[2], value))
        if v < n and v_elements[v] and v_elements[v + 1]:
            t, tp = v_elements[v][-1], v_elements[v + 1][0]
            for value in (1, 0):
                for valuep in (1, 0):
                    p.link(pv(t[0], t[1], t[2], value),
                           pv(tp[0], tp[1], tp[2], valuep))
    # c-elements between consecutive a-columns, same assignment on both sides
    for j in range(1, n):
        for i in range(1, m + 1):
            for f in sat[i]:
                p.link(pa(i, j, f), pc(i, j, f))
                p.link(pc(i, j, f), pa(i, j + 1, f))
    # v-elements between the a-elements of their clauses, matching polarity
    for v in range(1, n + 1):
        for (_, c1, c2) in v_elements[v]:
            for value in (1, 0):
                middle = pv(v, c1, c2, value)
                for f in sat[c1]:
                    if f[v] == value:
                        p.link(pa(c1, v, f), middle, True)
                for fp in sat[c2]:
                    if fp[v] == value:
                        p.link(middle, pa(c2, v, fp), True)

    return q, p, occ, sat, v_elements


def width_sat_gadget(formula: CnfFormula, check_bounds: bool = True
                     ) -> Tuple[Poset, Poset]:
    """Reduce satisfiability to embedding on bounded-width posets.

    Returns (source, target): the source embeds into the target iff the
    formula is satisfiable. With check_bounds, asserts width(source) <= 4
    and width(target) <= 102 after construction.
    """
    q_builder, p_builder, *_ = _width_gadget(formula)
    q, p = q_builder.poset(), p_builder.poset()
    if check_bounds:
        wq = invariants(q).width
        wp = invariants(p).width
        if wq > 4 or wp > 102:
            raise AssertionError(f"width bounds violated: {wq}, {wp}")
    return q, p


def _width_witness(formula: CnfFormula, assignment: dict) -> dict:
    if not satisfies(formula, assignment):
        raise ValueError("assignment does not satisfy the formula")
    q_builder, p_builder, occ, sat, v_elements = _width_gadget(formula)
    m = len(formula.clauses)
    n = formula.num_vars
    mapping: dict = {}
    restricted = {
        i: {v: assignment[v] for v in formula.clause_vars(i)}
        for i in range(1, m + 1)
    }
    for j in range(1, n + 1):
        for i in range(1, m + 1):
            mapping[f"a:{i},{j}"] = f"a:{i},{j}|{_enc(restricted[i])}"
    for j in range(1, n):
        for i in range(1, m + 1):
            mapping[f"c:{i},{j}"] = f"c:{i},{j}|{_enc(restricted[i])}"
    for v in range(1, n + 1):
        for (_, c1, c2) in v_elements[v]:
            sign = "" if assignment[v] == 1 else "!"
            mapping[f"v:x{v},{c1},{c2}"] = f"v:{sign}x{v},{c1},{c2}"
    for (src, dst), names in q_builder.aux.items():
        image = p_builder.aux[(mapping[src], mapping[dst])]
        for name, target in zip(names, image):
            mapping[name] = target
    return mapping


# --- bounded-degree satisfiability reduction ---------------------------------


def _degree_gadget(formula: CnfFormula):
    check_degree_class(formula)
    m = len(formula.clauses)
    sat = {i: satisfying_assignments(formula.clauses[i - 1]) for i in range(1, m + 1)}
    others = {i: [j for j in range(1, m + 1) if j != i] for i in range(1, m + 1)}

    q_elements: List[str] = []
    q_arcs: List[tuple] = []
    for i in range(1, m + 1):
        for t in range(m - 2):
            q_elements.append(f"c:{i},{others[i][t]}")
    for i in range(1, m + 1):
        for j in others[i]:
            q_elements.append(f"f:{i},{j}")
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            q_elements.append(f"d:{i},{j}")
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            q_arcs.append((f"f:{i},{j}", f"d:{i},{j}"))
            q_arcs.append((f"f:{j},{i}", f"d:{i},{j}"))
    for i in range(1, m + 1):
        for t in range(m - 2):
            connector = f"c:{i},{others[i][t]}"
            q_arcs.append((connector, f"f:{i},{others[i][t]}"))
            q_arcs.append((connector, f"f:{i},{others[i][t + 1]}"))
    q = from_covers(CoverDigraph(tuple(q_elements), tuple(q_arcs)))

    def compatible(i, a, j, b):
        f, g = sat[i][a - 1], sat[j][b - 1]
        shared = set(formula.clause_vars(i)) & set(formula.clause_vars(j))
        return all(f[v] == g[v] for v in shared)

    p_elements: List[str] = []
    p_arcs: List[tuple] = []
    for i in range(1, m + 1):
        for t in range(m - 2):
            for a in range(1, len(sat[i]) + 1):
                p_elements.append(f"c:{i},{others[i][t]}|{a}")
    for i in range(1, m + 1):
        for j in others[i]:
            for a in range(1, len(sat[i]) + 1):
                p_elements.append(f"f:{i},{j}|{a}")
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            for a in range(1, len(sat[i]) + 1):
                for b in range(1, len(sat[j]) + 1):
                    p_elements.append(f"d:{i},{j}|{a},{b}")
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            for a in range(1, len(sat[i]) + 1):
                for b in range(1, len(sat[j]) + 1):
                    if compatible(i, a, j, b):
                        p_arcs.append((f"f:{i},{j}|{a}", f"d:{i},{j}|{a},{b}"))
                        p_arcs.append((f"f:{j},{i}|{b}", f"d:{i},{j}|{a},{b}"))
    for i in range(1, m + 1):
        for t in range(m - 2):
            for a in range(1, len(sat[i]) + 1):
                connector = f"c:{i},{others[i][t]}|{a}"
                p_arcs.append((connector, f"f:{i},{others[i][t]}|{a}"))
                p_arcs.append((connector, f"f:{i},{others[i][t + 1]}|{a}"))
    p = from_covers(CoverDigraph(tuple(p_elements), tuple(p_arcs)))
    return q, p, sat, others


def degree_sat_gadget(formula: CnfFormula, check_bounds: bool = True
                      ) -> Tuple[Poset, Poset]:
    """Reduce satisfiability to embedding on bounded-degree posets.

    Returns (source, target); the source embeds into the target iff the
    formula is satisfiable. With check_bounds, asserts depth(target) <= 3.
    """
    q, p, _, _ = _degree_gadget(formula)
    if check_bounds and invariants(p).depth > 3:
        raise AssertionError("depth bound violated")
    return q, p


def _degree_witness(formula: CnfFormula, assignment: dict) -> dict:
    if not satisfies(formula, assignment):
        raise ValueError("assignment does not satisfy the formula")
    _, _, sat, others = _degree_gadget(formula)
    m = len(formula.clauses)
    chosen = {}
    for i in range(1, m + 1):
        restricted = {v: assignment[v] for v in formula.clause_vars(i)}
        chosen[i] = sat[i].index(restricted) + 1
    mapping: dict = {}
    for i in range(1, m + 1):
        for t in range(m - 2):
            j = others[i][t]
            mapping[f"c:{i},{j}"] = f"c:{i},{j}|{chosen[i]}"
        for j in others[i]:
            mapping[f"f:{i},{j}"] = f"f:{i},{j}|{chosen[i]}"
        for j in range(i + 1, m + 1):
            mapping[f"d:{i},{j}"] = f"d:{i},{j}|{chosen[i]},{chosen[j]}"
    return mapping


def witness_from_assignment(formula: CnfFormula, assignment: dict,
                            mode: str = "width") -> dict:
    """An embedding of the gadget source into its target built from a
    satisfying assignment (keys are 1-based variable indices)."""
    if mode == "width":
        return _width_witness(formula, assignment)
    if mode == "degree":
        return _degree_witness(formula, assignment)
    raise ValueError(f"unknown mode {mode!r}")
