"""Command-line interface.

Exit codes: 0 = yes/success, 1 = no, 2 = usage or format error,
3 = budget or cap exceeded. JSON output carries a top-level "schema": 1.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
import time
from typing import Optional

from . import embedder, gadgets, isomorphism, logic, oracle, randgen
from .compilation import (
    Coloring,
    Compilation,
    coordinatization_of_chains,
    materialize,
)
from .errors import (
    BlowupLimitExceededError,
    BudgetExceededError,
    BudgetExhaustedError,
    CapExceededError,
    CyclicCoversError,
    LatticeTooLargeError,
    PosetAxiomError,
    SentenceSyntaxError,
    SizeCapExceededError,
    TooLargeToVerifyError,
)
from .homsolver import HomInstance, solve_semilattice_hom
from .poset import (
    Poset,
    format_poset_text,
    hasse_dot,
    invariants,
    parse_poset_text,
    width_and_chain_partition,
)
from .structures import structure_of_poset

SCHEMA = 1

_BUDGET_ERRORS = (
    BudgetExceededError,
    BudgetExhaustedError,
    CapExceededError,
    SizeCapExceededError,
    LatticeTooLargeError,
    BlowupLimitExceededError,
    TooLargeToVerifyError,
)


class _UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}")


def _load_poset(path: str) -> Poset:
    try:
        return parse_poset_text(_read(path))
    except (ValueError, CyclicCoversError, PosetAxiomError) as exc:
        raise _UsageError(f"{path}: {exc}")


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        payload = {"schema": SCHEMA, **payload}
        print(json.dumps(payload, indent=2, default=str))
    else:
        print(text)


def _write_output(path: Optional[str], content: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(content)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(content)


def _load_sentence(args) -> logic.Sentence:
    if args.expr is not None:
        text = args.expr
    elif args.sentence_file is not None:
        text = _read(args.sentence_file)
    else:
        raise _UsageError("provide a sentence with -e or --sentence-file")
    return logic.parse_sentence(text)


def _witness_payload(mapping: Optional[dict]) -> Optional[dict]:
    if mapping is None:
        return None
    return {str(k): str(v) for k, v in mapping.items()}


# --- subcommands -------------------------------------------------------------


def _cmd_validate(args) -> int:
    try:
        poset = parse_poset_text(_read(args.poset))
    except (CyclicCoversError, PosetAxiomError) as exc:
        _emit(args, {"valid": False, "reason": str(exc)}, f"invalid: {exc}")
        return 1
    except ValueError as exc:
        raise _UsageError(f"{args.poset}: {exc}")
    _emit(args, {"valid": True, "size": len(poset)}, f"valid ({len(poset)} elements)")
    return 0


def _cmd_invariants(args) -> int:
    report = invariants(_load_poset(args.poset))
    payload = {
        "size": report.size,
        "width": report.width,
        "depth": report.depth,
        "degree": report.degree,
        "cover_degree": report.cover_degree,
    }
    text = " ".join(f"{k}={v}" for k, v in payload.items())
    _emit(args, payload, text)
    return 0


def _cmd_hasse(args) -> int:
    _write_output(args.output, hasse_dot(_load_poset(args.poset)))
    return 0


def _cmd_chains(args) -> int:
    w, partition = width_and_chain_partition(_load_poset(args.poset))
    payload = {"width": w, "chains": [[str(x) for x in c] for c in partition]}
    lines = [f"width={w}"] + [" ".join(str(x) for x in c) for c in partition]
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_embed(args) -> int:
    q = _load_poset(args.source)
    p = _load_poset(args.target)
    if args.oracle:
        mapping = oracle.brute_embed(q, p, size_cap=max(len(q), len(p)))
    else:
        witness = embedder.embed(q, p, seed=args.seed, threads=args.threads)
        mapping = witness.mapping if witness is not None else None
    found = mapping is not None
    payload = {"embeds": found}
    if args.witness and found:
        payload["witness"] = _witness_payload(mapping)
    text = "yes" if found else "no"
    if args.witness and found:
        text += "\n" + json.dumps(_witness_payload(mapping), indent=2)
    _emit(args, payload, text)
    return 0 if found else 1


def _meet_table(poset: Poset) -> Optional[dict]:
    """Pairwise greatest lower bounds, or None if some pair lacks one."""
    table = {}
    for a in poset.elements:
        for b in poset.elements:
            lower = [x for x in poset.elements if poset.leq(x, a) and poset.leq(x, b)]
            greatest = [x for x in lower if all(poset.leq(y, x) for y in lower)]
            if len(greatest) != 1:
                return None
            table[(a, b)] = greatest[0]
    return table


def _cmd_hom(args) -> int:
    a = _load_poset(args.source)
    b = _load_poset(args.target)
    if args.oracle:
        mapping = oracle.brute_hom(a, b, size_cap=max(len(a), len(b)))
    else:
        table = _meet_table(b)
        if table is None:
            raise _UsageError(
                "target is not a meet-semilattice; rerun with --oracle"
            )
        instance = HomInstance(
            structure_of_poset(a), structure_of_poset(b),
            meet=lambda x, y: table[(x, y)],
        )
        mapping = solve_semilattice_hom(instance)
    found = mapping is not None
    payload = {"hom": found}
    if args.witness and found:
        payload["witness"] = _witness_payload(mapping)
    text = "yes" if found else "no"
    if args.witness and found:
        text += "\n" + json.dumps(_witness_payload(mapping), indent=2)
    _emit(args, payload, text)
    return 0 if found else 1


def _cmd_iso(args) -> int:
    a = _load_poset(args.source)
    b = _load_poset(args.target)
    if args.oracle:
        mapping = oracle.brute_iso(a, b, size_cap=max(len(a), len(b)))
    else:
        mapping = isomorphism.iso(a, b)
    found = mapping is not None
    payload = {"isomorphic": found}
    if args.witness and found:
        payload["witness"] = _witness_payload(mapping)
    text = "yes" if found else "no"
    if args.witness and found:
        text += "\n" + json.dumps(_witness_payload(mapping), indent=2)
    _emit(args, payload, text)
    return 0 if found else 1


def _cmd_mc(args) -> int:
    poset = _load_poset(args.poset)
    try:
        sentence = _load_sentence(args)
    except SentenceSyntaxError as exc:
        raise _UsageError(str(exc))
    if args.oracle:
        verdict = oracle.brute_mc(poset, sentence)
    else:
        verdict = logic.mc(poset, sentence, cap=args.cap)
    _emit(args, {"true": verdict}, "true" if verdict else "false")
    return 0 if verdict else 1


def _cmd_gadget(args) -> int:
    kind = args.kind
    if kind == "bowtie":
        _write_output(args.output, format_poset_text(gadgets.bowtie()))
        return 0
    if kind == "grid":
        if args.size is None:
            raise _UsageError("grid needs --size")
        _write_output(args.output, format_poset_text(gadgets.grid_poset(args.size)))
        return 0
    if kind == "pattern":
        if args.k is None:
            raise _UsageError("pattern needs --k")
        _write_output(args.output, format_poset_text(gadgets.clique_pattern(args.k)))
        return 0
    if kind in ("depth", "coverdeg"):
        if args.graph is None:
            raise _UsageError(f"{kind} needs --graph")
        try:
            g = gadgets.parse_graph_text(_read(args.graph))
        except ValueError as exc:
            raise _UsageError(f"{args.graph}: {exc}")
        build = gadgets.depth_gadget if kind == "depth" else gadgets.cover_degree_gadget
        _write_output(args.output, format_poset_text(build(g)))
        return 0
    if kind in ("width-sat", "degree-sat"):
        if args.cnf is None:
            raise _UsageError(f"{kind} needs --cnf")
        if args.output is None or args.output == "-":
            raise _UsageError(f"{kind} needs -o PREFIX (writes PREFIX.q.poset and PREFIX.p.poset)")
        try:
            formula = gadgets.parse_dimacs(_read(args.cnf))
            if kind == "width-sat":
                q, p = gadgets.width_sat_gadget(formula)
            else:
                q, p = gadgets.degree_sat_gadget(formula)
        except (ValueError, gadgets.FormulaNotInClassError) as exc:
            raise _UsageError(str(exc))
        _write_output(args.output + ".q.poset", format_poset_text(q))
        _write_output(args.output + ".p.poset", format_poset_text(p))
        return 0
    raise _UsageError(f"unknown gadget {kind!r}")


def _cmd_compile_dump(args) -> int:
    poset = _load_poset(args.poset)
    if args.chains:
        chains = [part.split() for part in args.chains.split(";")]
    else:
        _, partition = width_and_chain_partition(poset)
        chains = [list(c) for c in partition]
    try:
        coord = coordinatization_of_chains(poset, chains)
    except Exception as exc:
        raise _UsageError(f"bad chain partition: {exc}")
    if args.colors:
        rows = [[int(c) for c in part.split()] for part in args.colors.split(";")]
        if len(rows) != len(chains) or any(len(r) != len(c)
                                           for r, c in zip(rows, chains)):
            raise _UsageError("--colors must give one color per chain element")
        maps = [dict(zip(chain, row)) for chain, row in zip(chains, rows)]
        ks = tuple(max(row) for row in rows)
    else:
        maps = [{x: r + 1 for r, x in enumerate(chain)} for chain in chains]
        ks = tuple(len(chain) for chain in chains)
    compilation = Compilation(coord, Coloring(tuple(maps), ks))
    structure = materialize(compilation, size_cap=args.cap)
    payload = {
        "universe": [list(map(str, c)) for c in structure.universe],
        "relations": {
            name: [[list(map(str, x)) for x in t] for t in sorted(tuples, key=str)]
            for name, tuples in structure.relations.items()
        },
    }
    _write_output(args.output, json.dumps({"schema": SCHEMA, **payload}, indent=2) + "\n")
    return 0


def _cmd_bench(args) -> int:
    rng = random.Random(args.seed)
    writer = csv.writer(sys.stdout)
    writer.writerow(["family", "n", "k", "width", "verdict", "seconds", "branches"])
    sizes = [int(s) for s in args.sizes.split(",")] if args.sizes else []
    for n in sizes:
        if args.family == "grid":
            poset = gadgets.grid_poset(n)
            report = invariants(poset)
            writer.writerow(["grid", report.size, "", report.width,
                             "", "", ""])
            continue
        target = randgen.random_bounded_width_poset(rng, n, 2)
        sample = rng.sample(list(target.elements), min(args.k, n))
        source = target.induced([x for x in target.elements if x in set(sample)])
        stats: dict = {}
        start = time.perf_counter()
        witness = embedder.embed(source, target, seed=args.seed,
                                 threads=args.threads, stats=stats)
        elapsed = time.perf_counter() - start
        writer.writerow(["width2", n, args.k, invariants(target).width,
                         "yes" if witness else "no", f"{elapsed:.3f}",
                         stats.get("branches", 0)])
    return 0


# --- argument parsing --------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posetcheck",
        description="Model checking, embedding, homomorphism, and isomorphism "
                    "for finite posets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, witness=False, oracle_flag=False):
        p.add_argument("--json", action="store_true", help="JSON output")
        if witness:
            p.add_argument("--witness", action="store_true")
        if oracle_flag:
            p.add_argument("--oracle", action="store_true",
                           help="use the brute-force reference implementation")

    p = sub.add_parser("validate", help="check a poset file")
    p.add_argument("poset")
    common(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("invariants", help="size, width, depth, degrees")
    p.add_argument("poset")
    common(p)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("hasse", help="DOT export of the cover diagram")
    p.add_argument("poset")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_hasse)

    p = sub.add_parser("chains", help="width and a minimum chain partition")
    p.add_argument("poset")
    common(p)
    p.set_defaults(func=_cmd_chains)

    p = sub.add_parser("embed", help="decide induced embedding")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    common(p, witness=True, oracle_flag=True)
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("hom", help="decide homomorphism")
    p.add_argument("source")
    p.add_argument("target")
    common(p, witness=True, oracle_flag=True)
    p.set_defaults(func=_cmd_hom)

    p = sub.add_parser("iso", help="decide isomorphism")
    p.add_argument("source")
    p.add_argument("target")
    common(p, witness=True, oracle_flag=True)
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("mc", help="existential model checking")
    p.add_argument("poset")
    p.add_argument("-e", "--expr", default=None, help="sentence text")
    p.add_argument("--sentence-file", default=None)
    p.add_argument("--cap", type=int, default=logic.DEFAULT_DISJUNCT_CAP)
    common(p, oracle_flag=True)
    p.set_defaults(func=_cmd_mc)

    p = sub.add_parser("gadget", help="generate a construction")
    p.add_argument("kind", choices=["bowtie", "depth", "coverdeg", "width-sat",
                                    "degree-sat", "grid", "pattern"])
    p.add_argument("--graph", default=None, help="edge-list file")
    p.add_argument("--cnf", default=None, help="DIMACS file")
    p.add_argument("--size", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_gadget)

    p = sub.add_parser("compile-dump", help="materialize a compiled structure")
    p.add_argument("poset")
    p.add_argument("--chains", default=None,
                   help="semicolon-separated chains, elements space-separated")
    p.add_argument("--colors", default=None,
                   help="semicolon-separated color rows matching --chains")
    p.add_argument("--cap", type=int, default=100_000)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_compile_dump)

    p = sub.add_parser("bench", help="timing smoke tests")
    p.add_argument("--family", choices=["width2", "grid"], default="width2")
    p.add_argument("--sizes", default="")
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _BUDGET_ERRORS as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (SentenceSyntaxError, PosetAxiomError, CyclicCoversError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
