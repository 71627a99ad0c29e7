"""Command-line interface: reproducible ordering runs, checks, and benches.

Exit codes: 0 success, 1 semantic failure (invalid ordering, reduction
disagreement, violated bench bound), 2 usage or configuration error,
3 parse or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .engine import OrderingConfig, attempt_bounds, fast_minimum_degree
from .errors import ConfigError, InputError, ParseError
from .fillers import (CliqueUnionInstance, bounded_filler, clique_union,
                      clique_union_bruteforce, comb_filler, min_degree_filler)
from .graph import gnm_random_graph, grid_graph
from .io import (RunStats, read_edge_list, read_matrix_market,
                 read_permutation, write_edge_list, write_permutation,
                 write_stats)
from .oracle import naive_minimum_degree, verify_min_degree_ordering

EXIT_OK = 0
EXIT_SEMANTIC = 1
EXIT_USAGE = 2
EXIT_IO = 3

_BENCH_COLUMNS = ("suite", "size", "rep", "n", "m", "m_plus", "insertion_attempts",
                  "bound_sum_min", "bound_delta_m_plus", "bound_edge_sqrt", "wall_ms")


def _err(message):
    print(f"error: {message}", file=sys.stderr)


def _load_graph(path, fmt, symmetrize=False):
    if fmt == "auto":
        fmt = "mm" if str(path).endswith((".mtx", ".mm")) else "edges"
    if fmt == "mm":
        return read_matrix_market(path, symmetrize=symmetrize)
    return read_edge_list(path)


def _ordering_config(args):
    backend = {"sparse": "ordered-set"}.get(args.backend, args.backend)
    return OrderingConfig(backend=backend, tie_break=args.tie_break,
                          seed=args.seed, dense_limit=args.dense_limit)


def cmd_order(args):
    g = _load_graph(args.input, args.format, args.symmetrize)
    config = _ordering_config(args)
    t0 = time.perf_counter()
    result = fast_minimum_degree(g, config)
    wall_ms = (time.perf_counter() - t0) * 1e3

    if args.self_check:
        check = verify_min_degree_ordering(g, result.ordering, max_n=None)
        if not check:
            _err(f"self-check failed at step {check.violation_step} "
                 f"(witness vertex {check.witness})")
            return EXIT_SEMANTIC

    if args.stats:
        stats = RunStats.from_run(g, result, args.tie_break, wall_ms)
        fmt = args.stats_format
        if fmt == "auto":
            fmt = "tsv" if str(args.stats).endswith(".tsv") else "json"
        write_stats(stats, args.stats, fmt)

    if args.out:
        write_permutation(result.ordering, args.out)
        print(f"n={g.n} m={g.m} m_plus={result.m_plus} "
              f"insertion_attempts={result.insertion_attempts} "
              f"backend={result.backend_used}")
    else:
        for v in result.ordering:
            print(v)
    return EXIT_OK


def cmd_verify(args):
    g = _load_graph(args.input, args.format, args.symmetrize)
    perm = read_permutation(args.perm)
    if len(perm) != g.n:
        raise InputError(f"size mismatch: graph has {g.n} vertices, "
                         f"permutation has {len(perm)} entries")
    check = verify_min_degree_ordering(g, perm, max_n=None)
    if check:
        print("VALID")
        return EXIT_OK
    step = check.violation_step
    print(f"INVALID at step {step}: eliminated vertex {perm[step]} does not have "
          f"minimum fill degree (witness vertex {check.witness})")
    return EXIT_SEMANTIC


def cmd_stats(args):
    g = _load_graph(args.input, args.format, args.symmetrize)
    print(json.dumps({"n": g.n, "m": g.m, "max_degree": g.max_degree()}, indent=2))
    return EXIT_OK


def cmd_gen_ufiller(args):
    targets = range(args.size)
    if args.kind == "comb":
        lg = comb_filler(targets)
    elif args.kind == "bounded":
        lg = bounded_filler(targets, args.d)
    else:
        lg = min_degree_filler(targets)
    write_edge_list(lg.graph, args.out)
    if args.labels:
        with open(args.labels, "w", encoding="utf-8") as fh:
            for v in sorted(lg.targets):
                fh.write(f"{v} U\n")
            for v in sorted(lg.extras):
                fh.write(f"{v} W\n")
    print(f"kind={args.kind} targets={len(lg.targets)} extras={len(lg.extras)} "
          f"n={lg.graph.n} m={lg.graph.m}")
    return EXIT_OK


def _parse_instance(path):
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ParseError("empty instance file, expected 'n d' header", path, 1)
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError("header must be 'n d'", path, 1)
    try:
        n, d = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError("non-integer token in header", path, 1) from None
    if len(lines) - 1 < d:
        raise ParseError(f"declared {d} subsets, found {len(lines) - 1} lines", path,
                         len(lines))
    subsets = []
    for lineno in range(1, d + 1):
        toks = lines[lineno].split()
        try:
            subsets.append(frozenset(int(t) for t in toks))
        except ValueError:
            raise ParseError("non-integer token in subset", path, lineno + 1) from None
    for lineno in range(d + 1, len(lines)):
        if lines[lineno].strip():
            raise ParseError("trailing data after declared subsets", path, lineno + 1)
    return CliqueUnionInstance(n, tuple(subsets))


def cmd_clique_union(args):
    instance = _parse_instance(args.instance)
    if args.engine == "fast":
        engine = lambda g: fast_minimum_degree(g).ordering
    else:
        engine = lambda g: naive_minimum_degree(g, max_n=None).ordering
    answer = clique_union(instance, engine)
    print("true" if answer else "false")
    if args.check:
        expected = clique_union_bruteforce(instance)
        if answer != expected:
            _err(f"reduction disagrees with brute force: got {answer}, "
                 f"expected {expected}")
            return EXIT_SEMANTIC
    return EXIT_OK


def _bench_graph(suite, size, rep, seed):
    if suite == "random":
        # sparse regime: m ~ 4n
        return gnm_random_graph(size, 4 * size, seed=seed * 1_000_003 + size * 1_009 + rep)
    if suite == "grid":
        return grid_graph(size, size)
    return min_degree_filler(range(size)).graph


def cmd_bench(args):
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    gen_seed = args.seed if args.seed is not None else 0
    rows = []
    for size in sizes:
        for rep in range(args.repeats):
            g = _bench_graph(args.suite, size, rep, gen_seed)
            t0 = time.perf_counter()
            result = fast_minimum_degree(g, _ordering_config(args))
            wall_ms = (time.perf_counter() - t0) * 1e3
            bounds = attempt_bounds(g, result)
            if not bounds.satisfied_by(result.insertion_attempts):
                _err(f"attempt bound violated on {args.suite} size={size} rep={rep}: "
                     f"k={result.insertion_attempts} bounds=({bounds.sum_min_degree}, "
                     f"{bounds.max_degree_times_m_plus}, {bounds.edge_sqrt:.1f})")
                return EXIT_SEMANTIC
            rows.append((args.suite, size, rep, g.n, g.m, result.m_plus,
                         result.insertion_attempts, bounds.sum_min_degree,
                         bounds.max_degree_times_m_plus,
                         f"{bounds.edge_sqrt:.3f}", f"{wall_ms:.3f}"))
    text = "\t".join(_BENCH_COLUMNS) + "\n"
    for row in rows:
        text += "\t".join(str(c) for c in row) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _add_graph_input(p):
    p.add_argument("input", help="graph file (Matrix Market or edge list)")
    p.add_argument("--format", choices=("auto", "mm", "edges"), default="auto",
                   help="input format; auto picks mm for .mtx/.mm extensions")
    p.add_argument("--symmetrize", action="store_true",
                   help="symmetrize asymmetric 'general' Matrix Market patterns")


def _add_engine_flags(p):
    p.add_argument("--backend", choices=("auto", "dense", "sparse"), default="auto",
                   help="fill-graph adjacency backend (sparse = ordered sets)")
    p.add_argument("--tie-break", choices=("smallest", "largest", "random"),
                   default="smallest", dest="tie_break")
    p.add_argument("--seed", type=int, default=None,
                   help="rng seed, required with --tie-break random")
    p.add_argument("--dense-limit", type=int, default=8192, dest="dense_limit",
                   help="largest n the dense backend accepts")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="mindeg",
        description="Exact minimum degree orderings of sparse symmetric patterns")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("order", help="compute a minimum degree elimination ordering")
    _add_graph_input(p)
    _add_engine_flags(p)
    p.add_argument("--out", help="write the permutation here instead of stdout")
    p.add_argument("--stats", help="write run statistics to this path")
    p.add_argument("--stats-format", choices=("auto", "json", "tsv"), default="auto",
                   dest="stats_format")
    p.add_argument("--self-check", action="store_true", dest="self_check",
                   help="verify the ordering with the brute-force oracle")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("verify", help="check an ordering against the definition")
    _add_graph_input(p)
    p.add_argument("perm", help="permutation file, one 0-based id per line")
    p.add_argument("--oracle", choices=("naive",), default="naive",
                   help="verification oracle (only the dense simulator exists)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="print basic pattern statistics")
    _add_graph_input(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("gen-ufiller", help="generate an adversarial filler graph")
    p.add_argument("--size", type=int, required=True, help="number of target vertices")
    p.add_argument("--kind", choices=("comb", "bounded", "mindeg"), default="mindeg")
    p.add_argument("--d", type=int, default=None,
                   help="degree bound, required by --kind bounded")
    p.add_argument("--out", required=True, help="edge-list output path")
    p.add_argument("--labels", help="write '<id> U|W' vertex labels here")
    p.set_defaults(func=cmd_gen_ufiller)

    p = sub.add_parser("clique-union",
                       help="decide whether given subset cliques cover K_V")
    p.add_argument("instance", help="file with 'n d' then d subset lines")
    p.add_argument("--engine", choices=("fast", "naive"), default="fast")
    p.add_argument("--check", action="store_true",
                   help="also run the brute force and fail on disagreement")
    p.set_defaults(func=cmd_clique_union)

    p = sub.add_parser("bench", help="run a bounds-asserting benchmark suite")
    p.add_argument("--suite", choices=("random", "grid", "ufiller"), required=True)
    p.add_argument("--sizes", required=True,
                   help="comma-separated sizes (vertices, grid side, or targets)")
    p.add_argument("--repeats", type=int, default=1)
    _add_engine_flags(p)
    p.add_argument("--out", help="write the TSV here instead of stdout")
    p.set_defaults(func=cmd_bench)
    return parser


def _validate_usage(args):
    if args.command == "gen-ufiller":
        if args.size < 1:
            raise ConfigError("--size must be at least 1")
        if args.kind == "bounded":
            if args.d is None:
                raise ConfigError("--kind bounded requires --d")
            if args.d < 2:
                raise ConfigError("--d must be at least 2")
        elif args.d is not None:
            raise ConfigError(f"--d only applies to --kind bounded, not {args.kind}")
    if args.command == "bench" and args.repeats < 0:
        raise ConfigError("--repeats must be nonnegative")


def main(argv=None):
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        _validate_usage(args)
        return args.func(args)
    except ConfigError as exc:
        _err(exc)
        return EXIT_USAGE
    except (ParseError, InputError) as exc:
        _err(exc)
        return EXIT_IO
    except OSError as exc:
        _err(exc)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
