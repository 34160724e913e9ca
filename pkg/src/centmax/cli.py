"""Command-line entry point.

Every subcommand is seeded and reproducible: the same flags (including
--seed and --workers) produce byte-identical output, and each output embeds
the configuration that made it.

Exit codes: 0 success, 2 usage error, 3 size-guard refusal, 4 I/O error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
import zlib

from . import exact, experiments, generators, maximize, samplers
from .errors import ParseError, SizeError
from .graph import (graph_from_labeled_edges, load_edge_list,
                    load_temporal_edge_list, write_edge_list)

DEFAULT_SEED = 20100501

BUDGET_PRESETS = ("theory", "paper-exp", "equal-yalg")

_BRANDES_GUARD_N = 20000
_EXGREEDY_GUARD_N = 10000


def _fmt(x):
    if isinstance(x, float):
        return float(f"{x:.9g}")
    return x


def _json_dump(obj, stream):
    def clean(o):
        if isinstance(o, float):
            return _fmt(o)
        if isinstance(o, dict):
            return {k: clean(v) for k, v in o.items()}
        if isinstance(o, (list, tuple)):
            return [clean(v) for v in o]
        return o
    json.dump(clean(obj), stream, indent=2)
    stream.write("\n")


def _open_out(path):
    return open(path, "w") if path and path != "-" else sys.stdout


def _load_graph(args):
    if getattr(args, "gen", None):
        return _generate_from_spec(args.gen, random.Random(args.seed ^ 0x9E3779B9))
    if not getattr(args, "input", None):
        raise UsageError("need --input or --gen")
    return load_edge_list(args.input, directed=args.directed)


class UsageError(ValueError):
    pass


def _generate_from_spec(spec, rng):
    """Inline generator spec: kind:param, e.g. ran:100, hypercube:3,
    kron:8, lowerbound:10000,0.5."""
    kind, _, rest = spec.partition(":")
    if kind == "ran":
        return generators.gen_ran(int(rest), rng)
    if kind == "hypercube":
        return generators.gen_hypercube(int(rest))
    if kind == "kron":
        return generators.gen_kronecker([[0.9, 0.5], [0.5, 0.2]], int(rest), rng)
    if kind == "lowerbound":
        n, eps = rest.split(",")
        return generators.gen_lower_bound(int(n), float(eps))
    raise UsageError(f"unknown generator spec {spec!r}")


def _sampler_spec(args):
    kind = args.sampler
    if kind == "rr":
        kind = "rr-influence"
    return samplers.SamplerSpec(kind, kappa=args.kappa, p=args.p)


def _resolve_budget(args, n):
    b = args.budget
    if b.startswith("explicit:"):
        return int(b.split(":", 1)[1])
    if b == "theory":
        return maximize.sample_budget(n, args.k, args.eps / 2.0, args.ell,
                                      args.maxk_scaled)
    if b == "paper-exp":
        return maximize.experiment_budget(n, args.k, args.eps)
    if b == "equal-yalg":
        return maximize.equal_budget(n, args.eps)
    raise UsageError(f"unknown budget preset {b!r}")


def _config_dict(args, skip=("func",)):
    return {k: v for k, v in sorted(vars(args).items())
            if k not in skip and v is not None}


def cmd_maximize(args):
    g = _load_graph(args)
    spec = _sampler_spec(args)
    budget = _resolve_budget(args, g.n)
    rng = random.Random(args.seed)
    result = maximize.hedge(g, spec, args.k, args.eps, args.ell,
                            args.maxk_scaled, rng=rng, budget=budget,
                            workers=args.workers)
    out = {
        "config": _config_dict(args),
        "selected": [g.labels[v] for v in result.selected],
        "marginal_degrees": result.marginal_degrees,
        "scaled_centrality": result.scaled_centrality(),
        "estimated_centrality": result.estimated_centrality,
        "sample_count": result.sample_count,
        "alpha": result.alpha,
        "wall_time": result.wall_time,
    }
    with _open_out(args.output) as fh:
        _json_dump(out, fh)


def cmd_exact(args):
    g = _load_graph(args)
    with _open_out(args.output) as fh:
        if args.mode == "brandes":
            if g.n > _BRANDES_GUARD_N:
                raise SizeError(f"n={g.n} exceeds the exact guard "
                                f"{_BRANDES_GUARD_N}")
            scores = exact.brandes(g)
            denom = g.n * (g.n - 1) if g.n > 1 else 1
            fh.write("node,score,scaled_score\n")
            for v, score in enumerate(scores):
                fh.write(f"{g.labels[v]},{_fmt(score)},{_fmt(score / denom)}\n")
        elif args.mode == "exgreedy":
            if g.n > _EXGREEDY_GUARD_N:
                raise SizeError(f"n={g.n} exceeds the exhaustive-greedy "
                                f"guard {_EXGREEDY_GUARD_N}")
            t0 = time.perf_counter()
            picks, scores = exact.ex_greedy(g, args.k)
            elapsed = time.perf_counter() - t0
            denom = g.n * (g.n - 1) if g.n > 1 else 1
            fh.write("round,node,set_centrality,scaled_centrality\n")
            for i, (v, s) in enumerate(zip(picks, scores), 1):
                fh.write(f"{i},{g.labels[v]},{_fmt(s)},{_fmt(s / denom)}\n")
            fh.write(f"# wall_time {_fmt(elapsed)}\n")
        elif args.mode == "brute":
            best_set, best_val = exact.brute_force_max(g, args.k)
            denom = g.n * (g.n - 1) if g.n > 1 else 1
            fh.write("nodes,set_centrality,scaled_centrality\n")
            label_str = " ".join(str(g.labels[v]) for v in sorted(best_set))
            fh.write(f"{label_str},{_fmt(best_val)},{_fmt(best_val / denom)}\n")
        else:
            raise UsageError(f"unknown exact mode {args.mode!r}")


def cmd_generate(args):
    rng = random.Random(args.seed)
    if args.generator == "ran":
        g = generators.gen_ran(args.n, rng)
    elif args.generator == "hypercube":
        g = generators.gen_hypercube(args.r)
    elif args.generator == "kron":
        seed_vals = [float(x) for x in args.seed_matrix.split(",")]
        if len(seed_vals) != 4:
            raise UsageError("--seed-matrix needs 4 comma-separated values")
        matrix = [seed_vals[:2], seed_vals[2:]]
        g = generators.gen_kronecker(matrix, args.i, rng, method=args.method)
    elif args.generator == "lowerbound":
        g = generators.gen_lower_bound(args.n, args.eps)
    else:
        raise UsageError(f"unknown generator {args.generator!r}")
    params = " ".join(f"{k}={v}" for k, v in g.meta.items())
    header = f"{params} seed={args.seed}"
    write_edge_list(g, args.output, header=header)


def cmd_attack(args):
    g = _load_graph(args)
    rng = random.Random(args.seed)
    if args.sampler == "triangle":
        ordering = experiments.centrality_ordering(g, "triangle", rng,
                                                   eps=args.eps)
    else:
        ordering = experiments.centrality_ordering(g, _sampler_spec(args),
                                                   rng, eps=args.eps)
    cap = min(args.cap, g.n)
    curve = experiments.attack_curve(g, ordering, cap)
    with _open_out(args.output) as fh:
        fh.write(f"# config {json.dumps(_config_dict(args))}\n")
        fh.write("removed,lcc_size\n")
        for r, s in curve.rows():
            fh.write(f"{r},{s}\n")


def cmd_influence(args):
    g = _load_graph(args)
    rng = random.Random(args.seed)
    methods = args.methods.split(",")
    seed_sets = {}
    for method in methods:
        mrng = random.Random(args.seed ^ zlib.crc32(method.encode()))
        if method == "im":
            seed_sets[method] = experiments.ris_influence_max(
                g, args.k, args.num_rr, args.p, mrng)
        elif method == "tri":
            seed_sets[method] = exact.triangle_greedy(g, args.k)
        else:
            kind = {"betw": "betweenness", "cov": "coverage",
                    "kpath": "kpath"}.get(method)
            if kind is None:
                raise UsageError(f"unknown influence method {method!r}")
            spec = samplers.SamplerSpec(kind, kappa=args.kappa)
            ordering = experiments.centrality_ordering(g, spec, mrng,
                                                       eps=args.eps)
            seed_sets[method] = ordering[:args.k]
    with _open_out(args.output) as fh:
        fh.write(f"# config {json.dumps(_config_dict(args))}\n")
        fh.write("method,k,spread\n")
        for method in methods:
            spread = experiments.ic_spread(g, seed_sets[method], args.p,
                                           runs=args.runs,
                                           rng=random.Random(args.seed))
            fh.write(f"{method},{args.k},{_fmt(spread)}\n")


def cmd_evolve(args):
    temporal = load_temporal_edge_list(args.input)
    if args.snapshots:
        snaps = [int(t) for t in args.snapshots.split(",")]
    else:
        snaps = experiments.snapshot_grid(temporal, args.num_snapshots)
    ks = [int(k) for k in args.k_values.split(",")]
    spec = _sampler_spec(args)
    rng = random.Random(args.seed)
    rows = experiments.evolve(temporal, snaps, ks, spec, rng, eps=args.eps,
                              mode=args.mode, directed=args.directed)
    with _open_out(args.output) as fh:
        fh.write(f"# config {json.dumps(_config_dict(args))}\n")
        fh.write("t,n,m,avg_deg,k,scaled_centrality\n")
        for r in rows:
            fh.write(f"{r.timestamp},{r.n},{r.m},{_fmt(r.avg_degree)},"
                     f"{r.k},{_fmt(r.scaled_centrality)}\n")


def cmd_sample_dump(args):
    g = _load_graph(args)
    spec = _sampler_spec(args)
    rng = random.Random(args.seed)
    edges = [samplers.sample(g, spec, rng) for _ in range(args.count)]
    if args.output and args.output != "-":
        samplers.dump_hyperedges(edges, args.output, labels=g.labels)
    else:
        for h in edges:
            sys.stdout.write(" ".join(str(g.labels[v])
                                      for v in sorted(h)) + "\n")


def _add_common(p, sampler=True):
    p.add_argument("--input", help="edge-list file")
    p.add_argument("--gen", help="inline generator spec, e.g. ran:100")
    p.add_argument("--directed", action="store_true")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--output", "-o", default="-")
    if sampler:
        p.add_argument("--sampler", default="betweenness",
                       choices=["betweenness", "coverage", "kpath", "rr",
                                "triangle"])
        p.add_argument("--kappa", type=int, default=2)
        p.add_argument("--p", type=float, default=0.01)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="centmax",
        description="Centrality maximization via hyper-edge sampling")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("maximize", help="sample-and-greedy maximization")
    _add_common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--eps", type=float, default=0.1)
    p.add_argument("--ell", type=int, default=1)
    p.add_argument("--maxk-scaled", type=float, default=1.0)
    p.add_argument("--budget", default="paper-exp",
                   help="theory | paper-exp | equal-yalg | explicit:N")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_maximize)

    p = sub.add_parser("exact", help="exact oracles and exhaustive greedy")
    _add_common(p, sampler=False)
    p.add_argument("--mode", required=True,
                   choices=["brandes", "exgreedy", "brute"])
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("generate", help="write a synthetic graph")
    p.add_argument("generator", choices=["ran", "hypercube", "kron",
                                         "lowerbound"])
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--eps", type=float, default=0.5)
    p.add_argument("--seed-matrix", default="0.9,0.5,0.5,0.2")
    p.add_argument("--method", choices=["exact", "ball"])
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--output", "-o", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("attack", help="removal curve of the largest component")
    _add_common(p)
    p.add_argument("--eps", type=float, default=0.25)
    p.add_argument("--cap", type=int, default=1000)
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("influence", help="cascade spread of seed sets")
    _add_common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--num-rr", type=int, default=10 ** 6)
    p.add_argument("--runs", type=int, default=10000)
    p.add_argument("--eps", type=float, default=0.25)
    p.add_argument("--methods", default="im,betw")
    p.set_defaults(func=cmd_influence)

    p = sub.add_parser("evolve", help="per-snapshot centrality series")
    _add_common(p)
    p.add_argument("--snapshots", help="comma-separated timestamps")
    p.add_argument("--num-snapshots", type=int, default=10)
    p.add_argument("--k-values", default="1,50")
    p.add_argument("--eps", type=float, default=0.25)
    p.add_argument("--mode", default="cumulative",
                   choices=["cumulative", "exact"])
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("sample-dump", help="dump raw hyper-edges")
    _add_common(p)
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=cmd_sample_dump)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except SizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (UsageError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
