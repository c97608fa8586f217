"""Command-line surface.

Subcommands: decide, search, kedsp, kedp, gen, reduce, bench, selftest.
Single runs print one JSON report to stdout; bench prints CSV.  Exit codes:
0 success, 2 invalid input, 1 internal failure.  All randomness flows from
one --seed flag whose value is echoed in the report, so any run can be
reproduced exactly (timing fields aside).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Optional

from . import bench as bench_mod
from . import dsp2, kedsp, reductions, search
from .errors import DspathError
from .graph import MODE_DAG, MODE_UNDIRECTED, Graph, format_graph, load_graph
from .instances import random_dag, random_undirected


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit(report: dict) -> None:
    sys.stdout.write(json.dumps(report, indent=2, sort_keys=False) + "\n")


def _instance_stats(g: Graph) -> dict:
    return {"n": g.n, "m": g.m, "mode": g.mode, "k": g.k}


def _seed_of(args) -> int:
    if args.seed is not None:
        return args.seed
    return random.SystemRandom().getrandbits(32)


def _cmd_decide(args) -> int:
    t_load = time.perf_counter()
    g = load_graph(_read(args.input))
    seed = _seed_of(args)
    t0 = time.perf_counter()
    use_fast = False
    prebuilt = None
    if g.m >= dsp2._FASTPATH_MIN_EDGES:
        from . import fastpath

        use_fast = fastpath.available(g)
    if not use_fast:
        prebuilt = dsp2.build_instance_dags(g)
    t1 = time.perf_counter()
    verdict = dsp2.decide_2dsp(
        g,
        trials=args.trials,
        seed=seed,
        engine="fast" if use_fast else "reference",
        prebuilt=prebuilt,
    )
    t2 = time.perf_counter()
    _emit(
        {
            "command": "decide",
            "seed": seed,
            "verdict": verdict.answer,
            "value": f"0x{verdict.value:016x}",
            "trials": verdict.trials,
            "instance": _instance_stats(g),
            "timings": {
                "load": t0 - t_load,
                "sp_dag": t1 - t0,
                "evaluate": t2 - t1,
                "total": t2 - t_load,
            },
        }
    )
    return 0


def _cmd_search(args) -> int:
    t_load = time.perf_counter()
    g = load_graph(_read(args.input))
    seed = _seed_of(args)
    t0 = time.perf_counter()
    result = search.find_2dsp(g, seed=seed)
    t1 = time.perf_counter()
    _emit(
        {
            "command": "search",
            "seed": seed,
            "verdict": "yes" if result else "no",
            "paths": [list(p) for p in result] if result else [],
            "instance": _instance_stats(g),
            "timings": {
                "load": t0 - t_load,
                "evaluate": t1 - t0,
                "total": t1 - t_load,
            },
        }
    )
    return 0


def _cmd_kedsp(args, weight_first: bool = False) -> int:
    t_load = time.perf_counter()
    g = load_graph(_read(args.input))
    if args.k is not None and args.k != g.k:
        raise DspathError(f"--k {args.k} does not match the file's {g.k} pairs")
    if weight_first:
        g = kedsp.reduce_dp_to_dsp(g)
    t0 = time.perf_counter()
    paths = kedsp.solve_kedsp(g, max_product_nodes=args.max_product_nodes)
    t1 = time.perf_counter()
    _emit(
        {
            "command": "kedp" if weight_first else "kedsp",
            "seed": None,
            "verdict": "yes" if paths is not None else "no",
            "paths": paths if paths is not None else [],
            "instance": _instance_stats(g),
            "timings": {
                "load": t0 - t_load,
                "evaluate": t1 - t0,
                "total": t1 - t_load,
            },
        }
    )
    return 0


def _cmd_gen(args) -> int:
    seed = _seed_of(args)
    rng = random.Random(seed)
    kind = args.kind
    if kind == "covering-family":
        fam = reductions.covering_family(args.k)
        _emit(
            {
                "command": "gen covering-family",
                "seed": seed,
                "k": fam.k,
                "size": len(fam.lists),
                "lists": [list(l) for l in fam.lists],
            }
        )
        return 0
    if kind in ("clique-to-kdsp", "clique-to-pdp"):
        if args.edges is None:
            raise DspathError("gen clique-to-* needs --edges CLIQUE_FILE")
        clique = reductions.load_clique(_read(args.edges))
        maker = (
            reductions.clique_to_kdsp
            if kind == "clique-to-kdsp"
            else reductions.clique_to_pdp
        )
        inst = maker(clique)
        _write(args.out, format_graph(inst.graph))
        if args.out and args.out != "-":
            with open(args.out + ".cert.json", "w", encoding="utf-8") as fh:
                json.dump(inst.certification, fh, indent=2)
            sys.stderr.write(f"wrote {args.out} and {args.out}.cert.json\n")
        return 0
    if kind in ("random-dag", "random-undirected"):
        maker = random_dag if kind == "random-dag" else random_undirected
        g = maker(
            rng,
            n=args.n,
            edge_prob=args.edge_prob,
            max_weight=args.max_weight,
            k=args.k,
        )
        _write(args.out, format_graph(g))
        return 0
    raise DspathError(f"unknown generator {kind!r}")


def _cmd_reduce(args) -> int:
    g = load_graph(_read(args.input))
    if args.kind == "edsp-to-dsp":
        out = kedsp.reduce_edsp_to_dsp(g)
    elif args.kind == "dp-to-dsp":
        out = kedsp.reduce_dp_to_dsp(g)
    else:
        raise DspathError(f"unknown reduction {args.kind!r}")
    _write(args.out, format_graph(out))
    return 0


def _cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",")]
    rows = bench_mod.run_sweep(
        mode=args.mode, sizes=sizes, seed=_seed_of(args), trials=args.trials
    )
    slope = bench_mod.fit_slope(rows)
    if args.csv:
        sys.stdout.write(bench_mod.to_csv(rows))
        sys.stdout.write(f"# slope,{slope:.4f}\n")
    else:
        _emit(
            {
                "command": "bench",
                "mode": args.mode,
                "rows": [r.__dict__ for r in rows],
                "slope": slope,
            }
        )
    return 0


def _cmd_selftest(args) -> int:
    """Small oracle-equivalence sweeps; exits nonzero on any mismatch."""
    from . import oracle
    from .instances import random_instance

    seed = _seed_of(args)
    rng = random.Random(seed)
    checked = 0
    for mode in (MODE_DAG, MODE_UNDIRECTED):
        for _ in range(args.count):
            g = random_instance(rng, mode, n=rng.randint(4, 9))
            want = oracle.brute_2dsp(g)
            got = dsp2.decide_2dsp(g, rng=rng).is_yes
            if want != got:
                _emit({"command": "selftest", "seed": seed, "status": "mismatch"})
                return 1
            res = search.find_2dsp(g, rng=rng)
            if (res is not None) != want:
                _emit({"command": "selftest", "seed": seed, "status": "search-mismatch"})
                return 1
            if res is not None and not search.verify_solution(g, *res):
                _emit({"command": "selftest", "seed": seed, "status": "bad-solution"})
                return 1
            checked += 1
    _emit({"command": "selftest", "seed": seed, "status": "ok", "instances": checked})
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dspath", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp, seed=True):
        if seed:
            sp.add_argument("--seed", type=int, default=None, help="RNG seed (echoed)")

    d = sub.add_parser("decide", help="randomized 2-DSP decision")
    d.add_argument("--input", required=True)
    d.add_argument("--trials", type=int, default=dsp2.DEFAULT_TRIALS)
    common(d)
    d.set_defaults(fn=_cmd_decide)

    s = sub.add_parser("search", help="find an explicit 2-DSP solution")
    s.add_argument("--input", required=True)
    common(s)
    s.set_defaults(fn=_cmd_search)

    ke = sub.add_parser("kedsp", help="k edge-disjoint shortest paths on a DAG")
    ke.add_argument("--input", required=True)
    ke.add_argument("--k", type=int, default=None)
    ke.add_argument("--max-product-nodes", type=int, default=kedsp.DEFAULT_MAX_PRODUCT_NODES)
    common(ke, seed=False)
    ke.set_defaults(fn=_cmd_kedsp)

    kd = sub.add_parser("kedp", help="k edge-disjoint paths on a DAG (via reweighting)")
    kd.add_argument("--input", required=True)
    kd.add_argument("--k", type=int, default=None)
    kd.add_argument("--max-product-nodes", type=int, default=kedsp.DEFAULT_MAX_PRODUCT_NODES)
    common(kd, seed=False)
    kd.set_defaults(fn=lambda a: _cmd_kedsp(a, weight_first=True))

    g = sub.add_parser("gen", help="instance generators")
    g.add_argument(
        "kind",
        choices=[
            "covering-family",
            "clique-to-kdsp",
            "clique-to-pdp",
            "random-dag",
            "random-undirected",
        ],
    )
    g.add_argument("--k", type=int, default=2)
    g.add_argument("--n", type=int, default=10)
    g.add_argument("--edge-prob", type=float, default=0.4)
    g.add_argument("--max-weight", type=int, default=5)
    g.add_argument("--edges", default=None, help="clique instance file")
    g.add_argument("--out", default=None, help="output path (default stdout)")
    common(g)
    g.set_defaults(fn=_cmd_gen)

    r = sub.add_parser("reduce", help="variant-to-variant reductions")
    r.add_argument("kind", choices=["edsp-to-dsp", "dp-to-dsp"])
    r.add_argument("--input", required=True)
    r.add_argument("--out", default=None)
    common(r, seed=False)
    r.set_defaults(fn=_cmd_reduce)

    b = sub.add_parser("bench", help="scaling sweep")
    b.add_argument("--mode", choices=[MODE_DAG, MODE_UNDIRECTED], default=MODE_DAG)
    b.add_argument("--sizes", default="10000,30000,100000")
    b.add_argument("--trials", type=int, default=dsp2.DEFAULT_TRIALS)
    b.add_argument("--csv", action="store_true")
    b.add_argument("--json", dest="csv", action="store_false")
    common(b)
    b.set_defaults(fn=_cmd_bench)

    st = sub.add_parser("selftest", help="oracle-equivalence smoke suite")
    st.add_argument("--count", type=int, default=25)
    common(st)
    st.set_defaults(fn=_cmd_selftest)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (DspathError, FileNotFoundError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except AssertionError as exc:  # internal invariant failure
        sys.stderr.write(f"internal error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
