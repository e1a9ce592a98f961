"""Command-line front door.

Subcommands: gen, disc, full, qfull, g, percolate, sweep. Graphs move
through the canonical edge-list format ("n m" header plus sorted "u v"
lines); rationals are NUM/DEN strings everywhere. Exit codes: 0
success, 2 precondition refusal, 3 verification failure, 1 I/O or
parse errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .discrepancy import (
    EXACT_CAP_DEFAULT,
    discrepancy_exact,
    discrepancy_local_search,
)
from .finders import (
    full_two_thirds,
    greedy_full,
    largest_full_or_cofull,
    one_over_r_full,
    oracle_largest_full,
    qfull_partition,
    small_p_full,
)
from .generate import FAMILIES, GenSpec, gen_glued, generate
from .graph import (
    EdgeListError,
    PreconditionError,
    VerificationError,
    density,
    read_edge_list,
    write_edge_list,
)
from .percolation import (
    THETA_CAP_DEFAULT,
    full_infection_probability,
    full_infection_probability_exact,
    sample_initial_mask,
    surviving_half_full,
)
from .sweep import (
    SWEEP_ALGORITHMS,
    SweepConfig,
    frac_str,
    rows_to_csv,
    run_sweep,
    summarize,
)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            f"expected a rational like 1/2, got {text!r}") from None


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}") from None


def _fraction_list(text: str) -> tuple[Fraction, ...]:
    return tuple(_fraction(tok) for tok in text.split(",") if tok.strip())


def _read_graph(path: str):
    if path == "-":
        return read_edge_list(sys.stdin.read())
    with open(path, "r", encoding="ascii") as fh:
        return read_edge_list(fh.read())


def _write_text(text: str, path: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii", newline="") as fh:
            fh.write(text)


def _witness_line(vertices) -> str:
    return "witness: " + " ".join(str(v) for v in sorted(vertices))


def _seed(args, default=0):
    return args.seed if args.seed is not None else default


def _cap(args, default):
    return args.exact_cap if args.exact_cap is not None else default


def _record_line(family, n, p, seed, algorithm, size, bound) -> str:
    seed_txt = "" if seed is None else str(seed)
    return f"{family},{n},{frac_str(p)},{seed_txt},{algorithm},{size},{frac_str(bound)},,true"


def cmd_gen(args) -> int:
    seed = _seed(args)
    if args.family == "glued":
        if not args.a or not args.b:
            raise PreconditionError("glued requires --a and --b input graphs")
        g = gen_glued(_read_graph(args.a), _read_graph(args.b), seed)
        meta = {"density": density(g)}
    else:
        if args.n is None:
            raise PreconditionError(f"family {args.family} requires --n")
        spec = GenSpec(args.family, args.n, p=args.p, E=args.E, r=args.r,
                       c=args.c, seed=seed)
        g, meta = generate(spec)
    _write_text(write_edge_list(g), args.out)
    extras = " ".join(
        f"{key}={frac_str(val) if isinstance(val, Fraction) else val}"
        for key, val in sorted(meta.items()))
    print(f"generated family={args.family} n={g.n} edges={g.edge_count} {extras}",
          file=sys.stderr)
    return 0


def cmd_disc(args) -> int:
    g = _read_graph(args.input)
    p = args.p if args.p is not None else density(g)
    sign = "positive" if args.sign == "plus" else "negative"
    if args.heuristic:
        res = discrepancy_local_search(g, p, sign, seed=_seed(args),
                                       restarts=args.restarts, k=args.k)
    else:
        res = discrepancy_exact(g, p, sign, k=args.k,
                                cap=_cap(args, EXACT_CAP_DEFAULT))
    tag = "disc+" if args.sign == "plus" else "disc-"
    k_txt = f" k={res.k}" if res.k is not None else ""
    print(f"{tag} p={frac_str(p)}{k_txt} value={frac_str(res.value)}")
    print(_witness_line(res.witness))
    return 0


def cmd_full(args) -> int:
    g = _read_graph(args.input)
    if args.algo == "greedy":
        res = greedy_full(g, p=args.p, tie_break=args.tie_break)
    elif args.algo == "oracle":
        res = oracle_largest_full(g, args.p if args.p is not None else density(g),
                                  cap=_cap(args, EXACT_CAP_DEFAULT))
    elif args.algo == "two-thirds":
        if args.p is not None:
            raise PreconditionError("two-thirds always runs at the graph's own density")
        res = full_two_thirds(g)
    else:
        if args.p is not None:
            raise PreconditionError("small-p always runs at the graph's own density")
        res = small_p_full(g)
    bound = res.guarantee if res.guarantee is not None else Fraction(1)
    print(f"full algo={args.algo} n={g.n} p={frac_str(res.p_used)} "
          f"size={res.size} min_degree={res.min_degree} "
          f"guarantee={frac_str(res.guarantee) if res.guarantee is not None else '-'}")
    print(_witness_line(res.vertices))
    if args.trace and res.trace:
        print("trace: " + " ".join(str(v) for v in res.trace))
    print(_record_line("file", g.n, res.p_used, args.seed, args.algo,
                       res.size, bound))
    return 0


def cmd_qfull(args) -> int:
    g = _read_graph(args.input)
    if args.q is not None:
        out = qfull_partition(g, args.q, seed=args.seed)
        print(f"qfull q={frac_str(out.q)} n={g.n} variant={out.variant}")
        if out.set_q is not None:
            print(f"set_q size={len(out.set_q)}")
            print(_witness_line(out.set_q))
        if out.set_1mq is not None:
            print(f"set_1mq size={len(out.set_1mq)}")
            print(_witness_line(out.set_1mq))
    else:
        rel = one_over_r_full(g, args.r, seed=args.seed)
        print(f"one-over-r r={args.r} n={g.n} size={rel.size}")
        print(_witness_line(rel.vertices))
    return 0


def cmd_g(args) -> int:
    g = _read_graph(args.input)
    res = largest_full_or_cofull(g, method=args.method,
                                 cap=_cap(args, EXACT_CAP_DEFAULT),
                                 seed=_seed(args))
    print(f"g n={g.n} p={frac_str(res.p)} value={res.value} side={res.side}")
    print(_witness_line(res.witness))
    print(_record_line("file", g.n, res.p, args.seed, f"g-{args.method}",
                       res.value, Fraction(1)))
    return 0


def cmd_percolate(args) -> int:
    g = _read_graph(args.input)
    if args.exact:
        theta = full_infection_probability_exact(g, args.p,
                                                 cap=_cap(args, THETA_CAP_DEFAULT))
        print(f"theta_exact={frac_str(theta)}")
    else:
        est = full_infection_probability(g, args.p, trials=args.trials,
                                         seed=_seed(args))
        print(f"theta_estimate={est.successes}/{est.trials} "
              f"(~{float(est.estimate):.4f}) half_width={est.half_width:.4f}")
    if args.witness:
        found = None
        for t in range(args.trials):
            initial = sample_initial_mask(g.n, args.p, _seed(args), t)
            survivors = surviving_half_full(g, initial)
            if survivors:
                found = (t, survivors)
                break
        if found is None:
            print("witness: none (every sampled start infected the whole graph)")
        else:
            t, survivors = found
            print(f"surviving half-full set (trial {t}, size {len(survivors)}):")
            print(_witness_line(survivors))
    return 0


def cmd_sweep(args) -> int:
    config = SweepConfig(
        n_grid=args.n_grid,
        p_grid=args.p_grid,
        seeds=args.seeds,
        algorithms=tuple(tok for tok in args.algos.split(",") if tok.strip()),
        family=args.family,
        r=args.r,
        c=args.c,
        timings=args.timings,
        threads=args.threads if args.threads is not None else 1,
        exact_cap=_cap(args, EXACT_CAP_DEFAULT),
    )
    rows = run_sweep(config)
    _write_text(rows_to_csv(rows), args.out)
    print(summarize(rows), file=sys.stderr if args.out == "-" else sys.stdout)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None,
                        help="seed for randomized steps (default 0)")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes for sweeps (default 1)")
    common.add_argument("--exact-cap", type=int, default=None,
                        help="max n for exact enumeration (default 20; 16 for percolate)")

    parser = argparse.ArgumentParser(
        prog="fullsub",
        description="Full subgraphs, discrepancy, and bootstrap percolation.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", parents=[common],
                           help="generate a graph family instance")
    p_gen.add_argument("--family", required=True,
                       choices=FAMILIES + ("glued",))
    p_gen.add_argument("--n", type=int,
                       help="order (part size for multipartite-planted; "
                            "adversary builds 4n+2 vertices)")
    p_gen.add_argument("--p", type=_fraction, help="edge probability for gnp")
    p_gen.add_argument("--E", type=int, help="edge count for clique-isolated")
    p_gen.add_argument("--r", type=int, help="r for multipartite-planted")
    p_gen.add_argument("--c", type=_fraction,
                       help="density offset coefficient for multipartite-planted")
    p_gen.add_argument("--a", help="first input graph for glued")
    p_gen.add_argument("--b", help="second input graph for glued")
    p_gen.add_argument("--out", default="-", help="output file ('-' = stdout)")
    p_gen.set_defaults(func=cmd_gen)

    p_disc = sub.add_parser("disc", parents=[common],
                            help="positive/negative discrepancy")
    p_disc.add_argument("--input", required=True)
    p_disc.add_argument("--p", type=_fraction,
                        help="density parameter (default: graph density)")
    p_disc.add_argument("--sign", choices=("plus", "minus"), default="plus")
    p_disc.add_argument("--k", type=int, help="restrict to subsets of size k")
    mode = p_disc.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--heuristic", action="store_true")
    p_disc.add_argument("--restarts", type=int, default=8)
    p_disc.set_defaults(func=cmd_disc)

    p_full = sub.add_parser("full", parents=[common],
                            help="find a full subgraph")
    p_full.add_argument("--input", required=True)
    p_full.add_argument("--algo", default="greedy",
                        choices=("greedy", "two-thirds", "small-p", "oracle"))
    p_full.add_argument("--p", type=_fraction,
                        help="density override (greedy and oracle only)")
    p_full.add_argument("--tie-break", default="min-index",
                        choices=("min-index", "adversarial-antipodal"))
    p_full.add_argument("--trace", action="store_true",
                        help="print the deletion sequence")
    p_full.set_defaults(func=cmd_full)

    p_qfull = sub.add_parser("qfull", parents=[common],
                             help="relatively q-full partition or 1/r-full subgraph")
    p_qfull.add_argument("--input", required=True)
    which = p_qfull.add_mutually_exclusive_group(required=True)
    which.add_argument("--q", type=_fraction, help="ratio a/b for the partition")
    which.add_argument("--r", type=int, help="find a relatively 1/r-full subgraph")
    p_qfull.set_defaults(func=cmd_qfull)

    p_g = sub.add_parser("g", parents=[common],
                         help="largest full-or-co-full subgraph")
    p_g.add_argument("--input", required=True)
    p_g.add_argument("--method", default="oracle",
                     choices=("oracle", "heuristic"))
    p_g.set_defaults(func=cmd_g)

    p_perc = sub.add_parser("percolate", parents=[common],
                            help="majority bootstrap percolation probability")
    p_perc.add_argument("--input", required=True)
    p_perc.add_argument("--p", type=_fraction, required=True,
                        help="initial infection probability")
    p_perc.add_argument("--trials", type=int, default=1000)
    p_perc.add_argument("--exact", action="store_true",
                        help="exact value by subset enumeration")
    p_perc.add_argument("--witness", action="store_true",
                        help="show a surviving half-full set when a trial fails")
    p_perc.set_defaults(func=cmd_percolate)

    p_sweep = sub.add_parser("sweep", parents=[common],
                             help="experiment grid writing CSV")
    p_sweep.add_argument("--family", default="gnp", choices=FAMILIES)
    p_sweep.add_argument("--n-grid", type=_int_list, required=True)
    p_sweep.add_argument("--p-grid", type=_fraction_list, required=True)
    p_sweep.add_argument("--seeds", type=_int_list, required=True)
    p_sweep.add_argument("--algos", required=True,
                         help=f"comma list from: {', '.join(SWEEP_ALGORITHMS)}")
    p_sweep.add_argument("--r", type=int)
    p_sweep.add_argument("--c", type=_fraction)
    p_sweep.add_argument("--timings", action="store_true",
                         help="record per-cell runtimes (breaks byte-identical reruns)")
    p_sweep.add_argument("--out", default="-", help="CSV path ('-' = stdout)")
    p_sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EdgeListError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except PreconditionError as e:
        print(f"refused: {e}", file=sys.stderr)
        return 2
    except VerificationError as e:
        print(f"verification failure: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
