"""Seeded experiment sweeps over (n, p, seed, algorithm) grids.

Rows are produced in grid order (n outer, then p, seed, algorithm) no
matter how many workers run the cells, and every witness is re-checked
against its own certificate (fullness at the density the finder used,
or relative half-fullness for the half-full algorithm) before a row is
written; any failure aborts the sweep naming the offending cell. With
timings disabled (the default) the emitted CSV is byte-identical
across reruns of the same config.

The n column records the generated graph's order; for the gnp family
the p column echoes the grid value, for other families it records the
realized exact density and the p grid must be a single placeholder
entry.
"""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .finders import (
    EXACT_CAP_DEFAULT,
    full_two_thirds,
    greedy_full,
    half_full,
    is_full,
    is_relatively_full,
    oracle_largest_full,
    small_p_full,
)
from .generate import GenSpec, generate
from .graph import PreconditionError, VerificationError, density

CSV_COLUMNS = ("family", "n", "p", "seed", "algorithm", "witness_size",
               "bound_value", "runtime_ms", "passed_verification")
SWEEP_ALGORITHMS = ("greedy", "two-thirds", "small-p", "half-full", "oracle")


@dataclass(frozen=True)
class SweepConfig:
    n_grid: tuple[int, ...]
    p_grid: tuple[Fraction, ...]
    seeds: tuple[int, ...]
    algorithms: tuple[str, ...]
    family: str = "gnp"
    r: Optional[int] = None
    c: Optional[Fraction] = None
    timings: bool = False
    threads: int = 1
    exact_cap: int = EXACT_CAP_DEFAULT


@dataclass(frozen=True)
class ExperimentRow:
    family: str
    n: int
    p: Fraction
    seed: int
    algorithm: str
    witness_size: int
    bound_value: str
    runtime_ms: str
    passed_verification: bool


def frac_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _validate(config: SweepConfig) -> None:
    if not config.n_grid or not config.p_grid or not config.seeds \
            or not config.algorithms:
        raise PreconditionError("sweep grids must be nonempty")
    for algo in config.algorithms:
        if algo not in SWEEP_ALGORITHMS:
            raise PreconditionError(
                f"unknown algorithm {algo!r}; expected one of "
                f"{', '.join(SWEEP_ALGORITHMS)}")
    if config.family != "gnp" and len(config.p_grid) != 1:
        raise PreconditionError(
            f"family {config.family!r} ignores p; give a single p entry")


def _run_cell(task) -> ExperimentRow:
    family, n, p, seed, algo, r, c, timings, exact_cap = task
    cell = f"family={family} n={n} p={frac_str(p)} seed={seed} algorithm={algo}"
    try:
        if family == "gnp":
            g, _ = generate(GenSpec(family, n, p=p, seed=seed))
        else:
            g, _ = generate(GenSpec(family, n, r=r, c=c, seed=seed))
        t0 = time.perf_counter()
        if algo == "greedy":
            res = greedy_full(g)
            size, bound = res.size, Fraction(1)
            ok, _v = is_full(g, res.p_used, res.vertices)
        elif algo == "two-thirds":
            res = full_two_thirds(g)
            size, bound = res.size, res.guarantee
            ok, _v = is_full(g, res.p_used, res.vertices)
        elif algo == "small-p":
            res = small_p_full(g)
            size, bound = res.size, res.guarantee
            ok, _v = is_full(g, res.p_used, res.vertices)
        elif algo == "half-full":
            rel = half_full(g)
            size, bound = rel.size, Fraction(g.n // 2)
            ok, _v = is_relatively_full(g, Fraction(1, 2), rel.vertices)
        else:
            res = oracle_largest_full(g, density(g), cap=exact_cap)
            size, bound = res.size, Fraction(res.size)
            ok, _v = is_full(g, res.p_used, res.vertices)
        elapsed_ms = (time.perf_counter() - t0) * 1000.0
        if not ok:
            raise VerificationError("witness failed re-verification")
        p_col = p if family == "gnp" else density(g)
        return ExperimentRow(family, g.n, p_col, seed, algo, size,
                             frac_str(bound),
                             f"{elapsed_ms:.1f}" if timings else "", True)
    except PreconditionError as e:
        raise PreconditionError(f"sweep cell [{cell}]: {e}") from e
    except VerificationError as e:
        raise VerificationError(f"sweep cell [{cell}]: {e}") from e


def run_sweep(config: SweepConfig) -> tuple[ExperimentRow, ...]:
    """Run every (n, p, seed, algorithm) cell and return rows in grid
    order. threads > 1 distributes cells over a process pool; results
    are still collected in submission order."""
    _validate(config)
    tasks = [(config.family, n, p, seed, algo, config.r, config.c,
              config.timings, config.exact_cap)
             for n in config.n_grid
             for p in config.p_grid
             for seed in config.seeds
             for algo in config.algorithms]
    if config.threads > 1:
        with ProcessPoolExecutor(max_workers=config.threads) as pool:
            rows = tuple(pool.map(_run_cell, tasks))
    else:
        rows = tuple(_run_cell(t) for t in tasks)
    return rows


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([
            row.family, row.n, frac_str(row.p), row.seed, row.algorithm,
            row.witness_size, row.bound_value, row.runtime_ms,
            "true" if row.passed_verification else "false",
        ])
    return buf.getvalue()


def write_csv(rows, path: str) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(rows_to_csv(rows))


def read_csv(source: Union[str, io.TextIOBase]) -> tuple[ExperimentRow, ...]:
    """Parse a sweep CSV (path or file object) back into rows."""
    if isinstance(source, str):
        with open(source, "r", encoding="ascii") as fh:
            return read_csv(fh)
    reader = csv.reader(source)
    header = next(reader, None)
    if header != list(CSV_COLUMNS):
        raise PreconditionError(f"unexpected CSV header {header!r}")
    rows = []
    for rec in reader:
        family, n, p, seed, algo, size, bound, ms, passed = rec
        rows.append(ExperimentRow(family, int(n), Fraction(p), int(seed),
                                  algo, int(size), bound, ms,
                                  passed == "true"))
    return tuple(rows)


def summarize(rows) -> str:
    """Per (family, algorithm) row counts and witness-size ranges; the
    same text whether given rows or a CSV previously written by
    write_csv and parsed with read_csv."""
    groups: dict[tuple[str, str], list[ExperimentRow]] = {}
    for row in rows:
        groups.setdefault((row.family, row.algorithm), []).append(row)
    lines = []
    for (family, algo) in sorted(groups):
        rs = groups[(family, algo)]
        sizes = [r.witness_size for r in rs]
        verified = sum(1 for r in rs if r.passed_verification)
        lines.append(
            f"{family}/{algo}: rows={len(rs)} verified={verified} "
            f"size min={min(sizes)} mean={sum(sizes) / len(sizes):.2f} "
            f"max={max(sizes)}")
    return "\n".join(lines)
