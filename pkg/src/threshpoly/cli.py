"""Command-line front end: charpoly, det, eval, and bench subcommands."""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
import time
from dataclasses import dataclass

from .charpoly import (
    WeightedThresholdMatrix,
    charpoly_auto,
    charpoly_balanced,
    charpoly_eval,
    charpoly_quadratic,
    det_weighted,
)
from .graph import ThresholdGraph, to_dense_adjacency
from .oracle import charpoly_interpolation, dense_charpoly, oracle_cap
from .polyarith import format_poly, max_coeff_bits, to_decimal_strings

ALGORITHMS = ("auto", "quadratic", "balanced", "oracle", "interp")


@dataclass
class BenchRecord:
    n: int
    algo: str
    wall_time: float
    coeff_maxbits: int


def _compute(g: ThresholdGraph, algo: str, crossover: int | None = None):
    if algo == "auto":
        return charpoly_auto(g, crossover)
    if algo == "quadratic":
        return charpoly_quadratic(g)
    if algo == "balanced":
        return charpoly_balanced(g)
    if algo == "interp":
        return charpoly_interpolation(g)
    if algo == "oracle":
        cap = oracle_cap()
        if g.n > cap:
            raise ValueError(
                f"oracle algorithm is capped at n={cap} "
                f"(THRESH_ORACLE_CAP overrides); got n={g.n}"
            )
        return dense_charpoly(to_dense_adjacency(g))
    raise ValueError(f"unknown algorithm {algo!r} (choose from {', '.join(ALGORITHMS)})")


def cmd_charpoly(
    bits: str, algo: str = "auto", fmt: str = "text", crossover: int | None = None
) -> str:
    """Render the characteristic polynomial of the graph given by `bits`."""
    g = ThresholdGraph.from_string(bits)
    p = _compute(g, algo, crossover)
    if fmt == "json":
        return json.dumps(to_decimal_strings(p), separators=(",", ":"))
    if fmt == "text":
        return format_poly(p)
    raise ValueError(f"unknown format {fmt!r} (choose text or json)")


def _parse_int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None


def cmd_det(b: str, d: str) -> str:
    """Determinant of the weighted matrix with off-diagonal b and diagonal d."""
    bv = _parse_int_list(b)
    dv = _parse_int_list(d)
    if not dv:
        raise ValueError("at least one diagonal value is required")
    if len(bv) != len(dv) - 1:
        raise ValueError(
            f"need exactly one more diagonal value than b-values: "
            f"got {len(bv)} b-values and {len(dv)} diagonal values"
        )
    return str(det_weighted(WeightedThresholdMatrix(len(dv), bv, dv)))


def cmd_eval(bits: str, at: int) -> str:
    """Value of the characteristic polynomial at an integer point."""
    g = ThresholdGraph.from_string(bits)
    return str(charpoly_eval(g, at))


def random_creation_bits(n: int, seed: int) -> str:
    """Deterministic benchmark instance: n-1 uniform bits.

    Bits come from Python's Mersenne Twister seeded with
    seed * 1_000_003 + n (one bit per rng.random() draw), so every
    (seed, n) pair names the same creation sequence on every machine.
    """
    rng = random.Random(seed * 1_000_003 + n)
    return "".join("1" if rng.random() < 0.5 else "0" for _ in range(n - 1))


def cmd_bench(
    max_n: int,
    algos: tuple[str, ...] = ("quadratic", "balanced"),
    seed: int = 0,
    out: str = "bench.csv",
    crossover: int | None = None,
) -> list[BenchRecord]:
    """Time each algorithm on seeded random instances, n doubling from 64.

    Writes CSV rows `n,algo,wall_time,coeff_maxbits` to `out` ('-' for
    stdout) and returns the records.
    """
    if max_n < 2:
        raise ValueError(f"max_n must be at least 2, got {max_n}")
    for algo in algos:
        if algo not in ALGORITHMS:
            raise ValueError(
                f"unknown algorithm {algo!r} (choose from {', '.join(ALGORITHMS)})"
            )
    sizes = []
    n = 64
    while n <= max_n:
        sizes.append(n)
        n *= 2
    records = []
    for n in sizes:
        g = ThresholdGraph.from_string(random_creation_bits(n, seed))
        for algo in algos:
            start = time.perf_counter()
            p = _compute(g, algo, crossover)
            elapsed = time.perf_counter() - start
            records.append(BenchRecord(n, algo, elapsed, max_coeff_bits(p)))
    if out == "-":
        _write_csv(sys.stdout, records)
    else:
        with open(out, "w", newline="") as handle:
            _write_csv(handle, records)
    return records


def _write_csv(handle, records: list[BenchRecord]) -> None:
    writer = csv.writer(handle)
    writer.writerow(["n", "algo", "wall_time", "coeff_maxbits"])
    for rec in records:
        writer.writerow([rec.n, rec.algo, f"{rec.wall_time:.6f}", rec.coeff_maxbits])


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="threshpoly",
        description="Exact determinants and characteristic polynomials of threshold graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_char = sub.add_parser(
        "charpoly", help="characteristic polynomial of a creation sequence"
    )
    p_char.add_argument("--bits", required=True, help="creation sequence over {0,1}; empty for a single vertex")
    p_char.add_argument("--algo", choices=ALGORITHMS, default="auto")
    p_char.add_argument("--format", choices=("text", "json"), default="text")
    p_char.add_argument(
        "--crossover",
        type=int,
        default=None,
        help="auto algorithm switch size (default 512; THRESH_AUTO_CROSSOVER overrides)",
    )

    p_det = sub.add_parser("det", help="determinant of a weighted threshold graph matrix")
    p_det.add_argument("--b", default="", help="comma-separated off-diagonal values (one fewer than --d)")
    p_det.add_argument("--d", required=True, help="comma-separated diagonal values")

    p_eval = sub.add_parser("eval", help="characteristic polynomial value at a point")
    p_eval.add_argument("--bits", required=True)
    p_eval.add_argument("--at", type=int, required=True)

    p_bench = sub.add_parser("bench", help="time the algorithms on seeded random instances")
    p_bench.add_argument("--max-n", type=int, required=True)
    p_bench.add_argument(
        "--algos",
        default="quadratic,balanced",
        help="comma-separated subset of: " + ", ".join(ALGORITHMS),
    )
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--out", required=True, help="CSV output path, or - for stdout")
    p_bench.add_argument("--crossover", type=int, default=None)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "charpoly":
            print(cmd_charpoly(args.bits, args.algo, args.format, args.crossover))
        elif args.command == "det":
            print(cmd_det(args.b, args.d))
        elif args.command == "eval":
            print(cmd_eval(args.bits, args.at))
        elif args.command == "bench":
            algos = tuple(a.strip() for a in args.algos.split(",") if a.strip())
            cmd_bench(args.max_n, algos, args.seed, args.out, args.crossover)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
