"""Command-line entry point: ``solve``, ``bench`` and ``oracle`` subcommands."""
from __future__ import annotations

import argparse
import csv
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from pathlib import Path
from typing import Sequence

from .bounds import BoundKind
from .graph import GraphParseError, read_graph
from .oracle import MAX_ORACLE_VERTICES, max_kplex_bruteforce
from .solver import DEFAULT_CUTOFF, solve

log = logging.getLogger("relaxplex")

EXIT_USAGE = 2


@dataclass(frozen=True)
class RunRecord:
    instance: str
    k: int
    bound: str
    status: str  # optimal | timeout | error
    size: int
    nodes: int
    time_ms: int
    color_wins: int
    partition_wins: int
    percent_color: int  # permille of seesaw rounds won by the colouring extraction

    @classmethod
    def header(cls) -> list[str]:
        return [f.name for f in fields(cls)]

    def row(self) -> list:
        return list(astuple(self))


def permille(color_wins: int, partition_wins: int) -> int:
    total = color_wins + partition_wins
    return 1000 * color_wins // total if total else 0


def run_instance(path: str, k: int, bound: str, cutoff: float, fmt: str = "auto") -> RunRecord:
    name = os.path.basename(path)
    try:
        g = read_graph(path, fmt)
    except (OSError, UnicodeDecodeError, GraphParseError) as exc:
        log.warning("%s: %s", name, exc)
        return RunRecord(name, k, bound, "error", 0, 0, 0, 0, 0, 0)
    rep = solve(g, k, bound, cutoff)
    return RunRecord(
        name, k, bound, rep.status, rep.size, rep.nodes, int(rep.elapsed * 1000),
        rep.color_wins, rep.partition_wins, permille(rep.color_wins, rep.partition_wins),
    )


def append_csv(path: str | os.PathLike, records: Sequence[RunRecord]) -> None:
    """Append rows, writing the header first when the file is new or empty."""
    path = Path(path)
    fresh = not path.exists() or path.stat().st_size == 0
    with open(path, "a", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        if fresh:
            writer.writerow(RunRecord.header())
        for rec in records:
            writer.writerow(rec.row())


def _bound_names(items: Sequence[str]) -> list[str]:
    return [BoundKind.parse(b).value for b in items]


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _str_list(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def cmd_solve(args) -> int:
    if args.k < 1:
        print("error: k must be ≥ 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        g = read_graph(args.path, args.format)
    except (OSError, UnicodeDecodeError, GraphParseError) as exc:
        print(f"error: {args.path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rep = solve(g, args.k, args.bound, args.cutoff)
    rec = RunRecord(
        os.path.basename(args.path), args.k, args.bound, rep.status, rep.size, rep.nodes,
        int(rep.elapsed * 1000), rep.color_wins, rep.partition_wins,
        permille(rep.color_wins, rep.partition_wins),
    )
    print(f"instance  {rec.instance}  (n={g.n}, m={g.m})")
    print(f"k={rec.k} bound={rec.bound}")
    print(f"status    {rec.status}")
    print(f"size      {rec.size}")
    print(f"nodes     {rec.nodes}")
    print(f"time      {rep.elapsed:.3f} s")
    rounds = rec.color_wins + rec.partition_wins
    if rounds:
        print(f"seesaw    coloring {rec.color_wins} / partition {rec.partition_wins}"
              f" ({rec.percent_color / 10:.1f}% coloring)")
    print("kplex     " + " ".join(str(g.label(v)) for v in rep.best))
    if args.csv:
        append_csv(args.csv, [rec])
    return 0


def _instance_files(directory: str) -> list[str]:
    return sorted(str(p) for p in Path(directory).iterdir() if p.is_file())


def cmd_bench(args) -> int:
    if any(k < 1 for k in args.k_list):
        print("error: k must be ≥ 1", file=sys.stderr)
        return EXIT_USAGE
    if not Path(args.dir).is_dir():
        print(f"error: {args.dir} is not a directory", file=sys.stderr)
        return EXIT_USAGE
    files = _instance_files(args.dir)
    if not files:
        log.warning("no instance files in %s", args.dir)
    jobs = [(f, k, b, args.cutoff, args.format) for f in files for k in args.k_list for b in args.bound_list]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(run_instance, *zip(*jobs)))
    else:
        records = [run_instance(*job) for job in jobs]
    # single writer: rows land in job order regardless of completion order
    append_csv(args.csv, records)

    print(f"{'k':>4} {'bound':<10} {'solved':>7} {'timeout':>8} {'error':>6}")
    for k in args.k_list:
        for b in args.bound_list:
            recs = [r for r in records if r.k == k and r.bound == b]
            counts = {s: sum(r.status == s for r in recs) for s in ("optimal", "timeout", "error")}
            print(f"{k:>4} {b:<10} {counts['optimal']:>7} {counts['timeout']:>8} {counts['error']:>6}")
    return 0


def cmd_oracle(args) -> int:
    if args.k < 1:
        print("error: k must be ≥ 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        g = read_graph(args.path, args.format)
    except (OSError, UnicodeDecodeError, GraphParseError) as exc:
        print(f"error: {args.path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if g.n > MAX_ORACLE_VERTICES:
        print(f"error: oracle is limited to {MAX_ORACLE_VERTICES} vertices, instance has {g.n}",
              file=sys.stderr)
        return EXIT_USAGE
    res = max_kplex_bruteforce(g, args.k)
    print(f"size {res.size}")
    print("witness " + " ".join(str(g.label(v)) for v in res.witness))
    return 0


def _bound_arg(text: str) -> str:
    try:
        return BoundKind.parse(text).value
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _bound_list_arg(text: str) -> list[str]:
    try:
        return _bound_names(_str_list(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="relaxplex", description="Exact maximum k-plex solver.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("auto", "dimacs", "edgelist"), default="auto")

    p = sub.add_parser("solve", parents=[fmt], help="solve one instance")
    p.add_argument("path")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--bound", type=_bound_arg, default="relaxpub")
    p.add_argument("--cutoff", type=float, default=DEFAULT_CUTOFF, help="seconds (default 1800)")
    p.add_argument("--csv", help="append a result row to this CSV file")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", parents=[fmt], help="run every instance in a directory")
    p.add_argument("dir")
    p.add_argument("--k-list", type=_int_list, default=[2])
    p.add_argument("--bound-list", type=_bound_list_arg, default=["relaxpub"])
    p.add_argument("--cutoff", type=float, default=DEFAULT_CUTOFF)
    p.add_argument("--csv", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("oracle", parents=[fmt], help="brute-force maximum k-plex (small graphs)")
    p.add_argument("path")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
