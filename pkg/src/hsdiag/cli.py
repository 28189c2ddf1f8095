"""Command-line entry point: ``hsdiag diagnose|sequential|gen|bench``."""
from __future__ import annotations

import argparse
import math
import os
import sys
from pathlib import Path

from . import dpifile
from .harness import (BENCH_SWITCH, CSV_FIELDS, GeneratorParams, generate_random_dpi, rows_to_csv,
                      run_bench, summarize, summary_to_csv)
from .hbfhs import parse_criterion
from .model import CostModel, DiagnosisError, Mode
from .search import normalize_ld
from .sequential import run_session, search_function

EXIT_OK, EXIT_ERROR, EXIT_NO_DIAGNOSIS = 0, 1, 2


def _ld(text):
    if text.strip().lower() == "all":
        return None
    try:
        return normalize_ld(int(text))
    except (ValueError, DiagnosisError) as exc:
        raise argparse.ArgumentTypeError(f"ld must be a positive integer or 'all': {exc}")


def _int_list(text):
    return [int(x) for x in text.split(",") if x.strip()]


def _str_list(text):
    return [x.strip() for x in text.split(",") if x.strip()]


def _mode(args, dpi):
    if args.mode:
        return Mode(args.mode)
    return Mode.MAX_PROB if dpi.probabilities is not None else Mode.MIN_CARD


def _criterion(args):
    if args.switch is None:
        return None
    if args.algo != "hbfhs":
        raise DiagnosisError("--switch is only valid with --algo hbfhs")
    return parse_criterion(args.switch)


def _format_cost(model: CostModel, members) -> str:
    if model.mode is Mode.MIN_CARD:
        return f"card={len(members)}"
    return f"pr={math.exp(model.cost(members)):.6g}"


def append_metrics(path, row: dict):
    new = not os.path.exists(path) or os.path.getsize(path) == 0
    with open(path, "a", encoding="utf-8", newline="") as fh:
        fh.write(rows_to_csv([row], header=new))


def cmd_diagnose(args) -> int:
    dpi = dpifile.load(args.file)
    mode = _mode(args, dpi)
    model = CostModel.for_dpi(dpi, mode)
    search = search_function(args.algo, _criterion(args))
    D, metrics = search(dpi, model, args.ld)
    if not D:
        print("no diagnosis: the problem is inconsistent with the background knowledge",
              file=sys.stderr)
        code = EXIT_NO_DIAGNOSIS
    else:
        for d in D:
            print(f"{','.join(dpi.names(d)) or '∅'}\t{_format_cost(model, d)}")
        code = EXIT_OK
    if args.metrics:
        append_metrics(args.metrics, {
            "scenario": Path(args.file).stem, "algorithm": args.algo,
            "ld": "all" if args.ld is None else args.ld, "mode": mode.value,
            "selector": "-", "time_ms": round(metrics.wall_time * 1000.0, 3),
            "peak_nodes": metrics.peak_stored_nodes,
            "conflicts_computed": metrics.conflicts_computed})
    return code


def _ask(name: str) -> bool:
    while True:
        sys.stdout.write(f"Is {name} faulty? [y/n] ")
        sys.stdout.flush()
        line = sys.stdin.readline()
        if not line:
            raise DiagnosisError("no answer on stdin")
        answer = line.strip().lower()
        if answer in ("y", "yes"):
            return True
        if answer in ("n", "no"):
            return False


def cmd_sequential(args) -> int:
    dpi = dpifile.load(args.file)
    if bool(args.actual) == bool(args.interactive):
        raise DiagnosisError("give exactly one of --actual or --interactive")
    actual = _str_list(args.actual) if args.actual else None
    result = run_session(dpi, actual, args.ld, args.selector, args.algo, _mode(args, dpi),
                         oracle=None if actual else _ask, log=print,
                         criterion=_criterion(args))
    print(",".join(result.final_diagnosis) or "∅")
    return EXIT_OK


def cmd_gen(args) -> int:
    params = GeneratorParams(seed=args.seed, size=args.size, conflict_count=args.conflicts,
                             conflict_size=(args.min_size, args.max_size),
                             pr_range=(args.pr_lo, args.pr_hi), mode=args.kind)
    text = dpifile.dumps(generate_random_dpi(params))
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
    return EXIT_OK


def cmd_bench(args) -> int:
    criterion = parse_criterion(args.switch) if args.switch else BENCH_SWITCH
    rows = run_bench(seeds=range(args.seeds), sizes=args.sizes, algos=args.algos,
                     lds=args.lds, modes=args.modes, selectors=args.selectors,
                     sessions=args.sessions, conflict_count=args.conflicts,
                     conflict_size=(args.min_size, args.max_size), gen_mode=args.kind,
                     criterion=criterion)
    text = rows_to_csv(rows)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
    summary = summary_to_csv(summarize(rows))
    if args.summary:
        Path(args.summary).write_text(summary, encoding="utf-8")
    elif args.out not in (None, "-"):
        sys.stdout.write(summary)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with 1; exit code 2 is reserved for "no diagnosis"."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hsdiag", description="Memory-limited model-based diagnosis.")
    sub = p.add_subparsers(dest="command", required=True)

    algos = ["hstree", "rbfhs", "hbfhs"]

    d = sub.add_parser("diagnose", help="compute leading minimal diagnoses")
    d.add_argument("file")
    d.add_argument("--algo", choices=algos, default="rbfhs")
    d.add_argument("--ld", type=_ld, default=None, help="number of diagnoses or 'all'")
    d.add_argument("--mode", choices=[m.value for m in Mode])
    d.add_argument("--switch", help="nodecount:N or memfrac:F[:BUDGET] (hbfhs only)")
    d.add_argument("--metrics", help="append a metrics row to this CSV file")
    d.set_defaults(func=cmd_diagnose)

    s = sub.add_parser("sequential", help="run a probing session")
    s.add_argument("file")
    s.add_argument("--actual", help="comma-separated hidden faulty components")
    s.add_argument("--interactive", action="store_true", help="answer probes on stdin")
    s.add_argument("--selector", choices=["spl", "ent"], default="spl")
    s.add_argument("--algo", choices=algos, default="rbfhs")
    s.add_argument("--ld", type=_ld, default=4)
    s.add_argument("--mode", choices=[m.value for m in Mode])
    s.add_argument("--switch")
    s.set_defaults(func=cmd_sequential)

    g = sub.add_parser("gen", help="write a random problem file")
    g.add_argument("--seed", type=int, default=1)
    g.add_argument("--size", type=int, default=8)
    g.add_argument("--conflicts", type=int, default=3)
    g.add_argument("--min-size", type=int, default=2)
    g.add_argument("--max-size", type=int, default=3)
    g.add_argument("--pr-lo", type=float, default=0.01)
    g.add_argument("--pr-hi", type=float, default=0.3)
    g.add_argument("--kind", choices=["explicit", "cnf"], default="explicit")
    g.add_argument("-o", "--out")
    g.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="benchmark grid over generated problems")
    b.add_argument("--seeds", type=int, default=10)
    b.add_argument("--sizes", type=_int_list, default=[12, 20, 30])
    b.add_argument("--algos", type=_str_list, default=algos)
    b.add_argument("--lds", type=_int_list, default=[2, 6, 10, 20])
    b.add_argument("--modes", type=_str_list, default=["mincard", "maxprob"])
    b.add_argument("--selectors", type=_str_list, default=["spl", "ent"])
    b.add_argument("--sessions", type=int, default=1)
    b.add_argument("--conflicts", type=int, default=6)
    b.add_argument("--min-size", type=int, default=2)
    b.add_argument("--max-size", type=int, default=5)
    b.add_argument("--kind", choices=["explicit", "cnf"], default="explicit")
    b.add_argument("--switch")
    b.add_argument("--out", help=f"CSV file ({', '.join(CSV_FIELDS)})")
    b.add_argument("--summary", help="CSV file for memory and time factors")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DiagnosisError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
