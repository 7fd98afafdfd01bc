"""Command-line front end: ``narm mine | evaluate | generate``.

Exit codes: 0 success, 1 usage error, 2 data error, 3 runtime error.
"""

from __future__ import annotations

import argparse
import json
import os
import shlex
import sys
import time
from pathlib import Path
from typing import Sequence

from . import __version__
from .dataset import load_csv, load_schema
from .encoding import Scheme
from .errors import ConfigError, FormatError, NarmError
from .fitness import parse_objectives
from .miner import PRESETS, MiningConfig, MoMode, generate_planted, mine, ruleset_from_records
from .optimizers import Algorithm, OptimizerConfig
from .rule import INTERESTINGNESS_VARIANTS, MEASURES, evaluate, format_rule, rule_to_dict

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_RUNTIME = 0, 1, 2, 3

MINE_DEFAULTS = {
    "algorithm": "pso",
    "encoding": "triplet",
    "objectives": "support,confidence",
    "mo": "weighted",
    "weights": None,
}


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _csv_floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _unit(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 <= x <= 1.0:
        raise argparse.ArgumentTypeError(f"{x} is outside [0, 1]")
    return x


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="narm", description="Numerical association rule mining with swarm optimizers.")
    parser.add_argument("--version", action="version", version=f"narm {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def data_flags(p):
        p.add_argument("--input", required=True, help="CSV dataset")
        p.add_argument("--no-header", action="store_true", help="CSV has no header row")
        p.add_argument("--schema", help="column kind override file (name,kind per line)")
        p.add_argument("--interestingness", choices=INTERESTINGNESS_VARIANTS, default="normalized")

    m = sub.add_parser("mine", help="search for rules")
    data_flags(m)
    m.add_argument("--config", help="key=value file whose keys mirror the long flags")
    m.add_argument("--preset", choices=sorted(PRESETS), help="algorithm/encoding/objective pairing")
    m.add_argument("--algorithm", choices=[a.value for a in Algorithm])
    m.add_argument("--encoding", choices=[s.value for s in Scheme])
    m.add_argument("--objectives", help="comma list, groups as 0.5*support+0.5*confidence")
    m.add_argument("--mo", choices=[x.value for x in MoMode])
    m.add_argument("--weights", type=_csv_floats)
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--pop", type=int, default=30)
    m.add_argument("--evals", type=int, default=10000)
    m.add_argument("--min-supp", type=_unit, default=0.0)
    m.add_argument("--min-conf", type=_unit, default=0.0)
    m.add_argument("--capacity", type=int, default=100, help="Pareto archive capacity")
    m.add_argument("--output", required=True)
    m.add_argument("--format", choices=["json", "csv"], default="json")
    m.add_argument("--trace", help="optional CSV file for the per-generation trace")
    m.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    m.set_defaults(func=cmd_mine)

    e = sub.add_parser("evaluate", help="score rules from a JSON file")
    data_flags(e)
    e.add_argument("--rules", required=True, help="JSON rules file (as written by mine)")
    e.set_defaults(func=cmd_evaluate)

    g = sub.add_parser("generate", help="write a planted-rule benchmark dataset")
    g.add_argument("--attrs", type=int, required=True)
    g.add_argument("--rows", type=int, required=True)
    g.add_argument("--freq", type=float, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--contamination", type=float, default=0.1)
    g.add_argument("--output", required=True)
    g.set_defaults(func=cmd_generate)
    return parser


def _config_argv(path: str) -> list[str]:
    argv = []
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc.strerror}") from None
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key in ("config", "command"):
            raise UsageError(f"{path}:{lineno}: key {key!r} not allowed")
        flag = "--" + key.replace("_", "-")
        if key.replace("_", "-") == "no-header":
            if value.lower() in ("1", "true", "yes"):
                argv.append(flag)
        else:
            argv += [flag, value]
    return argv


def parse_args(argv: Sequence[str]) -> argparse.Namespace:
    parser = build_parser()
    argv = list(argv)
    args = parser.parse_args(argv)
    if getattr(args, "config", None):
        # explicit flags override the file: parse file values first
        i = argv.index("mine")
        args = parser.parse_args(argv[: i + 1] + _config_argv(args.config) + argv[i + 1 :])
    return args


def _load(args):
    try:
        schema = load_schema(args.schema) if args.schema else None
        return load_csv(args.input, header=not args.no_header, schema=schema)
    except OSError as exc:
        raise DataError(f"cannot read {exc.filename or args.input}: {exc.strerror}") from None
    except FormatError as exc:
        raise DataError(str(exc)) from None


def _mining_config(args) -> MiningConfig:
    chosen = dict(MINE_DEFAULTS)
    if args.preset:
        p = PRESETS[args.preset]
        chosen.update(algorithm=p["algorithm"], encoding=p["encoding"], objectives=p["objectives"], mo=p["mo"], weights=p["weights"])
    for key in ("algorithm", "encoding", "objectives", "mo", "weights"):
        if getattr(args, key) is not None:
            chosen[key] = getattr(args, key)
    if chosen["mo"] == "weighted" and chosen["weights"] is None:
        raise UsageError("--mo weighted requires --weights")
    try:
        return MiningConfig(
            optimizer=OptimizerConfig(args.pop, args.evals, args.seed, chosen["algorithm"]),
            scheme=chosen["encoding"],
            objectives=parse_objectives(chosen["objectives"]),
            mode=chosen["mo"],
            weights=chosen["weights"],
            min_support=args.min_supp,
            min_confidence=args.min_conf,
            interestingness=args.interestingness,
            archive_capacity=args.capacity,
        )
    except ConfigError as exc:
        raise UsageError(str(exc)) from None


def _provenance_line(args, fingerprint: str) -> str:
    parts = ["narm mine", f"--input {shlex.quote(args.input)}"]
    for key, value in sorted(vars(args).items()):
        if key in ("func", "command", "input", "config") or value is None or value is False:
            continue
        if key == "weights":
            value = ",".join(f"{w:g}" for w in value)
        flag = "--" + key.replace("_", "-")
        parts.append(flag if value is True else f"{flag} {shlex.quote(str(value))}")
    parts.append(f"# dataset sha256={fingerprint}")
    return " ".join(parts)


def cmd_mine(args) -> int:
    config = _mining_config(args)
    if args.threads < 1:
        raise UsageError("--threads must be >= 1")
    dataset = _load(args)
    if dataset.n_attributes < 2:
        raise DataError("dataset needs at least 2 attributes")
    start = time.perf_counter()
    ruleset = mine(dataset, config, threads=args.threads)
    elapsed = time.perf_counter() - start
    ruleset.provenance["input"] = args.input
    if args.format == "json":
        ruleset.to_json(args.output, dataset)
    else:
        ruleset.to_csv(args.output, dataset)
    if args.trace:
        ruleset.trace.to_csv(args.trace)

    print(f"rules: {len(ruleset)}")
    if len(ruleset):
        rule, metrics = ruleset.rules[0]
        print(f"best: {format_rule(rule, dataset, metrics)}")
    print(f"runtime: {elapsed:.2f}s")
    print(f"provenance: {_provenance_line(args, dataset.fingerprint())}")
    return EXIT_OK


def cmd_evaluate(args) -> int:
    dataset = _load(args)
    try:
        payload = json.loads(Path(args.rules).read_text(encoding="utf-8"))
    except OSError as exc:
        raise DataError(f"cannot read {args.rules}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise DataError(f"{args.rules}:{exc.lineno}:{exc.colno}: invalid JSON ({exc.msg})") from None
    records = payload.get("rules") if isinstance(payload, dict) else payload
    if not isinstance(records, list):
        raise DataError(f"{args.rules}: expected a list under 'rules'")
    try:
        rules = ruleset_from_records(records, dataset)
    except FormatError as exc:
        raise DataError(f"{args.rules}: {exc}") from None

    header = ["#", *MEASURES, "rule"]
    print("\t".join(header))
    for i, rule in enumerate(rules):
        metrics = evaluate(rule, dataset, args.interestingness)
        print("\t".join([str(i), *(repr(metrics[m]) for m in MEASURES), format_rule(rule, dataset)]))
    return EXIT_OK


def cmd_generate(args) -> int:
    try:
        dataset, truth = generate_planted(args.attrs, args.rows, args.freq, args.seed, args.contamination)
    except ConfigError as exc:
        raise UsageError(str(exc)) from None
    out = Path(args.output)
    dataset.to_csv(out)
    sidecar = out.with_suffix(".truth.json")
    record = rule_to_dict(truth, dataset, evaluate(truth, dataset))
    payload = {
        "generator": {
            "attrs": args.attrs,
            "rows": args.rows,
            "freq": args.freq,
            "seed": args.seed,
            "contamination": args.contamination,
        },
        "rules": [record],
    }
    sidecar.write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    print(f"wrote {out} ({args.rows} rows) and {sidecar}")
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK
    except (NarmError, OSError, ValueError) as exc:
        print(f"runtime error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
