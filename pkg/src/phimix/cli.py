"""Command-line front door.

One experiment per invocation: parse flags, load and validate the config,
run the experiment, write the CSV report, and exit with 0 (all checks
passed), 1 (a threshold check failed; CSV still written), or 2 (config
error; nothing written).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import ConfigError, load_config, validate_config
from .experiments import run_experiment
from .reporting import write_csv

__all__ = ["main"]

CONFIG_DIR = Path(__file__).parent / "configs"

_SUBCOMMAND_KIND = {
    "pgf": "pgf",
    "lemma22": "lemma22",
    "mid": "mid-check",
    "subordinate": "subordinate",
    "classl": "classl",
    "ns-check": "ns-check",
}


def _add_common(parser, config_required=True):
    parser.add_argument("--config", required=config_required,
                        help="experiment config (TOML)")
    parser.add_argument("--seed", type=int, help="override the config seed")
    parser.add_argument("--samples", type=int,
                        help="override the config sample count")
    parser.add_argument("--workers", type=int, default=1,
                        help="thread count (never changes results)")
    parser.add_argument("--out", help="CSV output path")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="phimix",
        description="Construct, sample, and numerically verify power"
                    " mixtures of infinitely divisible and max-infinitely"
                    " divisible laws.")
    parser.add_argument("--list", action="store_true",
                        help="list the shipped example configs and exit")
    commands = parser.add_subparsers(dest="command")

    for name in ("pgf", "lemma22", "subordinate", "ns-check"):
        _add_common(commands.add_parser(name))

    converge = commands.add_parser("converge")
    converge.add_argument("flavor", choices=("sum", "max"))
    _add_common(converge)

    mid = commands.add_parser("mid")
    group = mid.add_mutually_exclusive_group(required=True)
    group.add_argument("--check", action="store_true",
                       help="run the MID validity checks")
    group.add_argument("--sample", action="store_true",
                       help="run the extremal-at-random-time identity")
    _add_common(mid)

    classl = commands.add_parser("classl")
    _add_common(classl, config_required=False)
    classl.add_argument("--subject",
                        choices=("gamma", "exponential", "degenerate",
                                 "linnik", "gaussian", "bernoulli-fixture",
                                 "uniform-fixture"),
                        help="single subject to screen (instead of --config)")
    classl.add_argument("--alpha", type=float, default=1.0)
    classl.add_argument("--beta", type=float, default=0.0)
    classl.add_argument("--nu", type=float, default=1.0)
    classl.add_argument("--lam", type=float, default=1.0,
                        help="stable scale of a linnik/gaussian subject")
    classl.add_argument("--shape", type=float, default=1.0)
    classl.add_argument("--scale", type=float, default=1.0)
    classl.add_argument("--point", type=float, default=1.0)

    subordinate = commands.choices["subordinate"]
    subordinate.add_argument("--paths", type=int, dest="samples",
                             help="alias for --samples")
    return parser


def _list_configs():
    entries = sorted(CONFIG_DIR.glob("*.toml"))
    if not entries:
        print("no example configs shipped")
        return
    for path in entries:
        first = ""
        with open(path, "r", encoding="utf-8") as handle:
            for line in handle:
                if line.startswith("#"):
                    first = line.lstrip("# ").rstrip()
                break
        print(f"{path.name:36s} {first}")
        print(f"    {path}")


def _classl_flag_config(args):
    subject = {"kind": args.subject, "alpha": args.alpha, "beta": args.beta,
               "nu": args.nu, "lambda": args.lam, "shape": args.shape,
               "scale": args.scale, "point": args.point}
    if args.subject in ("bernoulli-fixture", "uniform-fixture"):
        subject["expect"] = "fail"
    data = {"kind": "classl", "subjects": [subject]}
    text = (f"# synthesized from flags: --subject {args.subject}"
            f" --alpha {args.alpha:g} --nu {args.nu:g}")
    return validate_config(data), text


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.list:
        _list_configs()
        return 0
    if args.command is None:
        parser.print_help()
        return 2

    mode = None
    if args.command == "mid":
        mode = "sample" if args.sample else "check"
    expected_kind = _SUBCOMMAND_KIND.get(args.command)
    if args.command == "converge":
        expected_kind = f"converge-{args.flavor}"

    try:
        if args.command == "classl" and args.config is None:
            if args.subject is None:
                raise ConfigError(
                    "classl needs --config or --subject")
            cfg, text = _classl_flag_config(args)
        elif args.config is None:
            raise ConfigError(f"{args.command} needs --config")
        else:
            cfg, text = load_config(args.config)
        if cfg["kind"] != expected_kind:
            raise ConfigError(
                f"config kind {cfg['kind']!r} does not match subcommand"
                f" {expected_kind!r}")
        report = run_experiment(cfg, text, mode=mode, seed=args.seed,
                                samples=args.samples,
                                workers=args.workers or 1)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2

    out = args.out or cfg.get("out") or "report.csv"
    write_csv(report, out)
    for check in report.checks:
        verdict = "pass" if check.passed else "FAIL"
        detail = f" ({check.detail})" if check.detail else ""
        print(f"{check.name}: {verdict}{detail}")
    print(f"report written to {out}")
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
