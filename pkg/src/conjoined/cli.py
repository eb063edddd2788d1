"""Command-line entry point.

    conjoined laws  [--cases N] [--seed N] [--json]
    conjoined parse --input TEXT|PATH
    conjoined eio   [--input JSON|PATH]      (world JSON; stdin when absent)

Exit codes: 0 success, 1 domain failure (a parse error, a failed law or an
uncaught error in the effect program), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from conjoined import demo
from conjoined.eio import World
from conjoined.laws import reports_to_json, run_full_suite
from conjoined.laws.adapters import all_adapters
from conjoined.outcome import Ok

DEFAULT_CASES = 500
DEFAULT_SEED = 42
SEED_ENV = "LAW_SEED"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class CliConfig:
    command: str
    cases: int = DEFAULT_CASES
    seed: int = DEFAULT_SEED
    json: bool = False
    input: Optional[str] = None


def _count(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {n}")
    return n


def _seed(text: str) -> int:
    n = _count(text)
    if n >= 1 << 64:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 bits: {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="conjoined", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cases", type=_count, default=DEFAULT_CASES)
    common.add_argument("--seed", type=_seed, default=None)
    common.add_argument("--json", action="store_true")
    common.add_argument("--input", default=None, help="literal text or a path to read")
    sub = top.add_subparsers(dest="command", required=True)
    sub.add_parser("laws", parents=[common], help="run every law suite")
    sub.add_parser("parse", parents=[common], help="parse an arithmetic expression")
    sub.add_parser("eio", parents=[common], help="run the echo program on a world")
    return top


def parse_config(argv: Optional[Sequence[str]] = None) -> CliConfig:
    parser = build_parser()
    ns = parser.parse_args(argv)
    seed = ns.seed
    if seed is None:
        env = os.environ.get(SEED_ENV)
        if env is None:
            seed = DEFAULT_SEED
        else:
            try:
                seed = _seed(env)
            except argparse.ArgumentTypeError as exc:
                parser.error(f"{SEED_ENV}: {exc}")
    return CliConfig(ns.command, ns.cases, seed, ns.json, ns.input)


def _read_input(value: str) -> str:
    path = Path(value)
    if value and path.is_file():
        return path.read_text()
    return value


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def cmd_laws(config: CliConfig, out=sys.stdout) -> int:
    reports = run_full_suite(all_adapters(), config.cases, config.seed)
    if config.json:
        print(reports_to_json(reports, seed=config.seed, cases=config.cases), file=out)
    else:
        print(f"seed {config.seed}, {config.cases} cases per law", file=out)
        for r in reports:
            if not r.results:
                continue
            status = "ok" if r.ok else f"{len(r.failures)} FAILED"
            print(f"{r.adapter_name:16} {r.suite:12} {len(r.results):2} laws  {status}", file=out)
            for f in r.failures[:3]:
                print(f"    {f.law_id} seed={f.seed}\n      lhs: {f.lhs_obs}\n      rhs: {f.rhs_obs}", file=out)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def cmd_parse(config: CliConfig, out=sys.stdout) -> int:
    if config.input is None:
        print("conjoined parse: error: --input is required", file=sys.stderr)
        return EXIT_USAGE
    result = demo.parse_expression(_read_input(config.input))
    if isinstance(result, Ok):
        ast, rest = result.value
        print(_dump({"ok": demo.ast_to_json(ast), "rest": rest}), file=out)
        return EXIT_OK
    errors, rest = result.error
    print(_dump({"errors": list(errors.messages), "rest": rest}), file=out)
    return EXIT_FAIL


def cmd_eio(config: CliConfig, out=sys.stdout, stdin=None) -> int:
    raw = _read_input(config.input) if config.input is not None else (stdin or sys.stdin).read()
    try:
        world = World.from_json(raw)
    except (ValueError, TypeError) as exc:
        print(f"conjoined eio: error: malformed world JSON: {exc}", file=sys.stderr)
        return EXIT_USAGE
    result, final = demo.echo_program().run(world)
    if isinstance(result, Ok):
        summary = {"ok": result.value}
    else:
        summary = {"error": result.error.rendered}
    print(_dump({"outcome": summary, "world": final.to_json()}), file=out)
    return EXIT_OK if isinstance(result, Ok) else EXIT_FAIL


COMMANDS = {"laws": cmd_laws, "parse": cmd_parse, "eio": cmd_eio}


def main(argv: Optional[Sequence[str]] = None) -> int:
    config = parse_config(argv)
    return COMMANDS[config.command](config)


if __name__ == "__main__":
    sys.exit(main())
