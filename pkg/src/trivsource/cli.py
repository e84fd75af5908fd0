"""Command-line front end.

    trivsource species-table --group "symmetric 3" -p 3
    trivsource idempotents --group C2 -p 2 --format json
    trivsource verify --group "dihedral 8" -p 2

Exit codes: 0 success, 1 a verified property failed, 2 unparsable input,
3 group order above ``--max-order``.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .errors import OrderCapExceeded, ParseError
from .permgroup import DEFAULT_MAX_ORDER, parse_group
from .serialize import (ResultCache, brauer_payload, cache_key, idempotent_payload, linmap_payload,
                        render, species_payload, verify_payload)
from .tsring import Session
from .verify import run_all

EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_CAP = 3


def default_cache_dir() -> Path:
    env = os.environ.get("TRIVSOURCE_CACHE")
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "trivsource"


@dataclass
class SessionConfig:
    group: str
    p: int
    seed: int = 0
    max_order: int = DEFAULT_MAX_ORDER
    cache_dir: Path | None = None
    fmt: str = "text"


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", "-g", required=True,
                        help='named group ("symmetric 4", "C3xC3", "Q8") or generators "(0 1 2), (0 1)"')
    common.add_argument("-p", type=int, required=True, help="the prime")
    common.add_argument("--seed", type=int, default=0, help="seed for the randomized module chopping")
    common.add_argument("--format", dest="fmt", choices=["text", "json", "csv"], default="text")
    common.add_argument("--cache-dir", type=Path, default=None)
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)

    parser = argparse.ArgumentParser(prog="trivsource", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    bt = sub.add_parser("brauer-table", parents=[common], help="Brauer character tables of N_G(P)/P")
    bt.add_argument("--subgroup", type=int, default=0,
                    help="index of the p-subgroup class P (0 is the trivial subgroup)")
    sub.add_parser("species-table", parents=[common], help="species table and its inverse")
    sub.add_parser("idempotents", parents=[common], help="primitive idempotents in the canonical basis")
    sub.add_parser("linmap", parents=[common], help="matrix of the linearization map")
    sub.add_parser("verify", parents=[common], help="run every property check")
    return parser


def config_from_args(args: argparse.Namespace) -> SessionConfig:
    if not _is_prime(args.p):
        raise ParseError(f"p = {args.p} is not prime")
    cache_dir = None if args.no_cache else (args.cache_dir or default_cache_dir())
    return SessionConfig(args.group, args.p, args.seed, args.max_order, cache_dir, args.fmt)


def compute(config: SessionConfig, command: str, subgroup: int = 0) -> dict:
    G = parse_group(config.group, max_order=config.max_order)
    S = Session(G, config.p, seed=config.seed)
    if command == "verify":
        return verify_payload(S, run_all(S))
    cache = ResultCache(config.cache_dir) if config.cache_dir else None
    key = cache_key(G, config.p, config.seed, command, str(subgroup) if command == "brauer-table" else "")
    if cache is not None:
        hit = cache.load(key)
        if hit is not None:
            return hit
    if command == "brauer-table":
        if not 0 <= subgroup < len(S.psubs):
            raise ParseError(f"--subgroup must be in 0..{len(S.psubs) - 1}")
        payload = brauer_payload(S, S.psubs[subgroup])
    elif command == "species-table":
        payload = species_payload(S)
    elif command == "idempotents":
        payload = idempotent_payload(S)
    elif command == "linmap":
        payload = linmap_payload(S)
    else:
        raise ValueError(command)
    if cache is not None:
        cache.store(key, payload)
    return payload


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
        payload = compute(config, args.command, getattr(args, "subgroup", 0))
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OrderCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    sys.stdout.write(render(payload, config.fmt))
    if args.command == "verify" and not payload["passed"]:
        return EXIT_VERIFY
    return 0


if __name__ == "__main__":
    sys.exit(main())
