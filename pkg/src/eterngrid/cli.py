"""Command-line entry point.

Subcommands: simulate, verify, oracle, bounds, replay, serve.
Exit codes: 0 success, 2 usage, 3 referee violation, 4 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import bounds as bounds_mod
from . import composite, oracle
from .grid import DomainError, GridDims, parse_dims
from .referee import make_attacker, replay_jsonl, simulate

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VIOLATION = 3
EXIT_RESOURCE = 4


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eterngrid")
    sub = p.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="run an attacker against a strategy")
    sim.add_argument("--dims", required=True, help="grid as NxM, e.g. 9x9")
    sim.add_argument("--strategy", default="auto", choices=["auto", "border", "composite"])
    sim.add_argument("--attacker", default="random", choices=["random", "greedy", "scripted"])
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--steps", type=int, default=1000)
    sim.add_argument("--script", help="JSON file with [[x,y],...] for --attacker scripted")
    sim.add_argument("--out", help="write the transcript (JSON Lines) here")

    ver = sub.add_parser("verify", help="run the invariant battery")
    ver.add_argument("--quick", action="store_true", help="shorter simulation runs")

    orc = sub.add_parser("oracle", help="exact eternal domination number")
    orc.add_argument("--graph", required=True, help="path:N | cycle:N | strong:NxM | edge-list file")
    orc.add_argument("--k-max", type=int, default=None)

    bnd = sub.add_parser("bounds", help="bound evaluation and comparison")
    bnd.add_argument("--threshold", action="store_true", help="print the asymptotic crossover n")
    bnd.add_argument("--n-range", help="A:B inclusive")
    bnd.add_argument("--m-range", help="A:B inclusive")
    bnd.add_argument("--n-step", type=int, default=1)
    bnd.add_argument("--m-step", type=int, default=1)
    bnd.add_argument("--ceiling-mode", default="exact", choices=["exact", "real"])
    bnd.add_argument("--out", help="write CSV here (default stdout)")

    rep = sub.add_parser("replay", help="re-validate a stored transcript")
    rep.add_argument("transcript", help="JSON Lines transcript file")

    srv = sub.add_parser("serve", help="HTTP session backend for the UI")
    srv.add_argument("--port", type=int, default=8080)
    srv.add_argument("--host", default="127.0.0.1")
    return p


def _pick_strategy(kind: str, dims: GridDims):
    if kind == "auto":
        kind = "border" if (dims.n % 7 == 2 and dims.m % 7 == 2) else "composite"
    return composite.make_strategy(kind, dims)


def _cmd_simulate(args) -> int:
    dims = parse_dims(args.dims)
    strategy = _pick_strategy(args.strategy, dims)
    attacks = None
    if args.attacker == "scripted":
        if not args.script:
            print("--attacker scripted needs --script FILE", file=sys.stderr)
            return EXIT_USAGE
        with open(args.script) as fh:
            attacks = json.load(fh)
    attacker = make_attacker(args.attacker, seed=args.seed, attacks=attacks)
    transcript = simulate(dims, strategy, attacker, args.steps, args.seed)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(transcript.to_jsonl())
    if transcript.violation_count:
        step = transcript.steps[-1]
        print(
            f"violation at step {step.index}: "
            f"{[v.code for v in step.verdict.violations]}",
            file=sys.stderr,
        )
        return EXIT_VIOLATION
    print(
        f"{dims.n}x{dims.m} {strategy.strategy_id} vs {attacker.describe()}: "
        f"{len(transcript.steps)} steps, 0 violations, "
        f"{len(strategy.reset())} guards"
    )
    return EXIT_OK


def _cmd_verify(args) -> int:
    from .verify import run_battery

    results = run_battery(quick=args.quick)
    width = max(len(name) for name, _, _ in results)
    ok = True
    for name, passed, detail in results:
        status = "PASS" if passed else "FAIL"
        print(f"{name:<{width}}  {status}  {detail}")
        ok &= passed
    return EXIT_OK if ok else 1


def _cmd_oracle(args) -> int:
    try:
        g = oracle.parse_graph(args.graph)
        value = oracle.eternal_domination_number(g, args.k_max)
    except oracle.ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    if value is None:
        print("exceeds k_max")
    else:
        print(value)
    return EXIT_OK


def _parse_range(text: str):
    lo, hi = text.split(":")
    return int(lo), int(hi)


def _cmd_bounds(args) -> int:
    if args.threshold:
        print(bounds_mod.asymptotic_threshold())
        return EXIT_OK
    if not args.n_range or not args.m_range:
        print("bounds needs --threshold or both --n-range and --m-range", file=sys.stderr)
        return EXIT_USAGE
    mode = bounds_mod.CeilingMode(args.ceiling_mode)
    cells = bounds_mod.scan_region(
        _parse_range(args.n_range),
        _parse_range(args.m_range),
        mode,
        n_step=args.n_step,
        m_step=args.m_step,
    )
    text = bounds_mod.cells_to_csv(cells)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_replay(args) -> int:
    with open(args.transcript) as fh:
        checked, violations = replay_jsonl(fh)
    print(f"replayed {checked} steps, {violations} violations")
    return EXIT_OK if violations == 0 else EXIT_VIOLATION


def _cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "simulate": _cmd_simulate,
        "verify": _cmd_verify,
        "oracle": _cmd_oracle,
        "bounds": _cmd_bounds,
        "replay": _cmd_replay,
        "serve": _cmd_serve,
    }
    try:
        return handlers[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
