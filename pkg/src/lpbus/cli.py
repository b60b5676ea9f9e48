"""Command-line interface: ``lpbus {construct,encode,decode,simulate,verify,table}``.

Exit status is 0 on success, 1 on invalid input and 2 when an oracle search
runs out of budget.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings
from pathlib import Path
from typing import Sequence

from lpbus import bus_sim, codec, cw_codes, lp_codes, oracle
from lpbus.errors import LpBusError
from lpbus.hamming import cross_diameter, diameter, format_code
from lpbus.trace import format_trace, read_trace

EXIT_OK, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2

TABLE_MAX_ORDER = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors are validation errors, not budget overruns
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _dump_json(data: dict, target: str | None) -> None:
    text = json.dumps(data, indent=2) + "\n"
    if target in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(target).write_text(text)


def _emit(text: str, target: str | None) -> None:
    if target in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(target).write_text(text)


def cmd_construct(args: argparse.Namespace) -> int:
    n, delta = args.n, args.delta
    if delta > n:
        warnings.warn(f"delta={delta} exceeds n={n}; using delta={n}")
        delta = n
    if args.weight is None:
        family = (
            lp_codes.stateful_optimal(n, delta, args.x)
            if args.states == 2
            else lp_codes.LpCodeFamily(lp_codes.LpParams(n, delta), (lp_codes.kleitman_code(n, delta, args.x),))
        )
    elif args.states == 2:
        core = tuple(args.core) if args.core else None
        family = cw_codes.cw_stateful_code(n, args.weight, delta, core)
    else:
        code = cw_codes.cw_stateless_code(n, args.weight, delta)
        family = lp_codes.LpCodeFamily(lp_codes.LpParams(n, delta), (code,))

    codes = family.subcodes
    spread = diameter(codes[0]) if len(codes) == 1 else cross_diameter(codes[0], codes[1])
    sidecar = {
        "n": n,
        "delta": delta,
        "states": args.states,
        "weight": args.weight,
        "size": family.min_size,
        "diameter_or_crossdiameter": spread,
        # only uncertified constant-weight stars lack an optimality proof
        "optimal": family.certified,
        "certified": family.certified,
    }
    header = [f"n={n} delta={delta} states={args.states}" + (f" weight={args.weight}" if args.weight is not None else "")]
    if args.output:
        base = Path(args.output)
        if len(codes) == 1:
            _emit(format_code(codes[0], header), f"{base}.code")
        else:
            for i, code in enumerate(codes):
                _emit(format_code(code, header + [f"state {i}"]), f"{base}.{i}.code")
        _dump_json(sidecar, f"{base}.json")
    else:
        for i, code in enumerate(codes):
            extra = [f"state {i}"] if len(codes) > 1 else []
            sys.stdout.write(format_code(code, header + extra))
        sys.stderr.write(json.dumps(sidecar) + "\n")
    return EXIT_OK


def _codec_config(args: argparse.Namespace) -> codec.CodecConfig:
    return codec.CodecConfig.create(args.k, args.delta, args.n, args.x0)


def cmd_encode(args: argparse.Namespace) -> int:
    cfg = _codec_config(args)
    trace = read_trace(args.input, cfg.k)
    _emit(format_trace(codec.encode_trace(cfg, trace)), args.output)
    return EXIT_OK


def cmd_decode(args: argparse.Namespace) -> int:
    cfg = _codec_config(args)
    trace = read_trace(args.input, cfg.n)
    _emit(format_trace(codec.decode_trace(cfg, trace)), args.output)
    return EXIT_OK


def cmd_simulate(args: argparse.Namespace) -> int:
    params = bus_sim.BusParams(args.capacitance, args.vdd, args.freq)
    width = args.k if args.encode else args.width
    if args.input:
        trace = read_trace(args.input, width)
    else:
        if width is None:
            raise LpBusError("--synth needs --width (or --encode --k)")
        trace = bus_sim.synth_trace(args.synth, width, args.length, args.seed)
    if args.encode:
        report = bus_sim.compare(trace, _codec_config(args), params).to_dict()
    else:
        report = bus_sim.energy(trace, params).to_dict()
    report["source"] = trace.source
    _dump_json(report, args.json)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    budget = oracle.SearchBudget(args.max_order, args.time_limit, args.node_limit)
    n, delta = args.n, args.delta
    record: dict = {"n": n, "delta": delta}
    if args.weight is not None:
        if delta % 2 and args.t is None:
            raise LpBusError(f"delta={delta} is odd; constant-weight diameters are even")
        t = args.t if args.t is not None else args.weight - delta // 2
        params = cw_codes.IntersectParams(n, args.weight, t)
        constructed = cw_codes.frankl_size(params, cw_codes.max_intersecting_index(params))
        result = oracle.max_t_intersecting(n, args.weight, t, budget)
        record.update(weight=args.weight, t=t)
        found, exact = result.size, result.exact
    elif args.states == 2:
        constructed = lp_codes.kleitman_size(n, delta)
        pair = oracle.max_delta_pair(n, delta, budget)
        found, exact = pair.min_size, pair.exact
        record["states"] = 2
    else:
        constructed = lp_codes.kleitman_size(n, delta)
        result = oracle.max_diameter_code(n, delta, budget)
        found, exact = result.size, result.exact
    record.update(constructed=constructed, oracle=found, match=exact and found == constructed,
                  status="exact" if exact else "budget_exceeded")
    _dump_json(record, None)
    return EXIT_OK if exact else EXIT_BUDGET


def cmd_table(args: argparse.Namespace) -> int:
    if not 0 <= args.max_n <= TABLE_MAX_ORDER:
        raise LpBusError(f"--max-n must lie in [0, {TABLE_MAX_ORDER}]")
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if args.weight is None:
        max_delta = args.max_n if args.max_delta is None else args.max_delta
        writer.writerow(["n"] + [f"delta={d}" for d in range(max_delta + 1)])
        for n in range(args.max_n + 1):
            writer.writerow([n] + [lp_codes.kleitman_size(n, d) if d <= n else "" for d in range(max_delta + 1)])
    else:
        w = args.weight
        ts = [args.t] if args.t is not None else list(range(1, w + 1))
        writer.writerow(["n"] + [f"t={t}" for t in ts])
        for n in range(w, args.max_n + 1):
            row: list = [n]
            for t in ts:
                if 1 <= t <= w:
                    params = cw_codes.IntersectParams(n, w, t)
                    row.append(cw_codes.frankl_size(params, cw_codes.max_intersecting_index(params)))
                else:
                    row.append("")
            writer.writerow(row)
    sys.stdout.write(out.getvalue())
    return EXIT_OK


def _add_codec_flags(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--k", type=int, required=required, help="source bits")
    p.add_argument("--delta", type=int, required=required, help="max wires toggling per cycle")
    p.add_argument("--n", type=int, default=None, help="bus wires (default: minimal width)")
    p.add_argument("--x0", type=int, default=1, help="fixed wire for odd delta")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lpbus", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="build an optimal LP code")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--states", type=int, choices=(1, 2), default=1)
    p.add_argument("--weight", type=int, default=None, help="constant weight")
    p.add_argument("--x", type=int, default=1, help="fixed point for odd delta")
    p.add_argument("--core", type=int, nargs="+", help="fixed t-subset for --weight --states 2")
    p.add_argument("--output", default=None, help="file prefix; default prints to stdout")
    p.set_defaults(func=cmd_construct)

    for name, func in (("encode", cmd_encode), ("decode", cmd_decode)):
        p = sub.add_parser(name, help=f"{name} a trace file")
        _add_codec_flags(p)
        p.add_argument("--input", required=True)
        p.add_argument("--output", default="-")
        p.set_defaults(func=func)

    p = sub.add_parser("simulate", help="switching energy of a trace")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input")
    src.add_argument("--synth", choices=bus_sim.TRACE_KINDS)
    p.add_argument("--width", type=int, default=None)
    p.add_argument("--length", type=int, default=1000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--encode", action="store_true", help="also simulate the LP-encoded trace")
    _add_codec_flags(p, required=False)
    p.add_argument("--capacitance", type=float, required=True, help="farads per wire")
    p.add_argument("--vdd", type=float, required=True, help="supply volts")
    p.add_argument("--freq", type=float, default=None, help="bus frequency in hertz")
    p.add_argument("--json", default="-", help="report path (default stdout)")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="closed form vs brute-force oracle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--states", type=int, choices=(1, 2), default=1)
    p.add_argument("--weight", type=int, default=None)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--time-limit", type=float, default=oracle.DEFAULT_TIME_LIMIT)
    p.add_argument("--node-limit", type=int, default=oracle.DEFAULT_NODE_LIMIT)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="CSV of optimal code sizes")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--max-delta", type=int, default=None)
    p.add_argument("--weight", type=int, default=None)
    p.add_argument("--t", type=int, default=None)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "simulate" and args.encode and (args.k is None or args.delta is None):
        sys.stderr.write("lpbus: error: --encode needs --k and --delta\n")
        return EXIT_INVALID
    try:
        return args.func(args)
    except (LpBusError, OSError) as exc:
        sys.stderr.write(f"lpbus: error: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
