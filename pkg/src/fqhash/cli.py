"""Command-line entry point: ``fqh <subcommand> [flags]``."""
import argparse
import json
import os
import sys

from . import analysis, params_io
from .dqc1_hash import generate_params, hash_message
from .errors import ConditionInapplicable, EmptyMessage, FQHError, InputSyntax
from .walk import bits_from_bytes, bits_from_hex, validate_bits

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MESSAGE = 3
EXIT_PARAMS = 4
EXIT_SYNTAX = 5
EXIT_CHECK = 6

# --check thresholds; reported, not enforced, without the flag
AVALANCHE_WINDOW = (45.0, 55.0)


class CLIError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _seed(value):
    if value is None:
        value = os.environ.get("FQH_SEED", "0")
    seed = int(value, 0) if isinstance(value, str) else int(value)
    if not 0 <= seed < 2**64:
        raise CLIError(EXIT_USAGE, f"seed {seed} is not an unsigned 64-bit integer")
    return seed


def build_parser():
    p = argparse.ArgumentParser(prog="fqh", description="Quantum-walk + DQC1 hash function")
    sub = p.add_subparsers(dest="command", required=True)

    def instance_flags(sp):
        sp.add_argument("--seed", default=None, help="master seed (u64); falls back to $FQH_SEED, then 0")
        sp.add_argument("--ensemble", choices=["cue", "coe"], default="cue")
        sp.add_argument("--dim", type=int, default=2, help="random unitary dimension")
        sp.add_argument("--qpos", type=int, default=5, help="position qubits")
        sp.add_argument("--qanc", type=int, default=5, help="ancilla qubits; hash length is qanc*2**qanc")

    def message_flags(sp, required):
        g = sp.add_mutually_exclusive_group(required=required)
        g.add_argument("--message", help="message as a 0/1 string")
        g.add_argument("--message-hex", help="message as hex digits")
        g.add_argument("--message-file", help="binary file, bytes expanded MSB first")

    sp = sub.add_parser("gen-params", help="write a params file")
    instance_flags(sp)
    sp.add_argument("--out", help="output path (stdout if omitted)")

    sp = sub.add_parser("hash", help="hash one message")
    message_flags(sp, required=True)
    sp.add_argument("--params", help="params file; generated from --seed etc. if omitted")
    instance_flags(sp)
    sp.add_argument("--shots", type=int, default=0, help="0 = exact distribution")
    sp.add_argument("--format", choices=["hex", "bits", "json"], default="hex")

    for name in ("sensitivity", "collision", "avalanche", "reliability"):
        sp = sub.add_parser(name, help=f"run the {name} analysis")
        instance_flags(sp)
        sp.add_argument("--out", help="report path; .csv writes the flat table, anything else JSON")
        sp.add_argument("--check", action="store_true", help="exit non-zero when the threshold fails")
        if name == "sensitivity":
            message_flags(sp, required=True)
            sp.add_argument("--params", help="params file; generated from --seed etc. if omitted")
            sp.add_argument("--strict", action="store_true", help="fail on inapplicable conditions")
        else:
            sp.add_argument("--trials", type=int, default=1000,
                            help="trials (messages, for reliability)")
        if name in ("collision", "avalanche"):
            sp.add_argument("--message-bits", type=int, default=32 if name == "collision" else 8)
        if name == "reliability":
            sp.add_argument("--regenerations", type=int, default=100)
            sp.add_argument("--shots", type=int, default=0, help="0 = exact distribution")
    return p


def read_message(args):
    try:
        if args.message is not None:
            return validate_bits(args.message)
        if args.message_hex is not None:
            return bits_from_hex(args.message_hex)
        with open(args.message_file, "rb") as fh:
            return bits_from_bytes(fh.read())
    except OSError as exc:
        raise CLIError(EXIT_MESSAGE, f"cannot read message: {exc}") from None
    except (InputSyntax, EmptyMessage) as exc:
        raise CLIError(EXIT_SYNTAX, str(exc)) from None


def _instance(args):
    try:
        return generate_params(args.qpos, args.qanc, args.ensemble, args.dim, _seed(args.seed))
    except FQHError as exc:
        raise CLIError(EXIT_USAGE, f"{type(exc).__name__}: {exc}") from None


def load_params(args):
    if getattr(args, "params", None) is None:
        return _instance(args)
    try:
        return params_io.load(args.params)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise CLIError(EXIT_PARAMS, f"cannot read params {args.params}: {exc}") from None


def _config(args):
    return analysis.HashConfig(args.qpos, args.qanc, args.ensemble, args.dim)


def cmd_gen_params(args, out):
    params = _instance(args)
    if args.out:
        params_io.save(params, args.out)
        print(f"L={params.hash_length} wrote {args.out}", file=out)
    else:
        out.write(params_io.dumps(params))
        print(f"L={params.hash_length}", file=sys.stderr)
    return EXIT_OK


def cmd_hash(args, out):
    if args.shots < 0:
        raise CLIError(EXIT_USAGE, "--shots must be >= 0")
    m = read_message(args)
    params = load_params(args)
    h = hash_message(m, params, args.shots, _seed(args.seed))
    if args.format == "hex":
        print(h.hex, file=out)
    elif args.format == "bits":
        print(h.bits, file=out)
    else:
        doc = {"hex": h.hex, "bits": h.bits, "L": h.length, "params_digest": params_io.digest(params)}
        print(json.dumps(doc, sort_keys=True), file=out)
    return EXIT_OK


def _check_failed(name, report):
    if name == "sensitivity":
        bits = [b for b in report.bits if b]
        return len(set(bits)) != len(bits) or bool(report.inapplicable)
    if name == "collision":
        return report.collisions > 0
    if name == "avalanche":
        return not AVALANCHE_WINDOW[0] <= report.mean <= AVALANCHE_WINDOW[1]
    return report.reliability != 1.0


def cmd_analyze(args, out):
    name = args.command
    seed = _seed(args.seed)
    if name != "sensitivity" and args.trials < 1:
        raise CLIError(EXIT_USAGE, "--trials must be >= 1")
    try:
        if name == "sensitivity":
            m = read_message(args)
            params = load_params(args)
            try:
                report = analysis.run_sensitivity(m, params, seed, strict=args.strict)
            except ConditionInapplicable as exc:
                raise CLIError(EXIT_CHECK, str(exc)) from None
        elif name == "collision":
            report = analysis.run_collision(args.trials, _config(args), seed, args.message_bits)
        elif name == "avalanche":
            report = analysis.run_avalanche(args.trials, _config(args), seed, args.message_bits)
        else:
            report = analysis.run_reliability(
                args.trials, args.regenerations, _config(args), seed, args.shots
            )
    except CLIError:
        raise
    except FQHError as exc:
        raise CLIError(EXIT_USAGE, f"{type(exc).__name__}: {exc}") from None
    except ValueError as exc:
        raise CLIError(EXIT_USAGE, str(exc)) from None

    if args.out:
        text = report.to_csv() if args.out.endswith(".csv") and hasattr(report, "to_csv") else report.to_json()
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    print(report.summary(), file=out)
    if args.check and _check_failed(name, report):
        return EXIT_CHECK
    return EXIT_OK


COMMANDS = {
    "gen-params": cmd_gen_params,
    "hash": cmd_hash,
    "sensitivity": cmd_analyze,
    "collision": cmd_analyze,
    "avalanche": cmd_analyze,
    "reliability": cmd_analyze,
}


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except CLIError as exc:
        print(f"fqh: error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
