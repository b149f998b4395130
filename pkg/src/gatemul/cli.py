"""Command-line front end: generate, verify, and compare multiplier netlists.

Exit codes are a stable scripting contract: 0 success, 1 verification
failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .emit import JsonFormatError, from_json, to_json, to_verilog
from .multipliers import (
    Architecture,
    Combiner,
    MultiplierSpec,
    generate,
)
from .netlist import Circuit, Signedness
from .timing import DelayModel, area_report, compare, depth
from .verify import verify_exhaustive, verify_random

_ARCH_TOKENS = {
    "bw": Architecture.FLAT_BW,
    "array": Architecture.FLAT_UNSIGNED_ARRAY,
    "booth4": Architecture.BOOTH_RADIX4,
    "decomposed": Architecture.DECOMPOSED,
}
_COMBINER_TOKENS = {"csa": Combiner.CSA_TREE, "ripple": Combiner.RIPPLE_CASCADE}
_SIGN_TOKENS = {"signed": Signedness.SIGNED, "unsigned": Signedness.UNSIGNED}


def _default_signs(arch: Architecture) -> Signedness:
    if arch is Architecture.FLAT_UNSIGNED_ARRAY:
        return Signedness.UNSIGNED
    return Signedness.SIGNED


def _make_spec(args) -> MultiplierSpec:
    arch = _ARCH_TOKENS[args.arch]
    sign_a = _SIGN_TOKENS[args.sign_a] if args.sign_a else _default_signs(arch)
    sign_b = _SIGN_TOKENS[args.sign_b] if args.sign_b else _default_signs(arch)
    leaf = args.leaf
    if arch is Architecture.DECOMPOSED and leaf is None:
        leaf = args.width // 2
    return MultiplierSpec(
        width_a=args.width,
        width_b=args.width,
        sign_a=sign_a,
        sign_b=sign_b,
        architecture=arch,
        leaf_width=leaf if arch is Architecture.DECOMPOSED else None,
        combiner=_COMBINER_TOKENS[args.combiner],
    )


def _cmd_gen(args) -> int:
    try:
        spec = _make_spec(args)
        circuit = generate(spec)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = Path(args.out)
    if out.suffix == ".json":
        text = to_json(circuit)
    elif out.suffix == ".v":
        text = to_verilog(circuit)
    else:
        print(f"error: output file must end in .json or .v, got {out.name!r}",
              file=sys.stderr)
        return 2
    out.write_text(text, encoding="utf-8", newline="\n")
    area = area_report(circuit)
    print(
        f"{circuit.name}: {area.total_gates} gates, "
        f"unit-delay depth {depth(circuit)}, wrote {out}"
    )
    return 0


def _retag_signs(circuit: Circuit, sign_a: Signedness, sign_b: Signedness) -> Circuit:
    """Reinterpret the operand ports under the requested signedness."""
    import dataclasses

    pa, pb = circuit.inputs
    po = circuit.outputs[0]
    out_sign = (
        Signedness.SIGNED
        if Signedness.SIGNED in (sign_a, sign_b)
        else Signedness.UNSIGNED
    )
    return dataclasses.replace(
        circuit,
        inputs=(
            dataclasses.replace(pa, signedness=sign_a),
            dataclasses.replace(pb, signedness=sign_b),
        ),
        outputs=(dataclasses.replace(po, signedness=out_sign),),
    )


def _load_circuit(path: str) -> Circuit:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise JsonFormatError(f"cannot read {path}: {exc}") from exc
    return from_json(text)


def _cmd_verify(args) -> int:
    try:
        circuit = _load_circuit(args.file)
    except JsonFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if len(circuit.inputs) != 2 or len(circuit.outputs) != 1:
        print("error: expected a 2-input, 1-output multiplier netlist", file=sys.stderr)
        return 2
    pa, pb = circuit.inputs
    sign_a = _SIGN_TOKENS[args.sign_a] if args.sign_a else pa.signedness
    sign_b = _SIGN_TOKENS[args.sign_b] if args.sign_b else pb.signedness
    if (sign_a, sign_b) != (pa.signedness, pb.signedness):
        circuit = _retag_signs(circuit, sign_a, sign_b)
    try:
        spec = MultiplierSpec(
            width_a=pa.width,
            width_b=pb.width,
            sign_a=sign_a,
            sign_b=sign_b,
            architecture=Architecture.FLAT_UNSIGNED_ARRAY,
        )
        if args.random is not None:
            report = verify_random(circuit, spec, count=args.random, seed=args.seed)
        else:
            report = verify_exhaustive(circuit, spec)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(report.to_json(), end="")
    else:
        print(report.to_text())
    return 0 if report.passed else 1


def _parse_compare_token(token: str, width: int, combiner: Combiner) -> Circuit:
    name, _, leaf_text = token.partition(":")
    if name not in _ARCH_TOKENS:
        raise ValueError(f"unknown architecture token {token!r}")
    arch = _ARCH_TOKENS[name]
    leaf: int | None = None
    if leaf_text:
        if arch is not Architecture.DECOMPOSED:
            raise ValueError(f"only decomposed takes a leaf suffix, got {token!r}")
        leaf = int(leaf_text)
    if arch is Architecture.DECOMPOSED and leaf is None:
        leaf = width // 2
    sign = _default_signs(arch)
    spec = MultiplierSpec(
        width_a=width,
        width_b=width,
        sign_a=sign,
        sign_b=sign,
        architecture=arch,
        leaf_width=leaf if arch is Architecture.DECOMPOSED else None,
        combiner=combiner,
    )
    return generate(spec)


def _cmd_compare(args) -> int:
    if len(args.archs) < 2:
        print("error: compare needs at least two architecture tokens", file=sys.stderr)
        return 2
    try:
        combiner = _COMBINER_TOKENS[args.combiner]
        entries = [
            (token, _parse_compare_token(token, args.width, combiner))
            for token in args.archs
        ]
        model = DelayModel.by_name(args.model)
        table = compare(entries, model)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "csv":
        print(table.to_csv(), end="")
    else:
        print(table.to_markdown(), end="")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gatemul",
        description="Generate, verify, and compare gate-level multiplier netlists.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a netlist file")
    gen.add_argument("--arch", required=True, choices=sorted(_ARCH_TOKENS))
    gen.add_argument("--width", required=True, type=int)
    gen.add_argument("--leaf", type=int, help="leaf width for --arch decomposed")
    gen.add_argument("--combiner", choices=sorted(_COMBINER_TOKENS), default="csa")
    gen.add_argument("--sign-a", choices=sorted(_SIGN_TOKENS))
    gen.add_argument("--sign-b", choices=sorted(_SIGN_TOKENS))
    gen.add_argument("--out", required=True, help="output file (.json or .v)")
    gen.set_defaults(func=_cmd_gen)

    ver = sub.add_parser("verify", help="check a netlist against integer products")
    ver.add_argument("file", help="netlist .json file")
    ver.add_argument("--sign-a", choices=sorted(_SIGN_TOKENS))
    ver.add_argument("--sign-b", choices=sorted(_SIGN_TOKENS))
    mode = ver.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true",
                      help="sweep all pairs (default)")
    mode.add_argument("--random", type=int, metavar="N",
                      help="N seeded random vectors plus boundary pairs")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--format", choices=["text", "json"], default="text")
    ver.set_defaults(func=_cmd_verify)

    cmp_ = sub.add_parser("compare", help="tabulate delay/area across architectures")
    cmp_.add_argument("--width", required=True, type=int)
    cmp_.add_argument("--model", choices=["unit", "tech-demo"], default="unit")
    cmp_.add_argument("--combiner", choices=sorted(_COMBINER_TOKENS), default="csa")
    cmp_.add_argument("--format", choices=["markdown", "csv"], default="markdown")
    cmp_.add_argument("archs", nargs="+",
                      help="architecture tokens (bw, array, booth4, decomposed[:K])")
    cmp_.set_defaults(func=_cmd_compare)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
