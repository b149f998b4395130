"""Serialization: structural Verilog and a lossless JSON interchange format.

The JSON schema is normative for interchange:

    {"name": ..., "net_count": N,
     "inputs":  [{"name": ..., "width": W, "signed": bool, "bits": [net, ...]}, ...],
     "outputs": [ ...same shape... ],
     "gates":   [{"kind": "AND2", "inputs": [net, net], "output": net}, ...]}

Bit arrays are LSB-first net indices.  Loading validates structure and the
netlist invariants; a round trip reproduces the circuit exactly.
"""

from __future__ import annotations

import json
import re

from .netlist import (
    Circuit,
    Gate,
    GateKind,
    Port,
    Signedness,
    validate,
)

_VERILOG_KEYWORDS = {
    "module", "endmodule", "input", "output", "inout", "wire", "reg",
    "assign", "begin", "end", "always", "initial", "signed", "integer",
    "parameter", "localparam", "not", "and", "or", "nand", "nor", "xor",
    "xnor", "buf", "case", "endcase", "if", "else", "for", "while",
}

_NETNAME_RE = re.compile(r"n\d+\Z")


class JsonFormatError(ValueError):
    """Malformed or invariant-violating netlist document."""


def _sanitize(name: str, taken: set[str]) -> str:
    clean = re.sub(r"[^A-Za-z0-9_]", "_", name)
    if not clean or clean[0].isdigit():
        clean = "_" + clean
    while clean in _VERILOG_KEYWORDS or _NETNAME_RE.match(clean) or clean in taken:
        clean += "_"
    taken.add(clean)
    return clean


_GATE_EXPR = {
    GateKind.CONST0: lambda ins: "1'b0",
    GateKind.CONST1: lambda ins: "1'b1",
    GateKind.NOT: lambda ins: f"~{ins[0]}",
    GateKind.BUF: lambda ins: ins[0],
    GateKind.AND2: lambda ins: f"{ins[0]} & {ins[1]}",
    GateKind.NAND2: lambda ins: f"~({ins[0]} & {ins[1]})",
    GateKind.OR2: lambda ins: f"{ins[0]} | {ins[1]}",
    GateKind.NOR2: lambda ins: f"~({ins[0]} | {ins[1]})",
    GateKind.XOR2: lambda ins: f"{ins[0]} ^ {ins[1]}",
    GateKind.XNOR2: lambda ins: f"~({ins[0]} ^ {ins[1]})",
}


def to_verilog(circuit: Circuit) -> str:
    """Structural Verilog: one module, one continuous assignment per gate.

    Net naming (``n<index>``) and line order are functions of the circuit
    alone, so emission is byte-identical across runs.
    """
    violations = validate(circuit)
    if violations:
        raise ValueError(
            "cannot emit invalid circuit: " + "; ".join(v.message for v in violations)
        )
    taken: set[str] = set()
    module = _sanitize(circuit.name, set())
    port_name = {}
    for p in (*circuit.inputs, *circuit.outputs):
        port_name[p] = _sanitize(p.name, taken)

    ref: dict[int, str] = {}
    for p in circuit.inputs:
        for i, net in enumerate(p.bits):
            ref[net] = port_name[p] if p.width == 1 else f"{port_name[p]}[{i}]"
    for g in circuit.gates:
        ref[g.output] = f"n{g.output}"

    lines = [f"module {module} ({', '.join(port_name[p] for p in (*circuit.inputs, *circuit.outputs))});"]
    for p in circuit.inputs:
        rng = "" if p.width == 1 else f"[{p.width - 1}:0] "
        lines.append(f"  input {rng}{port_name[p]};")
    for p in circuit.outputs:
        rng = "" if p.width == 1 else f"[{p.width - 1}:0] "
        lines.append(f"  output {rng}{port_name[p]};")
    for g in circuit.gates:
        lines.append(f"  wire n{g.output};")
    for g in circuit.gates:
        expr = _GATE_EXPR[g.kind]([ref[i] for i in g.inputs])
        lines.append(f"  assign n{g.output} = {expr};")
    for p in circuit.outputs:
        for i, net in enumerate(p.bits):
            target = port_name[p] if p.width == 1 else f"{port_name[p]}[{i}]"
            lines.append(f"  assign {target} = {ref[net]};")
    lines.append("endmodule")
    return "\n".join(lines) + "\n"


def _port_doc(p: Port) -> dict:
    return {
        "name": p.name,
        "width": p.width,
        "signed": p.signedness is Signedness.SIGNED,
        "bits": list(p.bits),
    }


def to_json(circuit: Circuit) -> str:
    violations = validate(circuit)
    if violations:
        raise ValueError(
            "cannot serialize invalid circuit: " + "; ".join(v.message for v in violations)
        )
    doc = {
        "name": circuit.name,
        "net_count": circuit.net_count,
        "inputs": [_port_doc(p) for p in circuit.inputs],
        "outputs": [_port_doc(p) for p in circuit.outputs],
        "gates": [
            {"kind": g.kind.value, "inputs": list(g.inputs), "output": g.output}
            for g in circuit.gates
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def _expect(cond: bool, where: str, what: str) -> None:
    if not cond:
        raise JsonFormatError(f"{where}: {what}")


def _load_port(doc, where: str) -> Port:
    _expect(isinstance(doc, dict), where, "expected an object")
    for key in ("name", "width", "signed", "bits"):
        _expect(key in doc, where, f"missing field {key!r}")
    name, width, signed, bits = doc["name"], doc["width"], doc["signed"], doc["bits"]
    _expect(isinstance(name, str) and name != "", where, "name must be a non-empty string")
    _expect(isinstance(width, int) and width >= 1, where, "width must be a positive integer")
    _expect(isinstance(signed, bool), where, "signed must be a boolean")
    _expect(isinstance(bits, list), where, "bits must be an array")
    _expect(len(bits) == width, where, f"bits length {len(bits)} != width {width}")
    for i, net in enumerate(bits):
        _expect(isinstance(net, int) and not isinstance(net, bool) and net >= 0,
                f"{where}.bits[{i}]", "net index must be a non-negative integer")
    return Port(
        name=name,
        bits=tuple(bits),
        signedness=Signedness.SIGNED if signed else Signedness.UNSIGNED,
    )


def from_json(text: str) -> Circuit:
    """Parse and validate a netlist document; inverse of :func:`to_json`."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise JsonFormatError(f"not valid JSON: {exc}") from exc
    _expect(isinstance(doc, dict), "document", "expected a JSON object")
    for key in ("name", "net_count", "inputs", "outputs", "gates"):
        _expect(key in doc, "document", f"missing field {key!r}")
    _expect(isinstance(doc["name"], str) and doc["name"] != "",
            "name", "must be a non-empty string")
    _expect(isinstance(doc["net_count"], int) and doc["net_count"] >= 0,
            "net_count", "must be a non-negative integer")
    for key in ("inputs", "outputs", "gates"):
        _expect(isinstance(doc[key], list), key, "must be an array")

    inputs = [_load_port(p, f"inputs[{i}]") for i, p in enumerate(doc["inputs"])]
    outputs = [_load_port(p, f"outputs[{i}]") for i, p in enumerate(doc["outputs"])]
    _expect(len({p.name for p in inputs}) == len(inputs), "inputs", "duplicate port name")
    _expect(len({p.name for p in outputs}) == len(outputs), "outputs", "duplicate port name")
    _expect(bool(inputs), "inputs", "circuit must have >= 1 input port")
    _expect(bool(outputs), "outputs", "circuit must have >= 1 output port")

    kinds = {k.value: k for k in GateKind}
    gates = []
    for i, g in enumerate(doc["gates"]):
        where = f"gates[{i}]"
        _expect(isinstance(g, dict), where, "expected an object")
        for key in ("kind", "inputs", "output"):
            _expect(key in g, where, f"missing field {key!r}")
        _expect(isinstance(g["kind"], str) and g["kind"] in kinds,
                where, f"unknown gate kind {g['kind']!r}")
        _expect(isinstance(g["inputs"], list), where, "inputs must be an array")
        for j, net in enumerate(g["inputs"]):
            _expect(isinstance(net, int) and not isinstance(net, bool) and net >= 0,
                    f"{where}.inputs[{j}]", "net index must be a non-negative integer")
        out = g["output"]
        _expect(isinstance(out, int) and not isinstance(out, bool) and out >= 0,
                f"{where}.output", "net index must be a non-negative integer")
        gates.append(Gate(kind=kinds[g["kind"]], inputs=tuple(g["inputs"]), output=out))

    circuit = Circuit(
        name=doc["name"],
        inputs=tuple(inputs),
        outputs=tuple(outputs),
        gates=tuple(gates),
        net_count=doc["net_count"],
    )
    violations = validate(circuit)
    if violations:
        raise JsonFormatError(
            "invalid netlist: " + "; ".join(v.message for v in violations)
        )
    return circuit
