"""Gate-level netlist IR: primitive gates wired by dense net ids into a DAG.

The building blocks are deliberately small: single-output gates with fixed
arity (two-input logic plus NOT/BUF and constants), bit-vector ports with
LSB-first bit order, and an append-only builder that hands out fresh net
ids.  Because a gate may only reference nets that already exist, the gate
list of a builder-produced circuit is topologically ordered by construction.

Finalized circuits are immutable; analyses may share them freely across
threads and key per-net tables by the dense net index.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

NetId = int

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class Signedness(Enum):
    SIGNED = "signed"
    UNSIGNED = "unsigned"


class GateKind(Enum):
    CONST0 = "CONST0"
    CONST1 = "CONST1"
    NOT = "NOT"
    BUF = "BUF"
    AND2 = "AND2"
    NAND2 = "NAND2"
    OR2 = "OR2"
    NOR2 = "NOR2"
    XOR2 = "XOR2"
    XNOR2 = "XNOR2"


#: Number of inputs each gate kind takes.
ARITY: dict[GateKind, int] = {
    GateKind.CONST0: 0,
    GateKind.CONST1: 0,
    GateKind.NOT: 1,
    GateKind.BUF: 1,
    GateKind.AND2: 2,
    GateKind.NAND2: 2,
    GateKind.OR2: 2,
    GateKind.NOR2: 2,
    GateKind.XOR2: 2,
    GateKind.XNOR2: 2,
}


class NetlistError(ValueError):
    """Raised on misuse of the construction API."""


@dataclass(frozen=True)
class Gate:
    kind: GateKind
    inputs: tuple[NetId, ...]
    output: NetId


@dataclass(frozen=True)
class Port:
    """Named bit vector; ``bits[0]`` is the least significant bit."""

    name: str
    bits: tuple[NetId, ...]
    signedness: Signedness

    @property
    def width(self) -> int:
        return len(self.bits)


@dataclass(frozen=True)
class Circuit:
    name: str
    inputs: tuple[Port, ...]
    outputs: tuple[Port, ...]
    gates: tuple[Gate, ...]
    net_count: int

    def input_port(self, name: str) -> Port:
        for p in self.inputs:
            if p.name == name:
                return p
        raise KeyError(f"no input port named {name!r}")

    def output_port(self, name: str) -> Port:
        for p in self.outputs:
            if p.name == name:
                return p
        raise KeyError(f"no output port named {name!r}")

    def input_nets(self) -> set[NetId]:
        return {n for p in self.inputs for n in p.bits}


class ViolationKind(Enum):
    MULTIPLE_DRIVERS = "MultipleDrivers"
    UNDRIVEN_NET = "UndrivenNet"
    CYCLE = "Cycle"
    ARITY_MISMATCH = "ArityMismatch"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    message: str
    net: NetId | None = None
    gate_index: int | None = None


def validate(circuit: Circuit) -> list[Violation]:
    """Check the structural invariants; returns one entry per violation.

    Violations are data, not exceptions: an empty list means the circuit is
    well formed (every net singly driven, all references resolved, gate
    graph acyclic, arities correct).
    """
    out: list[Violation] = []
    nc = circuit.net_count

    for gi, g in enumerate(circuit.gates):
        want = ARITY[g.kind]
        if len(g.inputs) != want:
            out.append(
                Violation(
                    ViolationKind.ARITY_MISMATCH,
                    f"ArityMismatch: gate {gi} ({g.kind.value}) has "
                    f"{len(g.inputs)} inputs, expected {want}",
                    gate_index=gi,
                )
            )

    # Driver census: input-port bits and gate outputs each drive one net.
    drivers = [0] * nc

    def _driven(net: NetId) -> bool:
        return 0 <= net < nc and drivers[net] > 0

    bad_ref: set[NetId] = set()
    for p in circuit.inputs:
        for net in p.bits:
            if 0 <= net < nc:
                drivers[net] += 1
            else:
                bad_ref.add(net)
    for g in circuit.gates:
        if 0 <= g.output < nc:
            drivers[g.output] += 1
        else:
            bad_ref.add(g.output)

    for net in range(nc):
        if drivers[net] > 1:
            out.append(
                Violation(
                    ViolationKind.MULTIPLE_DRIVERS,
                    f"MultipleDrivers: net {net} has {drivers[net]} drivers",
                    net=net,
                )
            )

    undriven: set[NetId] = set(bad_ref)
    for g in circuit.gates:
        for net in g.inputs:
            if not _driven(net):
                undriven.add(net)
    for p in circuit.outputs:
        for net in p.bits:
            if not _driven(net):
                undriven.add(net)
    for net in sorted(undriven):
        out.append(
            Violation(
                ViolationKind.UNDRIVEN_NET,
                f"UndrivenNet: net {net} is referenced but never driven",
                net=net,
            )
        )

    # Cycle check over the gate graph (Kahn).
    driver_gate: dict[NetId, int] = {}
    for gi, g in enumerate(circuit.gates):
        if 0 <= g.output < nc and drivers[g.output] == 1:
            driver_gate[g.output] = gi
    indeg = [0] * len(circuit.gates)
    consumers: dict[int, list[int]] = {}
    for gi, g in enumerate(circuit.gates):
        for net in g.inputs:
            src = driver_gate.get(net)
            if src is not None:
                indeg[gi] += 1
                consumers.setdefault(src, []).append(gi)
    queue = deque(gi for gi in range(len(circuit.gates)) if indeg[gi] == 0)
    seen = 0
    while queue:
        gi = queue.popleft()
        seen += 1
        for nxt in consumers.get(gi, ()):
            indeg[nxt] -= 1
            if indeg[nxt] == 0:
                queue.append(nxt)
    if seen != len(circuit.gates):
        stuck = [gi for gi in range(len(circuit.gates)) if indeg[gi] > 0]
        out.append(
            Violation(
                ViolationKind.CYCLE,
                f"Cycle: gates {stuck} form a combinational loop",
                gate_index=stuck[0] if stuck else None,
            )
        )
    return out


class ValidationError(NetlistError):
    """A finalize/load failed structural validation."""

    def __init__(self, violations: Sequence[Violation]):
        self.violations = list(violations)
        super().__init__("; ".join(v.message for v in violations))


def gate_schedule(circuit: Circuit) -> list[int]:
    """Gate indices in dependency order.

    Builder-produced circuits are already ordered and pass a single linear
    check; gate lists from other sources are re-sorted with Kahn's
    algorithm.  Raises :class:`NetlistError` on a combinational cycle.
    """
    placed = [False] * circuit.net_count
    for p in circuit.inputs:
        for net in p.bits:
            placed[net] = True
    in_order = True
    for g in circuit.gates:
        if not all(placed[i] for i in g.inputs):
            in_order = False
            break
        placed[g.output] = True
    if in_order:
        return list(range(len(circuit.gates)))

    driver_gate: dict[NetId, int] = {g.output: gi for gi, g in enumerate(circuit.gates)}
    input_nets = circuit.input_nets()
    indeg = [0] * len(circuit.gates)
    consumers: dict[int, list[int]] = {}
    for gi, g in enumerate(circuit.gates):
        for net in g.inputs:
            if net in input_nets:
                continue
            src = driver_gate[net]
            indeg[gi] += 1
            consumers.setdefault(src, []).append(gi)
    queue = deque(gi for gi in range(len(circuit.gates)) if indeg[gi] == 0)
    order: list[int] = []
    while queue:
        gi = queue.popleft()
        order.append(gi)
        for nxt in consumers.get(gi, ()):
            indeg[nxt] -= 1
            if indeg[nxt] == 0:
                queue.append(nxt)
    if len(order) != len(circuit.gates):
        raise NetlistError("circuit contains a combinational cycle")
    return order


class CircuitBuilder:
    """Append-only constructor for :class:`Circuit`.

    Net ids are dense and allocated in construction order; gates may only
    reference nets that already exist, so the finished gate list is a valid
    evaluation order.  ``finalize`` validates and returns an immutable
    circuit; the builder must not be used afterwards.
    """

    def __init__(self, name: str):
        if not name or not _IDENT_RE.match(name):
            raise NetlistError(f"circuit name must be an identifier, got {name!r}")
        self._name = name
        self._inputs: list[Port] = []
        self._outputs: list[Port] = []
        self._gates: list[Gate] = []
        self._net_count = 0
        self._const_nets: dict[GateKind, NetId] = {}
        self._done = False

    @property
    def net_count(self) -> int:
        return self._net_count

    @property
    def gate_count(self) -> int:
        return len(self._gates)

    def _check_open(self) -> None:
        if self._done:
            raise NetlistError("builder already finalized")

    def _fresh_net(self) -> NetId:
        net = self._net_count
        self._net_count += 1
        return net

    def add_input(self, name: str, width: int, signedness: Signedness) -> list[NetId]:
        """Allocate ``width`` fresh nets for a new input port, LSB first."""
        self._check_open()
        if not name or not _IDENT_RE.match(name):
            raise NetlistError(f"port name must be an identifier, got {name!r}")
        if width < 1:
            raise NetlistError(f"port {name!r} must have width >= 1")
        if any(p.name == name for p in self._inputs):
            raise NetlistError(f"duplicate input port {name!r}")
        bits = [self._fresh_net() for _ in range(width)]
        self._inputs.append(Port(name, tuple(bits), signedness))
        return bits

    def add_output(self, name: str, bits: Sequence[NetId], signedness: Signedness) -> None:
        """Declare an output port over existing nets, LSB first."""
        self._check_open()
        if not name or not _IDENT_RE.match(name):
            raise NetlistError(f"port name must be an identifier, got {name!r}")
        if not bits:
            raise NetlistError(f"output port {name!r} must have width >= 1")
        if any(p.name == name for p in self._outputs):
            raise NetlistError(f"duplicate output port {name!r}")
        for net in bits:
            if not 0 <= net < self._net_count:
                raise NetlistError(f"output port {name!r} references unallocated net {net}")
        self._outputs.append(Port(name, tuple(bits), signedness))

    def add_gate(self, kind: GateKind, inputs: Iterable[NetId]) -> NetId:
        """Append a gate over existing nets; returns its fresh output net."""
        self._check_open()
        ins = tuple(inputs)
        if len(ins) != ARITY[kind]:
            raise NetlistError(
                f"{kind.value} takes {ARITY[kind]} inputs, got {len(ins)}"
            )
        for net in ins:
            if not 0 <= net < self._net_count:
                raise NetlistError(f"gate references unallocated net {net}")
        out = self._fresh_net()
        self._gates.append(Gate(kind, ins, out))
        return out

    def const0(self) -> NetId:
        """Net holding constant 0 (one shared CONST0 gate per builder)."""
        return self._const(GateKind.CONST0)

    def const1(self) -> NetId:
        """Net holding constant 1 (one shared CONST1 gate per builder)."""
        return self._const(GateKind.CONST1)

    def _const(self, kind: GateKind) -> NetId:
        net = self._const_nets.get(kind)
        if net is None:
            net = self.add_gate(kind, [])
            self._const_nets[kind] = net
        return net

    def is_const0(self, net: NetId) -> bool:
        return self._const_nets.get(GateKind.CONST0) == net

    def is_const1(self, net: NetId) -> bool:
        return self._const_nets.get(GateKind.CONST1) == net

    def finalize(self) -> Circuit:
        """Validate and freeze the circuit."""
        self._check_open()
        if not self._inputs or not self._outputs:
            raise NetlistError("circuit must have >= 1 input and >= 1 output port")
        circuit = Circuit(
            name=self._name,
            inputs=tuple(self._inputs),
            outputs=tuple(self._outputs),
            gates=tuple(self._gates),
            net_count=self._net_count,
        )
        violations = validate(circuit)
        if violations:
            raise ValidationError(violations)
        self._done = True
        return circuit
