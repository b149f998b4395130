"""Static timing analysis and area accounting over gate netlists.

Delays are exact rationals (:class:`fractions.Fraction`), so model scaling
and cross-model comparisons behave algebraically: scaling every gate delay
by k scales the critical delay by exactly k and leaves the witness path
unchanged.  Timing is purely topological -- no input-dependent or false-path
analysis -- which is what a synthesis report's "path delay" measures.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from io import StringIO
from typing import Mapping, Sequence
import csv

from .netlist import Circuit, Gate, GateKind, NetId, gate_schedule, validate

DelayLike = int | float | str | Fraction


def _coerce_delay(x: DelayLike) -> Fraction:
    # Floats go through their decimal repr so 0.9 means 9/10, not the
    # nearest binary float.
    if isinstance(x, float):
        return Fraction(str(x))
    return Fraction(x)


@dataclass(frozen=True)
class DelayModel:
    """Per-gate-kind propagation delays in an arbitrary consistent unit."""

    name: str
    delay_of: Mapping[GateKind, Fraction]

    def __post_init__(self) -> None:
        coerced = {k: _coerce_delay(v) for k, v in self.delay_of.items()}
        missing = [k.value for k in GateKind if k not in coerced]
        if missing:
            raise ValueError(f"delay model {self.name!r} missing kinds: {missing}")
        for k, d in coerced.items():
            if d < 0:
                raise ValueError(f"negative delay for {k.value}")
        for k in (GateKind.CONST0, GateKind.CONST1):
            if coerced[k] != 0:
                raise ValueError("constant generators must have zero delay")
        object.__setattr__(self, "delay_of", coerced)

    def __getitem__(self, kind: GateKind) -> Fraction:
        return self.delay_of[kind]

    def scaled(self, k: DelayLike) -> "DelayModel":
        """Uniformly scaled copy (k > 0)."""
        factor = _coerce_delay(k)
        if factor <= 0:
            raise ValueError("scale factor must be positive")
        return DelayModel(
            name=f"{self.name}*{factor}",
            delay_of={kind: d * factor for kind, d in self.delay_of.items()},
        )

    @staticmethod
    def unit() -> "DelayModel":
        """Every non-constant gate costs 1; critical delay = depth in levels."""
        return DelayModel(
            "unit",
            {k: Fraction(0 if k in (GateKind.CONST0, GateKind.CONST1) else 1) for k in GateKind},
        )

    @staticmethod
    def tech_demo() -> "DelayModel":
        """Illustrative cell-library-flavoured delays (not calibrated data)."""
        f = Fraction
        return DelayModel(
            "tech-demo",
            {
                GateKind.CONST0: f(0),
                GateKind.CONST1: f(0),
                GateKind.NOT: f("0.5"),
                GateKind.BUF: f("0.5"),
                GateKind.AND2: f(1),
                GateKind.OR2: f(1),
                GateKind.NAND2: f("0.9"),
                GateKind.NOR2: f("0.9"),
                GateKind.XOR2: f("1.6"),
                GateKind.XNOR2: f("1.6"),
            },
        )

    @staticmethod
    def by_name(name: str) -> "DelayModel":
        models = {"unit": DelayModel.unit, "tech-demo": DelayModel.tech_demo}
        if name not in models:
            raise ValueError(f"unknown delay model {name!r} (have: {sorted(models)})")
        return models[name]()


def _require_valid(circuit: Circuit) -> None:
    violations = validate(circuit)
    if violations:
        raise ValueError(
            f"circuit {circuit.name!r} is invalid: " + "; ".join(v.message for v in violations)
        )


def arrival_times(circuit: Circuit, model: DelayModel) -> dict[NetId, Fraction]:
    """Arrival time of every net: inputs at 0, each gate output at
    max(input arrivals) + its kind's delay.  One topological pass."""
    _require_valid(circuit)
    arrival: dict[NetId, Fraction] = {}
    zero = Fraction(0)
    for p in circuit.inputs:
        for net in p.bits:
            arrival[net] = zero
    for gi in gate_schedule(circuit):
        g = circuit.gates[gi]
        base = max((arrival[i] for i in g.inputs), default=zero)
        arrival[g.output] = base + model[g.kind]
    return arrival


@dataclass(frozen=True)
class TimingReport:
    model_name: str
    critical_delay: Fraction
    critical_path: tuple[Gate, ...]
    arrival: dict[NetId, Fraction] = field(repr=False)


def critical_path(circuit: Circuit, model: DelayModel) -> TimingReport:
    """Longest-delay report with one witness path.

    The witness ends at the maximum-arrival output net and follows
    maximum-arrival predecessors backwards; ties break toward the lowest
    net id, so the path is reproducible.
    """
    arrival = arrival_times(circuit, model)
    out_nets = sorted({net for p in circuit.outputs for net in p.bits})
    best = max(arrival[n] for n in out_nets)
    end = min(n for n in out_nets if arrival[n] == best)

    driver: dict[NetId, Gate] = {g.output: g for g in circuit.gates}
    path: list[Gate] = []
    net = end
    while net in driver:
        g = driver[net]
        path.append(g)
        if not g.inputs:
            break
        candidates = sorted(g.inputs)
        peak = max(arrival[i] for i in candidates)
        net = next(i for i in candidates if arrival[i] == peak)
    path.reverse()
    return TimingReport(model.name, best, tuple(path), arrival)


@dataclass(frozen=True)
class AreaReport:
    counts: dict[GateKind, int]
    total_gates: int


def area_report(circuit: Circuit) -> AreaReport:
    """Exact gate census by kind."""
    counts = Counter(g.kind for g in circuit.gates)
    return AreaReport(counts=dict(counts), total_gates=len(circuit.gates))


def depth(circuit: Circuit) -> int:
    """Depth in gate levels (= critical delay under the unit model)."""
    d = critical_path(circuit, DelayModel.unit()).critical_delay
    return int(d)


def _fmt(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    # Exact decimal expansion when the denominator is 2^a * 5^b.
    den = x.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den == 1:
        k = max(twos, fives)
        scaled = x * 10**k
        digits = f"{scaled.numerator:0{k + 1}d}"
        sign = "-" if digits.startswith("-") else ""
        digits = digits.lstrip("-")
        digits = digits.rjust(k + 1, "0")
        return f"{sign}{digits[:-k]}.{digits[-k:]}" if k else f"{sign}{digits}"
    return f"{float(x):.6g}"


@dataclass(frozen=True)
class ComparisonTable:
    """Metric rows by circuit column; renders to Markdown and CSV."""

    model_name: str
    labels: tuple[str, ...]
    rows: tuple[tuple[str, tuple[str, ...]], ...]

    def to_markdown(self) -> str:
        head = [f"metric [model: {self.model_name}]", *self.labels]
        lines = ["| " + " | ".join(head) + " |"]
        lines.append("| " + " | ".join("---" for _ in head) + " |")
        for metric, values in self.rows:
            lines.append("| " + " | ".join([metric, *values]) + " |")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([f"metric [model: {self.model_name}]", *self.labels])
        for metric, values in self.rows:
            writer.writerow([metric, *values])
        return buf.getvalue()


def compare(
    circuits: Sequence[tuple[str, Circuit]], model: DelayModel
) -> ComparisonTable:
    """Side-by-side delay/area table.

    The delay-ratio row divides the first entry's critical delay by each
    column's, so values above 1 mean "faster than the baseline".
    """
    if len(circuits) < 2:
        raise ValueError("compare needs at least two circuits")
    labels = tuple(label for label, _ in circuits)
    delays: list[Fraction] = []
    depths: list[int] = []
    areas: list[AreaReport] = []
    for _, c in circuits:
        delays.append(critical_path(c, model).critical_delay)
        depths.append(depth(c))
        areas.append(area_report(c))

    kinds = [k for k in GateKind if any(a.counts.get(k) for a in areas)]
    rows: list[tuple[str, tuple[str, ...]]] = [
        ("critical delay", tuple(_fmt(d) for d in delays)),
        ("depth (gate levels)", tuple(str(d) for d in depths)),
        ("total gates", tuple(str(a.total_gates) for a in areas)),
    ]
    for k in kinds:
        rows.append(
            (f"{k.value} count", tuple(str(a.counts.get(k, 0)) for a in areas))
        )
    base = delays[0]
    ratios = tuple(
        _fmt(base / d) if d != 0 else ("1" if base == 0 else "inf") for d in delays
    )
    rows.append((f"delay ratio vs {labels[0]}", ratios))
    return ComparisonTable(model.name, labels, tuple(rows))
