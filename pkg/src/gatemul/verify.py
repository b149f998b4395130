"""Equivalence checking of multiplier netlists against host-integer products.

The oracle is deliberately boring: decode the operands, multiply with
Python integers, compare.  It never touches generator or simulator word
paths, so a bug in the netlist machinery cannot hide itself.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .multipliers import MultiplierSpec
from .netlist import Circuit
from .sim import evaluate_vector_array, value_range

#: PRNG identifier recorded in random reports.
RANDOM_ALGORITHM = "numpy-pcg64"


@dataclass
class VerifyReport:
    """Outcome of one verification run; passing means no failures."""

    mode: str  # "exhaustive" | "random"
    total_vectors: int
    failures: list[tuple[dict[str, int], int, int]] = field(default_factory=list)
    boundary_vectors: int = 0
    requested_count: int | None = None
    seed: int | None = None
    algorithm: str | None = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_text(self, max_witnesses: int = 20) -> str:
        lines = [f"mode: {self.mode}"]
        if self.mode == "random":
            lines.append(
                f"algorithm: {self.algorithm}, seed: {self.seed}, "
                f"requested: {self.requested_count}"
            )
            lines.append(
                f"vectors: {self.total_vectors} "
                f"(boundary {self.boundary_vectors} + random {self.requested_count})"
            )
        else:
            lines.append(f"vectors: {self.total_vectors}")
        if self.passed:
            lines.append(f"result: PASS ({self.total_vectors} vectors, 0 failures)")
        else:
            lines.append(f"result: FAIL ({len(self.failures)} failures)")
            for inputs, expected, actual in self.failures[:max_witnesses]:
                assign = " ".join(f"{k}={v}" for k, v in inputs.items())
                lines.append(f"  {assign}: expected {expected}, got {actual}")
            if len(self.failures) > max_witnesses:
                lines.append(f"  ... and {len(self.failures) - max_witnesses} more")
        return "\n".join(lines)

    def to_json(self) -> str:
        doc = {
            "mode": self.mode,
            "passed": self.passed,
            "total_vectors": self.total_vectors,
            "boundary_vectors": self.boundary_vectors,
            "requested_count": self.requested_count,
            "seed": self.seed,
            "algorithm": self.algorithm,
            "failures": [
                {"inputs": inputs, "expected": expected, "actual": actual}
                for inputs, expected, actual in self.failures
            ],
        }
        return json.dumps(doc, indent=2) + "\n"


def oracle_product(a: int, b: int, spec: MultiplierSpec) -> int:
    """Exact reference product on host integers, with range checks."""
    lo_a, hi_a = value_range(spec.width_a, spec.sign_a)
    lo_b, hi_b = value_range(spec.width_b, spec.sign_b)
    if not lo_a <= a <= hi_a:
        raise ValueError(f"a={a} out of range [{lo_a}, {hi_a}]")
    if not lo_b <= b <= hi_b:
        raise ValueError(f"b={b} out of range [{lo_b}, {hi_b}]")
    return a * b


def _ports(circuit: Circuit, spec: MultiplierSpec):
    if len(circuit.inputs) != 2 or len(circuit.outputs) != 1:
        raise ValueError("expected a 2-input, 1-output multiplier circuit")
    pa, pb = circuit.inputs
    if pa.width != spec.width_a or pb.width != spec.width_b:
        raise ValueError(
            f"circuit widths {pa.width}x{pb.width} do not match the spec "
            f"{spec.width_a}x{spec.width_b}"
        )
    return pa, pb, circuit.outputs[0]


def _run(circuit: Circuit, spec: MultiplierSpec, a_vals, b_vals, sort_failures: bool):
    pa, pb, po = _ports(circuit, spec)
    expected = np.fromiter(
        (oracle_product(int(a), int(b), spec) for a, b in zip(a_vals, b_vals)),
        dtype=np.int64,
        count=len(a_vals),
    )
    out = evaluate_vector_array(circuit, {pa.name: a_vals, pb.name: b_vals})
    actual = out[po.name]
    bad = np.nonzero(actual != expected)[0]
    failures = [
        (
            {pa.name: int(a_vals[i]), pb.name: int(b_vals[i])},
            int(expected[i]),
            int(actual[i]),
        )
        for i in bad
    ]
    if sort_failures:
        failures.sort(key=lambda f: tuple(f[0].values()))
    return failures


def verify_exhaustive(
    circuit: Circuit, spec: MultiplierSpec, max_width: int = 8
) -> VerifyReport:
    """Sweep every operand pair; collects all failures, never stops early."""
    if max(spec.width_a, spec.width_b) > max_width:
        raise ValueError(
            f"width {max(spec.width_a, spec.width_b)} exceeds the exhaustive cap "
            f"({max_width}); use verify_random"
        )
    lo_a, hi_a = value_range(spec.width_a, spec.sign_a)
    lo_b, hi_b = value_range(spec.width_b, spec.sign_b)
    a_range = np.arange(lo_a, hi_a + 1, dtype=np.int64)
    b_range = np.arange(lo_b, hi_b + 1, dtype=np.int64)
    a_vals = np.repeat(a_range, len(b_range))
    b_vals = np.tile(b_range, len(a_range))
    failures = _run(circuit, spec, a_vals, b_vals, sort_failures=False)
    return VerifyReport(mode="exhaustive", total_vectors=len(a_vals), failures=failures)


def boundary_values(width: int, signedness) -> list[int]:
    """Deterministic corner values for one operand: 0, 1, -1, max, min."""
    lo, hi = value_range(width, signedness)
    candidates = [0, 1, -1, hi, lo]
    out: list[int] = []
    for v in candidates:
        if lo <= v <= hi and v not in out:
            out.append(v)
    return out


def verify_random(
    circuit: Circuit, spec: MultiplierSpec, count: int, seed: int
) -> VerifyReport:
    """Seeded random vectors plus the full boundary-pair cross product.

    The same (seed, count, spec) always tests the same vectors; the PRNG is
    recorded in the report so runs are reproducible elsewhere.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    ba = boundary_values(spec.width_a, spec.sign_a)
    bb = boundary_values(spec.width_b, spec.sign_b)
    corner_a = [a for a in ba for _ in bb]
    corner_b = [b for _ in ba for b in bb]

    lo_a, hi_a = value_range(spec.width_a, spec.sign_a)
    lo_b, hi_b = value_range(spec.width_b, spec.sign_b)
    rng = np.random.default_rng(seed)
    rand_a = rng.integers(lo_a, hi_a, size=count, dtype=np.int64, endpoint=True)
    rand_b = rng.integers(lo_b, hi_b, size=count, dtype=np.int64, endpoint=True)

    a_vals = np.concatenate([np.array(corner_a, dtype=np.int64), rand_a])
    b_vals = np.concatenate([np.array(corner_b, dtype=np.int64), rand_b])
    failures = _run(circuit, spec, a_vals, b_vals, sort_failures=True)
    return VerifyReport(
        mode="random",
        total_vectors=len(a_vals),
        failures=failures,
        boundary_vectors=len(corner_a),
        requested_count=count,
        seed=seed,
        algorithm=RANDOM_ALGORITHM,
    )
