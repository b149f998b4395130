import dataclasses
import json

import pytest

from gatemul.multipliers import (
    Architecture,
    MultiplierSpec,
    baugh_wooley_multiplier,
    decomposed_multiplier,
)
from gatemul.netlist import Circuit, Gate, GateKind, Signedness
from gatemul.verify import (
    boundary_values,
    oracle_product,
    verify_exhaustive,
    verify_random,
)

S = Signedness.SIGNED
U = Signedness.UNSIGNED

BW4_SPEC = MultiplierSpec(4, 4, S, S, Architecture.FLAT_BW)


def partial_product_gates(circuit: Circuit) -> list[int]:
    """Indices of AND2/NAND2 gates fed directly by the two input ports."""
    input_nets = circuit.input_nets()
    return [
        gi
        for gi, g in enumerate(circuit.gates)
        if g.kind in (GateKind.AND2, GateKind.NAND2)
        and all(i in input_nets for i in g.inputs)
    ]


def flip_gate(circuit: Circuit, index: int) -> Circuit:
    g = circuit.gates[index]
    flipped = GateKind.NAND2 if g.kind is GateKind.AND2 else GateKind.AND2
    gates = list(circuit.gates)
    gates[index] = dataclasses.replace(g, kind=flipped)
    return dataclasses.replace(circuit, gates=tuple(gates))


class TestOracle:
    def test_known_products(self):
        assert oracle_product(4, -4, BW4_SPEC) == -16
        assert oracle_product(-8, -8, BW4_SPEC) == 64
        spec8 = MultiplierSpec(8, 8, S, S, Architecture.FLAT_BW)
        assert oracle_product(127, -128, spec8) == -16256

    def test_range_checks(self):
        with pytest.raises(ValueError, match="a="):
            oracle_product(8, 0, BW4_SPEC)
        with pytest.raises(ValueError, match="b="):
            oracle_product(0, -9, BW4_SPEC)
        uspec = MultiplierSpec(4, 4, U, U, Architecture.FLAT_UNSIGNED_ARRAY)
        with pytest.raises(ValueError):
            oracle_product(-1, 0, uspec)


class TestExhaustive:
    def test_bw4_passes(self):
        report = verify_exhaustive(baugh_wooley_multiplier(4), BW4_SPEC)
        assert report.total_vectors == 256
        assert report.passed
        assert report.mode == "exhaustive"

    def test_width_cap(self):
        spec = MultiplierSpec(16, 16, S, S, Architecture.DECOMPOSED, leaf_width=4)
        c = decomposed_multiplier(spec)
        with pytest.raises(ValueError, match="verify_random"):
            verify_exhaustive(c, spec)

    def test_width_mismatch_detected(self):
        c = baugh_wooley_multiplier(4)
        spec8 = MultiplierSpec(8, 8, S, S, Architecture.FLAT_BW)
        with pytest.raises(ValueError, match="do not match"):
            verify_exhaustive(c, spec8)

    def test_corrupted_netlist_reports_witnesses(self):
        c = baugh_wooley_multiplier(4)
        mutant = flip_gate(c, partial_product_gates(c)[0])
        report = verify_exhaustive(mutant, BW4_SPEC)
        assert not report.passed
        inputs, expected, actual = report.failures[0]
        assert set(inputs) == {"A", "B"}
        assert oracle_product(inputs["A"], inputs["B"], BW4_SPEC) == expected
        assert expected != actual


class TestMutationSensitivity:
    def test_every_partial_product_mutant_caught(self):
        c = baugh_wooley_multiplier(4)
        pp = partial_product_gates(c)
        assert len(pp) >= 16
        for gi in pp:
            mutant = flip_gate(c, gi)
            report = verify_exhaustive(mutant, BW4_SPEC)
            assert not report.passed, f"mutant at gate {gi} slipped through"


class TestRandom:
    def test_deterministic_reports(self):
        c = baugh_wooley_multiplier(4)
        r1 = verify_random(c, BW4_SPEC, count=500, seed=7)
        r2 = verify_random(c, BW4_SPEC, count=500, seed=7)
        assert r1 == r2
        assert r1.algorithm == "numpy-pcg64"

    def test_boundary_set_always_included(self):
        # Break the circuit only at (min, min): a count=1 random run must
        # still catch it because boundary pairs are always injected.
        c = baugh_wooley_multiplier(4)
        corrupted = _corrupt_at_min_min(c)
        ok = verify_exhaustive(c, BW4_SPEC)
        assert ok.passed
        report = verify_random(corrupted, BW4_SPEC, count=1, seed=0)
        assert not report.passed
        assert any(f[0] == {"A": -8, "B": -8} for f in report.failures)

    def test_count_one_reports_both_numbers(self):
        c = baugh_wooley_multiplier(4)
        report = verify_random(c, BW4_SPEC, count=1, seed=3)
        assert report.requested_count == 1
        assert report.boundary_vectors == 25  # {0,1,-1,7,-8} x itself
        assert report.total_vectors == 26
        assert report.total_vectors > report.requested_count

    def test_count_must_be_positive(self):
        c = baugh_wooley_multiplier(4)
        with pytest.raises(ValueError):
            verify_random(c, BW4_SPEC, count=0, seed=0)

    def test_failures_sorted_by_input_vector(self):
        # Flipping a partial product breaks many vectors; order must be sorted.
        c = baugh_wooley_multiplier(4)
        mutant = flip_gate(c, partial_product_gates(c)[3])
        report = verify_random(mutant, BW4_SPEC, count=200, seed=1)
        keys = [tuple(f[0].values()) for f in report.failures]
        assert keys == sorted(keys)


def _corrupt_at_min_min(c: Circuit) -> Circuit:
    """XOR the product LSB with (A == -8 and B == -8)."""
    import dataclasses as dc

    n = c.net_count
    a_bits = c.inputs[0].bits
    b_bits = c.inputs[1].bits
    gates = list(c.gates)

    def gate(kind, ins):
        nonlocal n
        gates.append(Gate(kind, tuple(ins), n))
        n += 1
        return n - 1

    # -8 is 1000: MSB set, low bits clear.
    terms = [a_bits[3], b_bits[3]]
    terms += [gate(GateKind.NOT, [x]) for x in (*a_bits[:3], *b_bits[:3])]
    acc = terms[0]
    for t in terms[1:]:
        acc = gate(GateKind.AND2, [acc, t])
    p = c.outputs[0]
    flipped = gate(GateKind.XOR2, [p.bits[0], acc])
    new_bits = (flipped,) + p.bits[1:]
    return dc.replace(
        c,
        gates=tuple(gates),
        net_count=n,
        outputs=(dc.replace(p, bits=new_bits),),
    )


class TestBoundaryValues:
    def test_signed(self):
        assert boundary_values(4, S) == [0, 1, -1, 7, -8]

    def test_unsigned(self):
        assert boundary_values(4, U) == [0, 1, 15]


class TestReportRendering:
    def test_text_pass(self):
        c = baugh_wooley_multiplier(4)
        report = verify_exhaustive(c, BW4_SPEC)
        text = report.to_text()
        assert "256 vectors, 0 failures" in text
        assert "PASS" in text

    def test_text_failure_witnesses(self):
        c = baugh_wooley_multiplier(4)
        mutant = flip_gate(c, partial_product_gates(c)[0])
        text = verify_exhaustive(mutant, BW4_SPEC).to_text()
        assert "FAIL" in text
        assert "expected" in text

    def test_json_round_trip(self):
        c = baugh_wooley_multiplier(4)
        report = verify_random(c, BW4_SPEC, count=10, seed=5)
        doc = json.loads(report.to_json())
        assert doc["passed"] is True
        assert doc["mode"] == "random"
        assert doc["seed"] == 5
        assert doc["algorithm"] == "numpy-pcg64"
        assert doc["total_vectors"] == report.total_vectors
