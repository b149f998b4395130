import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from gatemul.genlib import (
    carry_save_reduce,
    full_adder,
    half_adder,
    ripple_carry_adder,
    ripple_carry_adder_mod,
)
from gatemul.netlist import CircuitBuilder, NetlistError, Signedness
from gatemul.sim import evaluate, evaluate_batch
from gatemul.timing import DelayModel, critical_path

from oracles import bits_msb, longest_path_delay

U = Signedness.UNSIGNED


def _adder_circuit(width, cell):
    b = CircuitBuilder("add")
    xs = b.add_input("x", width, U)
    ys = b.add_input("y", width, U)
    before = b.gate_count
    out = cell(b, xs, ys)
    added = b.gate_count - before
    b.add_output("s", out, U)
    return b.finalize(), added


def test_half_adder_truth_table_and_cost():
    b = CircuitBuilder("ha")
    (x,) = b.add_input("x", 1, U)
    (y,) = b.add_input("y", 1, U)
    before = b.gate_count
    s, c = half_adder(b, x, y)
    assert b.gate_count - before == 2
    b.add_output("s", [s], U)
    b.add_output("c", [c], U)
    circ = b.finalize()
    expect = {(0, 0): (0, 0), (0, 1): (1, 0), (1, 0): (1, 0), (1, 1): (0, 1)}
    for (xv, yv), (sv, cv) in expect.items():
        assert evaluate(circ, {"x": xv, "y": yv}) == {"s": sv, "c": cv}


def _full_adder_circuit():
    b = CircuitBuilder("fa")
    (x,) = b.add_input("x", 1, U)
    (y,) = b.add_input("y", 1, U)
    (z,) = b.add_input("z", 1, U)
    before = b.gate_count
    s, c = full_adder(b, x, y, z)
    added = b.gate_count - before
    b.add_output("s", [s], U)
    b.add_output("c", [c], U)
    return b.finalize(), added


def test_full_adder_truth_table_and_cost():
    circ, added = _full_adder_circuit()
    assert added == 5
    for xv, yv, zv in itertools.product((0, 1), repeat=3):
        total = xv + yv + zv
        out = evaluate(circ, {"x": xv, "y": yv, "z": zv})
        assert out == {"s": total & 1, "c": total >> 1}


def test_full_adder_unit_depth_is_three():
    circ, _ = _full_adder_circuit()
    unit = DelayModel.unit()
    # Brute-force enumeration of every input-to-output path agrees.
    assert longest_path_delay(circ, unit) == 3
    assert critical_path(circ, unit).critical_delay == 3


class TestRippleCarryAdder:
    def test_worked_binary_example(self):
        # 0100 + 1100 = 10000; discarding the carry leaves 0000.
        circ, _ = _adder_circuit(4, lambda b, x, y: ripple_carry_adder(b, x, y))
        out = evaluate(circ, {"x": 4, "y": 12})["s"]
        assert out == 16  # 10000 MSB-first
        assert out % 16 == 0

    def test_zero_plus_zero(self):
        circ, _ = _adder_circuit(1, lambda b, x, y: ripple_carry_adder(b, x, y))
        assert evaluate(circ, {"x": 0, "y": 0})["s"] == 0

    @pytest.mark.parametrize("width", range(1, 7))
    def test_exhaustive_against_integer_addition(self, width):
        circ, _ = _adder_circuit(width, lambda b, x, y: ripple_carry_adder(b, x, y))
        vecs = [
            {"x": x, "y": y}
            for x in range(1 << width)
            for y in range(1 << width)
        ]
        outs = evaluate_batch(circ, vecs)
        for vec, out in zip(vecs, outs):
            assert out["s"] == vec["x"] + vec["y"]

    def test_width_mismatch(self):
        b = CircuitBuilder("t")
        xs = b.add_input("x", 3, U)
        ys = b.add_input("y", 2, U)
        with pytest.raises(NetlistError, match="mismatch"):
            ripple_carry_adder(b, xs, ys)

    def test_explicit_carry_in(self):
        def cell(b, x, y):
            (cin,) = b.add_input("cin", 1, U)
            return ripple_carry_adder(b, x, y, cin)

        b = CircuitBuilder("add")
        xs = b.add_input("x", 3, U)
        ys = b.add_input("y", 3, U)
        out = cell(b, xs, ys)
        b.add_output("s", out, U)
        circ = b.finalize()
        for x in range(8):
            for y in range(8):
                for cin in (0, 1):
                    got = evaluate(circ, {"x": x, "y": y, "cin": cin})["s"]
                    assert got == x + y + cin


@pytest.mark.parametrize("width", range(1, 6))
def test_mod_adder_exhaustive(width):
    circ, _ = _adder_circuit(width, lambda b, x, y: ripple_carry_adder_mod(b, x, y))
    vecs = [
        {"x": x, "y": y} for x in range(1 << width) for y in range(1 << width)
    ]
    outs = evaluate_batch(circ, vecs)
    for vec, out in zip(vecs, outs):
        assert out["s"] == (vec["x"] + vec["y"]) % (1 << width)


class TestCarrySaveReduce:
    def test_single_compressor(self):
        b = CircuitBuilder("csa")
        (x,) = b.add_input("x", 1, U)
        (y,) = b.add_input("y", 1, U)
        (z,) = b.add_input("z", 1, U)
        ra, rb = carry_save_reduce(b, [([x], 0), ([y], 0), ([z], 0)])
        b.add_output("ra", ra, U)
        b.add_output("rb", rb, U)
        circ = b.finalize()
        out = evaluate(circ, {"x": 1, "y": 1, "z": 1})
        assert out["ra"] + out["rb"] == 3

    def test_two_rows_pass_through_unchanged(self):
        b = CircuitBuilder("csa")
        xs = b.add_input("x", 4, U)
        ys = b.add_input("y", 4, U)
        before = b.gate_count
        ra, rb = carry_save_reduce(b, [(xs, 0), (ys, 0)])
        assert b.gate_count == before
        assert ra == xs and rb == ys

    def test_random_rows_preserve_sum(self):
        b = CircuitBuilder("csa")
        rows = [b.add_input(f"r{i}", 8, U) for i in range(4)]
        ra, rb = carry_save_reduce(b, [(r, 0) for r in rows])
        b.add_output("ra", ra, U)
        b.add_output("rb", rb, U)
        circ = b.finalize()
        rng = random.Random(5)
        vecs = [
            {f"r{i}": rng.randrange(256) for i in range(4)} for _ in range(1000)
        ]
        outs = evaluate_batch(circ, vecs)
        for vec, out in zip(vecs, outs):
            assert out["ra"] + out["rb"] == sum(vec.values())

    def test_weighted_rows(self):
        b = CircuitBuilder("csa")
        rows = [(b.add_input(f"r{i}", 3, U), w) for i, w in enumerate((0, 2, 3, 1))]
        ra, rb = carry_save_reduce(b, rows)
        b.add_output("ra", ra, U)
        b.add_output("rb", rb, U)
        circ = b.finalize()
        rng = random.Random(6)
        for _ in range(200):
            vec = {f"r{i}": rng.randrange(8) for i in range(4)}
            out = evaluate(circ, vec)
            want = sum(vec[f"r{i}"] << w for i, (_, w) in enumerate(rows))
            assert out["ra"] + out["rb"] == want

    def test_drop_above_reduces_modulo(self):
        b = CircuitBuilder("csa")
        rows = [b.add_input(f"r{i}", 4, U) for i in range(5)]
        ra, rb = carry_save_reduce(b, [(r, 0) for r in rows], drop_above=4)
        assert len(ra) == len(rb) == 4
        b.add_output("ra", ra, U)
        b.add_output("rb", rb, U)
        circ = b.finalize()
        rng = random.Random(7)
        for _ in range(300):
            vec = {f"r{i}": rng.randrange(16) for i in range(5)}
            out = evaluate(circ, vec)
            assert (out["ra"] + out["rb"]) % 16 == sum(vec.values()) % 16

    def test_empty_rows_rejected(self):
        b = CircuitBuilder("csa")
        with pytest.raises(NetlistError):
            carry_save_reduce(b, [])

    @settings(max_examples=30, deadline=None)
    @given(st.data())
    def test_sum_preservation_property(self, data):
        nrows = data.draw(st.integers(min_value=3, max_value=6))
        width = data.draw(st.integers(min_value=1, max_value=5))
        weights = data.draw(
            st.lists(st.integers(min_value=0, max_value=3), min_size=nrows, max_size=nrows)
        )
        b = CircuitBuilder("csa")
        rows = [(b.add_input(f"r{i}", width, U), weights[i]) for i in range(nrows)]
        ra, rb = carry_save_reduce(b, rows)
        b.add_output("ra", ra, U)
        b.add_output("rb", rb, U)
        circ = b.finalize()
        values = data.draw(
            st.lists(
                st.integers(min_value=0, max_value=(1 << width) - 1),
                min_size=nrows,
                max_size=nrows,
            )
        )
        vec = {f"r{i}": values[i] for i in range(nrows)}
        out = evaluate(circ, vec)
        assert out["ra"] + out["rb"] == sum(v << w for v, w in zip(values, weights))


def test_discarded_carry_matches_signed_reading():
    # Adding +4 (0100) and -4 (1100) and discarding the carry gives 0.
    assert bits_msb("0100") == [0, 0, 1, 0]
    circ, _ = _adder_circuit(4, lambda b, x, y: ripple_carry_adder_mod(b, x, y))
    assert evaluate(circ, {"x": 4, "y": 12})["s"] == 0
