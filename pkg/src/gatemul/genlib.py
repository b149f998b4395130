"""Reusable arithmetic blocks: half/full adders, ripple carry, carry-save trees.

``half_adder`` and ``full_adder`` are fixed-shape macros (2 and 5 gates) so
depth and area stay deterministic.  The composite builders below fold
constants instead of emitting degenerate adder cells, which keeps gate
censuses honest when correction constants or zero padding flow through.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Sequence

from .netlist import CircuitBuilder, GateKind, NetId, NetlistError

#: A weighted row: LSB-first bits placed at columns weight, weight+1, ...
Row = tuple[Sequence[NetId], int]


def not_(b: CircuitBuilder, x: NetId) -> NetId:
    if b.is_const0(x):
        return b.const1()
    if b.is_const1(x):
        return b.const0()
    return b.add_gate(GateKind.NOT, [x])


def and2(b: CircuitBuilder, x: NetId, y: NetId) -> NetId:
    if b.is_const0(x) or b.is_const0(y):
        return b.const0()
    if b.is_const1(x):
        return y
    if b.is_const1(y):
        return x
    return b.add_gate(GateKind.AND2, [x, y])


def nand2(b: CircuitBuilder, x: NetId, y: NetId) -> NetId:
    if b.is_const0(x) or b.is_const0(y):
        return b.const1()
    if b.is_const1(x):
        return not_(b, y)
    if b.is_const1(y):
        return not_(b, x)
    return b.add_gate(GateKind.NAND2, [x, y])


def or2(b: CircuitBuilder, x: NetId, y: NetId) -> NetId:
    if b.is_const1(x) or b.is_const1(y):
        return b.const1()
    if b.is_const0(x):
        return y
    if b.is_const0(y):
        return x
    return b.add_gate(GateKind.OR2, [x, y])


def xor2(b: CircuitBuilder, x: NetId, y: NetId) -> NetId:
    if b.is_const0(x):
        return y
    if b.is_const0(y):
        return x
    if b.is_const1(x):
        return not_(b, y)
    if b.is_const1(y):
        return not_(b, x)
    return b.add_gate(GateKind.XOR2, [x, y])


def half_adder(b: CircuitBuilder, a: NetId, x: NetId) -> tuple[NetId, NetId]:
    """sum = a^x, carry = a&x.  Always adds exactly 2 gates."""
    s = b.add_gate(GateKind.XOR2, [a, x])
    c = b.add_gate(GateKind.AND2, [a, x])
    return s, c


def full_adder(b: CircuitBuilder, a: NetId, x: NetId, cin: NetId) -> tuple[NetId, NetId]:
    """sum = a^x^cin, carry = (a&x) | (cin & (a^x)).  Always adds 5 gates."""
    s1 = b.add_gate(GateKind.XOR2, [a, x])
    s = b.add_gate(GateKind.XOR2, [s1, cin])
    c1 = b.add_gate(GateKind.AND2, [a, x])
    c2 = b.add_gate(GateKind.AND2, [cin, s1])
    carry = b.add_gate(GateKind.OR2, [c1, c2])
    return s, carry


def _add_bit3(b: CircuitBuilder, x: NetId, y: NetId, z: NetId) -> tuple[NetId, NetId]:
    """3:2 compress one column, folding any known-constant operands."""
    ones = 0
    rest: list[NetId] = []
    for t in (x, y, z):
        if b.is_const1(t):
            ones += 1
        elif not b.is_const0(t):
            rest.append(t)
    if ones == 0:
        if len(rest) == 3:
            return full_adder(b, rest[0], rest[1], rest[2])
        if len(rest) == 2:
            return half_adder(b, rest[0], rest[1])
        if len(rest) == 1:
            return rest[0], b.const0()
        return b.const0(), b.const0()
    if ones == 1:
        if len(rest) == 2:
            s = b.add_gate(GateKind.XNOR2, rest)
            c = b.add_gate(GateKind.OR2, rest)
            return s, c
        if len(rest) == 1:
            return not_(b, rest[0]), rest[0]
        return b.const1(), b.const0()
    if ones == 2:
        if len(rest) == 1:
            return rest[0], b.const1()
        return b.const0(), b.const1()
    return b.const1(), b.const1()


def _sum_bit3(b: CircuitBuilder, x: NetId, y: NetId, z: NetId) -> NetId:
    """Sum output only, for columns whose carry would be discarded."""
    return xor2(b, xor2(b, x, y), z)


def ripple_carry_adder(
    b: CircuitBuilder,
    a_bits: Sequence[NetId],
    b_bits: Sequence[NetId],
    cin: NetId | None = None,
) -> list[NetId]:
    """n-bit ripple addition; returns n sum bits plus the carry-out (MSB).

    Callers needing modular addition drop the top bit, or use
    :func:`ripple_carry_adder_mod` which never builds the carry-out logic.
    """
    if len(a_bits) != len(b_bits):
        raise NetlistError(
            f"ripple_carry_adder width mismatch: {len(a_bits)} vs {len(b_bits)}"
        )
    if not a_bits:
        raise NetlistError("ripple_carry_adder needs width >= 1")
    carry = cin if cin is not None else b.const0()
    sums: list[NetId] = []
    for ai, bi in zip(a_bits, b_bits):
        s, carry = _add_bit3(b, ai, bi, carry)
        sums.append(s)
    sums.append(carry)
    return sums


def ripple_carry_adder_mod(
    b: CircuitBuilder,
    a_bits: Sequence[NetId],
    b_bits: Sequence[NetId],
    cin: NetId | None = None,
) -> list[NetId]:
    """Ripple addition modulo 2**n: n bits out, no carry-out gates."""
    if len(a_bits) != len(b_bits):
        raise NetlistError(
            f"ripple_carry_adder_mod width mismatch: {len(a_bits)} vs {len(b_bits)}"
        )
    if not a_bits:
        raise NetlistError("ripple_carry_adder_mod needs width >= 1")
    carry = cin if cin is not None else b.const0()
    sums: list[NetId] = []
    for ai, bi in zip(a_bits[:-1], b_bits[:-1]):
        s, carry = _add_bit3(b, ai, bi, carry)
        sums.append(s)
    sums.append(_sum_bit3(b, a_bits[-1], b_bits[-1], carry))
    return sums


def carry_save_reduce(
    b: CircuitBuilder,
    rows: Sequence[Row],
    drop_above: int | None = None,
) -> tuple[list[NetId], list[NetId]]:
    """Compress weighted rows to two rows whose sum equals the row total.

    Greedy per-column 3:2 compression, columns taken in ascending order
    within each pass, until every column holds at most two dots.  The two
    returned rows are aligned at column 0; one final ripple addition of the
    pair yields the total.  With two or fewer equally-weighted rows the
    input is returned unchanged (no gates added).

    ``drop_above`` discards columns at or above the given index, i.e. the
    preserved total is modulo 2**drop_above.
    """
    if not rows:
        raise NetlistError("carry_save_reduce needs at least one row")
    norm = [(list(bits), int(w)) for bits, w in rows]
    for bits, w in norm:
        if not bits:
            raise NetlistError("carry_save_reduce rows must be non-empty")
        if w < 0:
            raise NetlistError("row weights must be non-negative")

    if len(norm) <= 2 and len({w for _, w in norm}) == 1:
        first = norm[0][0]
        if len(norm) == 2:
            return list(first), list(norm[1][0])
        return list(first), [b.const0()] * len(first)

    cols: dict[int, list[NetId]] = defaultdict(list)
    for bits, w in norm:
        for i, net in enumerate(bits):
            c = w + i
            if drop_above is not None and c >= drop_above:
                continue
            if not b.is_const0(net):
                cols[c].append(net)

    def _put(d: dict[int, list[NetId]], c: int, net: NetId) -> None:
        if drop_above is not None and c >= drop_above:
            return
        if not b.is_const0(net):
            d[c].append(net)

    while any(len(dots) > 2 for dots in cols.values()):
        nxt: dict[int, list[NetId]] = defaultdict(list)
        for c in sorted(cols):
            dots = cols[c]
            i = 0
            while len(dots) - i >= 3:
                trio = dots[i : i + 3]
                if drop_above is not None and c + 1 >= drop_above:
                    _put(nxt, c, _sum_bit3(b, *trio))
                else:
                    s, carry = _add_bit3(b, *trio)
                    _put(nxt, c, s)
                    _put(nxt, c + 1, carry)
                i += 3
            for net in dots[i:]:
                _put(nxt, c, net)
        cols = nxt

    if drop_above is not None:
        width = drop_above
    else:
        width = (max(cols) + 1) if cols else 1
    row_a: list[NetId] = []
    row_b: list[NetId] = []
    for c in range(width):
        dots = cols.get(c, [])
        row_a.append(dots[0] if len(dots) > 0 else b.const0())
        row_b.append(dots[1] if len(dots) > 1 else b.const0())
    return row_a, row_b
