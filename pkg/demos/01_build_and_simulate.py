"""Build a small circuit by hand and simulate it.

The builder hands out dense net ids; gates only ever reference nets that
already exist, so the finished gate list is a ready-to-run evaluation order.
"""

from gatemul import CircuitBuilder, Signedness, evaluate, evaluate_batch
from gatemul.genlib import full_adder, ripple_carry_adder

U = Signedness.UNSIGNED

# --- a full adder from scratch -------------------------------------------
b = CircuitBuilder("fa")
(x,) = b.add_input("x", 1, U)
(y,) = b.add_input("y", 1, U)
(cin,) = b.add_input("cin", 1, U)
s, cout = full_adder(b, x, y, cin)
b.add_output("sum", [s], U)
b.add_output("carry", [cout], U)
fa = b.finalize()

print("full adder truth table:")
for xv in (0, 1):
    for yv in (0, 1):
        for cv in (0, 1):
            out = evaluate(fa, {"x": xv, "y": yv, "cin": cv})
            print(f"  {xv} + {yv} + {cv} -> sum={out['sum']} carry={out['carry']}")

# --- a 4-bit ripple-carry adder ------------------------------------------
b = CircuitBuilder("add4")
xs = b.add_input("x", 4, U)
ys = b.add_input("y", 4, U)
total = ripple_carry_adder(b, xs, ys)  # 5 bits: sum plus carry-out
b.add_output("s", total, U)
add4 = b.finalize()

# 0100 + 1100 = 10000; discarding the carry bit leaves 0000.
out = evaluate(add4, {"x": 0b0100, "y": 0b1100})["s"]
print(f"\n0100 + 1100 = {out:05b}  (mod 16: {out % 16:04b})")

# --- batch evaluation ------------------------------------------------------
vectors = [{"x": x, "y": y} for x in range(16) for y in range(16)]
results = evaluate_batch(add4, vectors)
assert all(r["s"] == v["x"] + v["y"] for v, r in zip(vectors, results))
print(f"\nbatch sweep: all {len(vectors)} sums match integer addition")
