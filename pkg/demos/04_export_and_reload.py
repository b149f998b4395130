"""Serialize circuits to structural Verilog and JSON, and load them back.

JSON round-trips are lossless (same ports, gates, and net indices); Verilog
emission is deterministic, so the same generator always produces the same
bytes.
"""

import json
from pathlib import Path
from tempfile import TemporaryDirectory

from gatemul import (
    baugh_wooley_multiplier,
    evaluate,
    from_json,
    to_json,
    to_verilog,
)

bw4 = baugh_wooley_multiplier(4)

# --- structural Verilog -----------------------------------------------------
verilog = to_verilog(bw4)
print("first lines of bw4.v:")
for line in verilog.splitlines()[:8]:
    print(" ", line)
print("  ...")
assert verilog == to_verilog(baugh_wooley_multiplier(4))  # byte-stable

# --- JSON interchange --------------------------------------------------------
text = to_json(bw4)
doc = json.loads(text)
print(f"\nJSON: {doc['net_count']} nets, {len(doc['gates'])} gates,"
      f" inputs {[p['name'] for p in doc['inputs']]}")

reloaded = from_json(text)
assert reloaded == bw4
print("round trip is structurally identical:", reloaded == bw4)
assert evaluate(reloaded, {"A": -3, "B": 7}) == evaluate(bw4, {"A": -3, "B": 7})

# --- files on disk -----------------------------------------------------------
with TemporaryDirectory() as tmp:
    path = Path(tmp) / "bw4.json"
    path.write_text(text, encoding="utf-8", newline="\n")
    again = from_json(path.read_text(encoding="utf-8"))
    print("reloaded from disk:", again.name, "-", evaluate(again, {"A": 4, "B": -4}))
