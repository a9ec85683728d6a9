"""The headline predicates on the two-vertex worked example.

T = P2 over the quiver 1 <-- 2 is sincere and pretilting yet neither
silting nor tilting: the projective P1 is a nonzero module with
Hom(T, P1) = Ext^1(T, P1) = 0, so the vanishing condition fails.
"""

import json

from siltlab import a2, load_workbench
from siltlab.harness import reproduce_example
from siltlab.predicates import PREDICATES

wb = load_workbench(a2())
print("corpus:", ", ".join(wb.names))

t = (wb.corpus.index_of("P2"),)
for name in ("sincere", "cosincere", "presilting", "pretilting",
             "silting", "tilting", "vanishing"):
    report = PREDICATES[name](wb, t)
    line = f"  {name:12s} {report.verdict}"
    if report.witness:
        line += f"   witness: {report.witness}"
    print(line)

print()
print("full worked-example report (byte-deterministic):")
print(json.dumps(reproduce_example(2), sort_keys=True, indent=2))
