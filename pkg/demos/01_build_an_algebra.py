"""Build a quotient path algebra from a text presentation.

The `.alg` format lists the field, the quiver and the relations; the
builder computes a path basis degree by degree and rejects presentations
that are not admissible.
"""

import pathlib

from siltlab import load_algebra_file, serialize

ALG_DIR = pathlib.Path(__file__).resolve().parent.parent / "algebras"

parsed = load_algebra_file(ALG_DIR / "nakayama_a3.alg")
algebra = parsed.build()

print("input (canonical form):")
print(serialize(parsed))

info = algebra.describe()
print(f"dimension over F_{info['field']}: {info['dimension']}")
print("path basis:", ", ".join(info["basis"]))

# the relation alpha*beta kills the only length-2 path, so the radical
# square of this algebra is zero
print("radical filtration sizes:",
      [len(layer) for layer in algebra.radical_filtration()])
