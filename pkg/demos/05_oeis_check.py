"""Check generated sequences against a local OEIS b-file.

Run:  python demos/05_oeis_check.py
The same check from the shell:
    hesscat oeis-check --kind catalan --bfile demos/data/b000108.txt
"""
from pathlib import Path

from hesscat import BFile, SequenceSpec, compare, parse_bfile

path = Path(__file__).parent / "data" / "b000108.txt"
bfile = parse_bfile(path.read_bytes())
print(f"{path.name}: indices {bfile.indices.start}..{bfile.indices.stop - 1}")

for route in ("closed_form", "determinant"):
    result = compare(SequenceSpec.catalan(0, 30), bfile, route=route)
    print(f"{route:>12}: matched {result.matched}, mismatches {result.mismatches}")

# Fault injection: one wrong value is reported with its index.
values = [v for _, v in bfile.pairs]
values[7] += 1
result = compare(SequenceSpec.catalan(0, 30), BFile.from_values(values))
print("corrupted b-file:", result.mismatches)
