"""Paths under a line of rational slope r/m, counted three ways.

Run:  python demos/03_rational_slope.py
"""
from hesscat import (
    bizley_count,
    build_path_matrix,
    count_below_line,
    det_all,
    enumerate_partitions,
    rational_boundary,
)

m, r = 7, 16
bp = rational_boundary(m, r, 1)
print("boundary heights for y = 16x/7:", bp.a)
M = build_path_matrix(bp)
for row in M.entries:
    print("   ", " ".join(f"{x:3d}" for x in row))

result = det_all(M)
for engine, report in result.reports.items():
    print(f"{engine.cli_name:>14}: {report.value}")
print(f"{'Bizley sum':>14}: {bizley_count(m, r, 1)}")
print(f"{'grid DP':>14}: {count_below_line(m, r, 1).value}")

# Bizley's sum runs over partitions of n; for n = 4 there are five.
print("\npartitions of 4:", [p.parts() for p in enumerate_partitions(4)])
print("W_n for slope 3/2, n = 0..6:", [bizley_count(2, 3, n) for n in range(7)])
