"""Row-by-row elimination: the determinant is the product of the pivots.

Run:  python demos/04_elimination.py
"""
from hesscat import ZeroPivot, build_path_matrix, custom_boundary, det_elimination, format_rational

for heights in ([0, 0, 1, 1], [0, 0, 0, 1, 1, 2, 2, 2, 3]):
    M = build_path_matrix(custom_boundary(heights, [0] * len(heights)))
    report = det_elimination(M)
    print("a =", heights)
    print("   pivots:", " ".join(format_rational(p) for p in report.diagonal))
    print("   det   :", report.value)

# A zero pivot leaves the procedure undefined even when det != 0.
try:
    det_elimination([[0, 1], [1, 0]])
except ZeroPivot as exc:
    print("\n[[0, 1], [1, 0]] ->", exc)
