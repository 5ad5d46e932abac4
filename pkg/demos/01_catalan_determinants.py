"""Catalan numbers as determinants of small binomial Hessenberg matrices.

Run:  python demos/01_catalan_determinants.py
"""
from hesscat import build_path_matrix, catalan, det_recurrence, fuss_boundary

# The boundary a = (0, 1, ..., n-1) caps the i-th horizontal step at height
# i-1: exactly the paths that stay weakly below the diagonal.
for n in range(1, 5):
    bp = fuss_boundary(1, n)
    M = build_path_matrix(bp)
    print(f"n = {n}, a = {bp.a}")
    for row in M.entries:
        print("   ", " ".join(f"{x:2d}" for x in row))
    print(f"    det = {det_recurrence(M).value}")
    print()

# The same numbers from the closed form binomial(2n, n) / (n + 1).
print("closed form, n = 0..10:", [catalan(n) for n in range(11)])
