#!/usr/bin/env python3
"""Smith normal form reference values via sympy (invariant factors are
convention-free, unlike Hermite forms, so they can be frozen directly)."""

from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form

CASES = [
    ("identity2", [[1, 0], [0, 1]]),
    ("diag22", [[2, 0], [0, 2]]),
    ("rank1", [[1, 2, 3], [2, 4, 6]]),
    ("mixed34", [[2, 4, 4, 2], [-6, 6, 12, 0], [10, -4, -16, 6]]),
    ("lifted_tetrahedron", [[0, 0, 0, 1], [1, 1, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1]]),
    ("tall42", [[2, 1], [1, 1], [3, 0], [0, 3]]),
]

for name, rows in CASES:
    s = smith_normal_form(Matrix(rows))
    diag = [abs(s[i, i]) for i in range(min(s.rows, s.cols))]
    diag = [d for d in diag if d != 0]
    print(name, diag)
