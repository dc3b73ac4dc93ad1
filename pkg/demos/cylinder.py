"""Annulus curves U_n for r = 2: growth, the conserved angle and the recursion."""

import sys

from ncsurf.surfaces.cylinder import CylinderModel, cylinder_check

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 12
m = CylinderModel(2)
for n in range(1, 6):
    print(f"U_{n} = {m.U(n)}")
print("H =", m.h_candidate())

rep = cylinder_check(2, n_max)
print("terms:", rep["term_counts"])
print("result:", rep["result"])
