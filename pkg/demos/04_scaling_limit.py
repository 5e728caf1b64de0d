"""Scaling limits in the half plane and a lattice check of the boundary kernel.

Run with ``python demos/04_scaling_limit.py`` (about half a minute).
"""
from tripledimer import scaling as S

z = [0, 1, 2, 3, 4, 5]
p = S.six_point_probs(z)
print("six equally spaced points:", [round(x, 6) for x in p], "sum", sum(p))
print("first entry is 135/256 =", 135 / 256, "; hexagon is 5/128 =", 5 / 128)

# The entries of X on a square-grid strip approach 2 eps / (pi (z_b - z_w)).
for c in S.lattice_entry_sequence(4):
    print(f"node spacing {c.spacing:3d} lattice steps: ratio to the limit {c.ratio:.4f}")

lat, lim = S.lattice_four_point([1, 4, 7, 10], box=8)
print(f"four-point connection probability: lattice {lat:.4f}, limit {lim:.4f}")
