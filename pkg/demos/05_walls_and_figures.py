"""Wall loci and their pictures.

Charges are linear in the elementary symmetric functions of the parameter
tuple, so vanishing loci are lines in symmetric coordinates: surface walls
live in (t1+t2, t1*t2) below the parabola, and the projective-threefold
point class cuts the cubic locus t1 t2 t3 = -6m drawn in (-sum t, sum titj)
above its double-root boundary curve.  Everything renders to deterministic
CSV or standalone SVG.
"""

from fractions import Fraction as F

from redstab import (
    emit_plot,
    figure_hilb,
    figure_surface,
    hilb_boundary,
    hilb_bounds,
    hilb_locus,
    numerical_wall,
    sb_v_surface,
)

print(__doc__)

# surface walls in (p, q) = (t1 + t2, t1 t2)
loc1 = sb_v_surface((1, 0, -1))
print("locus of (1,0,-1): horizontal line q =", loc1.points[0][1])
loc2 = sb_v_surface((1, -1, F(1, 2)))
print("locus of (1,-1,1/2): q = -1 - p, e.g.", loc2.points[:2])

# pairwise numerical wall: two linear equations in symmetric coordinates
wall = numerical_wall((1, 0, 2), (0, 1, 0), region=((-5, 5), (-5, 5)))
print("wall of (1,0,2) against (0,1,0):", wall.points,
      "residual", max(wall.residuals))

# point class on the projective threefold
for m in (1, 2, 10):
    print(f"m={m}: integer emptiness bounds (N, M) =", hilb_bounds(m))
boundary = hilb_boundary(1, t_range=(1.0, 1.0), samples=1)
print("boundary curve point at t=1, m=1:", boundary.points[0])
interior = hilb_locus(2, samples=10)
print("interior locus samples:", len(interior.points),
      "max kernel residual:", max(interior.residuals))

# figures to disk
with open("figure_surface.svg", "w") as fh:
    fh.write(figure_surface(c=1))
with open("figure_point_class.svg", "w") as fh:
    fh.write(figure_hilb(m=2))
print("\nwrote figure_surface.svg and figure_point_class.svg")
print("CSV flavor:\n" + emit_plot([loc1], fmt="csv").splitlines()[1])
