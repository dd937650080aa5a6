"""Interlaced polynomials and pencils: a guided tour.

Two real-rooted polynomials strictly interlace when their roots alternate;
exactly then does every combination a*f + b*g keep all roots real and
distinct, so the pair spans a whole projective line of such polynomials.
This demo builds pencils, extracts their canonical members, projects them
down one degree, and watches the root-separation function over a line.
"""

from fractions import Fraction as F

from redstab import (
    PLUS_INFINITY,
    Pencil,
    RootTuple,
    is_interlaced,
    member_with_root,
    pencil_canonical,
    pencil_project,
    roots_to_poly,
    sep,
    sep_pencil,
    shift_pencil,
    stabilizing_shift,
)

print(__doc__)

# --- interlacing is an alternation pattern ---------------------------------
f = roots_to_poly(RootTuple((F(0), F(2))))       # x(x-2)
g = roots_to_poly(RootTuple((F(1), F(3))))       # (x-1)(x-3)
print("roots 0 < 1 < 2 < 3 alternate:", is_interlaced(f, g))

h = roots_to_poly(RootTuple((F(3), F(4))))       # (x-3)(x-4)
f2 = roots_to_poly(RootTuple((F(0), F(1))))      # x(x-1)
print("roots 0 < 1 << 3 < 4 do not:  ", is_interlaced(f2, h))
print("  (some member of that pencil picks up a double root)")

# a degree-drop partner counts as having a root at +infinity
g_inf = roots_to_poly(RootTuple((F(1), PLUS_INFINITY)), 2)   # x - 1
print("x(x-2) vs x-1 (root at +inf):", is_interlaced(f, g_inf))

# --- the canonical member and the projection -------------------------------
line = Pencil(f, g_inf)
print("\ncanonical degree-1 member of the line:", pencil_canonical(line).coeffs)
proj = pencil_project(line)
print("projected line lives one degree lower:", proj.ambient)
print("member of the line vanishing at 3:    ", member_with_root(line, 3).coeffs)

# --- separation over a whole line -------------------------------------------
cubic = roots_to_poly(RootTuple((F(0), F(2), F(4))))
print("\nsep of x(x-2)(x-4):", sep(cubic))
deriv_line = Pencil(cubic, cubic.derivative())
print("sep over the derivative line:", round(sep_pencil(deriv_line), 9),
      " (never below sep of the polynomial itself)")

shifted = shift_pencil(cubic, 1)
print("sep over the shift line m=1: ", round(sep_pencil(shifted), 9),
      " (> min(m, sep - m) = 1)")

# --- stabilizing a line by sliding one root far left ------------------------
n_shift = stabilizing_shift(f, g, 0.5)
print("\nshift N making sep of the line through f and (x+N)g exceed 0.5:",
      n_shift)
