"""Reduced central charges on the polarized lattice.

A parameter tuple t1 < ... < tn determines a linear functional on the
lattice (H^n ch_0, ..., ch_n): the normalized determinant against the
twisted vectors gamma(t_i).  Under the coefficient dictionary
a_k x^k <-> k! a_k e*_k this functional IS the monic root polynomial of the
tuple (up to n!), so interlacing, pencils, and separation all transfer.
"""

from fractions import Fraction as F

from redstab import (
    PLUS_INFINITY,
    CentralCharge,
    Pencil,
    RootTuple,
    decompose,
    eval_charge,
    gamma,
    in_Bn,
    in_Un,
    kernel_parameter,
    reduced_charge,
    roots_to_poly,
)

print(__doc__)

t = RootTuple((F(0), F(2)))
B = reduced_charge(t)
print("weights of the charge at (0, 2):", B.weights)
print("  ch_n weight is exactly 1:     ", eval_charge(B, (0, 0, 1)))
print("  vanishes on gamma(0), gamma(2):",
      eval_charge(B, gamma(F(0), 2)), eval_charge(B, gamma(F(2), 2)))

# the point class on the projective threefold
t3 = RootTuple((F(-3), F(-2), F(-1)))
val = eval_charge(reduced_charge(t3), (1, 0, 0, -F(1)))
print("\npoint class (1,0,0,-m), m=1, at t=(-3,-2,-1):", val,
      "= -m - t1*t2*t3/6 exactly")

# membership with extracted scale and parameters
scaled = B.scaled(3)
c, back = in_Bn(scaled, d=1)
print("\nmembership of 3*B with separation above 1:", (c, back.entries))

Z = CentralCharge(reduced_charge(RootTuple((F(1), F(3)))).scaled(-1), B)
print("central charge -B_(1,3) + i B_(0,2) in the interlaced cone:", in_Un(Z))

# sign decomposition along the kernel
v = tuple(a - b for a, b in zip(gamma(F(2), 2), gamma(F(0), 2)))
dec = decompose(v, t)
print("\ndecomposition of gamma(2) - gamma(0):", dec.coeffs, dec.verdict)
v_mixed = tuple(a + b for a, b in zip(gamma(F(2), 2), gamma(F(0), 2)))
print("decomposition of gamma(2) + gamma(0):",
      decompose(v_mixed, t).coeffs, decompose(v_mixed, t).verdict)

# the unique parameter on a line of charges vanishing on a vector
line = Pencil(roots_to_poly(t), roots_to_poly(RootTuple((F(1), F(3)))))
print("\nline parameter annihilating (1,1,1):",
      tuple(float(x) for x in kernel_parameter(line, (F(1), F(1), F(1))).entries))
