"""Restriction to hypersurfaces on the parameter side.

A degree-m section sends a tuple t to the roots of
prod(x - t_i) - prod(x - t_i - m): one ambient lower, separation still
above m, different degrees commuting.  On charges this is composition with
the pushforward matrix, and the composed parts come out exactly m times the
charges of the restricted tuples.
"""

from fractions import Fraction as F

from redstab import (
    PLUS_INFINITY,
    CentralCharge,
    RootTuple,
    pushforward_matrix,
    reduced_charge,
    restrict_charge,
    xi,
    xi_multi,
)

print(__doc__)

t = RootTuple((F(0), F(2), F(4)))
print("restriction of (0, 2, 4) by a degree-1 section:",
      tuple(float(x) for x in xi(t, F(1)).entries))

exact = xi(RootTuple((F(-3, 2), F(2), F(11, 2))), F(1))
print("a tuple with rational image:", exact.entries)

print("chained degrees commute:",
      tuple(float(x) for x in xi_multi(RootTuple((F(0), F(3), F(6))), (F(1), F(2))).entries),
      "==",
      tuple(float(x) for x in xi_multi(RootTuple((F(0), F(3), F(6))), (F(2), F(1))).entries))

print("\npushforward matrix from ambient 1 to ambient 2 at m=1:")
for row in pushforward_matrix(2, F(1)):
    print("  ", row)

Z = CentralCharge(reduced_charge(RootTuple((F(-4), F(0), F(4)))),
                  reduced_charge(RootTuple((F(-2), F(2), PLUS_INFINITY))))
rc = restrict_charge(Z, F(1))
print("\nthreefold charge restricted to a degree-1 surface:")
print("  real tuple ->", tuple(float(x) for x in rc.s.entries))
print("  imag tuple ->", rc.t.entries)
print("  scales:", rc.scale_real, rc.scale_imag)

Z2 = CentralCharge(reduced_charge(RootTuple((F(-1), F(3)))),
                   reduced_charge(RootTuple((F(0), F(4)))))
rc2 = restrict_charge(Z2, F(1))
print("\nsurface charge restricted to a curve: slope threshold",
      rc2.t.entries[0], "= (t1 + t2 + m)/2")
