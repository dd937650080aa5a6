"""The threefold slice: parameters, validity, and the discriminant family.

The slice charge -ch3^b + b H ch2^b + a H^2 ch1^b + i (H ch2^b - a^2/2 H^3 ch0)
has kernel roots in closed form; the validity region a > a^2/6 + |b| a/2 is
exactly strict interlacing of the real and imaginary kernel tuples.  A
kernel vector of a parameter tuple is sign-coherent precisely when the whole
two-parameter family of discriminant inequalities K*Delta + nabla^beta >= 0
holds over the pencils through its charge.
"""

from fractions import Fraction as F

from redstab import (
    RootTuple,
    ThreefoldParams,
    delta_H,
    family_equiv_check,
    gamma,
    max_alpha,
    nabla_beta,
    params_from_tuples,
    threefold_charge,
    threefold_kernel_tuples,
    validity_iff_interlaced,
)

print(__doc__)

p = ThreefoldParams(alpha=F(1), beta=F(0), a=F(1), b=F(0))
Z = threefold_charge(p)
real_t, imag_t = threefold_kernel_tuples(p)
print("slice charge at (alpha, beta, a, b) = (1, 0, 1, 0)")
print("  real part weights:", Z.real.weights)
print("  imag part weights:", Z.imag.weights)
print("  real kernel roots:", tuple(float(x) for x in real_t.entries),
      " (that is -sqrt(6), 0, sqrt(6))")
print("  imag kernel roots:", imag_t.entries)

print("\nvalidity vs interlacing:")
for params in (p,
               ThreefoldParams(alpha=F(1), beta=F(0), a=F(1, 6), b=F(0)),
               ThreefoldParams(alpha=F(2), beta=F(1), a=F(1, 10), b=F(3))):
    valid, inter = validity_iff_interlaced(params)
    print(f"  a={params.a}, b={params.b}, alpha={params.alpha}:"
          f" inequality {valid}, interlaced {inter}")

# conversions: tuples -> parameters -> tuples
t = RootTuple((F(-1), F(0), F(2)))
pp = params_from_tuples(t)
print("\ntuple (-1, 0, 2) pins beta, b, a =", (pp.beta, pp.b, pp.a))
print("largest admissible alpha for these:", max_alpha(pp.a, pp.b))

# the discriminant family versus sign coherence
t = RootTuple((F(-1), F(0), F(1)))
cols = [gamma(x, 3) for x in t.entries]
coherent = tuple(-cols[0][r] + cols[1][r] - cols[2][r] for r in range(4))
mixed = tuple(cols[0][r] + cols[1][r] for r in range(4))
print("\nfamily check on a coherent kernel vector:",
      family_equiv_check(coherent, t).agree, "(inequalities hold everywhere)")
rep = family_equiv_check(mixed, t)
print("family check on a mixed kernel vector:   ", rep.agree,
      f"({len(rep.K_failures)} violating family members found)")
print("delta and nabla of the mixed vector:",
      delta_H(mixed), nabla_beta(mixed, F(0)))
