"""Reduced central charges on the polarized lattice.

The lattice at ambient n is R^(n+1) with coordinates (H^n ch_0, ..., ch_n).
A parameter tuple t determines the normalized functional B_t as a Vandermonde
determinant against the twisted vectors gamma_n(t_i); the normalization makes
the ch_n weight exactly 1 for finite tuples.  On the polynomial side B_t is
f_t / n! under the coefficient identification a_k x^k <-> k! a_k e*_k, so all
of the interlacing calculus transfers to charges verbatim.

Note on the Hilbert-scheme display: with this normalization the identity
B_t((1,0,0,-m)) = -m - t1*t2*t3/6 holds with constant exactly 1 (the raw
determinant instead carries the factor C_t = 2 / prod(t_j - t_i)).
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    AmbientMismatch,
    ComplexRoots,
    InKernelOfLine,
    NotDistinctRoots,
    NotInKernel,
)
from .exact import all_exact, bareiss_det, det, is_exact, solve
from .interlace import (
    PLUS_INFINITY,
    Pencil,
    Polynomial,
    RootTuple,
    roots_to_poly,
    sep_pencil,
)

VERDICT_ZERO_TOL = 1e-12     # |a_i| treated as zero in the sign verdict
BOUNDARY_FLAG_TOL = 1e-8     # |a_i| below this flags a boundary case
KERNEL_REL_TOL = 1e-9        # kernel membership tolerance, relative


def _factorial(k):
    return math.factorial(k)


def gamma(t, n: int) -> tuple:
    """Twisted vector (1, t, t^2/2!, ..., t^n/n!); (0,...,0,1) at +inf."""
    if t == PLUS_INFINITY:
        return (0,) * n + (1,)
    if is_exact(t):
        t = Fraction(t)
        return tuple(t ** k / _factorial(k) for k in range(n + 1))
    return tuple(t ** k / _factorial(k) for k in range(n + 1))


@dataclass(frozen=True)
class ReducedCharge:
    """Linear functional on the ambient-n lattice, stored by dual weights."""

    weights: tuple
    params: tuple | None = None  # optional cache (scale c, RootTuple t)

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))

    @property
    def ambient(self) -> int:
        return len(self.weights) - 1

    def __call__(self, v) -> object:
        return eval_charge(self, v)

    def scaled(self, c) -> "ReducedCharge":
        return ReducedCharge(tuple(c * w for w in self.weights))

    def plus(self, other: "ReducedCharge", a=1, b=1) -> "ReducedCharge":
        if other.ambient != self.ambient:
            raise AmbientMismatch("ambient mismatch")
        return ReducedCharge(tuple(a * x + b * y for x, y in zip(self.weights, other.weights)))

    def is_exact(self) -> bool:
        return all_exact(self.weights)


@dataclass(frozen=True)
class CentralCharge:
    """Complex-valued functional, stored as its real and imaginary parts."""

    real: ReducedCharge
    imag: ReducedCharge

    def __post_init__(self):
        if self.real.ambient != self.imag.ambient:
            raise AmbientMismatch("parts with different ambient")

    @property
    def ambient(self) -> int:
        return self.real.ambient

    def __call__(self, v) -> complex:
        return complex(float(self.real(v)), float(self.imag(v)))

    def negated(self) -> "CentralCharge":
        return CentralCharge(self.real.scaled(-1), self.imag.scaled(-1))


def eval_charge(B: ReducedCharge, v) -> object:
    """Pairing of a charge with a lattice vector; exact when both are rational."""
    if len(v) != B.ambient + 1:
        raise AmbientMismatch(f"vector length {len(v)} vs ambient {B.ambient}")
    return sum(w * x for w, x in zip(B.weights, v))


def reduced_charge(t) -> ReducedCharge:
    """The normalized charge of a parameter tuple, via determinant cofactors.

    B_t(v) = C_t det(gamma(t_1); ...; gamma(t_n); v), where C_t makes the
    ch_n weight 1.  Exact rationals when the tuple is rational.  An infinite
    last entry reduces inductively: B_t(v) = -B_t'(v_0..v_(n-1)).
    """
    t = t if isinstance(t, RootTuple) else RootTuple(tuple(t))
    n = t.n
    if t.has_infinity:
        if n == 1:
            return ReducedCharge((-1, 0), params=(1, t))
        inner = reduced_charge(RootTuple(t.finite))
        return ReducedCharge(tuple(-w for w in inner.weights) + (0,), params=(1, t))
    rows = [gamma(ti, n) for ti in t.entries]
    exact = all(all_exact(row) for row in rows)
    c_t = _normalizing_constant(t, exact)
    weights = []
    for k in range(n + 1):
        minor = [[row[j] for j in range(n + 1) if j != k] for row in rows]
        cof = bareiss_det(minor) if exact else det(minor)
        sign = -1 if (n + k) % 2 else 1
        weights.append(sign * c_t * cof)
    return ReducedCharge(tuple(weights), params=(1, t))


def _normalizing_constant(t: RootTuple, exact: bool):
    ent = t.finite
    n = len(ent)
    num = 1
    for k in range(1, n):
        num *= _factorial(k)
    denom = Fraction(1) if exact else 1.0
    for i in range(n):
        for j in range(i + 1, n):
            denom = denom * (ent[j] - ent[i])
    return (Fraction(num) / denom) if exact else (num / denom)


def charge_of_poly(f: Polynomial) -> ReducedCharge:
    """Charge of a member under a_k x^k <-> k! a_k e*_k, normalized.

    Degree n divides by n!; degree n-1 scales by -1/(n-1)! so that the monic
    root polynomial of any tuple maps exactly onto that tuple's charge.
    """
    n = f.ambient
    exact = all_exact(f.coeffs)
    if f.degree == n:
        scale = Fraction(1, _factorial(n)) if exact else 1.0 / _factorial(n)
    else:
        scale = Fraction(-1, _factorial(n - 1)) if exact else -1.0 / _factorial(n - 1)
    return ReducedCharge(tuple(scale * _factorial(k) * c for k, c in enumerate(f.coeffs)))


def poly_of_charge(B: ReducedCharge) -> Polynomial:
    """Inverse of charge_of_poly; uses the +inf branch when the top weight vanishes."""
    n = B.ambient
    exact = B.is_exact()
    if B.weights[n] != 0:
        scale = Fraction(_factorial(n)) if exact else float(_factorial(n))
    else:
        scale = Fraction(-_factorial(n - 1)) if exact else -float(_factorial(n - 1))
    coeffs = []
    for k, w in enumerate(B.weights):
        fk = Fraction(_factorial(k)) if exact else _factorial(k)
        coeffs.append(scale * w / fk)
    return Polynomial(tuple(coeffs), n)


def in_Bn(B: ReducedCharge, d=0):
    """Membership of B in the cone of scaled charges with separation above d.

    Returns (c, t) with c > 0 and B = c * B_t, or None: None covers complex
    or repeated roots, a nonpositive scale, and sep(t) <= d.
    """
    n = B.ambient
    if all(w == 0 for w in B.weights):
        return None
    if B.weights[n] != 0:
        c = B.weights[n]
    else:
        c = -B.weights[n - 1]
    if not c > 0:
        return None
    try:
        t = poly_of_charge(B.scaled(1 / Fraction(c) if is_exact(c) else 1.0 / c)).roots()
    except (ComplexRoots, NotDistinctRoots):
        return None
    if not t.sep() > d:
        return None
    return (c, t)


def in_Un(Z: CentralCharge, d=0) -> bool:
    """Membership of a central charge in the interlaced cone at separation d.

    Decomposes the parts as c1*B_s + i*c2*B_t and checks c2 > 0, the strict
    interlacing of s and t, the sign of c1 against the orientation (c1 < 0
    when t < s, c1 > 0 when s < t), and for d > 0 the sampled separation of
    the spanned line.
    """
    dec_t = in_Bn(Z.imag)
    if dec_t is None:
        return False
    _, t = dec_t
    dec_s = in_Bn(Z.real)
    if dec_s is not None:
        c1, s = dec_s
    else:
        dec_s = in_Bn(Z.real.scaled(-1))
        if dec_s is None:
            return False
        c1 = -dec_s[0]
        s = dec_s[1]
    if t < s and s.lt_shift(t):
        if not c1 < 0:
            return False
    elif s < t and t.lt_shift(s):
        if not c1 > 0:
            return False
    else:
        return False
    if d > 0:
        line = Pencil.from_tuples(s, t)
        if not sep_pencil(line) > d:
            return False
    return True


@dataclass(frozen=True)
class Decomposition:
    """Coefficients of v against the signed twisted vectors of a tuple."""

    coeffs: tuple
    verdict: str           # ALL_NONNEG | ALL_NONPOS | MIXED
    boundary: bool         # some |a_i| below the flag tolerance but not exactly zero

    def __iter__(self):
        return iter(self.coeffs)


ALL_NONNEG = "ALL_NONNEG"
ALL_NONPOS = "ALL_NONPOS"
MIXED = "MIXED"


def decompose(v, t) -> Decomposition:
    """Solve v = sum_i (-1)^i a_i gamma(t_i) and classify the sign pattern.

    Requires B_t(v) = 0 (exactly for rational data, else within the relative
    kernel tolerance); raises NotInKernel otherwise.  Sign verdict treats
    |a_i| below 1e-12 as zero; entries below the boundary tolerance are
    flagged but still classified.
    """
    t = t if isinstance(t, RootTuple) else RootTuple(tuple(t))
    n = t.n
    if len(v) != n + 1:
        raise AmbientMismatch("vector/tuple ambient mismatch")
    B = reduced_charge(t)
    val = eval_charge(B, v)
    exact = B.is_exact() and all_exact(v)
    if exact:
        if val != 0:
            raise NotInKernel(f"B_t(v) = {val} != 0")
    else:
        scale = max((abs(float(x)) for x in v), default=0.0) * max(
            abs(float(w)) for w in B.weights)
        if abs(float(val)) > KERNEL_REL_TOL * max(scale, 1.0):
            raise NotInKernel(f"B_t(v) = {val} beyond tolerance")
    cols = [gamma(ti, n) for ti in t.entries]
    signed = [tuple(((-1) ** (i + 1)) * x for x in col) for i, col in enumerate(cols)]
    if t.has_infinity:
        rows = list(range(n - 1)) + [n]
    else:
        rows = list(range(n))
    a_mat = [[signed[j][r] for j in range(n)] for r in rows]
    rhs = [v[r] for r in rows]
    if exact:
        coeffs = solve(a_mat, rhs)
    else:
        coeffs = list(np.linalg.solve(
            np.array(a_mat, dtype=float), np.array(rhs, dtype=float)))
    return _classify(coeffs, exact)


def _classify(coeffs, exact) -> Decomposition:
    signs = []
    boundary = False
    for a in coeffs:
        if exact:
            s = 0 if a == 0 else (1 if a > 0 else -1)
        else:
            af = float(a)
            if abs(af) <= VERDICT_ZERO_TOL:
                s = 0
            else:
                s = 1 if af > 0 else -1
            if 0 < abs(af) < BOUNDARY_FLAG_TOL:
                boundary = True
        signs.append(s)
    if all(s >= 0 for s in signs):
        verdict = ALL_NONNEG
    elif all(s <= 0 for s in signs):
        verdict = ALL_NONPOS
    else:
        verdict = MIXED
    return Decomposition(tuple(coeffs), verdict, boundary)


def kernel_parameter(l: Pencil, v) -> RootTuple:
    """The unique parameter tuple on a line of charges vanishing on v.

    The line is given by its polynomial pencil; raises InKernelOfLine when
    both generators annihilate v.
    """
    B1 = charge_of_poly(l.gen_a)
    B2 = charge_of_poly(l.gen_b)
    x1, x2 = eval_charge(B1, v), eval_charge(B2, v)
    exact = B1.is_exact() and B2.is_exact() and all_exact(v)
    if exact:
        zero1, zero2 = x1 == 0, x2 == 0
    else:
        scale = max(abs(float(x1)), abs(float(x2)), 1.0)
        zero1 = abs(float(x1)) <= KERNEL_REL_TOL * scale
        zero2 = abs(float(x2)) <= KERNEL_REL_TOL * scale
    if zero1 and zero2:
        raise InKernelOfLine("v is annihilated by the whole line")
    if zero1:
        member = B1
    elif zero2:
        member = B2
    else:
        member = B1.scaled(x2).plus(B2.scaled(-x1))
    return poly_of_charge(member).roots()
