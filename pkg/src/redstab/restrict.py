"""Hypersurface restriction on parameters and charges.

Passing to a degree-m hypersurface sends a parameter tuple t to the roots of
the difference polynomial prod(x - t_i) - prod(x - t_i - m); the separation
hypothesis sep(t) > m makes the two products interlace, so the image lands
one ambient lower with separation still above m.  On charges the same move
is composition with the pushforward matrix M (M gamma_(n-1)(x) = gamma_n(x)
- gamma_n(x - m)), and the composed parts are exactly m times the charges of
the restricted tuples.

The map is onto the separation-above-m tuples one ambient lower only for
small ambients (up to 4); no inverse or section is provided here, and none
is known to be numerically stable.
"""

from dataclasses import dataclass
from fractions import Fraction

from .charge import CentralCharge, ReducedCharge, in_Bn, reduced_charge
from .errors import DecompositionFailed, InvalidAmbient, SepViolation
from .exact import all_exact, is_exact
from .interlace import (
    PLUS_INFINITY,
    Pencil,
    Polynomial,
    RootTuple,
    poly_add,
    poly_scale,
    poly_shift_arg,
    roots_to_poly,
    sep_pencil,
)


@dataclass(frozen=True)
class RestrictionSpec:
    """Degrees (m_1, ..., m_d) of a chain of hypersurface sections."""

    degrees: tuple
    ambient: int

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(self.degrees))
        if any(not m > 0 for m in self.degrees):
            raise ValueError("degrees must be positive")


def xi(t, m) -> RootTuple:
    """Restriction of a parameter tuple by a degree-m section.

    Requires sep(t) > m strictly; drops to ambient n-1.  An infinite last
    entry drops its two factors and the output keeps the +inf slot.
    """
    t = t if isinstance(t, RootTuple) else RootTuple(tuple(t))
    if t.n < 2:
        raise InvalidAmbient("restriction needs ambient >= 2")
    if not m > 0:
        raise SepViolation(f"degree must be positive, got {m}")
    if not t.sep() > m:
        raise SepViolation(f"sep(t) = {t.sep()} must exceed m = {m}")
    fin = t.finite
    f = roots_to_poly(RootTuple(fin)) if fin else None
    if f is None or len(fin) == 0:
        raise SepViolation("no finite entries to restrict")
    mm = Fraction(m) if is_exact(m) and all_exact(fin) else m
    diff = poly_add(f.coeffs, poly_scale(poly_shift_arg(f.coeffs, -mm), -1))
    k = len(fin)
    # difference of monic degree-k polynomials: degree exactly k-1
    assert diff[k] == 0
    if k == 1:
        roots = ()
    else:
        roots = Polynomial(diff[:k], k - 1).roots().entries
    if t.has_infinity:
        return RootTuple(tuple(roots) + (PLUS_INFINITY,))
    return RootTuple(tuple(roots))


def xi_multi(t, spec) -> RootTuple:
    """Chained restriction; order-independent, checked stage by stage.

    Raises SepViolation carrying the failing stage index.
    """
    degrees = spec.degrees if isinstance(spec, RestrictionSpec) else tuple(spec)
    out = t if isinstance(t, RootTuple) else RootTuple(tuple(t))
    for stage, m in enumerate(degrees):
        try:
            out = xi(out, m)
        except SepViolation as exc:
            raise SepViolation(f"stage {stage}: {exc}", stage=stage) from exc
    return out


def pushforward_matrix(n: int, m):
    """Matrix of the section pushforward from ambient n-1 to ambient n.

    Entries M[j][k] = (-1)^(j-k+1) m^(j-k) / (j-k)! for k < j, zero
    otherwise; satisfies M gamma_(n-1)(x) = gamma_n(x) - gamma_n(x-m).
    """
    if not m > 0:
        raise ValueError("positive degree required")
    exact = is_exact(m)
    mm = Fraction(m) if exact else m
    rows = []
    for j in range(n + 1):
        row = []
        for k in range(n):
            if k < j:
                num = mm ** (j - k)
                den = _fact(j - k, exact)
                row.append((num / den) if (j - k) % 2 == 1 else (-num / den))
            else:
                row.append(Fraction(0) if exact else 0.0)
        rows.append(tuple(row))
    return tuple(rows)


def _fact(k, exact):
    import math

    return Fraction(math.factorial(k)) if exact else float(math.factorial(k))


def compose_with_pushforward(B: ReducedCharge, matrix) -> ReducedCharge:
    """The composed functional v -> B(M v) on the lower lattice."""
    n_out = len(matrix[0])
    weights = tuple(sum(B.weights[j] * matrix[j][k] for j in range(len(matrix)))
                    for k in range(n_out))
    return ReducedCharge(weights)


@dataclass(frozen=True)
class RestrictedCharge:
    """Result of restricting a central charge by a degree-m section."""

    charge: CentralCharge      # the exact composed functional pair
    s: RootTuple               # restricted real-part tuple
    t: RootTuple               # restricted imaginary-part tuple
    scale_real: object         # composed real part = scale_real * B_s
    scale_imag: object         # composed imag part = scale_imag * B_t


WEIGHT_MATCH_TOL = 1e-10


def restrict_charge(Z: CentralCharge, m) -> RestrictedCharge:
    """Composition of an interlaced-cone charge with the section pushforward.

    The parts of Z must decompose as c1 B_s + i c2 B_t with the line's
    separation above m (sampled check); the composed parts are verified to be
    c_i m times the charges of the restricted tuples, and DecompositionFailed
    flags any mismatch beyond tolerance (an internal-consistency alarm).
    """
    n = Z.ambient
    dec_t = in_Bn(Z.imag)
    if dec_t is None:
        raise DecompositionFailed("imaginary part is not a positive charge")
    c2, t = dec_t
    dec_s = in_Bn(Z.real)
    if dec_s is not None:
        c1, s = dec_s
    else:
        dec_s = in_Bn(Z.real.scaled(-1))
        if dec_s is None:
            raise DecompositionFailed("real part is not a signed charge")
        c1, s = -dec_s[0], dec_s[1]
    if not s.interlaces(t):
        raise DecompositionFailed("part parameters do not interlace")
    line = Pencil.from_tuples(s, t)
    if not sep_pencil(line) > m:
        raise SepViolation(f"sep of the spanned line must exceed {m}")
    matrix = pushforward_matrix(n, m)
    real_c = compose_with_pushforward(Z.real, matrix)
    imag_c = compose_with_pushforward(Z.imag, matrix)
    s_r = xi(s, m)
    t_r = xi(t, m)
    scale_real = c1 * m
    scale_imag = c2 * m
    _verify_prediction(real_c, s_r, scale_real)
    _verify_prediction(imag_c, t_r, scale_imag)
    return RestrictedCharge(CentralCharge(real_c, imag_c), s_r, t_r, scale_real, scale_imag)


def _verify_prediction(composed: ReducedCharge, tup: RootTuple, scale):
    predicted = reduced_charge(tup).scaled(scale)
    ref = max(abs(float(w)) for w in composed.weights) or 1.0
    for a, b in zip(composed.weights, predicted.weights):
        if abs(float(a) - float(b)) > WEIGHT_MATCH_TOL * ref:
            raise DecompositionFailed(
                f"composed part {tuple(map(float, composed.weights))} does not match "
                f"{float(scale)} * B over {tuple(map(float, tup.entries))}")
