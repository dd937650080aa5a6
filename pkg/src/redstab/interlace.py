"""Real-rooted polynomials with distinct roots, strict interlacing, and pencils.

A degree-n or degree-(n-1) real polynomial with all roots real and pairwise
distinct is a *member at ambient n*; its ordered roots (padded with +inf when
the degree drops) form the parameter tuple.  Two members strictly interlace
exactly when every line through them consists of members again; the pencil
operations (canonical degree-(n-1) member, projection to ambient n-1, root
separation of a whole line) implement that calculus.

Arithmetic on coefficients stays exact (ints / Fractions) whenever the inputs
are exact; root extraction goes through companion-matrix eigenvalues with
Newton polishing and is the only float-producing step.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from .errors import (
    ComplexRoots,
    DegenerateInput,
    InvalidAmbient,
    NotDistinctRoots,
    SearchBudgetExceeded,
    SepTooSmall,
)
from .exact import all_exact, exact_sqrt, is_exact

PLUS_INFINITY = math.inf

ROOT_DISTINCT_TOL = 1e-9   # relative to root spread
ROOT_IMAG_TOL = 1e-9       # relative to root magnitude scale
SEP_ANGLES = 720           # uniform pencil angles before refinement
SEP_REFINE_TOL = 1e-10     # golden-section window width on the angle


# ---------------------------------------------------------------------------
# coefficient helpers (ascending order, index k = coefficient of x^k)

def poly_eval(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_add(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return tuple(x + y for x, y in zip(a, b))


def poly_scale(a, c):
    return tuple(c * x for x in a)


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def poly_shift_arg(coeffs, m):
    """Coefficients of p(x + m); exact when inputs are exact."""
    out = (coeffs[-1],)
    for c in reversed(coeffs[:-1]):
        out = poly_add(poly_mul(out, (m, 1)), (c,))
    return out


def poly_derivative(coeffs):
    return tuple(k * c for k, c in enumerate(coeffs))[1:] or (0,)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootTuple:
    """Ordered distinct parameters t_1 < ... < t_n; the last may be +inf."""

    entries: tuple

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) < 1:
            raise ValueError("root tuple needs at least one entry")
        for i, t in enumerate(entries):
            if t == PLUS_INFINITY and i != len(entries) - 1:
                raise ValueError("only the last entry may be +inf")
            if t == -PLUS_INFINITY:
                raise ValueError("-inf is not a valid entry")
        for a, b in zip(entries, entries[1:]):
            if not a < b:
                raise ValueError(f"entries must be strictly increasing, got {entries}")

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def has_infinity(self) -> bool:
        return self.entries[-1] == PLUS_INFINITY

    @property
    def finite(self) -> tuple:
        return self.entries[:-1] if self.has_infinity else self.entries

    def sep(self):
        """Minimum gap between consecutive finite entries; +inf below two."""
        fin = self.finite
        if len(fin) < 2:
            return PLUS_INFINITY
        return min(b - a for a, b in zip(fin, fin[1:]))

    def shifted(self, a) -> "RootTuple":
        return RootTuple(tuple(t + a if t != PLUS_INFINITY else t for t in self.entries))

    def __lt__(self, other: "RootTuple") -> bool:
        """s < t: s_i < t_i for all i (finite values are < +inf)."""
        if self.n != other.n:
            raise ValueError("tuples of different length")
        return all(a < b for a, b in zip(self.entries, other.entries))

    def lt_shift(self, other: "RootTuple") -> bool:
        """s < t[1]: s_i < t_(i+1) for i = 1..n-1."""
        if self.n != other.n:
            raise ValueError("tuples of different length")
        return all(a < b for a, b in zip(self.entries[:-1], other.entries[1:]))

    def interlaces(self, other: "RootTuple") -> bool:
        return (self < other and other.lt_shift(self)) or (other < self and self.lt_shift(other))

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


@dataclass(frozen=True)
class Polynomial:
    """Member candidate at ambient n: degree n or n-1, roots cached once certified."""

    coeffs: tuple
    ambient: int

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        n = self.ambient
        if n < 1:
            raise ValueError("ambient degree must be >= 1")
        if len(coeffs) != n + 1:
            raise ValueError(f"expected {n + 1} coefficients for ambient {n}")
        if coeffs[n] == 0 and (n == 0 or coeffs[n - 1] == 0):
            raise ValueError("degree must be n or n-1")

    @property
    def degree(self) -> int:
        return self.ambient if self.coeffs[self.ambient] != 0 else self.ambient - 1

    @property
    def leading(self):
        return self.coeffs[self.degree]

    def monic(self) -> "Polynomial":
        lead = self.leading
        if lead == 1:
            return self
        if is_exact(lead) and all_exact(self.coeffs):
            lead = Fraction(lead)
        return Polynomial(tuple(c / lead for c in self.coeffs), self.ambient)

    def __call__(self, x):
        return poly_eval(self.coeffs, x)

    def derivative(self) -> "Polynomial":
        """Derivative as a degree-(n-1) member of the same ambient."""
        if self.degree != self.ambient:
            raise InvalidAmbient("derivative of a degree n-1 member leaves the ambient")
        return Polynomial(poly_derivative(self.coeffs) + (0,), self.ambient)

    def scaled(self, c) -> "Polynomial":
        if c == 0:
            raise ValueError("zero scaling")
        return Polynomial(poly_scale(self.coeffs, c), self.ambient)

    @cached_property
    def _certified_roots(self) -> RootTuple:
        return _extract_roots(self)

    def roots(self) -> RootTuple:
        """Certified ordered roots; raises ComplexRoots / NotDistinctRoots."""
        return self._certified_roots

    def is_member(self) -> bool:
        """True iff all roots are real and pairwise distinct."""
        try:
            self.roots()
            return True
        except (ComplexRoots, NotDistinctRoots):
            return False

    @staticmethod
    def from_roots(t, ambient=None) -> "Polynomial":
        return roots_to_poly(t if isinstance(t, RootTuple) else RootTuple(tuple(t)), ambient)


def roots_to_poly(t: RootTuple, ambient=None) -> Polynomial:
    """Monic polynomial with exactly the finite entries of t as roots.

    An infinite last entry drops its factor, so the result has degree n-1 at
    ambient n.  Exact when the entries are exact.
    """
    if not isinstance(t, RootTuple):
        t = RootTuple(tuple(t))
    n = t.n if ambient is None else ambient
    if n < t.n:
        raise ValueError("ambient below tuple length")
    coeffs = (1,)
    for r in t.finite:
        coeffs = poly_mul(coeffs, (-r, 1))
    coeffs = coeffs + (0,) * (n + 1 - len(coeffs))
    return Polynomial(coeffs, n)


def _newton_polish(coeffs_f, dcoeffs_f, x, steps=3):
    for _ in range(steps):
        d = poly_eval(dcoeffs_f, x)
        if d == 0:
            break
        x = x - poly_eval(coeffs_f, x) / d
    return x


def _newton_polish_exact(coeffs, x, steps=2):
    """Newton steps with exact rational evaluation (no cancellation).

    Floating evaluation of an expanded polynomial limits clustered roots to
    roughly eval_error / |f'|; two exact steps from the eigenvalue estimate
    recover full double accuracy.  Denominators are capped between steps.
    """
    dcoeffs = poly_derivative(coeffs)
    xf = Fraction(x)
    for _ in range(steps):
        d = poly_eval(dcoeffs, xf)
        if d == 0:
            break
        xf = xf - poly_eval(coeffs, xf) / d
        xf = xf.limit_denominator(1 << 80)
    return float(xf)


def _extract_roots(f: Polynomial) -> RootTuple:
    deg = f.degree
    if not all_exact(f.coeffs):
        # effective degree: a float leading coefficient that is negligible
        # against the coefficient scale marks the degree-drop member
        scale = max(abs(float(c)) for c in f.coeffs) or 1.0
        if deg == f.ambient and abs(float(f.coeffs[deg])) <= 1e-12 * scale:
            deg -= 1
            if abs(float(f.coeffs[deg])) <= 1e-12 * scale:
                raise NotDistinctRoots("two vanishing leading coefficients")
    coeffs = f.coeffs[: deg + 1]
    # low degrees solve in closed form, exactly when the data allows
    if deg == 0:
        return _pad_inf((), f.ambient)
    if deg == 1:
        a, b = coeffs[1], coeffs[0]
        if all_exact((a, b)):
            root = -Fraction(b) / Fraction(a)
        else:
            root = -b / a
        return _pad_inf((root,), f.ambient)
    if deg == 2:
        c0, c1, c2 = coeffs[0], coeffs[1], coeffs[2]
        disc = c1 * c1 - 4 * c0 * c2
        if all_exact((c0, c1, c2)):
            if disc <= 0:
                if disc == 0:
                    raise NotDistinctRoots("double root (zero discriminant)")
                raise ComplexRoots("negative discriminant")
            sq = exact_sqrt(disc)
            if sq is not None:
                r1 = (-Fraction(c1) - sq) / (2 * Fraction(c2))
                r2 = (-Fraction(c1) + sq) / (2 * Fraction(c2))
                return _pad_inf(tuple(sorted((r1, r2))), f.ambient)
            disc = float(disc)
        if disc <= 0:
            scale = max(abs(float(c1)), abs(float(c0) * float(c2))) or 1.0
            if abs(disc) <= (ROOT_IMAG_TOL * scale) ** 2:
                raise NotDistinctRoots("double root within tolerance")
            raise ComplexRoots("negative discriminant")
        sq = math.sqrt(disc)
        r1 = (-float(c1) - sq) / (2 * float(c2))
        r2 = (-float(c1) + sq) / (2 * float(c2))
        return _finish_float_roots(f, [r1, r2])
    fcoeffs = [float(c) for c in coeffs]
    comp = _companion(fcoeffs)
    eig = np.linalg.eigvals(comp)
    order = np.argsort(eig.real)
    eig = eig[order]
    scale = max(1.0, float(np.max(np.abs(eig))))
    if float(np.max(np.abs(eig.imag))) > ROOT_IMAG_TOL * scale:
        raise ComplexRoots(f"imaginary part above {ROOT_IMAG_TOL} relative")
    dcoeffs = [k * c for k, c in enumerate(fcoeffs)][1:]
    roots = [_newton_polish(fcoeffs, dcoeffs, float(x)) for x in eig.real]
    if all_exact(coeffs):
        exact_coeffs = tuple(Fraction(c) for c in coeffs)
        roots = [_newton_polish_exact(exact_coeffs, x) for x in roots]
    roots.sort()
    return _finish_float_roots(f, roots)


def _finish_float_roots(f, roots):
    roots = sorted(roots)
    spread = max(roots) - min(roots) if len(roots) > 1 else 0.0
    tol = ROOT_DISTINCT_TOL * max(spread, 1.0)
    for a, b in zip(roots, roots[1:]):
        if b - a < tol:
            raise NotDistinctRoots(f"roots {a} and {b} within tolerance {tol}")
    return _pad_inf(tuple(roots), f.ambient)


def _pad_inf(finite, ambient):
    if len(finite) == ambient:
        return RootTuple(finite)
    if len(finite) == ambient - 1:
        return RootTuple(finite + (PLUS_INFINITY,))
    raise ValueError("degree drop exceeds one")


def _companion(coeffs):
    deg = len(coeffs) - 1
    lead = coeffs[-1]
    comp = np.zeros((deg, deg))
    comp[1:, :-1] = np.eye(deg - 1)
    comp[:, -1] = [-c / lead for c in coeffs[:-1]]
    return comp


def poly_to_roots(f: Polynomial) -> RootTuple:
    """Ordered roots of a member, appending +inf when the degree drops."""
    return f.roots()


def sep(f):
    """Minimum gap between consecutive finite roots; +inf below two roots."""
    if isinstance(f, Polynomial):
        f = f.roots()
    if not isinstance(f, RootTuple):
        f = RootTuple(tuple(f))
    return f.sep()


def is_interlaced(f: Polynomial, g: Polynomial) -> bool:
    """Strict root interlacing of two members.

    Equivalent to every combination a*f + b*g having all real, pairwise
    distinct roots.  Inputs failing root certification are reported
    as not interlaced.  Raises DegenerateInput on proportional inputs.
    """
    if f.ambient != g.ambient:
        raise ValueError("ambient mismatch")
    if _proportional(f.coeffs, g.coeffs):
        raise DegenerateInput("linearly dependent polynomials")
    try:
        rf, rg = f.roots(), g.roots()
    except (ComplexRoots, NotDistinctRoots):
        return False
    return rf.interlaces(rg)


def left_interlaced(f: Polynomial, g: Polynomial) -> bool:
    """The oriented test: interlaced and g is negative at f's largest root.

    When deg f = n-1 (largest root +inf), the sign of g at +inf is read off
    its leading coefficient.
    """
    if not is_interlaced(f, g):
        return False
    rf = f.roots()
    if rf.has_infinity:
        return g.leading < 0
    return g(rf.entries[-1]) < 0


def _proportional(a, b):
    for x, y in zip(a, b):
        for u, v in zip(a, b):
            if x * v != y * u:
                return False
    return True


@dataclass(frozen=True)
class Pencil:
    """Projective line spanned by two interlaced members.

    strict=False skips the interlacing certificate (independence is always
    required); the canonical-member and projection algebra stay well-defined
    on such formal lines.
    """

    gen_a: Polynomial
    gen_b: Polynomial
    strict: bool = True

    def __post_init__(self):
        if self.gen_a.ambient != self.gen_b.ambient:
            raise ValueError("generators with different ambient")
        if _proportional(self.gen_a.coeffs, self.gen_b.coeffs):
            raise DegenerateInput("generators are linearly dependent")
        if self.strict and not is_interlaced(self.gen_a, self.gen_b):
            raise DegenerateInput("generators do not interlace")

    @property
    def ambient(self) -> int:
        return self.gen_a.ambient

    def member(self, a, b) -> Polynomial:
        coeffs = poly_add(poly_scale(self.gen_a.coeffs, a), poly_scale(self.gen_b.coeffs, b))
        return Polynomial(coeffs, self.ambient)

    @staticmethod
    def from_tuples(s, t) -> "Pencil":
        s = s if isinstance(s, RootTuple) else RootTuple(tuple(s))
        t = t if isinstance(t, RootTuple) else RootTuple(tuple(t))
        n = max(s.n, t.n)
        return Pencil(roots_to_poly(s, n), roots_to_poly(t, n))


def pencil_canonical(l: Pencil) -> Polynomial:
    """The unique monic degree-(n-1) member of the line."""
    n = l.ambient
    a_lead, b_lead = l.gen_a.coeffs[n], l.gen_b.coeffs[n]
    if a_lead == 0:
        member = l.gen_a
    elif b_lead == 0:
        member = l.gen_b
    else:
        member = l.member(b_lead, -a_lead)
    if member.coeffs[n] != 0 or member.coeffs[n - 1] == 0:
        raise DegenerateInput("no degree n-1 member; degenerate line")
    return member.monic()


def pencil_project(l: Pencil) -> Pencil:
    """Projection to ambient n-1: the line through f - x*f_l and f_l.

    Independent of the choice of the monic degree-n member f.
    """
    n = l.ambient
    if n < 2:
        raise InvalidAmbient("projection needs ambient >= 2")
    f_l = pencil_canonical(l)
    gen = l.gen_a if l.gen_a.coeffs[n] != 0 else l.gen_b
    f = gen.monic()
    reduced = poly_add(f.coeffs, poly_scale(poly_mul((0, 1), f_l.coeffs), -1))
    assert reduced[n] == 0
    first = Polynomial(reduced[:n], n - 1)
    second = Polynomial(f_l.coeffs[:n], n - 1)
    return Pencil(first, second)


def member_with_root(l: Pencil, r) -> Polynomial:
    """The unique monic member of the line vanishing at the finite value r."""
    va, vb = l.gen_a(r), l.gen_b(r)
    if va == 0 and vb == 0:
        raise DegenerateInput("both generators vanish at r")
    member = l.gen_a if va == 0 else l.gen_b if vb == 0 else l.member(vb, -va)
    return member.monic()


def sep_pencil(l: Pencil, angles: int = SEP_ANGLES, refine_tol: float = SEP_REFINE_TOL) -> float:
    """Minimum root separation over the whole line.

    Dense angular sampling followed by golden-section refinement around the
    sampled minimum.  The resolution is a heuristic (no certified bound on
    how fine a sampling is needed); callers that report results flag this.
    """
    n = l.ambient
    a = np.array([float(c) for c in l.gen_a.coeffs])
    b = np.array([float(c) for c in l.gen_b.coeffs])
    thetas = np.linspace(0.0, math.pi, angles, endpoint=False)
    members = np.outer(np.cos(thetas), a) + np.outer(np.sin(thetas), b)
    seps = _sep_batch(members, n)
    j = int(np.argmin(seps))
    best = float(seps[j])
    step = math.pi / angles
    lo, hi = thetas[j] - step, thetas[j] + step
    refined = _golden_min(lambda th: _sep_of_coeffs(
        math.cos(th) * a + math.sin(th) * b), lo, hi, refine_tol)
    return min(best, refined)


def _sep_of_coeffs(coeffs) -> float:
    roots = _float_roots_allow(coeffs)
    if roots is None:
        return math.inf
    if len(roots) < 2:
        return math.inf
    roots.sort()
    return float(min(b - a for a, b in zip(roots, roots[1:])))


def _float_roots_allow(coeffs):
    """Real parts of the roots, degree-adaptive; None for the zero polynomial."""
    c = np.asarray(coeffs, dtype=float)
    nz = np.nonzero(np.abs(c) > 1e-300)[0]
    if len(nz) == 0:
        return None
    deg = int(nz[-1])
    scale = float(np.max(np.abs(c[: deg + 1]))) or 1.0
    while deg > 0 and abs(c[deg]) < 1e-12 * scale:
        deg -= 1
    if deg == 0:
        return []
    r = np.roots(c[deg::-1])
    return [float(x) for x in r.real]


def _sep_batch(members, n):
    """Root separations for a stack of coefficient rows (ascending order)."""
    lead = members[:, n]
    scale = np.max(np.abs(members), axis=1)
    full = np.abs(lead) > 1e-9 * scale
    seps = np.full(len(members), np.inf)
    if np.any(full):
        rows = members[full]
        m = rows.shape[0]
        comp = np.zeros((m, n, n))
        comp[:, 1:, :-1] = np.eye(n - 1)
        comp[:, :, -1] = -rows[:, :n] / rows[:, n][:, None]
        eig = np.linalg.eigvals(comp)
        re = np.sort(eig.real, axis=1)
        gaps = np.diff(re, axis=1)
        seps[full] = gaps.min(axis=1) if n > 1 else np.inf
    for i in np.nonzero(~full)[0]:
        seps[i] = _sep_of_coeffs(members[i])
    return seps


def _golden_min(fn, lo, hi, tol):
    """Golden-section minimization of fn on [lo, hi]."""
    invphi = (math.sqrt(5) - 1) / 2
    x1 = hi - invphi * (hi - lo)
    x2 = lo + invphi * (hi - lo)
    f1, f2 = fn(x1), fn(x2)
    while hi - lo > tol:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - invphi * (hi - lo)
            f1 = fn(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + invphi * (hi - lo)
            f2 = fn(x2)
    return min(f1, f2)


def shift_pencil(f: Polynomial, m) -> Pencil:
    """The line through f(x) and f(x + m); requires 0 < m < sep(f)."""
    if f.degree != f.ambient:
        raise ValueError("shift pencil needs a full-degree member")
    if not 0 < m:
        raise SepTooSmall("shift must be positive")
    if not m < sep(f):
        raise SepTooSmall(f"shift {m} >= sep {sep(f)}")
    return Pencil(f, Polynomial(poly_shift_arg(f.coeffs, m), f.ambient))


def stabilizing_shift(f: Polynomial, g: Polynomial, d, budget: int = 60) -> float:
    """A shift N with sep of the line through f(x) and (x+N)g(x) above d.

    Requires roots(f) < roots(g) < roots(f)[1] and d below the separation of
    the line through f and g; found by doubling with re-verification.
    """
    rf, rg = f.roots(), g.roots()
    if not (rf < rg and rg.lt_shift(rf)):
        raise DegenerateInput("need roots(f) < roots(g) < roots(f)[1]")
    base = sep_pencil(Pencil(f, g))
    if not d < base:
        raise SepTooSmall(f"d={d} not below sep of the base line {base}")
    n = f.ambient
    f_up = Polynomial(f.coeffs + (0,), n + 1)
    g_coeffs = g.coeffs + (0,)
    npow = 1.0
    for _ in range(budget):
        shifted = Polynomial(poly_mul((npow, 1), g.coeffs), n + 1)
        try:
            line = Pencil(f_up, shifted)
        except DegenerateInput:
            npow *= 2
            continue
        if sep_pencil(line) > d:
            return npow
        npow *= 2
    raise SearchBudgetExceeded(f"no N within 2^{budget}; d too close to the supremum")
