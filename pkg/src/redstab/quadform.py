"""Support-property quadratic forms attached to pencils of charges.

The line form pairs the canonical degree-(n-1) member against the projected
line's canonical member; it vanishes on the whole twisted curve, is positive
on sign-coherent kernel vectors, and is seminegative on the line's common
kernel.  The inductive form adds a large multiple of the line form to the
(embedded) form of the projected line, tightening seminegative to negative
definite; the weight is found by doubling and certified by re-verification.

Gram matrices store the standard polarization P(u,v) (so Q(u+v) = Q(u) +
2 P(u,v) + Q(v)); sign conclusions are invariant under the factor-2
convention difference some displays use.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .charge import CentralCharge, ReducedCharge, charge_of_poly, gamma
from .errors import (
    AlphaSearchFailed,
    AssumptionViolated,
    InvalidAmbient,
    SingularForm,
    WrongSignature,
)
from .exact import (
    all_exact,
    inertia,
    inv,
    is_negative_definite,
    mat_mul,
    nullspace,
)
from .interlace import PLUS_INFINITY, Pencil, pencil_canonical, pencil_project

ALPHA_CAP = 2 ** 60
SUPPORT_MARGIN = 1e-8


@dataclass(frozen=True)
class QuadraticForm:
    """Symmetric bilinear form on the ambient-n lattice."""

    gram: tuple
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        g = tuple(tuple(row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        n = len(g)
        if any(len(row) != n for row in g):
            raise ValueError("gram must be square")
        for i in range(n):
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise ValueError("gram must be symmetric")

    @property
    def dim(self) -> int:
        return len(self.gram)

    @property
    def ambient(self) -> int:
        return len(self.gram) - 1

    def __call__(self, v):
        return self.pair(v, v)

    def pair(self, u, v):
        """Bilinear polarization P(u, v) = u^T gram v."""
        if len(u) != self.dim or len(v) != self.dim:
            raise ValueError("vector length mismatch")
        return sum(u[i] * sum(self.gram[i][j] * v[j] for j in range(self.dim))
                   for i in range(self.dim))

    def pair_float_with_scale(self, u, v):
        """Float pairing together with the sum of absolute terms.

        The second value bounds the cancellation: a result far below it has
        lost that many digits and needs the exact fallback.
        """
        total = 0.0
        abssum = 0.0
        for i in range(self.dim):
            ui = float(u[i])
            if ui == 0.0:
                continue
            for j in range(self.dim):
                g = self.gram[i][j]
                if g == 0:
                    continue
                term = ui * float(g) * float(v[j])
                total += term
                abssum += abs(term)
        return total, abssum

    def pair_exact(self, u, v):
        """Pairing with every input promoted to an exact rational."""
        uf = [Fraction(x) for x in u]
        vf = [Fraction(x) for x in v]
        gf = [[Fraction(x) for x in row] for row in self.gram]
        return sum(uf[i] * sum(gf[i][j] * vf[j] for j in range(self.dim))
                   for i in range(self.dim))

    def is_exact(self) -> bool:
        return all(all_exact(row) for row in self.gram)

    def inertia(self):
        return inertia([list(row) for row in self.gram])

    def scaled(self, c) -> "QuadraticForm":
        return QuadraticForm(tuple(tuple(c * x for x in row) for row in self.gram), dict(self.meta))

    def plus(self, other: "QuadraticForm") -> "QuadraticForm":
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        return QuadraticForm(tuple(tuple(a + b for a, b in zip(r1, r2))
                                   for r1, r2 in zip(self.gram, other.gram)))


def _sym_outer(u, w):
    n = len(u)
    half = Fraction(1, 2) if all_exact(u) and all_exact(w) else 0.5
    return [[half * (u[i] * w[j] + u[j] * w[i]) for j in range(n)] for i in range(n)]


def zero_form(dim: int) -> QuadraticForm:
    return QuadraticForm(tuple(tuple(Fraction(0) for _ in range(dim)) for _ in range(dim)))


def tilde(B: ReducedCharge) -> ReducedCharge:
    """Index-shifted functional: weight k picks up k times weight k-1.

    When the top weight of B vanishes, the shifted functional satisfies
    Btilde(gamma(t)) = t * B(gamma(t)).
    """
    w = B.weights
    return ReducedCharge((0,) + tuple(k * w[k - 1] for k in range(1, len(w))))


def line_charges(l: Pencil):
    """Canonical charge of the line and of its projection, both on ambient n.

    The line's charge has leading weight -1 at index n-1; the projected
    line's canonical charge embeds with leading weight -1 at index n-2.
    """
    n = l.ambient
    if n < 2:
        raise InvalidAmbient("line charges need ambient >= 2")
    b_line = charge_of_poly(pencil_canonical(l))
    proj = pencil_project(l)
    b_proj_low = charge_of_poly(pencil_canonical(proj))
    b_proj = ReducedCharge(b_proj_low.weights + (0,))
    return b_line, b_proj


def q_line(l: Pencil) -> QuadraticForm:
    """The pencil's quadratic form B_l * tilde(B_pi) - B_pi * tilde(B_l)."""
    b_line, b_proj = line_charges(l)
    g1 = _sym_outer(b_line.weights, tilde(b_proj).weights)
    g2 = _sym_outer(b_proj.weights, tilde(b_line).weights)
    gram = tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(g1, g2))
    return QuadraticForm(gram, {"construction": "line", "ambient": l.ambient})


def kernel_of_line(l: Pencil):
    """Exact basis of the common kernel of all charges on the line."""
    B1 = charge_of_poly(l.gen_a)
    B2 = charge_of_poly(l.gen_b)
    return nullspace([list(B1.weights), list(B2.weights)])


@dataclass
class SupportReport:
    vanishing_ok: bool
    kernel_negative_ok: bool
    pairing_ok: bool
    max_vanishing_residual: float
    failures: list

    @property
    def ok(self) -> bool:
        return self.vanishing_ok and self.kernel_negative_ok and self.pairing_ok


def verify_support(Q: QuadraticForm, l: Pencil, samples: int = 50,
                   margin: float = 0.0, vanish_tol: float = 1e-8,
                   grid: int = 100) -> SupportReport:
    """Three-part support check of a form against a line.

    (a) vanishing on the twisted curve at a parameter grid including +inf;
    (b) strict negative definiteness on the exact common kernel of the line;
    (c) alternating-sign positivity of the pairings gamma(t_i), gamma(t_j)
        over sampled members of the line.
    """
    n = l.ambient
    failures = []

    exact = Q.is_exact()
    max_resid = 0.0
    ok_a = True
    ts = [Fraction(k - grid // 2, 3) for k in range(grid)] + [PLUS_INFINITY]
    for t in ts:
        g = gamma(t if exact else float(t) if t != PLUS_INFINITY else t, n)
        val = Q(g)
        if exact and all_exact(g):
            if val != 0:
                ok_a = False
                failures.append(("vanishing", t, val))
        else:
            scale = sum(abs(float(Q.gram[i][j])) * abs(float(g[i])) * abs(float(g[j]))
                        for i in range(n + 1) for j in range(n + 1))
            resid = abs(float(val)) / max(scale, 1.0)
            max_resid = max(max_resid, resid)
            if resid > vanish_tol:
                ok_a = False
                failures.append(("vanishing", t, val))

    kernel = kernel_of_line(l)
    restricted = [[Q.pair(u, v) for v in kernel] for u in kernel]
    ok_b = is_negative_definite(restricted)
    if not ok_b:
        failures.append(("kernel", restricted))

    gen_roots = [abs(float(x)) for x in l.gen_a.roots().finite] + \
                [abs(float(x)) for x in l.gen_b.roots().finite]
    root_cap = 1e7 * (1.0 + max(gen_roots, default=1.0))
    ok_c = True
    for k in range(samples):
        theta = math.pi * (k + 0.5) / samples
        member = l.member(math.cos(theta), math.sin(theta))
        try:
            roots = member.roots()
        except Exception:
            ok_c = False
            failures.append(("pairing-roots", theta))
            continue
        if roots.has_infinity:
            continue
        if max(abs(float(x)) for x in roots.finite) > root_cap:
            # member within float noise of the degree-drop point; the +inf
            # member's own pairing conditions below cover this neighborhood
            continue
        gam = [gamma(t, n) for t in roots]
        bad = _alternating_pairing_failures(Q, gam, margin)
        if bad:
            ok_c = False
            failures.extend(("pairing", theta) + b for b in bad)
    # degree-drop member (r_1, ..., r_(n-1), +inf): only the pairs against
    # gamma(+inf) are strict at this level (the finite pairs are the projected
    # line's conditions, verified one ambient lower)
    drop_roots = pencil_canonical(l).roots().finite
    gam = [gamma(t, n) for t in drop_roots]
    einf = gamma(PLUS_INFINITY, n)
    for i, g in enumerate(gam):
        val, abssum = Q.pair_float_with_scale(g, einf)
        if abs(val) <= max(margin, 1e-9) * abssum:
            val = Q.pair_exact(g, einf)
        signed = val if (i + 1 + n) % 2 == 0 else -val
        if not signed > 0:
            ok_c = False
            failures.append(("pairing-inf", i + 1, n, float(val)))
    return SupportReport(ok_a, ok_b, ok_c, max_resid, failures)


def _alternating_pairing_failures(Q, gam, margin):
    """Indices (i, j, value) where (-1)^(i+j) P(gamma_i, gamma_j) fails > 0.

    Pairings are evaluated in float with a cancellation bound; any value
    within max(margin, 1e-9) of its absolute-term sum is recomputed exactly,
    so wildly different magnitudes across the matrix cannot mask a sign.
    """
    n = len(gam)
    sig = max(margin, 1e-9)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            val, abssum = Q.pair_float_with_scale(gam[i], gam[j])
            if abs(val) <= sig * abssum:
                val = Q.pair_exact(gam[i], gam[j])
            signed = val if (i + j) % 2 == 0 else -val
            if not signed > 0:
                out.append((i + 1, j + 1, float(val)))
    return out


def q_tilde(l: Pencil, samples: int = 50, margin: float = SUPPORT_MARGIN) -> QuadraticForm:
    """Inductive support form: alpha * q_line + embedded form of the projection.

    The base ambient 1 returns the zero form.  The weight alpha starts at 1
    and doubles until verify_support passes; failure to find one below the
    cap raises AlphaSearchFailed with the failing report.
    """
    n = l.ambient
    if n == 1:
        return zero_form(2)
    lower = q_tilde(pencil_project(l), samples=samples, margin=margin)
    padded_rows = [tuple(row) + (Fraction(0),) for row in lower.gram]
    padded_rows.append(tuple(Fraction(0) for _ in range(n + 1)))
    lower_padded = QuadraticForm(tuple(padded_rows))
    line_form = q_line(l)
    alpha = Fraction(1)
    report = None
    while alpha <= ALPHA_CAP:
        candidate = line_form.scaled(alpha).plus(lower_padded)
        report = verify_support(candidate, l, samples=samples, margin=margin)
        if report.ok:
            meta = {"construction": "inductive", "alpha": alpha, "ambient": n}
            return QuadraticForm(candidate.gram, meta)
        alpha *= 2
    raise AlphaSearchFailed(f"no alpha below {ALPHA_CAP}; last failures: {report.failures[:3]}")


def dual_form(Q: QuadraticForm) -> QuadraticForm:
    """Dual form on the dual space: the exact Gram inverse."""
    if Q.is_exact():
        return QuadraticForm(tuple(tuple(row) for row in inv([list(r) for r in Q.gram])),
                             {"construction": "dual"})
    arr = np.array(Q.gram, dtype=float)
    if abs(np.linalg.det(arr)) < 1e-300:
        raise SingularForm("gram is singular")
    return QuadraticForm(tuple(tuple(x for x in row) for row in np.linalg.inv(arr)),
                         {"construction": "dual"})


def in_WQ(Z: CentralCharge, Q: QuadraticForm) -> bool:
    """Dual-form membership of a central charge for a signature-(2, rho-2) form.

    Checks Q*(f,g)^2 < Q*(f) Q*(g) and Q*(f) > 0 with f the imaginary and g
    the real part; equivalent to Q being negative definite on Ker Z, which is
    cross-checked exactly on rational input.
    """
    rho = Q.dim
    if Q.inertia() != (2, rho - 2, 0):
        raise WrongSignature(f"need signature (2, {rho - 2}), got {Q.inertia()}")
    dual = dual_form(Q)
    f = Z.imag.weights
    g = Z.real.weights
    qff = dual(f)
    qgg = dual(g)
    qfg = dual.pair(f, g)
    verdict = (qfg * qfg < qff * qgg) and (qff > 0)
    if Q.is_exact() and all_exact(f) and all_exact(g):
        kernel = nullspace([list(f), list(g)])
        restricted = [[Q.pair(u, v) for v in kernel] for u in kernel]
        direct = is_negative_definite(restricted) and len(kernel) == rho - 2
        assert direct == verdict, "dual criterion disagrees with kernel definiteness"
    return verdict


@dataclass
class DeformReport:
    lower_samples: int
    lower_failures: list
    upper_samples: int
    upper_failures: list
    params: dict

    @property
    def ok(self) -> bool:
        return not self.lower_failures and not self.upper_failures


def deform_form(h, f1, f2, Q: QuadraticForm, d, N,
                samples: int = 2000, seed: int = 0):
    """Deformation of a support form along the segment of kernels of f1 + t f2.

    Builds the adapted-coordinate form D1~ x1^2 + D2~ x2 (x2 + N x3)
    - sum x_k^2 - eps (x2^2 + (x2 + N x3)^2) with the construction's
    parameter choices, pulled back to lattice coordinates, together with a
    sampled verification of the two cone containments: every kernel vector
    of (h, f1 + t f2) for t in [0, N] is strictly negative, and the negative
    cone sits inside M_d union neg(Q).

    Returns (QuadraticForm, DeformReport); raises AssumptionViolated when
    the hypotheses fail.
    """
    h = tuple(h)
    f1 = tuple(f1)
    f2 = tuple(f2)
    rho = len(h)
    if len(f1) != rho or len(f2) != rho or Q.dim != rho:
        raise AssumptionViolated("dimension mismatch")
    if not (d > 0 and N > 0):
        raise AssumptionViolated("need d > 0 and N > 0")
    exact = all_exact(h) and all_exact(f1) and all_exact(f2) and Q.is_exact()
    if not exact:
        h = tuple(Fraction(x) for x in h)
        f1 = tuple(Fraction(x) for x in f1)
        f2 = tuple(Fraction(x) for x in f2)
        Q = QuadraticForm(tuple(tuple(Fraction(x) for x in row) for row in Q.gram))
    d = Fraction(d)
    N = Fraction(N)
    if Q.inertia() != (2, rho - 2, 0):
        raise AssumptionViolated(f"form must have signature (2, {rho - 2})")

    w_rows = _complete_basis([list(h), list(f1), list(f2)], rho)
    if w_rows is None:
        raise AssumptionViolated("h, f1, f2 must be linearly independent")

    ker = nullspace([list(h), list(f1)])
    restricted = [[Q.pair(u, v) for v in ker] for u in ker]
    if not is_negative_definite(restricted):
        raise AssumptionViolated("Q must be negative definite on Ker h /\\ Ker f1")

    w_inv = inv(w_rows)
    # Q in adapted coordinates x = W v
    g_hat = mat_mul(_transpose(w_inv), mat_mul([list(r) for r in Q.gram], w_inv))
    big_d, mu = _model_cone_parameters(g_hat, rho)

    eps = min(Fraction(1, 2) / (N * N), Fraction(1, 10 ** 6))
    d2t = big_d + 1
    d1t = (N * N * (big_d + 1) ** 2 / 4 - 1) / d + big_d + 1
    ghat_tilde = [[Fraction(0)] * rho for _ in range(rho)]
    ghat_tilde[0][0] = d1t
    ghat_tilde[1][1] = d2t - 2 * eps
    ghat_tilde[1][2] = ghat_tilde[2][1] = N * d2t / 2 - eps * N
    ghat_tilde[2][2] = -eps * N * N
    for k in range(3, rho):
        ghat_tilde[k][k] = Fraction(-1)
    gram = mat_mul(_transpose(w_rows), mat_mul(ghat_tilde, w_rows))
    out = QuadraticForm(tuple(tuple(row) for row in gram),
                        {"construction": "deform", "D": big_d, "mu": mu,
                         "D1": d1t, "D2": d2t, "eps": eps, "N": N, "d": d})
    if out.inertia() != (2, rho - 2, 0):
        raise AssumptionViolated("deformed form lost signature (2, rho-2)")

    report = _deform_verify(out, Q, h, f1, f2, d, N, samples, seed)
    report.params.update(out.meta)
    return out, report


def _transpose(m):
    return [list(col) for col in zip(*m)]


def _complete_basis(rows, width):
    """Complete independent rows to an invertible matrix with standard vectors."""
    basis = []
    for row in rows:
        basis.append([Fraction(x) for x in row])
    if _rank(basis, width) != len(rows):
        return None
    for k in range(width):
        e = [Fraction(int(i == k)) for i in range(width)]
        if _rank(basis + [e], width) > len(basis):
            basis.append(e)
        if len(basis) == width:
            break
    return basis


def _rank(rows, width):
    return width - len(nullspace(rows, width))


def _model_cone_parameters(g_hat, rho):
    """Smallest doubling D with neg(model_D) inside neg(Q), via mu Q_model - Q >= 0.

    The model's negative block spans the adapted coordinates 2..rho-1 (the
    kernel of h and f1), where Q is negative definite by hypothesis; mu is
    shrunk until -C - mu I is strictly positive definite there.
    """
    mu = Fraction(1)
    for _ in range(200):
        shifted = [[-g_hat[i][j] - (mu if i == j else 0)
                    for j in range(2, rho)] for i in range(2, rho)]
        p, n, z = inertia(shifted)
        if n == 0 and z == 0:
            break
        mu /= 2
    else:
        raise AssumptionViolated("could not fit the model cone (lower block)")
    big_d = Fraction(1)
    for _ in range(120):
        diff = [[mu * _model_entry(i, j, big_d, rho) - g_hat[i][j]
                 for j in range(rho)] for i in range(rho)]
        p, n, z = inertia(diff)
        if n == 0:
            return big_d, mu
        big_d *= 2
    raise AssumptionViolated("could not fit the model cone (doubling exhausted)")


def _model_entry(i, j, big_d, rho):
    if i != j:
        return Fraction(0)
    return big_d if i < 2 else Fraction(-1)


def _deform_verify(out: QuadraticForm, Q: QuadraticForm, h, f1, f2, d, N,
                   samples, seed):
    rng = np.random.default_rng(seed)
    rho = len(h)
    lower_fail = []
    n_lower = 0
    for t in [Fraction(0), N / 2, N] + [Fraction(x).limit_denominator(10 ** 6)
                                        for x in rng.uniform(0, float(N), 17)]:
        combo = [a + t * b for a, b in zip(f1, f2)]
        basis = nullspace([list(h), combo])
        for _ in range(max(1, samples // 40)):
            coeffs = rng.standard_normal(len(basis))
            v = [sum(Fraction(c).limit_denominator(10 ** 6) * bv[i] for c, bv in zip(coeffs, basis))
                 for i in range(rho)]
            if all(x == 0 for x in v):
                continue
            n_lower += 1
            if not out(v) < 0:
                lower_fail.append((t, v))
    upper_fail = []
    n_upper = 0
    tries = 0
    while n_upper < samples and tries < samples * 40:
        tries += 1
        v = rng.standard_normal(rho)
        vq = [Fraction(x).limit_denominator(10 ** 4) for x in v]
        if not out(vq) < 0:
            continue
        n_upper += 1
        in_md = (_ev(f1, vq) * _ev(f2, vq) < 0
                 and _ev(h, vq) ** 2 - d * _ev(f1, vq) ** 2 < 0
                 and _ev(h, vq) ** 2 - d * _ev(f2, vq) ** 2 < 0)
        if not (in_md or Q(vq) < 0):
            upper_fail.append(list(map(float, vq)))
    return DeformReport(n_lower, lower_fail, n_upper, upper_fail, {})


def _ev(w, v):
    return sum(a * b for a, b in zip(w, v))
