"""Independent brute-force oracles used by the verification harness.

These deliberately avoid the production code paths they are used to check:
the pencil oracle works on raw coefficient sequences with numpy eigenvalues,
exact Sylvester resultants, and Sturm real-root counts; the kernel-sign scan
only evaluates charges on a corner family with sign-change bisection.
"""

import math
from fractions import Fraction

import numpy as np

from .charge import eval_charge, reduced_charge
from .exact import bareiss_det
from .interlace import PLUS_INFINITY, RootTuple

ORACLE_SAMPLES = 256


# ---------------------------------------------------------------------------
# exact univariate helpers on ascending coefficient lists


def _trim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _deriv(p):
    return _trim([k * c for k, c in enumerate(p)][1:] or [Fraction(0)])


def _neg_rem(a, b):
    """-(a mod b) over Fractions, for Sturm sequences."""
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    db = len(b) - 1
    while len(a) - 1 >= db and any(x != 0 for x in a):
        da = len(a) - 1
        f = a[-1] / b[-1]
        shift = da - db
        for i, x in enumerate(b):
            a[i + shift] -= f * x
        a = _trim(a)
        if len(a) - 1 < db:
            break
    return _trim([-x for x in a])


def sturm_count_real(p) -> int:
    """Number of distinct real roots of a rational polynomial (Sturm)."""
    p = _trim([Fraction(x) for x in p])
    if len(p) == 1:
        return 0
    chain = [p, _deriv(p)]
    while len(chain[-1]) > 1 or chain[-1][0] != 0:
        nxt = _neg_rem(chain[-2], chain[-1])
        if all(x == 0 for x in nxt):
            break
        chain.append(nxt)
        if len(nxt) == 1:
            break
    def sign_at_inf(q, plus):
        lead = q[-1]
        if lead == 0:
            return 0
        if plus or (len(q) - 1) % 2 == 0:
            return 1 if lead > 0 else -1
        return -1 if lead > 0 else 1
    def changes(signs):
        signs = [s for s in signs if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)
    at_minus = changes([sign_at_inf(q, plus=False) for q in chain])
    at_plus = changes([sign_at_inf(q, plus=True) for q in chain])
    return at_minus - at_plus


def sylvester_resultant(p, q):
    """Resultant of two rational polynomials via the Sylvester determinant."""
    p = _trim([Fraction(x) for x in p])
    q = _trim([Fraction(x) for x in q])
    dp, dq = len(p) - 1, len(q) - 1
    if dp == 0:
        return p[0] ** dq
    if dq == 0:
        return q[0] ** dp
    size = dp + dq
    rows = []
    desc_p = list(reversed(p))
    desc_q = list(reversed(q))
    for i in range(dq):
        rows.append([Fraction(0)] * i + desc_p + [Fraction(0)] * (size - i - dp - 1))
    for i in range(dp):
        rows.append([Fraction(0)] * i + desc_q + [Fraction(0)] * (size - i - dq - 1))
    return bareiss_det(rows)


def _lagrange_coeffs(xs, ys):
    """Exact interpolation through (xs, ys); ascending coefficients."""
    n = len(xs)
    out = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = _poly_mul_frac(basis, [-Fraction(xs[j]), Fraction(1)])
            denom *= Fraction(xs[i]) - Fraction(xs[j])
        scale = Fraction(ys[i]) / denom
        for k, c in enumerate(basis):
            out[k] += scale * c
    return _trim(out)


def _poly_mul_frac(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _real_rooted_distinct_exact(p) -> bool:
    p = _trim([Fraction(x) for x in p])
    deg = len(p) - 1
    return deg >= 0 and sturm_count_real(p) == deg


# ---------------------------------------------------------------------------


def _members_all_real_distinct(f_coeffs, g_coeffs, samples) -> bool:
    """Float scan: all sampled pencil members have real, distinct roots."""
    a = np.array([float(c) for c in f_coeffs])
    b = np.array([float(c) for c in g_coeffs])
    thetas = np.linspace(0.0, math.pi, samples, endpoint=False)
    members = np.outer(np.cos(thetas), a) + np.outer(np.sin(thetas), b)
    for row in members:
        nz = np.nonzero(np.abs(row) > 1e-12 * np.max(np.abs(row)))[0]
        if len(nz) == 0:
            return False
        deg = int(nz[-1])
        if deg == 0:
            continue
        roots = np.roots(row[deg::-1])
        scale = max(1.0, float(np.max(np.abs(roots))))
        if float(np.max(np.abs(roots.imag))) > 1e-7 * scale:
            return False
        re = np.sort(roots.real)
        if len(re) > 1:
            spread = max(re[-1] - re[0], 1.0)
            if float(np.min(np.diff(re))) < 1e-7 * spread:
                return False
    return True


def pencil_discriminant_real_roots(f_coeffs, g_coeffs):
    """Real roots count of the pencil discriminant, exactly.

    Charts the pencil at its unique degree-drop member h so that every
    member f~ + c h has full degree: the resultant of the member and its
    derivative is then a polynomial in c whose real zeros are exactly the
    repeated-root members.  Returns (count, drop_member_ok).
    """
    f = _trim([Fraction(x) for x in f_coeffs])
    g = _trim([Fraction(x) for x in g_coeffs])
    n = max(len(f), len(g)) - 1
    f = f + [Fraction(0)] * (n + 1 - len(f))
    g = g + [Fraction(0)] * (n + 1 - len(g))
    if f[n] == 0 and g[n] == 0:
        return (1, False)  # whole pencil degenerates in degree
    if f[n] == 0:
        f, g = g, f
    # degree-drop member h = g - (g_n / f_n) f
    factor = g[n] / f[n]
    h = _trim([y - factor * x for x, y in zip(f, g)])
    if len(h) - 1 != n - 1:
        return (1, False)  # drops more than one degree: degenerate line
    drop_ok = _real_rooted_distinct_exact(h)
    # resultant of (f + c h, (f + c h)') interpolated in c
    deg_bound = 2 * n
    xs = list(range(deg_bound + 1))
    ys = []
    for c in xs:
        member = [x + c * y for x, y in zip(f, h + [Fraction(0)] * (n + 1 - len(h)))]
        ys.append(sylvester_resultant(member, _deriv(member)))
    disc_poly = _lagrange_coeffs(xs, ys)
    if all(x == 0 for x in disc_poly):
        return (1, drop_ok)
    return (sturm_count_real(disc_poly), drop_ok)


def oracle_interlaced(f_coeffs, g_coeffs, samples: int = ORACLE_SAMPLES) -> bool:
    """Brute-force pencil membership oracle.

    True iff the sampled members all have real pairwise-distinct roots and
    the exact pencil discriminant has no real zero (including the degree-drop
    member).  Coefficients must be rational for the exact part.
    """
    if not _real_rooted_distinct_exact(f_coeffs):
        return False
    if not _real_rooted_distinct_exact(g_coeffs):
        return False
    if not _members_all_real_distinct(f_coeffs, g_coeffs, samples):
        return False
    count, drop_ok = pencil_discriminant_real_roots(f_coeffs, g_coeffs)
    return count == 0 and drop_ok


# ---------------------------------------------------------------------------
# kernel sign-scan oracle


def _corner(t, k, eps, far):
    """Corner configuration: s_q = t_q - eps except the k-th pushed down."""
    ent = list(t)
    s = [x - eps for x in ent]
    if k == 0:
        s[0] = ent[0] - far
    else:
        s[k] = ent[k - 1] + eps
    return s


def sign_scan_oracle(t: RootTuple, v, eps_grid=None, bisect_steps: int = 80):
    """Search for s with s < t < s[1] and B_s(v) = 0, by corner sweep.

    Evaluates the charge on the proof-style corner family (each coordinate
    pinned near its ceiling, one pushed toward its floor) over an eps grid
    down to 1e-3, then bisects along straight segments between corners of
    opposite sign (the corner box is convex inside the admissible region).
    Returns (found, witness_s or None).  Only charge evaluations are used.
    """
    if eps_grid is None:
        eps_grid = [10.0 ** (-e) for e in (1, 2, 3)]
    n = t.n
    has_inf = t.has_infinity
    fin = [float(x) for x in t.finite]
    gap = min((b - a for a, b in zip(fin, fin[1:])), default=1.0)
    vals = []
    for k in range(n):
        for eps_raw in eps_grid:
            eps = eps_raw * gap * 0.45
            far = 1.0 / eps_raw
            if has_inf and k == n - 1:
                # isolate the infinite-slot coefficient: every finite factor
                # carries eps while the last parameter stays put
                s = [x - eps for x in fin] + [fin[-1] + 1.0]
            elif has_inf:
                # isolate a finite coefficient: its term grows like the last
                # parameter while the others keep the vanishing eps factor
                s = _corner(fin, k, eps, far) + [fin[-1] + 1.0 + far]
            else:
                s = _corner(fin, k, eps, far)
            if any(not a < b for a, b in zip(s, s[1:])):
                continue
            val = float(eval_charge(reduced_charge(RootTuple(tuple(s))), v))
            vals.append((s, val))
    pos = [sv for sv in vals if sv[1] > 0]
    neg = [sv for sv in vals if sv[1] < 0]
    if not pos or not neg:
        return (False, None)
    sa, fa = max(pos, key=lambda sv: sv[1])
    sb, fb = min(neg, key=lambda sv: sv[1])
    lo, hi = 0.0, 1.0
    for _ in range(bisect_steps):
        mid = (lo + hi) / 2
        s = [a + mid * (b - a) for a, b in zip(sa, sb)]
        val = float(eval_charge(reduced_charge(RootTuple(tuple(s))), v))
        if val == 0:
            return (True, s)
        if (val > 0) == (fa > 0):
            lo = mid
        else:
            hi = mid
    mid = (lo + hi) / 2
    s = [a + mid * (b - a) for a, b in zip(sa, sb)]
    return (True, s)
