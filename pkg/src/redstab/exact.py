"""Exact rational linear algebra on small dense matrices.

All identities of the charge/form layer are rational; only root locations are
irrational.  This module keeps the rational side exact: fraction-free Bareiss
determinants, Gaussian solve/nullspace/inverse over ``fractions.Fraction``,
and congruence-based inertia for symmetric forms.  Inputs holding floats fall
back to numpy with explicit tolerances.
"""

from fractions import Fraction
from math import isqrt

import numpy as np

from .errors import SingularForm

FLOAT_EIG_MARGIN = 1e-10  # definiteness margin for the float fallback


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def all_exact(values) -> bool:
    return all(is_exact(x) for x in values)


def exact_sqrt(x):
    """Square root of a nonnegative Fraction if rational, else None."""
    x = Fraction(x)
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


def bareiss_det(rows):
    """Fraction-free Bareiss determinant.

    Rows are scaled to integers first (tracking the scaling), so the
    elimination itself runs on ints with exact divisions.
    """
    n = len(rows)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    m = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        den = 1
        for x in fr:
            den = den * x.denominator // _gcd(den, x.denominator)
        scale *= den
        m.append([int(x * den) for x in fr])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return Fraction(sign * m[n - 1][n - 1], 1) / scale


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def det(rows):
    """Determinant: exact Bareiss on rational input, numpy otherwise."""
    if all(all_exact(row) for row in rows):
        return bareiss_det(rows)
    return float(np.linalg.det(np.array(rows, dtype=float)))


def solve(a_rows, b):
    """Solve A x = b exactly (square, rational).  Raises SingularForm."""
    n = len(a_rows)
    m = [[Fraction(x) for x in row] + [Fraction(bv)] for row, bv in zip(a_rows, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise SingularForm("singular system")
        m[col], m[piv] = m[piv], m[col]
        pivval = m[col][col]
        m[col] = [x / pivval for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def nullspace(rows, width=None):
    """Basis of the right nullspace of a rational matrix, as Fraction vectors."""
    if width is None:
        width = len(rows[0])
    m = [[Fraction(x) for x in row] for row in rows]
    nrows = len(m)
    pivots = []
    r = 0
    for col in range(width):
        piv = next((i for i in range(r, nrows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][col]
        m[r] = [x / pv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * width
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis


def inv(rows):
    """Exact inverse of a rational square matrix.  Raises SingularForm."""
    n = len(rows)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise SingularForm("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def mat_mul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def leading_principal_minors(gram):
    n = len(gram)
    return [det([row[: k + 1] for row in gram[: k + 1]]) for k in range(n)]


def is_negative_definite(gram):
    """Strict negative definiteness of a symmetric matrix.

    Exact principal-minor test on rational input ((-1)^k * minor_k > 0);
    eigenvalue fallback with margin for float input.  The empty matrix is
    negative definite by convention.
    """
    n = len(gram)
    if n == 0:
        return True
    if all(all_exact(row) for row in gram):
        for k, minor in enumerate(leading_principal_minors(gram), start=1):
            if (minor if k % 2 == 0 else -minor) <= 0:
                return False
        return True
    w = np.linalg.eigvalsh(np.array(gram, dtype=float))
    scale = max(1.0, float(np.max(np.abs(w))))
    return bool(np.all(w < -FLOAT_EIG_MARGIN * scale))


def inertia(gram):
    """Inertia (n_pos, n_neg, n_zero) of a symmetric matrix.

    Exact congruence diagonalization over Fractions when the input is
    rational; numpy eigenvalues with a relative margin otherwise.
    """
    n = len(gram)
    if n == 0:
        return (0, 0, 0)
    if not all(all_exact(row) for row in gram):
        w = np.linalg.eigvalsh(np.array(gram, dtype=float))
        scale = max(1.0, float(np.max(np.abs(w))))
        pos = int(np.sum(w > FLOAT_EIG_MARGIN * scale))
        neg = int(np.sum(w < -FLOAT_EIG_MARGIN * scale))
        return (pos, neg, n - pos - neg)
    m = [[Fraction(x) for x in row] for row in gram]
    pos = neg = 0
    idx = list(range(n))
    for _ in range(n):
        if not idx:
            break
        # symmetric pivoting: prefer a nonzero diagonal entry
        p = next((i for i in idx if m[i][i] != 0), None)
        if p is None:
            # all remaining diagonal zero; find an off-diagonal pair
            pair = next(((i, j) for i in idx for j in idx if j > i and m[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # congruence: add row/col j into i, producing 2*m[i][j] on the diagonal
            for c in range(n):
                m[i][c] += m[j][c]
            for r in range(n):
                m[r][i] += m[r][j]
            p = i
        d = m[p][p]
        if d > 0:
            pos += 1
        else:
            neg += 1
        idx.remove(p)
        for i in idx:
            if m[i][p] != 0:
                f = m[i][p] / d
                for c in range(n):
                    m[i][c] -= f * m[p][c]
                for r in range(n):
                    m[r][i] -= f * m[r][p]
    return (pos, neg, n - pos - neg)
