"""JSON codecs for the external interfaces.

Polynomials serialize as arrays of exact rational strings in ascending
coefficient order; root tuples as arrays with "inf" in the infinite slot;
lattice vectors and charge weights as arrays of rational strings; Gram
matrices as 2-d arrays of rational strings.  Values that were computed in
floating point serialize as decimal strings with 17 significant digits and
are marked by the enclosing document's mode field.
"""

from fractions import Fraction

from .charge import ReducedCharge
from .exact import is_exact
from .interlace import PLUS_INFINITY, Polynomial, RootTuple
from .quadform import QuadraticForm

FLOAT_MODE = "float64:17sig"
EXACT_MODE = "exact"


def number_to_str(x) -> str:
    if x == PLUS_INFINITY:
        return "inf"
    if is_exact(x):
        return str(Fraction(x))
    return format(float(x), ".17g")


def number_from_str(s):
    if isinstance(s, (int, float)):
        return s
    s = s.strip()
    if s in ("inf", "+inf", "Infinity"):
        return PLUS_INFINITY
    try:
        return Fraction(s)
    except ValueError:
        return float(s)


def mode_of(values) -> str:
    return EXACT_MODE if all(is_exact(x) for x in values) else FLOAT_MODE


def poly_to_json(f: Polynomial) -> list:
    return [number_to_str(c) for c in f.coeffs]


def poly_from_json(data, ambient=None) -> Polynomial:
    coeffs = tuple(number_from_str(c) for c in data)
    return Polynomial(coeffs, len(coeffs) - 1 if ambient is None else ambient)


def roots_to_json(t: RootTuple) -> list:
    return [number_to_str(x) for x in t.entries]


def roots_from_json(data) -> RootTuple:
    return RootTuple(tuple(number_from_str(x) for x in data))


def vector_to_json(v) -> list:
    return [number_to_str(x) for x in v]


def vector_from_json(data) -> tuple:
    return tuple(number_from_str(x) for x in data)


def charge_to_json(B: ReducedCharge) -> list:
    return [number_to_str(w) for w in B.weights]


def charge_from_json(data) -> ReducedCharge:
    return ReducedCharge(tuple(number_from_str(x) for x in data))


def gram_to_json(Q: QuadraticForm) -> list:
    return [[number_to_str(x) for x in row] for row in Q.gram]


def gram_from_json(rows) -> QuadraticForm:
    return QuadraticForm(tuple(tuple(number_from_str(x) for x in row) for row in rows))
