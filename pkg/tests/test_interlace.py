import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from redstab.errors import (
    ComplexRoots,
    DegenerateInput,
    InvalidAmbient,
    NotDistinctRoots,
    SepTooSmall,
)
from redstab.interlace import (
    PLUS_INFINITY,
    Pencil,
    Polynomial,
    RootTuple,
    is_interlaced,
    left_interlaced,
    member_with_root,
    pencil_canonical,
    pencil_project,
    poly_mul,
    poly_to_roots,
    roots_to_poly,
    sep,
    sep_pencil,
    shift_pencil,
    stabilizing_shift,
)


def RT(*xs):
    return RootTuple(tuple(xs))


class TestRootTuple:
    def test_ordering_enforced(self):
        with pytest.raises(ValueError):
            RT(2, 1)
        with pytest.raises(ValueError):
            RT(1, 1)

    def test_infinity_only_last(self):
        RT(0, PLUS_INFINITY)
        with pytest.raises(ValueError):
            RT(PLUS_INFINITY, 0)

    def test_comparisons_with_infinity(self):
        s, t = RT(0, 2), RT(1, PLUS_INFINITY)
        assert s < t and t.lt_shift(s)
        assert s.interlaces(t)
        assert not RT(1, PLUS_INFINITY).interlaces(RT(0, PLUS_INFINITY))


class TestRootsPoly:
    def test_product(self):
        assert roots_to_poly(RT(0, 2)).coeffs == (0, -2, 1)

    def test_infinite_root_drops_factor(self):
        p = roots_to_poly(RT(1, 3, PLUS_INFINITY))
        assert p.coeffs == (3, -4, 1, 0)
        assert p.degree == 2

    def test_cubic(self):
        assert roots_to_poly(RT(-1, 0, 1)).coeffs == (0, -1, 0, 1)

    def test_roots_roundtrip(self):
        assert poly_to_roots(Polynomial((0, -2, 1), 2)).entries == (0, 2)
        t = poly_to_roots(Polynomial((3, -4, 1, 0), 3))
        assert t.entries == (1, 3, PLUS_INFINITY)

    def test_complex_roots_error(self):
        with pytest.raises(ComplexRoots):
            poly_to_roots(Polynomial((1, 0, 1), 2))

    def test_repeated_roots_error(self):
        with pytest.raises(NotDistinctRoots):
            poly_to_roots(Polynomial((1, -2, 1), 2))

    @given(st.lists(st.integers(-40, 40), min_size=2, max_size=5, unique=True))
    @settings(max_examples=60, deadline=None)
    def test_roundtrip_identity(self, vals):
        roots = sorted(F(v, 4) for v in vals)
        t = RootTuple(tuple(roots))
        back = poly_to_roots(roots_to_poly(t))
        for a, b in zip(back.entries, t.entries):
            assert abs(float(a) - float(b)) < 1e-10 * max(1.0, abs(float(b)))


class TestInterlaced:
    def test_basic_true(self):
        assert is_interlaced(roots_to_poly(RT(0, 2)), roots_to_poly(RT(1, 3)))

    def test_gap_false(self):
        # pencil member between x(x-1) and (x-3)(x-4) acquires a double root
        assert not is_interlaced(roots_to_poly(RT(0, 1)), roots_to_poly(RT(3, 4)))

    def test_with_infinity(self):
        f = roots_to_poly(RT(0, 2))
        g = roots_to_poly(RT(1, PLUS_INFINITY), 2)
        assert is_interlaced(f, g)

    def test_dependent_raises(self):
        f = roots_to_poly(RT(0, 2))
        with pytest.raises(DegenerateInput):
            is_interlaced(f, f.scaled(3))

    def test_left_interlaced_sign(self):
        f = roots_to_poly(RT(0, 2))
        g = roots_to_poly(RT(1, 3))
        # g(2) = (2-1)(2-3) = -1 < 0
        assert left_interlaced(f, g)
        assert not left_interlaced(g, f.scaled(1))  # f(3) = 3 > 0

    def test_left_interlaced_degree_drop(self):
        f = roots_to_poly(RT(0, 2))
        g = roots_to_poly(RT(1, PLUS_INFINITY), 2).scaled(-1)
        assert left_interlaced(f, g)  # leading coefficient of g is negative


class TestSep:
    def test_min_gap(self):
        assert sep(roots_to_poly(RT(0, 2, 5))) == 2

    def test_single_root_convention(self):
        assert sep(Polynomial((-1, 1), 1)) == PLUS_INFINITY

    def test_finite_gaps_only(self):
        assert sep(RT(0, 1, 3, PLUS_INFINITY)) == 1


class TestSepPencil:
    def test_derivative_pencil_bound(self):
        f = roots_to_poly(RT(0, 2, 4))
        val = sep_pencil(Pencil(f, f.derivative()))
        assert val >= sep(f) - 1e-9

    def test_shift_pencil_bound(self):
        f = roots_to_poly(RT(0, 2, 4))
        val = sep_pencil(shift_pencil(f, 1))
        assert val > min(1, sep(f) - 1) - 1e-9

    def test_mixed_degree_line(self):
        line = Pencil(roots_to_poly(RT(0, 2)), roots_to_poly(RT(1, PLUS_INFINITY), 2))
        val = sep_pencil(line)
        assert 0 < val <= 2


class TestPencilOps:
    def line(self):
        return Pencil(roots_to_poly(RT(0, 2)), roots_to_poly(RT(1, PLUS_INFINITY), 2))

    def test_canonical_already_low_degree(self):
        assert pencil_canonical(self.line()).coeffs == (-1, 1, 0)

    def test_canonical_cancellation(self):
        l = Pencil(Polynomial((0, -2, 1), 2), Polynomial((3, -4, 1), 2))
        assert pencil_canonical(l).coeffs == (F(-3, 2), 1, 0)

    def test_canonical_cubic(self):
        # generators share roots (formal line, not interlaced): strict=False
        l = Pencil(Polynomial((0, -1, 0, 1), 3), Polynomial((0, 2, -3, 1), 3),
                   strict=False)
        # difference is 3x^2 - 3x; monic multiple is x^2 - x
        assert pencil_canonical(l).coeffs == (0, -1, 1, 0)

    def test_project(self):
        pp = pencil_project(self.line())
        assert pp.ambient == 1
        assert pencil_canonical(pp).coeffs == (1, 0)

    def test_project_choice_independent(self):
        l = self.line()
        f_l = pencil_canonical(l)
        base = pencil_project(l)
        for c in (1, -2, 5):
            f = l.gen_a  # monic degree-2 generator
            shifted = Polynomial(
                tuple(a + c * b for a, b in zip(f.coeffs, f_l.coeffs)), 2)
            alt = pencil_project(Pencil(shifted, f_l))
            assert pencil_canonical(alt).coeffs == pencil_canonical(base).coeffs
            # projected lines agree as lines: canonical full-degree members match
            assert member_with_root(alt, 0).coeffs == member_with_root(base, 0).coeffs

    def test_project_needs_ambient_two(self):
        l = Pencil(Polynomial((0, 1), 1), Polynomial((-1, 1), 1))
        with pytest.raises(InvalidAmbient):
            pencil_project(l)

    def test_member_with_root(self):
        l = self.line()
        assert member_with_root(l, 1).coeffs == (-1, 1, 0)
        assert member_with_root(l, 0).coeffs == (0, -2, 1)
        assert member_with_root(l, 3).coeffs == (F(3, 2), F(-7, 2), 1)


class TestShiftAndStabilize:
    def test_shift_boundary(self):
        with pytest.raises(SepTooSmall):
            shift_pencil(roots_to_poly(RT(0, 2)), 2)

    def test_shift_members_are_members(self):
        line = shift_pencil(roots_to_poly(RT(0, 3)), 1)
        for a, b in ((1, 1), (2, -1), (-1, 3)):
            assert line.member(a, b).is_member()

    def test_stabilizing_shift_verified(self):
        f = roots_to_poly(RT(0, 2))
        g = roots_to_poly(RT(1, 3))
        n_val = stabilizing_shift(f, g, 0.5)
        shifted = Polynomial(poly_mul((n_val, 1), g.coeffs), 3)
        line = Pencil(Polynomial(f.coeffs + (0,), 3), shifted)
        assert sep_pencil(line) > 0.5

    def test_stabilizing_shift_precondition(self):
        f = roots_to_poly(RT(0, 2))
        g = roots_to_poly(RT(1, 3))
        base = sep_pencil(Pencil(f, g))
        with pytest.raises(SepTooSmall):
            stabilizing_shift(f, g, base + 0.1)


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_interlacing_iff_pencil_membership(data):
    """Strict interlacing is equivalent to every sampled member being real-rooted."""
    n = data.draw(st.integers(2, 4))
    base = sorted(data.draw(st.lists(
        st.integers(-12, 12), min_size=2 * n, max_size=2 * n, unique=True)))
    f = roots_to_poly(RootTuple(tuple(F(base[2 * i], 2) for i in range(n))))
    if data.draw(st.booleans()):
        g = roots_to_poly(RootTuple(tuple(F(base[2 * i + 1], 2) for i in range(n))))
    else:
        perm = sorted(data.draw(st.permutations(base))[:n])
        try:
            g = roots_to_poly(RootTuple(tuple(F(x, 2) for x in perm)))
        except ValueError:
            return
    try:
        mine = is_interlaced(f, g)
    except DegenerateInput:
        return
    members_ok = True
    for k in range(64):
        th = math.pi * (k + 0.5) / 64
        member = Polynomial(tuple(
            math.cos(th) * a + math.sin(th) * b
            for a, b in zip(f.coeffs, g.coeffs)), n)
        if not member.is_member():
            members_ok = False
            break
    if mine:
        assert members_ok
    if not members_ok:
        assert not mine
