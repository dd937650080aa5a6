import math
from fractions import Fraction as F

import pytest

from redstab.charge import CentralCharge, eval_charge, gamma, reduced_charge
from redstab.errors import DecompositionFailed, InvalidAmbient, SepViolation
from redstab.interlace import PLUS_INFINITY, RootTuple
from redstab.restrict import (
    RestrictionSpec,
    compose_with_pushforward,
    pushforward_matrix,
    restrict_charge,
    xi,
    xi_multi,
)


def RT(*xs):
    return RootTuple(tuple(xs))


class TestXi:
    def test_surface_closed_form(self):
        assert xi(RT(F(0), F(3)), F(1)).entries == (2,)

    def test_threefold_example(self):
        out = xi(RT(F(0), F(2), F(4)), F(1))
        lo = (15 - math.sqrt(45)) / 6
        hi = (15 + math.sqrt(45)) / 6
        assert abs(float(out.entries[0]) - lo) < 1e-12
        assert abs(float(out.entries[1]) - hi) < 1e-12

    def test_sep_violation(self):
        with pytest.raises(SepViolation):
            xi(RT(F(0), F(3)), F(3))

    def test_exact_rational_image(self):
        # (c - 7/2, c, c + 7/2) with m = 1 has exactly rational image roots
        c = F(2)
        out = xi(RT(c - F(7, 2), c, c + F(7, 2)), F(1))
        assert out.entries == (c - F(3, 2), c + F(5, 2))

    def test_infinite_slot_kept(self):
        out = xi(RT(F(0), F(3), PLUS_INFINITY), F(1))
        assert out.entries == (2, PLUS_INFINITY)

    def test_needs_ambient_two(self):
        with pytest.raises(InvalidAmbient):
            xi(RT(F(0)), F(1))

    def test_sep_preserved(self, rng):
        for _ in range(40):
            base = sorted(rng.choice(range(-20, 21), size=3, replace=False))
            t = RT(*[F(int(x)) for x in base])
            m = t.sep() * F(int(rng.integers(2, 9)), 10)
            out = xi(t, m)
            assert float(out.sep()) > float(m) - 1e-9


class TestXiMulti:
    def test_commutation(self):
        t = RT(F(0), F(3), F(6))
        ab = xi_multi(t, (F(1), F(1)))
        ba = xi(xi(t, F(1)), F(1))
        for x, y in zip(ab.entries, ba.entries):
            assert abs(float(x) - float(y)) < 1e-10

    def test_two_degrees_both_orders(self):
        t = RT(F(0), F(3), F(6))
        ab = xi_multi(t, (F(2), F(1)))
        ba = xi_multi(t, (F(1), F(2)))
        for x, y in zip(ab.entries, ba.entries):
            assert abs(float(x) - float(y)) < 1e-10

    def test_empty_spec_identity(self):
        t = RT(F(0), F(3))
        assert xi_multi(t, ()).entries == t.entries

    def test_stage_index_on_failure(self):
        t = RT(F(0), F(3), F(6))
        with pytest.raises(SepViolation) as err:
            xi_multi(t, (F(1), F(5)))
        assert err.value.stage == 1

    def test_spec_type(self):
        spec = RestrictionSpec((F(1), F(1)), 3)
        assert xi_multi(RT(F(0), F(3), F(6)), spec).n == 1


class TestPushforward:
    def test_surface_matrix(self):
        m = pushforward_matrix(2, F(1))
        assert m == ((0, 0), (1, 0), (F(-1, 2), 1))

    def test_identity_on_twisted_vectors(self):
        for n in (2, 3, 4):
            for mval in (F(1), F(1, 2), F(3)):
                mat = pushforward_matrix(n, mval)
                for x in (F(-1), F(0), F(2), F(22, 7)):
                    g = gamma(x, n - 1)
                    lhs = tuple(sum(mat[j][k] * g[k] for k in range(n))
                                for j in range(n + 1))
                    rhs = tuple(p - q for p, q in zip(gamma(x, n), gamma(x - mval, n)))
                    assert lhs == rhs

    def test_small_degree_limit(self):
        mat = pushforward_matrix(3, F(1, 10 ** 6))
        assert max(abs(float(x)) for row in mat for x in row) < 1e-5


class TestRestrictCharge:
    def test_threefold_to_surface_closed_form(self):
        s = RT(F(-4), F(0), F(4))
        t = RT(F(-2), F(2), F(6))
        Z = CentralCharge(reduced_charge(s), reduced_charge(t))
        rc = restrict_charge(Z, F(1))
        for tup, src in ((rc.s, s), (rc.t, t)):
            tt = [float(x) for x in src.entries]
            ssum = sum(tt)
            sq = sum((a - b) ** 2 for i, a in enumerate(tt) for b in tt[i + 1:])
            lo = (2 * ssum + 3 - math.sqrt(2 * sq - 3)) / 6
            hi = (2 * ssum + 3 + math.sqrt(2 * sq - 3)) / 6
            assert abs(float(tup.entries[0]) - lo) < 1e-10
            assert abs(float(tup.entries[1]) - hi) < 1e-10
        assert rc.scale_real == 1 and rc.scale_imag == 1

    def test_infinite_slot(self):
        s = RT(F(-4), F(0), F(4))
        t = RT(F(-2), F(2), PLUS_INFINITY)
        Z = CentralCharge(reduced_charge(s), reduced_charge(t))
        rc = restrict_charge(Z, F(1))
        assert rc.t.entries == (F(1, 2), PLUS_INFINITY)

    def test_surface_to_curve_parameter(self):
        # restricted slope threshold (t1 + t2 + m)/2, exact
        Z = CentralCharge(reduced_charge(RT(F(-1), F(3))),
                          reduced_charge(RT(F(0), F(4))))
        rc = restrict_charge(Z, F(1))
        assert rc.s.entries == (F(3, 2),)
        assert rc.t.entries == (F(5, 2),)
        assert rc.charge.imag.weights == (F(-5, 2), 1)

    def test_composition_matches_prediction_exactly(self):
        s = RT(F(-6), F(0), F(6))
        t = RT(F(-3), F(3), F(9))
        Z = CentralCharge(reduced_charge(s).scaled(F(2)), reduced_charge(t))
        mat = pushforward_matrix(3, F(1))
        rc = restrict_charge(Z, F(1))
        direct = compose_with_pushforward(Z.real, mat)
        assert rc.charge.real.weights == direct.weights
        # and the composed part is scale * charge of the restricted tuple at
        # sampled twisted vectors
        for x in (-2.0, 0.5, 3.0):
            lhs = float(eval_charge(rc.charge.real, gamma(x, 2)))
            rhs = float(rc.scale_real) * float(
                eval_charge(reduced_charge(rc.s), gamma(x, 2)))
            assert abs(lhs - rhs) < 1e-10 * max(1.0, abs(rhs))

    def test_sep_hypothesis_enforced(self):
        Z = CentralCharge(reduced_charge(RT(F(-1), F(3))),
                          reduced_charge(RT(F(0), F(4))))
        with pytest.raises(SepViolation):
            restrict_charge(Z, F(4))

    def test_non_member_part_rejected(self):
        from redstab.charge import ReducedCharge

        Z = CentralCharge(ReducedCharge((1, 0, 1)),
                          reduced_charge(RT(F(0), F(4))))
        with pytest.raises(DecompositionFailed):
            restrict_charge(Z, F(1))
