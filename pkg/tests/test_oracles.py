from fractions import Fraction as F

from redstab.charge import eval_charge, gamma, reduced_charge
from redstab.interlace import PLUS_INFINITY, RootTuple
from redstab.oracles import (
    oracle_interlaced,
    pencil_discriminant_real_roots,
    sign_scan_oracle,
    sturm_count_real,
    sylvester_resultant,
)


class TestSturm:
    def test_counts(self):
        assert sturm_count_real([0, -2, 1]) == 2
        assert sturm_count_real([1, 0, 1]) == 0
        assert sturm_count_real([0, -1, 0, 1]) == 3
        assert sturm_count_real([1, -2, 1]) == 1  # distinct roots only
        assert sturm_count_real([F(5)]) == 0


class TestResultant:
    def test_common_root(self):
        assert sylvester_resultant([-1, 0, 1], [-1, 1]) == 0

    def test_no_common_root(self):
        assert sylvester_resultant([-1, 0, 1], [-2, 1]) == 3

    def test_constant(self):
        assert sylvester_resultant([F(2)], [1, 1, 1]) == 4


class TestPencilOracle:
    def test_interlaced(self):
        assert oracle_interlaced((0, -2, 1), (3, -4, 1))

    def test_gap(self):
        assert not oracle_interlaced((0, -1, 1), (12, -7, 1))
        count, drop_ok = pencil_discriminant_real_roots((0, -1, 1), (12, -7, 1))
        assert count >= 1 and drop_ok

    def test_degree_drop_generator(self):
        assert oracle_interlaced((0, -2, 1), (-1, 1, 0))

    def test_complex_generator(self):
        assert not oracle_interlaced((1, 0, 1), (-1, 1, 0))

    def test_shared_root_pencil(self):
        # x(x-1)(x+1) and x(x-1)(x-2): double root appears inside the pencil
        assert not oracle_interlaced((0, -1, 0, 1), (0, 2, -3, 1))


class TestSignScan:
    def test_coherent_finds_nothing(self):
        t = RootTuple((F(-1), F(0), F(1)))
        cols = [gamma(x, 3) for x in t.entries]
        v = tuple(-cols[0][r] + cols[1][r] - cols[2][r] for r in range(4))
        found, _ = sign_scan_oracle(t, v)
        assert not found

    def test_mixed_finds_zero(self):
        t = RootTuple((F(-1), F(0), F(1)))
        cols = [gamma(x, 3) for x in t.entries]
        v = tuple(cols[0][r] + cols[1][r] for r in range(4))
        found, witness = sign_scan_oracle(t, v)
        assert found
        s = RootTuple(tuple(witness))
        resid = abs(float(eval_charge(reduced_charge(s), v)))
        assert resid < 1e-6

    def test_infinite_tuple(self):
        t = RootTuple((F(0), F(2), PLUS_INFINITY))
        cols = [gamma(x, 3) for x in t.entries]
        coh = tuple(-cols[0][r] - cols[2][r] for r in range(4))
        assert not sign_scan_oracle(t, coh)[0]
        mixed = tuple(-cols[0][r] + cols[2][r] for r in range(4))
        assert sign_scan_oracle(t, mixed)[0]
