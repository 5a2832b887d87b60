"""Spin numbers, defect vectors, and order-3 quotient invariants."""

import random
from fractions import Fraction

import pytest

from equispin.dataset import (
    FixedPointDataset,
    FixedSurface,
    ManifoldInvariants,
    fermat_quartic,
)
from equispin.lefschetz import (
    KVector,
    NonIntegralDefectError,
    euler_quotient_p3,
    k_vector,
    signature_quotient_p3,
    spin_index,
    spin_number,
    spin_number_from_angles,
    spin_number_tuple,
    synthesize_spins,
)

from conftest import random_dataset

K3 = ManifoldInvariants.k3()


class TestSpinNumber:
    def test_fermat_value(self):
        assert spin_number(fermat_quartic(), 1) == 2

    def test_empty_fixed_set(self):
        d = FixedPointDataset(3, K3, 3, False)
        assert spin_number(d, 1).is_zero()

    def test_single_sphere(self):
        d = FixedPointDataset(
            3, K3, 3, False, surfaces=(FixedSurface(-2, 0, 1, 1),)
        )
        assert spin_number(d, 1) == Fraction(-1, 3)

    def test_power_out_of_range(self):
        with pytest.raises(ValueError):
            spin_number(fermat_quartic(), 3)

    def test_agrees_with_literal_formula(self):
        rng = random.Random(61)
        for p in (3, 5, 7):
            for kind in ("isolated", "surfaces", "mixed"):
                d = random_dataset(rng, p=p, kind=kind)
                assert spin_number(d, 1) == spin_number_from_angles(d)


class TestSpinProperties:
    def test_realness_and_symmetry(self):
        rng = random.Random(67)
        for p in (3, 5, 7):
            for _ in range(15):
                d = random_dataset(rng, p=p)
                values = [spin_number(d, j) for j in range(1, p)]
                assert all(v.is_real() for v in values)
                for j in range(1, p):
                    assert values[j - 1] == values[p - j - 1]

    def test_p3_rationality(self):
        rng = random.Random(71)
        for _ in range(25):
            d = random_dataset(rng, p=3)
            assert spin_number(d, 1).reduced().is_rational()

    def test_tuple_checks_run(self):
        spins = spin_number_tuple(fermat_quartic())
        assert spins.values[0] == 2
        assert spins.values[1] == spins.values[2] == 2


class TestSpinIndex:
    def test_k3(self):
        assert spin_index(K3) == 2

    def test_zero(self):
        assert spin_index(ManifoldInvariants(0, 3, 0, 8, True)) == 0

    def test_linearity(self):
        assert spin_index(ManifoldInvariants(0, 3, -32, 40, True)) == 4

    def test_requires_spin(self):
        with pytest.raises(ValueError, match="spin"):
            spin_index(ManifoldInvariants(0, 3, -16, 24, False))

    def test_signature_divisibility(self):
        with pytest.raises(ValueError, match="divisible by 8"):
            spin_index(ManifoldInvariants(0, 3, -12, 20, True))


class TestKVector:
    def test_uniform_spins(self):
        assert k_vector([2, 2, 2]).k == (2, 0, 0)

    def test_negative_spins(self):
        assert k_vector([2, -16, -16]).k == (-10, 6, 6)

    def test_non_integral(self):
        with pytest.raises(NonIntegralDefectError):
            k_vector([2, 1, 1])

    def test_round_trip_on_random_vectors(self):
        rng = random.Random(73)
        for p in (3, 5, 7):
            for _ in range(40):
                k = [rng.randint(-6, 6) for _ in range(p)]
                k[0] = 2 - sum(k[1:])
                kv = KVector(p, tuple(k))
                assert k_vector(synthesize_spins(kv)) == kv

    def test_uniform_tail_identity(self):
        # with equal tail defects the first twist equals (p k0 - 2) / (p - 1)
        for p in (3, 5, 7):
            for k0 in range(-6, 3):
                if (2 - k0) % (p - 1) != 0:
                    continue
                tail = (2 - k0) // (p - 1)
                kv = KVector(p, (k0,) + (tail,) * (p - 1))
                value = synthesize_spins(kv).values[1]
                assert value == Fraction(p * k0 - 2, p - 1)

    def test_fermat(self):
        assert k_vector(spin_number_tuple(fermat_quartic())).k == (2, 0, 0)

    def test_shift(self):
        kv = KVector(3, (2, 0, 0))
        assert kv.shifted(1).k == (0, 0, 2)
        assert kv.shifted(2).k == (0, 2, 0)


class TestQuotients:
    def test_fermat(self):
        fermat = fermat_quartic()
        assert signature_quotient_p3(fermat) == -4
        assert euler_quotient_p3(fermat) == 12

    def test_free_action(self):
        d = FixedPointDataset(3, K3, 3, False)
        assert signature_quotient_p3(d) == Fraction(-16, 3)
        assert euler_quotient_p3(d) == 8

    def test_free_signature_not_integral(self):
        d = FixedPointDataset(3, K3, 1, False)
        assert signature_quotient_p3(d).denominator != 1

    def test_sphere_with_positive_square(self):
        d = FixedPointDataset(
            3, K3, 3, False, surfaces=(FixedSurface(6, 0, 1, 1),)
        )
        assert signature_quotient_p3(d) == 0

    def test_one_sphere_euler_not_integral(self):
        d = FixedPointDataset(
            3, K3, 3, False, surfaces=(FixedSurface(-2, 0, 1, 1),)
        )
        assert euler_quotient_p3(d) == Fraction(28, 3)
        assert euler_quotient_p3(d).denominator != 1

    def test_wrong_order(self):
        d = FixedPointDataset(5, K3, 3, False)
        with pytest.raises(ValueError):
            signature_quotient_p3(d)
        with pytest.raises(ValueError):
            euler_quotient_p3(d)


class TestOrderThreeIndexIdentity:
    def test_triple_defect_identity(self):
        # 3 k_0 = -sigma/8 + 2 Spin whenever the two tail defects agree
        rng = random.Random(79)
        hits = 0
        for _ in range(200):
            d = random_dataset(rng, p=3)
            spins = spin_number_tuple(d)
            try:
                kv = k_vector(spins)
            except NonIntegralDefectError:
                continue
            if kv.k[1] != kv.k[2]:
                continue
            hits += 1
            spin = spins.values[1].reduced().to_rational()
            assert 3 * kv.k[0] == 2 + 2 * spin
        assert hits > 0
