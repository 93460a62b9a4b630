import random
from fractions import Fraction as F
from itertools import product

import pytest

from qpd.binary import (
    NotInSignClass,
    classify_binary,
    classify_sign_binary,
    condition_I,
    condition_II,
    invariants_IJ,
)
from qpd.tensors import BinaryQuartic, evaluate
from qpd.verdicts import Classification

PD = Classification.POSITIVE_DEFINITE
PSD = Classification.PSD_NOT_PD
NPSD = Classification.NOT_PSD


class TestInvariants:
    def test_all_ones(self):
        inv = invariants_IJ(BinaryQuartic(1, 1, 1, 1, 1))
        assert (inv.I, inv.J, inv.disc) == (0, 0, 0)

    def test_mixed_cubic_signs(self):
        inv = invariants_IJ(BinaryQuartic(1, 1, 1, -1, 1))
        assert (inv.I, inv.J) == (8, -4)
        assert inv.disc == 80

    def test_zero_tensor(self):
        inv = invariants_IJ(BinaryQuartic(0, 0, 0, 0, 0))
        assert (inv.I, inv.J, inv.disc) == (0, 0, 0)

    def test_disc_matches_full_discriminant_formula(self):
        rng = random.Random(3)
        for _ in range(200):
            t = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(5)]
            a, b, c, d, e = t
            delta = (
                4 * 12**3 * (a * e - 4 * b * d + 3 * c**2) ** 3
                - 72**2 * 6**2
                * (a * c * e + 2 * b * c * d - c**3 - a * d**2 - b**2 * e) ** 2
            )
            disc = invariants_IJ(BinaryQuartic(*t)).disc
            assert delta == 4 * 12**3 * disc


class TestClassifyBinary:
    def test_all_ones_is_psd_boundary(self):
        assert classify_binary(BinaryQuartic(1, 1, 1, 1, 1)).classification is PSD

    def test_opposed_cubics_definite(self):
        assert classify_binary(BinaryQuartic(1, 1, 1, -1, 1)).classification is PD

    def test_negative_square_term(self):
        v = classify_binary(BinaryQuartic(1, 1, -1, 1, 1))
        assert v.classification is NPSD
        assert v.witness is not None
        assert evaluate(BinaryQuartic(1, 1, -1, 1, 1), v.witness) < 0
        assert evaluate(BinaryQuartic(1, 1, -1, 1, 1), (1, -1)) == -12

    def test_negative_diagonal(self):
        v = classify_binary(BinaryQuartic(-1, 0, 1, 0, 1))
        assert v.classification is NPSD and v.witness == (1, 0)

    def test_zero_diagonal_psd(self):
        # 6 x^2 y^2 + y^4: nonnegative, zero along the x axis
        v = classify_binary(BinaryQuartic(0, 0, 1, 0, 1))
        assert v.classification is PSD

    def test_zero_diagonal_indefinite(self):
        # 4 x^3 y + y^4 changes sign
        v = classify_binary(BinaryQuartic(0, 1, 0, 0, 1))
        assert v.classification is NPSD
        assert evaluate(BinaryQuartic(0, 1, 0, 0, 1), v.witness) < 0

    def test_perfect_square_plus(self):
        # (x^2 + y^2)^2 is PD
        assert classify_binary(BinaryQuartic(1, 0, F(1, 3), 0, 1)).classification is PD


class TestSignClass:
    def test_definite_pattern(self):
        assert classify_sign_binary(BinaryQuartic(1, -1, 1, 1, 1)).classification is PD

    def test_negative_square_pattern(self):
        v = classify_sign_binary(BinaryQuartic(1, 1, -1, -1, 1))
        assert v.classification is NPSD
        assert evaluate(BinaryQuartic(1, 1, -1, -1, 1), v.witness) < 0

    def test_matched_cubics_boundary(self):
        assert classify_sign_binary(BinaryQuartic(1, -1, 1, -1, 1)).classification is PSD

    @pytest.mark.parametrize("T", [
        BinaryQuartic(1, 2, 1, 1, 1),
        BinaryQuartic(-1, 1, 1, 1, 1),
        BinaryQuartic(1, 1, 1, 1, -1),
        BinaryQuartic(1, 0, 1, 1, 1),
    ])
    def test_rejects_non_sign_class(self, T):
        with pytest.raises(NotInSignClass):
            classify_sign_binary(T)

    def test_exhaustive_agreement_with_general_classifier(self):
        for b, c, d in product((1, -1), repeat=3):
            T = BinaryQuartic(1, b, c, d, 1)
            assert (classify_sign_binary(T).classification
                    is classify_binary(T).classification)


def test_condition_I_implies_condition_II():
    rng = random.Random(11)
    seen_pd = 0
    for _ in range(500):
        t = [F(rng.randint(1, 8))] + [F(rng.randint(-6, 6), rng.randint(1, 6))
                                      for _ in range(3)] + [F(rng.randint(1, 8))]
        T = BinaryQuartic(t[0], t[1], t[2], t[3], t[4])
        if condition_I(T)[0]:
            seen_pd += 1
            assert condition_II(T)[0]
    assert seen_pd > 10  # the sample actually exercises the implication


def test_scaling_covariance():
    rng = random.Random(5)
    for _ in range(100):
        t = [F(rng.randint(-6, 6), rng.randint(1, 6)) for _ in range(5)]
        lam = F(rng.randint(1, 20), rng.randint(1, 20))
        T = BinaryQuartic(*t)
        S = BinaryQuartic(*(lam * v for v in t))
        assert classify_binary(T).classification is classify_binary(S).classification
