import random
from fractions import Fraction as F
from itertools import permutations, product

import pytest

from qpd.tensors import build_tensor, evaluate
from qpd.ternary import (
    NotInClass,
    SignClassTensor,
    check_condition_iii,
    check_condition_iv,
    classify_ternary,
    condition_iii_up_to_relabeling,
    condition_iv_up_to_relabeling,
    proof_witness,
    transform,
    validate_class,
)
from qpd.verdicts import Classification, Regime

PD = Classification.POSITIVE_DEFINITE
PSD = Classification.PSD_NOT_PD
NPSD = Classification.NOT_PSD

S_REP = (1, 1, -1)  # t1112 = t1113 = 1, t2223 = -1
ALL_PATTERNS = [(s, c) for s in product((1, -1), repeat=3)
                for c in product((1, -1), repeat=3)]


def tensor(s, c, b):
    return SignClassTensor(*s, *c, F(b)).to_quartic()


class TestValidateClass:
    def test_sufficiency_representative(self):
        T = tensor((-1, 1, -1), (-1, -1, -1), F(11, 6))
        S = validate_class(T)
        assert S.s == (-1, 1, -1)
        assert S.c == (-1, -1, -1)
        assert S.b == F(11, 6)

    def test_roundtrip(self):
        for s, c in ALL_PATTERNS:
            S = SignClassTensor(*s, *c, F(5, 2))
            assert validate_class(S.to_quartic()) == S

    def test_pairing_violation(self):
        S = SignClassTensor(1, 1, 1, 1, 1, 1, F(2))
        entries = {m: v for m, _, v in S.to_quartic().terms()}
        entries[(1, 2, 2, 2)] = 1  # same sign as t1112 breaks the pairing
        with pytest.raises(NotInClass, match="pairing"):
            validate_class(build_tensor(3, entries))

    def test_mixed_levels(self):
        S = SignClassTensor(1, 1, 1, 1, 1, 1, F(2))
        entries = {m: v for m, _, v in S.to_quartic().terms()}
        entries[(1, 1, 3, 3)] = F(5, 2)
        with pytest.raises(NotInClass, match="uniform"):
            validate_class(build_tensor(3, entries))

    def test_bad_diagonal(self):
        S = SignClassTensor(1, 1, 1, 1, 1, 1, F(2))
        entries = {m: v for m, _, v in S.to_quartic().terms()}
        entries[(2, 2, 2, 2)] = F(3)
        with pytest.raises(NotInClass, match="t2222"):
            validate_class(build_tensor(3, entries))


class TestConditions:
    def test_iii_holds_for_representative(self):
        assert check_condition_iii(SignClassTensor(-1, 1, -1, -1, -1, -1, F(11, 6)))

    def test_iii_fails_on_misaligned_signs(self):
        assert not check_condition_iii(SignClassTensor(1, 1, -1, -1, -1, -1, F(11, 6)))

    def test_iii_needs_all_minus_c(self):
        assert not check_condition_iii(SignClassTensor(-1, 1, -1, 1, 1, 1, F(11, 6)))

    def test_iv_all_plus(self):
        for s in product((1, -1), repeat=3):
            assert check_condition_iv(SignClassTensor(*s, 1, 1, 1, F(5, 2)))

    def test_iv_two_minus(self):
        for s in product((1, -1), repeat=3):
            assert check_condition_iv(SignClassTensor(*s, -1, -1, 1, F(5, 2)))

    def test_iv_single_minus_fails_literally(self):
        assert not check_condition_iv(SignClassTensor(1, 1, -1, -1, 1, 1, F(5, 2)))

    def test_literal_iii_implies_literal_iv(self):
        for s, c in ALL_PATTERNS:
            S = SignClassTensor(*s, *c, F(2))
            if check_condition_iii(S):
                assert check_condition_iv(S)

    def test_orbit_iii_implies_orbit_iv(self):
        for s, c in ALL_PATTERNS:
            S = SignClassTensor(*s, *c, F(2))
            if condition_iii_up_to_relabeling(S):
                assert condition_iv_up_to_relabeling(S)

    def test_orbit_iii_counts(self):
        # the literal condition carves out 2 patterns; its closure under
        # variable negation has 8
        literal = [p for p in ALL_PATTERNS
                   if check_condition_iii(SignClassTensor(*p[0], *p[1], F(2)))]
        orbit = [p for p in ALL_PATTERNS
                 if condition_iii_up_to_relabeling(SignClassTensor(*p[0], *p[1], F(2)))]
        assert len(literal) == 2
        assert len(orbit) == 8
        assert set(literal) <= set(orbit)


class TestClassify:
    def test_level2_with_iii_is_definite(self):
        v = classify_ternary(tensor((-1, 1, -1), (-1, -1, -1), F(2)))
        assert v.classification is PD and v.regime is Regime.B_2

    def test_level_5_2_single_minus_counterexample(self):
        v = classify_ternary(tensor(S_REP, (1, -1, 1), F(5, 2)))
        assert v.classification is NPSD
        assert v.witness == (F(1, 4), F(-1, 4), 1)
        assert evaluate(tensor(S_REP, (1, -1, 1), F(5, 2)), v.witness) == F(-15, 256)

    def test_level_8_3_always_definite(self):
        for s, c in ALL_PATTERNS:
            assert classify_ternary(tensor(s, c, F(8, 3))).classification is PD

    def test_above_8_3_definite(self):
        v = classify_ternary(tensor(S_REP, (1, -1, 1), F(7, 2)))
        assert v.classification is PD and v.regime is Regime.B_GE_8_3

    def test_boundary_level_psd(self):
        v = classify_ternary(tensor((-1, 1, -1), (-1, -1, -1), F(11, 6)))
        assert v.classification is PSD and v.regime is Regime.B_11_6

    def test_witnesses_are_exactly_negative(self):
        for b in (F(11, 6), F(2), F(5, 2)):
            for s, c in ALL_PATTERNS:
                T = tensor(s, c, b)
                v = classify_ternary(T)
                if v.classification is NPSD:
                    assert v.witness is not None
                    assert evaluate(T, v.witness) < 0

    def test_not_in_class(self):
        with pytest.raises(NotInClass):
            classify_ternary(build_tensor(3, {}))


class TestOutOfRegime:
    def test_between_levels_undetermined_with_pd_bound(self):
        v = classify_ternary(tensor((-1, 1, -1), (-1, -1, -1), F(11, 5)))
        assert v.classification is Classification.UNDETERMINED
        assert v.regime is Regime.OUT_OF_REGIME
        assert v.monotone_bound is PD  # inherited upward from level 2

    def test_between_levels_not_psd_inherited_downward(self):
        T = tensor(S_REP, (1, 1, 1), F(19, 10))
        v = classify_ternary(T)
        assert v.classification is Classification.UNDETERMINED
        assert v.monotone_bound is NPSD
        assert v.witness is not None and evaluate(T, v.witness) < 0

    def test_low_level_boundary_pattern_has_no_bound(self):
        v = classify_ternary(tensor((-1, 1, -1), (-1, -1, -1), F(1)))
        assert v.classification is Classification.UNDETERMINED
        assert v.monotone_bound is None


class TestProofWitness:
    def test_case2_level2(self):
        S = SignClassTensor(*S_REP, 1, -1, 1, F(2))
        w = proof_witness(S)
        assert w == (F(1, 2), F(-1, 2), 1)
        assert evaluate(S.to_quartic(), w) == F(-9, 8)

    def test_case1_boundary_level(self):
        S = SignClassTensor(*S_REP, -1, -1, 1, F(11, 6))
        w = proof_witness(S)
        assert w == (F(1, 5), F(-1, 5), 1)
        assert evaluate(S.to_quartic(), w) == F(-72, 625)

    def test_definite_pattern_has_no_witness(self):
        assert proof_witness(SignClassTensor(-1, 1, -1, -1, -1, -1, F(2))) is None

    def test_relabeled_patterns_get_relabeled_witnesses(self):
        base = SignClassTensor(*S_REP, -1, -1, 1, F(2))
        for perm in permutations((1, 2, 3)):
            moved = validate_class(transform(base.to_quartic(), perm, (1, 1, 1)))
            w = proof_witness(moved)
            assert w is not None
            assert evaluate(moved.to_quartic(), w) < 0


def test_monotonicity_identity_in_level():
    rng = random.Random(2)
    squares = build_tensor(3, {(1, 1, 2, 2): F(1), (1, 1, 3, 3): F(1),
                               (2, 2, 3, 3): F(1)})
    for _ in range(100):
        s = tuple(rng.choice((1, -1)) for _ in range(3))
        c = tuple(rng.choice((1, -1)) for _ in range(3))
        b = F(rng.randint(-20, 20), rng.randint(1, 10))
        bp = b + F(rng.randint(0, 30), rng.randint(1, 10))
        x = tuple(F(rng.randint(-50, 50), rng.randint(1, 30)) for _ in range(3))
        lo, hi = tensor(s, c, b), tensor(s, c, bp)
        diff = evaluate(hi, x) - evaluate(lo, x)
        assert diff == 6 * (bp - b) * evaluate(squares, x) / 6
        assert diff >= 0


def test_relabeling_equivariance_of_classification():
    for b in (F(11, 6), F(2), F(5, 2), F(8, 3)):
        for s, c in ALL_PATTERNS:
            T = tensor(s, c, b)
            base = classify_ternary(T).classification
            for perm in permutations((1, 2, 3)):
                moved = transform(T, perm, (1, 1, 1))
                assert classify_ternary(moved).classification is base
