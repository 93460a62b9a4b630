"""Analytic classification of binary quartics via the I/J invariants.

The definiteness conditions compare expressions containing square roots of
the diagonal entries; all of those live in the quadratic extension by
sqrt(t1111*t2222), so exact rational inputs get exact verdicts through
sign-aware squaring.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .tensors import BinaryQuartic, Scalar, Vector, evaluate
from .verdicts import Classification, Verdict


class NotInSignClass(Exception):
    """Entries are not all +-1 with unit diagonal."""


@dataclass(frozen=True)
class InvariantPair:
    """The classical I and J invariants and disc = I^3 - 27 J^2.

    The quartic discriminant is 4 * 12^3 * disc, so disc carries its sign.
    """

    I: Scalar
    J: Scalar

    @property
    def disc(self) -> Scalar:
        return self.I**3 - 27 * self.J**2


def invariants_IJ(T: BinaryQuartic) -> InvariantPair:
    a, b, c, d, e = T.t1111, T.t1112, T.t1122, T.t1222, T.t2222
    I = a * e - 4 * b * d + 3 * c**2
    J = a * c * e + 2 * b * c * d - c**3 - a * d**2 - b**2 * e
    return InvariantPair(I, J)


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _radical_sign(p, q, m) -> int:
    """Sign of p + q*sqrt(m) for rational p, q and rational m >= 0."""
    if m < 0:
        raise ValueError("negative radicand")
    sp, sq = _sign(p), _sign(q)
    if sq == 0 or m == 0:
        return sp
    if sp == 0:
        return sq
    if sp == sq:
        return sp
    return sp * _sign(p * p - q * q * m)


def _sqrt_diff_sign(u, p, v, q) -> int:
    """Sign of u*sqrt(p) - v*sqrt(q) for rationals with p, q >= 0."""
    a = 0 if (u == 0 or p == 0) else _sign(u)
    b = 0 if (v == 0 or q == 0) else _sign(v)
    if a != b:
        return 1 if a > b else -1
    if a == 0:
        return 0
    return a * _sign(u * u * p - v * v * q)


def _shared_pieces(T: BinaryQuartic):
    a, b, c, d, e = T.t1111, T.t1112, T.t1122, T.t1222, T.t2222
    m = a * e  # all radicals below reduce to sqrt(a*e)
    # | b*sqrt(e) -+ d*sqrt(a) | <= sqrt(6ace +- 2*sqrt((ae)^3)), squared:
    p_shared = 6 * a * c * e - b * b * e - a * d * d
    q_shared = 2 * (m + b * d)
    cond_minus = _radical_sign(p_shared, q_shared, m) >= 0
    cond_plus = _radical_sign(p_shared, -q_shared, m) >= 0
    c_below_root = _radical_sign(-c, 1, m)  # sign of sqrt(ae) - c
    branch_ii = _radical_sign(c, -1, m) > 0 and cond_plus
    return m, cond_minus, c_below_root, branch_ii


def condition_I(T: BinaryQuartic) -> tuple[bool, str]:
    """The definiteness condition; requires positive diagonal entries."""
    a, b, c, d, e = T.t1111, T.t1112, T.t1122, T.t1222, T.t2222
    disc = invariants_IJ(T).disc
    m, cond_minus, c_below_root, branch_ii = _shared_pieces(T)
    if disc == 0:
        eq_cubics = _sqrt_diff_sign(b, e, d, a) == 0
        # 2 b^2 + a*sqrt(ae) = 3 a c, i.e. (3ac - 2b^2) - a*sqrt(ae) = 0
        eq_mixed = _radical_sign(3 * a * c - 2 * b * b, -a, m) == 0
        if eq_cubics and eq_mixed and c_below_root > 0:
            return True, "I-disc0"
        return False, ""
    if disc > 0 and cond_minus:
        if _radical_sign(3 * c, 1, m) > 0 and c_below_root >= 0:
            return True, "I-branch-i"
        if branch_ii:
            return True, "I-branch-ii"
    return False, ""


def condition_II(T: BinaryQuartic) -> tuple[bool, str]:
    """The semidefiniteness condition; requires positive diagonal entries."""
    c = T.t1122
    disc = invariants_IJ(T).disc
    m, cond_minus, c_below_root, branch_ii = _shared_pieces(T)
    if disc >= 0 and cond_minus:
        if _radical_sign(3 * c, 1, m) >= 0 and c_below_root >= 0:
            return True, "II-branch-i"
        if branch_ii:
            return True, "II-branch-ii"
    return False, ""


def classify_binary(T: BinaryQuartic) -> Verdict:
    """PD/PSD/neither for a general binary quartic.

    Assumes positive diagonal entries for the analytic conditions; a negative
    diagonal refutes PSD outright and a zero diagonal falls back to the
    numeric oracle with exact confirmation.
    """
    a, e = T.t1111, T.t2222
    if a < 0:
        return Verdict(Classification.NOT_PSD, "diagonal-negative", (1, 0))
    if e < 0:
        return Verdict(Classification.NOT_PSD, "diagonal-negative", (0, 1))
    if a == 0 or e == 0:
        return _classify_degenerate(T)

    pd, branch = condition_I(T)
    if pd:
        return Verdict(Classification.POSITIVE_DEFINITE, branch)
    psd, branch = condition_II(T)
    if psd:
        return Verdict(Classification.PSD_NOT_PD, branch)
    return Verdict(Classification.NOT_PSD, "II-fails", _negative_point(T))


def _classify_degenerate(T: BinaryQuartic) -> Verdict:
    """Diagonal entry exactly zero: PD is impossible (a unit vector gives 0);
    decide PSD vs not via the oracle plus exact confirmation."""
    witness = _negative_point(T)
    if witness is not None:
        return Verdict(Classification.NOT_PSD, "degenerate-diagonal", witness)
    zero_at = (1, 0) if T.t1111 == 0 else (0, 1)
    return Verdict(Classification.PSD_NOT_PD, "degenerate-diagonal-oracle", zero_at)


def _negative_point(T: BinaryQuartic) -> Vector | None:
    """An exact point with negative value, or None if none is found."""
    for x in ((1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, 1), (1, -2), (2, -1)):
        if evaluate(T, x) < 0:
            return x
    from .oracle import OracleConfig, negative_witness

    return negative_witness(T, OracleConfig())


def classify_sign_binary(T: BinaryQuartic) -> Verdict:
    """Fast path for unit-magnitude entries with unit diagonal:
    PSD iff t1122 = 1; PD additionally needs t1112 * t1222 = -1."""
    coeffs = (T.t1111, T.t1112, T.t1122, T.t1222, T.t2222)
    if any(v not in (1, -1) for v in coeffs) or T.t1111 != 1 or T.t2222 != 1:
        raise NotInSignClass(f"entries {coeffs} are not a unit sign pattern")
    if T.t1122 == 1:
        if T.t1112 * T.t1222 == -1:
            return Verdict(Classification.POSITIVE_DEFINITE, "sign-class")
        return Verdict(Classification.PSD_NOT_PD, "sign-class")
    witness = (1, -1) if T.t1112 + T.t1222 >= 0 else (1, 1)
    assert evaluate(T, witness) < 0
    return Verdict(Classification.NOT_PSD, "sign-class", witness)
