"""Shared verdict vocabulary for the analytic classifiers and the oracle."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .tensors import Scalar, Vector


class Classification(enum.Enum):
    POSITIVE_DEFINITE = "PositiveDefinite"
    PSD_NOT_PD = "PositiveSemidefiniteNotDefinite"
    NOT_PSD = "NotPositiveSemidefinite"
    UNDETERMINED = "UndeterminedByTheory"


# Partial order used by monotonicity arguments: NotPSD < PSD-not-PD < PD.
STRENGTH = {
    Classification.NOT_PSD: 0,
    Classification.PSD_NOT_PD: 1,
    Classification.POSITIVE_DEFINITE: 2,
}


@dataclass(frozen=True)
class Verdict:
    """Classification of a binary quartic with the analytic branch that fired.

    ``witness`` is a point with a non-positive exact value when the class is
    not PD (strictly negative when not PSD).
    """

    classification: Classification
    branch: str
    witness: Optional[Vector] = None


class Regime(enum.Enum):
    B_11_6 = "11/6"
    B_2 = "2"
    B_5_2 = "5/2"
    B_GE_8_3 = ">=8/3"
    OUT_OF_REGIME = "out-of-regime"


@dataclass(frozen=True)
class ClassVerdict:
    """Classification of a sign-class ternary quartic.

    ``condition_holds`` records the two analytic sign-pattern conditions;
    ``monotone_bound`` is the class inherited from a studied off-diagonal
    level via pointwise monotonicity when ``b`` falls between regimes.
    """

    classification: Classification
    regime: Regime
    condition_holds: dict = field(default_factory=dict)
    witness: Optional[Vector] = None
    monotone_bound: Optional[Classification] = None
