"""Numeric verification: global minimization of the quartic form on the unit
sphere, with exact confirmation of negative minima at rationalized points.

By homogeneity the sign of the sphere minimum decides everything: min > 0
means PD, min = 0 at a nonzero point means PSD on the boundary, min < 0
refutes PSD.  The method is a dense angular seed grid (a hemisphere, since
the form is even) followed by multi-start projected gradient descent with
backtracking, all in float64 via numpy.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .tensors import Quartic, Scalar, Vector, evaluate
from .verdicts import Classification


class NonFiniteValue(Exception):
    """Seed evaluation overflowed to inf/nan."""


class NumericVerdict(enum.Enum):
    PD = "PD"
    BOUNDARY_PSD = "BoundaryPSD"
    NOT_PSD = "NotPSD"


@dataclass(frozen=True)
class OracleConfig:
    grid_resolution: int = 256
    starts: int = 32
    refine_iters: int = 500
    refine_tol: float = 1e-12
    verdict_tol: float = 1e-8
    max_denominator: int = 10**6

    def __post_init__(self):
        if self.grid_resolution < 8:
            raise ValueError("grid_resolution must be >= 8")
        if self.verdict_tol <= 0 or self.refine_tol <= 0:
            raise ValueError("tolerances must be positive")


@dataclass(frozen=True)
class OracleResult:
    min_value: float
    argmin: tuple[float, ...]
    verdict: NumericVerdict
    confirmed_exact: Optional[Fraction] = None


def _float_terms(T: Quartic):
    """Weighted coefficient vector and exponent matrix for vectorized
    evaluation: f(x) = sum_m C[m] * prod_j x_j ** E[m, j]."""
    coeffs, expos = [], []
    for midx, w, c in T.terms():
        coeffs.append(w * float(c))
        expos.append([midx.count(j + 1) for j in range(T.dim)])
    return np.asarray(coeffs), np.asarray(expos)


def _eval_batch(X: np.ndarray, C: np.ndarray, E: np.ndarray) -> np.ndarray:
    # Overflow to inf/nan is tolerated here; callers reject non-finite values.
    with np.errstate(over="ignore", invalid="ignore"):
        return np.prod(X[:, None, :] ** E[None, :, :], axis=2) @ C


def _grad_batch(X: np.ndarray, C: np.ndarray, E: np.ndarray) -> np.ndarray:
    G = np.empty_like(X)
    for k in range(X.shape[1]):
        Ek = E.copy()
        Ek[:, k] = np.maximum(Ek[:, k] - 1, 0)
        mono = np.prod(X[:, None, :] ** Ek[None, :, :], axis=2)
        G[:, k] = mono @ (C * E[:, k])
    return G


def _seed_grid(dim: int, n: int) -> np.ndarray:
    if dim == 2:
        theta = np.pi * np.arange(n) / n  # hemisphere: antipodes are redundant
        return np.stack([np.cos(theta), np.sin(theta)], axis=1)
    polar = np.pi * (np.arange(n) + 0.5) / n
    azimuth = np.pi * np.arange(n) / n
    th, ph = np.meshgrid(polar, azimuth, indexing="ij")
    th, ph = th.ravel(), ph.ravel()
    pts = np.stack(
        [np.sin(th) * np.cos(ph), np.sin(th) * np.sin(ph), np.cos(th)], axis=1
    )
    poles = np.array([[0.0, 0.0, 1.0]])
    return np.concatenate([pts, poles])


def _refine(X, C, E, iters, tol):
    """Batch projected gradient descent with backtracking line search.

    Accepted steps never increase the objective; points stop once their
    tangential gradient norm drops below tol.
    """
    f = _eval_batch(X, C, E)
    step = np.full(len(X), 0.1)
    for _ in range(iters):
        G = _grad_batch(X, C, E)
        Gt = G - np.sum(G * X, axis=1, keepdims=True) * X
        gnorm = np.linalg.norm(Gt, axis=1)
        active = gnorm > tol
        if not active.any():
            break
        for _bt in range(60):
            cand = X - (step * active)[:, None] * Gt
            cand /= np.linalg.norm(cand, axis=1, keepdims=True)
            fc = _eval_batch(cand, C, E)
            ok = active & (fc <= f - 1e-4 * step * gnorm**2)
            if ok.any() or not active.any():
                break
            step = np.where(active, step / 2, step)
            active = active & (step > 1e-18)
        X = np.where(ok[:, None], cand, X)
        f = np.where(ok, fc, f)
        step = np.where(ok, step * 1.5, step / 2)
        step = np.clip(step, 1e-18, 1e3)
    return X, f


def min_on_sphere(T: Quartic, cfg: OracleConfig = OracleConfig()) -> OracleResult:
    """Approximate global minimum of the form on the unit sphere."""
    C, E = _float_terms(T)
    seeds = _seed_grid(T.dim, cfg.grid_resolution)
    values = _eval_batch(seeds, C, E)
    if not np.all(np.isfinite(values)):
        raise NonFiniteValue("tensor coefficients overflow float64 evaluation")
    order = np.argsort(values, kind="stable")[: cfg.starts]
    X, f = _refine(seeds[order], C, E, cfg.refine_iters, cfg.refine_tol)
    best = int(np.argmin(f))
    argmin = X[best] / np.linalg.norm(X[best])
    min_value = float(f[best])

    if min_value < -cfg.verdict_tol:
        verdict = NumericVerdict.NOT_PSD
    elif min_value > cfg.verdict_tol:
        verdict = NumericVerdict.PD
    else:
        verdict = NumericVerdict.BOUNDARY_PSD

    confirmed = None
    if verdict is NumericVerdict.NOT_PSD:
        confirmed = _confirm_negative(T, argmin, cfg.max_denominator)
        if confirmed is None:
            # Cannot certify the negative value exactly; stay honest.
            verdict = NumericVerdict.BOUNDARY_PSD
    return OracleResult(min_value, tuple(float(v) for v in argmin), verdict, confirmed)


def rationalize_and_confirm(T: Quartic, x, max_denominator: int) -> Fraction:
    """Exact value of the form at the best rational approximation of x with
    denominators bounded by max_denominator."""
    if max_denominator < 1:
        raise ValueError("max_denominator must be >= 1")
    point = tuple(Fraction(float(v)).limit_denominator(max_denominator) for v in x)
    return evaluate(T, point)


def _confirm_negative(T: Quartic, x, max_denominator: int) -> Optional[Fraction]:
    den = 8
    while den <= max_denominator:
        value = rationalize_and_confirm(T, x, den)
        if value < 0:
            return value
        den *= 16
    value = rationalize_and_confirm(T, x, max_denominator)
    return value if value < 0 else None


def negative_witness(T: Quartic, cfg: OracleConfig = OracleConfig()) -> Optional[Vector]:
    """An exact rational point with strictly negative value, if the oracle can
    find and confirm one."""
    result = min_on_sphere(T, cfg)
    if result.min_value >= -cfg.verdict_tol:
        return None
    den = 8
    while den <= cfg.max_denominator:
        point = tuple(
            Fraction(float(v)).limit_denominator(den) for v in result.argmin
        )
        if evaluate(T, point) < 0:
            return point
        den *= 16
    return None


_EXPECTED = {
    Classification.POSITIVE_DEFINITE: NumericVerdict.PD,
    Classification.PSD_NOT_PD: NumericVerdict.BOUNDARY_PSD,
    Classification.NOT_PSD: NumericVerdict.NOT_PSD,
}


@dataclass(frozen=True)
class AgreementReport:
    analytic_class: Classification
    numeric: OracleResult
    agreement: str  # agree | conflict | inconclusive | n/a
    exact_at_argmin: Optional[Fraction] = None


def verify_verdict(T: Quartic, analytic, cfg: OracleConfig = OracleConfig()) -> AgreementReport:
    """Run the oracle and compare against an analytic verdict.

    ``analytic`` is a Verdict, ClassVerdict, or Classification.  Disagreements
    whose numeric minimum sits within 10x the verdict band of the boundary are
    reported as inconclusive rather than conflicts.
    """
    cls = analytic if isinstance(analytic, Classification) else analytic.classification
    result = min_on_sphere(T, cfg)
    exact = rationalize_and_confirm(T, result.argmin, cfg.max_denominator)
    expected = _EXPECTED.get(cls)
    if expected is None:
        return AgreementReport(cls, result, "n/a", exact)
    if result.verdict is expected:
        agreement = "agree"
    elif abs(result.min_value) <= 10 * cfg.verdict_tol:
        agreement = "inconclusive"
    else:
        agreement = "conflict"
    return AgreementReport(cls, result, agreement, exact)
