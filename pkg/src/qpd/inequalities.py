"""Quartic inequality residuals with their equality cases and exchange
symmetries.

Each inequality is stored as the exact monomial expansion of LHS - RHS; the
exchange flags swap the coefficients of designated cubic monomial pairs
(x1^3*x2 with x1*x2^3 and so on), which is the symmetry the inequalities are
claimed to respect.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .tensors import (
    MultiIndex,
    Scalar,
    TernaryQuartic,
    Vector,
    multi_indices,
    multiplicity,
)


class UnknownId(Exception):
    """Not a recognized inequality identifier."""


class ViolationFound(Exception):
    """A sampled point violated the inequality (a test failure, not user error)."""


class IneqName(enum.Enum):
    C32_I = "C32_i"
    C32_II = "C32_ii"
    C33_I = "C33_i"
    C33_II = "C33_ii"
    C33_III = "C33_iii"
    C33_IV = "C33_iv"


SWAPS = ("swap12", "swap13", "swap23")
_SWAP_PAIRS = {
    "swap12": ((1, 1, 1, 2), (1, 2, 2, 2)),
    "swap13": ((1, 1, 1, 3), (1, 3, 3, 3)),
    "swap23": ((2, 3, 3, 3), (2, 2, 2, 3)),
}

Poly = dict  # sorted multi-index -> Fraction, as full monomial coefficients


def _add(poly: Poly, midx, coeff) -> None:
    key = tuple(sorted(midx))
    poly[key] = poly.get(key, Fraction(0)) + Fraction(coeff)


def _signed_power(signs) -> Poly:
    """(s1*x1 + s2*x2 + s3*x3)^4 as a monomial dict."""
    poly: Poly = {}
    for midx in multi_indices(3):
        sgn = 1
        for i in midx:
            sgn *= signs[i - 1]
        _add(poly, midx, multiplicity(midx) * sgn)
    return poly


def _squares_sum(scale) -> Poly:
    poly: Poly = {}
    for i, j in ((1, 2), (1, 3), (2, 3)):
        _add(poly, (i, i, j, j), scale)
    return poly


def _combine(*polys: Poly) -> Poly:
    out: Poly = {}
    for poly in polys:
        for key, coeff in poly.items():
            _add(out, key, coeff)
    return out


def _cubics(coeffs: dict) -> Poly:
    poly: Poly = {}
    for midx, coeff in coeffs.items():
        _add(poly, midx, coeff)
    return poly


def _base_polynomial(name: IneqName) -> Poly:
    plus, minus = (1, 1, 1), (1, 1, -1)
    if name is IneqName.C32_I:
        return _combine(
            _signed_power(minus),
            _squares_sum(5),
            _cubics({(1, 1, 1, 2): -8, (1, 1, 1, 3): 8, (2, 3, 3, 3): 8}),
            {(1, 2, 3, 3): Fraction(-24)},
        )
    if name is IneqName.C32_II:
        return _combine(
            _signed_power(minus),
            _squares_sum(6),
            _cubics({(1, 1, 1, 2): -8, (1, 1, 1, 3): 8, (2, 3, 3, 3): 8}),
            {(1, 2, 3, 3): Fraction(-24)},
        )
    if name is IneqName.C33_I:
        return _combine(
            _signed_power(plus),
            _squares_sum(9),
            _cubics({(1, 3, 3, 3): -8, (1, 1, 1, 2): -8, (2, 2, 2, 3): -8}),
        )
    if name is IneqName.C33_II:
        return _combine(
            _signed_power(plus),
            _squares_sum(10),
            _cubics({(1, 3, 3, 3): -8, (1, 1, 1, 2): -8, (2, 2, 2, 3): -8}),
            {(1, 2, 3, 3): Fraction(-24)},
        )
    if name is IneqName.C33_III:
        return _combine(
            _signed_power(minus),
            _squares_sum(10),
            _cubics({(1, 1, 1, 2): -8, (1, 1, 1, 3): 8, (2, 3, 3, 3): 8}),
            {(1, 2, 3, 3): Fraction(-24)},
        )
    if name is IneqName.C33_IV:
        return _combine(
            _signed_power(minus),
            _squares_sum(9),
            _cubics({(1, 1, 1, 2): -8, (1, 1, 1, 3): 8, (2, 3, 3, 3): 8}),
        )
    raise UnknownId(f"unknown inequality {name!r}")


@dataclass(frozen=True)
class InequalityId:
    """An inequality together with its selected monomial exchanges.

    The two C32 inequalities only admit all three exchanges simultaneously;
    the C33 inequalities admit any combination.
    """

    name: IneqName
    exchange: frozenset = frozenset()

    def __post_init__(self):
        if not isinstance(self.name, IneqName):
            raise UnknownId(f"unknown inequality {self.name!r}")
        swaps = frozenset(self.exchange)
        unknown = swaps - set(SWAPS)
        if unknown:
            raise UnknownId(f"unknown exchange flags {sorted(unknown)}")
        if self.name in (IneqName.C32_I, IneqName.C32_II) and swaps not in (
            frozenset(),
            frozenset(SWAPS),
        ):
            raise UnknownId(
                "C32 inequalities admit only the simultaneous three-way exchange"
            )
        object.__setattr__(self, "exchange", swaps)

    @property
    def strict(self) -> bool:
        return self.name is not IneqName.C32_I


def residual_polynomial(iid: InequalityId) -> Poly:
    poly = dict(_base_polynomial(iid.name))
    for swap in iid.exchange:
        a, b = _SWAP_PAIRS[swap]
        poly[a], poly[b] = poly.get(b, Fraction(0)), poly.get(a, Fraction(0))
    return poly


def residual(iid: InequalityId, x) -> Scalar:
    """LHS - RHS of the inequality at x; exact for exact inputs."""
    if len(x) != 3:
        raise UnknownId("residuals are ternary; x must have 3 components")
    total: Scalar = 0
    for midx, coeff in residual_polynomial(iid).items():
        mono = coeff
        for i in midx:
            mono = mono * x[i - 1]
        total = total + mono
    return total


def residual_tensor(iid: InequalityId) -> TernaryQuartic:
    """The residual as a symmetric tensor (monomial coefficient divided by the
    multinomial multiplicity)."""
    poly = residual_polynomial(iid)
    return TernaryQuartic.from_map(
        {midx: coeff / multiplicity(midx) for midx, coeff in poly.items()}
    )


_STRUCTURED_POINTS = (
    (1, 0, 0), (0, 1, 0), (0, 0, 1),
    (-1, 0, 0), (0, -1, 0), (0, 0, -1),
    (1, 1, 0), (1, -1, 0), (1, 0, 1), (1, 0, -1), (0, 1, 1), (0, 1, -1),
    (1, 1, 1),
    (Fraction(1, 5), Fraction(-1, 5), 1),
    (Fraction(1, 2), Fraction(-1, 2), 1),
    (Fraction(1, 4), Fraction(-1, 4), 1),
    (-1, -3, -1),
)


def _on_diagonal(x) -> bool:
    return x[0] == x[1] == x[2]


def random_rational_point(rng: random.Random) -> tuple[Fraction, Fraction, Fraction]:
    return tuple(
        Fraction(rng.randint(-100, 100), rng.randint(1, 100)) for _ in range(3)
    )


@dataclass
class IneqReport:
    iid: InequalityId
    samples: int
    min_residual: Optional[Fraction] = None
    equality_points: int = 0
    checked_points: int = 0
    oracle_min: Optional[float] = None
    oracle_exact: Optional[Fraction] = None


def check_inequality(iid: InequalityId, samples: int, seed: int = 0) -> IneqReport:
    """Sample the residual at random exact rational points and the structured
    point set; raise ViolationFound at the first violated point.

    Also cross-checks via the sphere-minimization oracle on the residual
    tensor, with exact confirmation at the rationalized argmin.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = random.Random(seed)
    report = IneqReport(iid, samples)
    points = list(_STRUCTURED_POINTS) + [
        random_rational_point(rng) for _ in range(samples)
    ]
    if iid.name is IneqName.C32_I:
        # Exercise both directions of the equality case.
        points += [(t, t, t) for t in (Fraction(1), Fraction(-3, 7), Fraction(11, 6))]
    minimum = None
    for x in points:
        value = residual(iid, x)
        report.checked_points += 1
        nonzero = any(v != 0 for v in x)
        if value < 0:
            raise ViolationFound(f"{iid.name.value}: residual {value} < 0 at {x}")
        if value == 0 and nonzero:
            if iid.strict or not _on_diagonal(x):
                raise ViolationFound(
                    f"{iid.name.value}: unexpected zero residual at {x}"
                )
            report.equality_points += 1
        if iid.name is IneqName.C32_I and _on_diagonal(x) and value != 0:
            raise ViolationFound(
                f"{iid.name.value}: residual {value} != 0 on the diagonal at {x}"
            )
        if nonzero and (minimum is None or value < minimum):
            minimum = value
    report.min_residual = minimum

    from .oracle import OracleConfig, min_on_sphere, rationalize_and_confirm

    cfg = OracleConfig()
    result = min_on_sphere(residual_tensor(iid), cfg)
    report.oracle_min = result.min_value
    report.oracle_exact = rationalize_and_confirm(
        residual_tensor(iid), result.argmin, cfg.max_denominator
    )
    if result.min_value < -cfg.verdict_tol:
        raise ViolationFound(
            f"{iid.name.value}: oracle found sphere minimum {result.min_value} < 0"
        )
    if iid.strict and report.oracle_exact <= 0:
        raise ViolationFound(
            f"{iid.name.value}: exact value {report.oracle_exact} at rationalized "
            "argmin is not positive"
        )
    return report
