"""Symmetric quartic tensors (degree-4 forms) in two and three variables.

Storage is by sorted multi-index; the multinomial multiplicity is applied at
evaluation time, so index symmetry is structural rather than enforced by
copying entries around.  Coefficients are exact rationals
(:class:`fractions.Fraction`) unless the caller supplies floats, in which case
arithmetic degrades to binary64 in the usual Python way.
"""
from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Mapping, Sequence, Tuple, Union

Scalar = Union[int, Fraction, float]
MultiIndex = Tuple[int, int, int, int]
Vector = Tuple[Scalar, ...]

ORDER = 4


class TensorError(Exception):
    """Base class for tensor construction and evaluation errors."""


class BadArity(TensorError):
    """An entry key is not a 4-tuple."""


class BadIndex(TensorError):
    """An index lies outside {1..dim}."""


class ConflictingEntries(TensorError):
    """Two permutation-equivalent keys were given different values."""


class DimensionMismatch(TensorError):
    """A vector's dimension does not match the tensor's."""


class ParseError(TensorError):
    """A tensor file does not conform to the JSON tensor format."""


def parse_scalar(value: Union[str, int, float, Fraction]) -> Scalar:
    """Coerce a user-supplied value to a Scalar.

    Strings like ``"11/6"`` or ``"2.5"`` become exact rationals; ints become
    exact rationals; floats are kept as floats.
    """
    if isinstance(value, bool):
        raise TensorError(f"boolean is not a valid coefficient: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise TensorError(f"cannot parse scalar {value!r}") from exc
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return value
    raise TensorError(f"cannot parse scalar {value!r}")


def multi_indices(dim: int) -> list[MultiIndex]:
    """All sorted degree-4 multi-indices over {1..dim} (5 for dim 2, 15 for 3)."""
    return list(combinations_with_replacement(range(1, dim + 1), ORDER))


def multiplicity(midx: MultiIndex) -> int:
    """Number of index permutations collapsing onto a sorted multi-index."""
    denom = 1
    for count in Counter(midx).values():
        denom *= math.factorial(count)
    return math.factorial(ORDER) // denom


def _canonical_key(key, dim: int) -> MultiIndex:
    if not isinstance(key, tuple) or len(key) != ORDER:
        raise BadArity(f"entry key must be a 4-tuple, got {key!r}")
    for i in key:
        if not isinstance(i, int) or isinstance(i, bool) or not 1 <= i <= dim:
            raise BadIndex(f"index {i!r} outside 1..{dim} in key {key!r}")
    return tuple(sorted(key))


@dataclass(frozen=True)
class BinaryQuartic:
    """The 5 independent coefficients of a symmetric quartic in two variables.

    The expanded form is
    t1111*x1^4 + 4*t1112*x1^3*x2 + 6*t1122*x1^2*x2^2 + 4*t1222*x1*x2^3 + t2222*x2^4.
    """

    t1111: Scalar
    t1112: Scalar
    t1122: Scalar
    t1222: Scalar
    t2222: Scalar

    dim = 2

    _FIELDS = {
        (1, 1, 1, 1): "t1111",
        (1, 1, 1, 2): "t1112",
        (1, 1, 2, 2): "t1122",
        (1, 2, 2, 2): "t1222",
        (2, 2, 2, 2): "t2222",
    }

    def coeff(self, midx) -> Scalar:
        return getattr(self, self._FIELDS[tuple(sorted(midx))])

    def terms(self) -> Iterator[tuple[MultiIndex, int, Scalar]]:
        for midx in multi_indices(2):
            yield midx, multiplicity(midx), self.coeff(midx)


@dataclass(frozen=True)
class TernaryQuartic:
    """The 15 independent coefficients of a symmetric quartic in three variables."""

    coeffs: Tuple[Scalar, ...]

    dim = 3

    _INDICES = tuple(combinations_with_replacement((1, 2, 3), ORDER))
    _POSITION = {m: p for p, m in enumerate(_INDICES)}

    def __post_init__(self):
        if len(self.coeffs) != 15:
            raise TensorError(f"expected 15 coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_map(cls, entries: Mapping[MultiIndex, Scalar]) -> "TernaryQuartic":
        """Build from a sorted-multi-index map; missing entries default to 0."""
        coeffs = [Fraction(0)] * 15
        for key, value in entries.items():
            coeffs[cls._POSITION[tuple(sorted(key))]] = value
        return cls(tuple(coeffs))

    def coeff(self, midx) -> Scalar:
        return self.coeffs[self._POSITION[tuple(sorted(midx))]]

    def terms(self) -> Iterator[tuple[MultiIndex, int, Scalar]]:
        for midx, c in zip(self._INDICES, self.coeffs):
            yield midx, multiplicity(midx), c


Quartic = Union[BinaryQuartic, TernaryQuartic]


def build_tensor(dim: int, entries: Mapping[Sequence[int], Scalar]) -> Quartic:
    """Build the canonical symmetric tensor from (possibly unsorted) entries.

    Permutation-equivalent keys must agree; missing multi-indices default to 0.
    """
    if dim not in (2, 3):
        raise TensorError(f"dimension must be 2 or 3, got {dim}")
    canonical: dict[MultiIndex, Scalar] = {}
    first_key: dict[MultiIndex, object] = {}
    for key, value in entries.items():
        ckey = _canonical_key(tuple(key), dim)
        value = parse_scalar(value)
        if ckey in canonical:
            if canonical[ckey] != value:
                raise ConflictingEntries(
                    f"keys {first_key[ckey]!r} and {tuple(key)!r} are permutations "
                    f"of each other but have values {canonical[ckey]} != {value}"
                )
        else:
            canonical[ckey] = value
            first_key[ckey] = tuple(key)
    if dim == 2:
        zero = Fraction(0)
        return BinaryQuartic(*(canonical.get(m, zero) for m in multi_indices(2)))
    return TernaryQuartic.from_map(canonical)


def _check_dim(T: Quartic, x: Sequence[Scalar]) -> None:
    if len(x) != T.dim:
        raise DimensionMismatch(f"vector of length {len(x)} against dim-{T.dim} tensor")


def evaluate(T: Quartic, x: Sequence[Scalar]) -> Scalar:
    """The quartic form at x: sum over sorted multi-indices of
    multiplicity * coefficient * monomial.  Exact when all inputs are exact."""
    _check_dim(T, x)
    total: Scalar = 0
    for midx, w, c in T.terms():
        if c == 0:
            continue
        mono = 1
        for i in midx:
            mono = mono * x[i - 1]
        total = total + w * c * mono
    return total


def gradient(T: Quartic, x: Sequence[Scalar]) -> Vector:
    """Gradient of the quartic form at x; component k is
    4 * sum of t_{k,i2,i3,i4} x_{i2} x_{i3} x_{i4}."""
    _check_dim(T, x)
    g: list[Scalar] = [0] * T.dim
    for midx, w, c in T.terms():
        if c == 0:
            continue
        counts = Counter(midx)
        for i, e in counts.items():
            mono: Scalar = e
            for j, ej in counts.items():
                mono = mono * x[j - 1] ** (ej - (1 if j == i else 0))
            g[i - 1] = g[i - 1] + w * c * mono
    return tuple(g)


# The four expansion centers used by the rewriting identities.
_REWRITE_SIGNS = ((1, 1, 1), (1, 1, -1), (1, -1, 1), (-1, 1, 1))


def rewrite_forms(T: TernaryQuartic, x: Sequence[Scalar]) -> list[Scalar]:
    """Evaluate the four (sum-of-signed-variables)^4 rewritings of the form.

    Only valid for tensors in the unit-entry class with antisymmetric cubic
    pairing (see :func:`qpd.ternary.validate_class`); each returned value
    equals ``evaluate(T, x)``, computed along a different algebraic route.
    """
    from .ternary import validate_class

    validate_class(T)  # raises NotInClass otherwise
    _check_dim(T, x)
    x1, x2, x3 = x
    values = []
    for s in _REWRITE_SIGNS:
        v = (s[0] * x1 + s[1] * x2 + s[2] * x3) ** 4
        for i, j in ((1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2)):
            t = T.coeff((i, i, i, j))
            v = v + 4 * (t - s[i - 1] * s[j - 1]) * x[i - 1] ** 3 * x[j - 1]
        for i, j in ((1, 2), (1, 3), (2, 3)):
            t = T.coeff((i, i, j, j))
            v = v + 6 * (t - 1) * x[i - 1] ** 2 * x[j - 1] ** 2
        for i, j, k in ((1, 2, 3), (2, 1, 3), (3, 1, 2)):
            t = T.coeff((i, i, j, k))
            v = v + 12 * (t - s[j - 1] * s[k - 1]) * x[i - 1] ** 2 * x[j - 1] * x[k - 1]
        values.append(v)
    return values


# ---------------------------------------------------------------------------
# JSON tensor file format:
#   {"dim": 2|3, "order": 4, "entries": {"1123": value, ...}}
# keys are 4-character digit strings with non-decreasing digits; values are
# JSON numbers or "p/q" strings.

_TOP_KEYS = {"dim", "order", "entries"}


def tensor_from_json(text: str) -> Quartic:
    """Parse the JSON tensor format.  Raises ParseError on any deviation."""
    try:
        doc = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top-level value must be an object")
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise ParseError(f"unknown top-level keys: {sorted(unknown)}")
    missing = _TOP_KEYS - set(doc)
    if missing:
        raise ParseError(f"missing keys: {sorted(missing)}")
    dim, order, entries = doc["dim"], doc["order"], doc["entries"]
    if dim not in (2, 3):
        raise ParseError(f'"dim" must be 2 or 3, got {dim!r}')
    if order != ORDER:
        raise ParseError(f'"order" must be 4, got {order!r}')
    if not isinstance(entries, dict):
        raise ParseError('"entries" must be an object')
    parsed: dict[MultiIndex, Scalar] = {}
    for key, value in entries.items():
        if not (isinstance(key, str) and len(key) == ORDER and key.isdigit()):
            raise ParseError(f"entry key {key!r} is not a 4-digit string")
        digits = tuple(int(ch) for ch in key)
        if any(not 1 <= d <= dim for d in digits):
            raise ParseError(f"entry key {key!r} has an index outside 1..{dim}")
        if list(digits) != sorted(digits):
            raise ParseError(f"entry key {key!r} must have non-decreasing digits")
        if not isinstance(value, (int, Fraction, str)) or isinstance(value, bool):
            raise ParseError(f"entry {key!r} has a non-numeric value {value!r}")
        try:
            parsed[digits] = parse_scalar(value)
        except TensorError as exc:
            raise ParseError(f"entry {key!r}: {exc}") from exc
    return build_tensor(dim, parsed)


def load_tensor(path) -> Quartic:
    with open(path, "r", encoding="utf-8") as fh:
        return tensor_from_json(fh.read())


def format_scalar(value: Scalar):
    """JSON-friendly rendering: exact rationals as "p/q" strings (plain ints
    when the denominator is 1), floats as numbers."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return value
    return float(value)
