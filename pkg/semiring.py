"""
Extended tropical semiring T = R ∪ R^ν ∪ {-inf}

Scalar arithmetic with exact rational magnitudes:
- ⊕ is the order-maximum, except that two elements of equal magnitude
  sum to the ghost of that magnitude (a ⊕ a = a^ν)
- ⊙ adds magnitudes; a ghost factor makes the product ghost
- ν maps every element into the ghost part, π strips the ghost tag
"""

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import reduce
from typing import Iterable, Optional, Union

from exceptions import MatrixParseError, NegInfDivisionError, ValidationError

Magnitude = Union[int, str, Fraction]

_TOKEN = re.compile(r"^([+-]?\d+)(?:/(\d+)|\.(\d+))?(g?)$")


class Kind(Enum):
    """Variant tag of a tropical scalar"""
    NEG_INF = 0
    REAL = 1
    GHOST = 2


class Ordering(Enum):
    """Result of comparing two scalars in the total order ≺"""
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _to_fraction(value: Magnitude) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ValidationError(
            f"Magnitude must be an exact rational, got {value!r}",
            field="magnitude"
        )
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError):
        raise ValidationError(f"Invalid magnitude: {value!r}", field="magnitude")


@dataclass(frozen=True)
class TropScalar:
    """
    Element of the extended tropical semiring

    `magnitude` is None exactly when `kind` is NEG_INF.
    """
    kind: Kind
    magnitude: Optional[Fraction] = None

    def __post_init__(self):
        if (self.kind is Kind.NEG_INF) != (self.magnitude is None):
            raise ValidationError("-inf carries no magnitude; real and ghost values need one")

    @classmethod
    def real(cls, value: Magnitude) -> 'TropScalar':
        return cls(Kind.REAL, _to_fraction(value))

    @classmethod
    def ghost(cls, value: Magnitude) -> 'TropScalar':
        return cls(Kind.GHOST, _to_fraction(value))

    @classmethod
    def neg_inf(cls) -> 'TropScalar':
        return cls(Kind.NEG_INF)

    @property
    def is_neg_inf(self) -> bool:
        return self.kind is Kind.NEG_INF

    @property
    def is_real(self) -> bool:
        """True for elements of R (finite and not ghost)"""
        return self.kind is Kind.REAL

    def _key(self):
        if self.kind is Kind.NEG_INF:
            return (0, 0, 0)
        return (1, self.magnitude, 1 if self.kind is Kind.GHOST else 0)

    def __add__(self, other: 'TropScalar') -> 'TropScalar':
        return add(self, other)

    def __mul__(self, other: 'TropScalar') -> 'TropScalar':
        return mul(self, other)

    def __truediv__(self, other: 'TropScalar') -> 'TropScalar':
        return div(self, other)

    def __lt__(self, other: 'TropScalar') -> bool:
        return self._key() < other._key()

    def __le__(self, other: 'TropScalar') -> bool:
        return self._key() <= other._key()

    def __gt__(self, other: 'TropScalar') -> bool:
        return self._key() > other._key()

    def __ge__(self, other: 'TropScalar') -> bool:
        return self._key() >= other._key()

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f'<TropScalar {format_scalar(self)}>'


@dataclass(frozen=True)
class MaxPlusScalar:
    """
    Element of the max-plus semiring (R ∪ {-inf}, max, +)

    `+` is max and `*` is ordinary addition, mirroring TropScalar.
    """
    value: Optional[Fraction] = None

    @property
    def is_neg_inf(self) -> bool:
        return self.value is None

    def __add__(self, other: 'MaxPlusScalar') -> 'MaxPlusScalar':
        if self.value is None:
            return other
        if other.value is None:
            return self
        return MaxPlusScalar(max(self.value, other.value))

    def __mul__(self, other: 'MaxPlusScalar') -> 'MaxPlusScalar':
        if self.value is None or other.value is None:
            return MAXPLUS_NEG_INF
        return MaxPlusScalar(self.value + other.value)

    def __lt__(self, other: 'MaxPlusScalar') -> bool:
        if self.value is None:
            return other.value is not None
        return other.value is not None and self.value < other.value

    def to_trop(self) -> TropScalar:
        """Embed back into T as a real element (or -inf)"""
        if self.value is None:
            return NEG_INF
        return TropScalar(Kind.REAL, self.value)

    def __str__(self) -> str:
        return format_scalar(self.to_trop())


NEG_INF = TropScalar(Kind.NEG_INF)
ZERO = NEG_INF                      # additive identity 0_T
ONE = TropScalar(Kind.REAL, Fraction(0))  # multiplicative identity 1_T
MAXPLUS_NEG_INF = MaxPlusScalar(None)


def add(x: TropScalar, y: TropScalar) -> TropScalar:
    """
    Tropical sum x ⊕ y

    Returns the ≺-maximum when magnitudes differ; equal magnitudes
    collapse to the ghost of that magnitude.
    """
    if x.kind is Kind.NEG_INF:
        return y
    if y.kind is Kind.NEG_INF:
        return x
    if x.magnitude == y.magnitude:
        return TropScalar(Kind.GHOST, x.magnitude)
    return x if x.magnitude > y.magnitude else y


def mul(x: TropScalar, y: TropScalar) -> TropScalar:
    """Tropical product x ⊙ y (magnitudes add, ghost absorbs)"""
    if x.kind is Kind.NEG_INF or y.kind is Kind.NEG_INF:
        return NEG_INF
    kind = Kind.GHOST if Kind.GHOST in (x.kind, y.kind) else Kind.REAL
    return TropScalar(kind, x.magnitude + y.magnitude)


def div(x: TropScalar, y: TropScalar) -> TropScalar:
    """
    Tropical quotient x / y

    Raises:
        NegInfDivisionError: If y is -inf
    """
    if y.kind is Kind.NEG_INF:
        raise NegInfDivisionError()
    if x.kind is Kind.NEG_INF:
        return NEG_INF
    kind = Kind.GHOST if Kind.GHOST in (x.kind, y.kind) else Kind.REAL
    return TropScalar(kind, x.magnitude - y.magnitude)


def compare(x: TropScalar, y: TropScalar) -> Ordering:
    """Compare in the total order ≺ (-inf least, real a ≺ a^ν)"""
    kx, ky = x._key(), y._key()
    if kx < ky:
        return Ordering.LESS
    if kx > ky:
        return Ordering.GREATER
    return Ordering.EQUAL


def ghost(x: TropScalar) -> TropScalar:
    """Ghost map ν"""
    if x.kind is Kind.REAL:
        return TropScalar(Kind.GHOST, x.magnitude)
    return x


def realize(x: TropScalar) -> MaxPlusScalar:
    """Max-plus projection π"""
    return MaxPlusScalar(x.magnitude)


def strip(x: TropScalar) -> TropScalar:
    """π followed by the embedding back into T (a^ν -> a)"""
    if x.kind is Kind.GHOST:
        return TropScalar(Kind.REAL, x.magnitude)
    return x


def is_ghost(x: TropScalar) -> bool:
    """Membership in the ghost part Ū = R^ν ∪ {-inf}"""
    return x.kind is not Kind.REAL


def nu_equal(x: TropScalar, y: TropScalar) -> bool:
    """Two elements are ν-equal when their magnitudes coincide"""
    return x.magnitude == y.magnitude


def power(x: TropScalar, k: int) -> TropScalar:
    """⊙-power x^k for k >= 0"""
    if k < 0:
        raise ValidationError("Exponent must be non-negative", field="k")
    if k == 0:
        return ONE
    if x.kind is Kind.NEG_INF:
        return NEG_INF
    return TropScalar(x.kind, x.magnitude * k)


def tsum(values: Iterable[TropScalar]) -> TropScalar:
    """⊕-fold; the empty sum is -inf"""
    return reduce(add, values, ZERO)


def tprod(values: Iterable[TropScalar]) -> TropScalar:
    """⊙-fold; the empty product is 0"""
    return reduce(mul, values, ONE)


def parse_scalar(token: str) -> TropScalar:
    """
    Parse the text form of a scalar

    Grammar: `-inf`, or an integer, decimal or `p/q` rational with an
    optional `g` suffix marking a ghost.

    Raises:
        MatrixParseError: If the token is malformed
    """
    text = token.strip()
    if text == '-inf':
        return NEG_INF
    match = _TOKEN.match(text)
    if not match:
        raise MatrixParseError(f"Invalid scalar token '{token}'")
    numerator, denominator, decimals, suffix = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise MatrixParseError(f"Zero denominator in '{token}'")
    if decimals is not None:
        value = Fraction(f"{numerator}.{decimals}")
    else:
        value = Fraction(int(numerator), int(denominator or 1))
    return TropScalar(Kind.GHOST if suffix else Kind.REAL, value)


def format_scalar(x: TropScalar) -> str:
    """Canonical text rendering (`3`, `3/2`, `5g`, `-inf`)"""
    if x.kind is Kind.NEG_INF:
        return '-inf'
    q = x.magnitude
    text = str(q.numerator) if q.denominator == 1 else f'{q.numerator}/{q.denominator}'
    return text + ('g' if x.kind is Kind.GHOST else '')
