"""Dense univariate polynomials over Z and Q, plus root and separation bounds.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`;
both are arbitrary precision and always kept in lowest terms.  Coefficient
lists are stored low-to-high, so ``IntPolynomial([-2, 0, 1])`` is ``x^2 - 2``.
The zero polynomial has an empty coefficient tuple and degree ``-1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Union

from .errors import DomainError

Rational = Fraction
Number = Union[int, Fraction]


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact or boolean value {value!r}")
    return Fraction(value)


class _DensePoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _strip(self._coerce(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("polynomials are immutable")

    @staticmethod
    def _coerce(c):
        raise NotImplementedError

    @classmethod
    def _wrap(cls, coeffs):
        return cls(coeffs)

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c=1):
        return cls([0] * degree + [c])

    # -- structure ------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def coeff(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, _DensePoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # -- ring operations -------------------------------------------------

    def _lift(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return type(self)([other])
        if isinstance(other, _DensePoly):
            # Int op Rat promotes to Rat.
            if isinstance(self, IntPolynomial) and isinstance(other, RatPolynomial):
                return None
            return type(self)(other.coeffs)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return self._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                return self._wrap(())
            return self._wrap(c * other for c in self.coeffs)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._wrap(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return self._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = self._wrap([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int):
        """Multiply by ``x^k``."""
        if not self.coeffs:
            return self
        return self._wrap([0] * k + list(self.coeffs))

    def __call__(self, x):
        return eval_at_rational(self, x)

    # -- printing --------------------------------------------------------

    def to_string(self, var: str = "x", spaces: bool = True) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        sep = " " if spaces else ""
        for sign, body in parts[1:]:
            out += f"{sep}{sign}{sep}{body}"
        return out

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"{type(self).__name__}({list(self.coeffs)!r})"


class IntPolynomial(_DensePoly):
    """Dense polynomial with integer coefficients, low-to-high."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, bool):
            return int(c)
        if isinstance(c, int):
            return c
        if isinstance(c, Fraction) and c.denominator == 1:
            return c.numerator
        raise TypeError(f"non-integer coefficient {c!r}")

    def __mul__(self, other):
        if isinstance(other, Fraction) and other.denominator != 1:
            return RatPolynomial(self.coeffs) * other
        if isinstance(other, RatPolynomial):
            return RatPolynomial(self.coeffs) * other
        return super().__mul__(other)

    __rmul__ = __mul__

    def __add__(self, other):
        if isinstance(other, RatPolynomial) or (
            isinstance(other, Fraction) and other.denominator != 1
        ):
            return RatPolynomial(self.coeffs) + other
        return super().__add__(other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, RatPolynomial) or (
            isinstance(other, Fraction) and other.denominator != 1
        ):
            return RatPolynomial(self.coeffs) - other
        return super().__sub__(other)

    def to_rational(self) -> "RatPolynomial":
        return RatPolynomial(self.coeffs)


class RatPolynomial(_DensePoly):
    """Dense polynomial with rational coefficients, low-to-high."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, Fraction):
            return c
        if isinstance(c, int) and not isinstance(c, bool):
            return Fraction(c)
        raise TypeError(f"non-rational coefficient {c!r}")

    def monic(self) -> "RatPolynomial":
        if not self.coeffs:
            return self
        return self * (1 / self.lc)

    def clear_denominators(self) -> tuple[int, IntPolynomial]:
        """Return ``(m, P)`` with ``m > 0`` and ``m * self == P`` over Z."""
        m = 1
        for c in self.coeffs:
            m = m * c.denominator // gcd(m, c.denominator)
        return m, IntPolynomial(c * m for c in self.coeffs)


class PointKind(enum.Enum):
    FINITE = "finite"
    NEG_INFINITY = "-oo"
    POS_INFINITY = "+oo"


@dataclass(frozen=True)
class ExtendedPoint:
    """A point of Q extended by the two infinities."""

    kind: PointKind
    value: Fraction | None = None

    @classmethod
    def finite(cls, value) -> "ExtendedPoint":
        return cls(PointKind.FINITE, as_rational(value))

    @classmethod
    def coerce(cls, value) -> "ExtendedPoint":
        if isinstance(value, ExtendedPoint):
            return value
        return cls.finite(value)

    @property
    def is_finite(self) -> bool:
        return self.kind is PointKind.FINITE

    def __lt__(self, other: "ExtendedPoint") -> bool:
        order = {PointKind.NEG_INFINITY: -1, PointKind.FINITE: 0, PointKind.POS_INFINITY: 1}
        a, b = order[self.kind], order[other.kind]
        if a or b:
            return a < b
        return self.value < other.value

    def __str__(self):
        if self.kind is PointKind.FINITE:
            return str(self.value)
        return self.kind.value


NEG_INFINITY = ExtendedPoint(PointKind.NEG_INFINITY)
POS_INFINITY = ExtendedPoint(PointKind.POS_INFINITY)


# ---------------------------------------------------------------------------
# Basic operations


def bitsize(P: IntPolynomial) -> int:
    """``floor(lg(max |a_i|)) + 2`` -- the coefficient bit size including a sign bit."""
    if P.is_zero():
        raise DomainError("bitsize of the zero polynomial is undefined")
    return max(abs(c) for c in P.coeffs).bit_length() - 1 + 2


def eval_at_rational(P: _DensePoly, x) -> Fraction:
    """Exact value of ``P(x)`` by Horner's rule."""
    x = as_rational(x)
    acc = Fraction(0)
    for c in reversed(P.coeffs):
        acc = acc * x + c
    return acc


def sign_at_rational(P: IntPolynomial, x) -> int:
    """Sign of ``P(x)`` using integer-only homogeneous Horner evaluation."""
    x = as_rational(x)
    n, d = x.numerator, x.denominator
    acc = 0
    dpow = 1
    for c in reversed(P.coeffs):
        acc = acc * n + c * dpow
        dpow *= d
    # acc == P(n/d) * d^deg and d > 0
    return (acc > 0) - (acc < 0)


def derivative(P: _DensePoly) -> _DensePoly:
    return P._wrap(i * c for i, c in enumerate(P.coeffs) if i)


def content(P: IntPolynomial) -> int:
    g = 0
    for c in P.coeffs:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def content_and_primitive(P: IntPolynomial) -> tuple[int, IntPolynomial]:
    """Return ``(c, Q)`` with ``c > 0``, ``Q`` primitive with positive leading coefficient."""
    if P.is_zero():
        raise DomainError("content of the zero polynomial is undefined")
    c = content(P)
    if P.lc < 0:
        c_signed = -c
    else:
        c_signed = c
    return c, IntPolynomial(a // c_signed for a in P.coeffs)


def primitive(P: IntPolynomial) -> IntPolynomial:
    if P.is_zero():
        return P
    return content_and_primitive(P)[1]


def rat_divmod(F: _DensePoly, G: _DensePoly) -> tuple[RatPolynomial, RatPolynomial]:
    """Euclidean division over Q."""
    if G.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in F.coeffs]
    dg = G.degree
    lc = Fraction(G.lc)
    g = G.coeffs
    if len(r) - 1 < dg:
        return RatPolynomial(()), RatPolynomial(r)
    q = [Fraction(0)] * (len(r) - dg)
    for k in range(len(r) - 1 - dg, -1, -1):
        c = r[k + dg] / lc
        q[k] = c
        if c:
            for i in range(dg + 1):
                r[k + i] -= c * g[i]
    return RatPolynomial(q), RatPolynomial(r[:dg])


def rat_rem(F: _DensePoly, G: _DensePoly) -> RatPolynomial:
    return rat_divmod(F, G)[1]


def pseudo_divmod(F: IntPolynomial, G: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial, int]:
    """Return ``(Q, R, e)`` with ``lc(G)^e * F = Q*G + R`` and ``deg R < deg G``.

    ``e = max(deg F - deg G + 1, 0)``; everything stays in Z[x].
    """
    if G.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    dg = G.degree
    df = F.degree
    if df < dg:
        return IntPolynomial(()), F, 0
    e = df - dg + 1
    lc = G.lc
    r = list(F.coeffs)
    q = [0] * (df - dg + 1)
    g = G.coeffs
    for k in range(df - dg, -1, -1):
        c = r[k + dg]
        q = [x * lc for x in q]
        q[k] = c
        r = [x * lc for x in r]
        if c:
            for i in range(dg + 1):
                r[k + i] -= c * g[i]
    return IntPolynomial(q), IntPolynomial(r[:dg]), e


def exact_div(F: IntPolynomial, G: IntPolynomial) -> IntPolynomial:
    """Quotient ``F / G`` in Z[x]; raises ``ValueError`` if the division is inexact."""
    if G.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(F.coeffs)
    dg = G.degree
    if len(r) - 1 < dg:
        if r:
            raise ValueError("inexact polynomial division")
        return IntPolynomial(())
    lc = G.lc
    g = G.coeffs
    q = [0] * (len(r) - dg)
    for k in range(len(r) - 1 - dg, -1, -1):
        c, m = divmod(r[k + dg], lc)
        if m:
            raise ValueError("inexact polynomial division")
        q[k] = c
        if c:
            for i in range(dg + 1):
                r[k + i] -= c * g[i]
    if any(r[:dg]):
        raise ValueError("inexact polynomial division")
    return IntPolynomial(q)


def compose_linear(P: IntPolynomial, a: int, b: int) -> IntPolynomial:
    """``P(a*x + b)``."""
    result = IntPolynomial(())
    lin = IntPolynomial([b, a])
    for c in reversed(P.coeffs):
        result = result * lin + c
    return result


def from_rational_roots(roots: Iterable) -> IntPolynomial:
    """Primitive integer polynomial whose roots are exactly ``roots`` (with repetition)."""
    P = IntPolynomial([1])
    for r in roots:
        r = as_rational(r)
        P = P * IntPolynomial([-r.numerator, r.denominator])
    return P


# ---------------------------------------------------------------------------
# Bounds.  Irrational factors are rounded outward so results stay valid.

_SQRT_BITS = 32


def _sqrt_up(n: int) -> Fraction:
    r = isqrt(n)
    if r * r == n:
        return Fraction(r)
    scale = 1 << _SQRT_BITS
    return Fraction(isqrt(n * scale * scale) + 1, scale)


def _sqrt_down(n: int) -> Fraction:
    r = isqrt(n)
    if r * r == n:
        return Fraction(r)
    scale = 1 << _SQRT_BITS
    return Fraction(isqrt(n * scale * scale), scale)


def _half_power_up(n: int, m: int) -> Fraction:
    """Rational upper bound on ``n^(m/2)`` for ``m >= 0``."""
    q, r = divmod(m, 2)
    value = Fraction(n) ** q
    if r:
        value *= _sqrt_up(n)
    return value


def cauchy_root_bound(f: IntPolynomial) -> Fraction:
    """``1 + max |a_i / a_d|``; every real root lies strictly inside ``(-B, B)``."""
    if f.degree < 1:
        raise DomainError("Cauchy bound needs a non-constant polynomial")
    lc = abs(f.lc)
    m = max((abs(c) for c in f.coeffs[:-1]), default=0)
    return 1 + Fraction(m, lc)


def mahler_measure_upper_bound(f: IntPolynomial) -> Fraction:
    """Rational upper bound ``>= 2^tau * sqrt(d + 1)`` on the Mahler measure."""
    if f.is_zero():
        raise DomainError("Mahler measure of the zero polynomial")
    return (1 << bitsize(f)) * _sqrt_up(f.degree + 1)


def davenport_mahler_lower_bound(f: IntPolynomial, k: int) -> Fraction:
    """Lower bound on the product of ``k`` consecutive real-root gaps of ``f``.

    Evaluates ``M^(1-d) * d^(-d/2) * (sqrt(3)/d)^k`` with ``M`` replaced by
    :func:`mahler_measure_upper_bound` and every irrational factor rounded
    toward a smaller result.
    """
    d = f.degree
    if d < 2:
        raise DomainError("Davenport-Mahler bound needs degree >= 2")
    if not 1 <= k <= d - 1:
        raise DomainError(f"k must lie in [1, {d - 1}], got {k}")
    M = mahler_measure_upper_bound(f)
    head = 1 / (M ** (d - 1) * _half_power_up(d, d))
    return head * (_sqrt_down(3) / d) ** k


def separation_lower_bound(f: IntPolynomial) -> Fraction:
    """Rational lower bound on the minimum distance between distinct roots of ``f``.

    ``d^(-(d+2)/2) * (d+1)^((1-d)/2) * 2^(tau(1-d))``, rounded down.
    """
    d = f.degree
    if d < 2:
        raise DomainError("separation bound needs degree >= 2")
    tau = bitsize(f)
    denom = _half_power_up(d, d + 2) * _half_power_up(d + 1, d - 1) * (1 << (tau * (d - 1)))
    return 1 / denom
