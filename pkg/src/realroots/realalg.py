"""Real algebraic numbers in isolating-interval representation.

A real algebraic number is a square-free integer polynomial together with a
rational interval holding exactly one of its real roots.  Open intervals
always have non-root endpoints, so the polynomial changes sign across them.
Rational roots may instead be stored as exact points.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd as igcd, log2
from typing import Iterable, Optional

from .errors import BaseMismatchError, DivisionByZero, DomainError, PreconditionError
from .polycore import (
    IntPolynomial,
    RatPolynomial,
    as_rational,
    bitsize,
    cauchy_root_bound,
    content,
    derivative,
    exact_div,
    primitive,
    pseudo_divmod,
    rat_divmod,
    sign_at_rational,
)
from .stha import (
    QuotientBoot,
    _reduce_mod,
    gcd,
    eval_stha_at,
    modified_sign_variations,
    square_free_factorization,
    square_free_part,
    stha_quotient_boot,
)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


class Order(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1

    def __str__(self):
        return self.name


@lru_cache(maxsize=4096)
def _boot(A: IntPolynomial, B: IntPolynomial) -> QuotientBoot:
    return stha_quotient_boot(A, B)


def _w(boot: QuotientBoot, x: Fraction) -> int:
    return modified_sign_variations(eval_stha_at(boot, x))


def _linear_factor(r: Fraction) -> IntPolynomial:
    return IntPolynomial([-r.numerator, r.denominator])


@dataclass(frozen=True)
class AlgebraicNumber:
    """``defining`` has exactly one real root in ``[lo, hi]``.

    When ``exact`` is set the number is that rational and ``lo == hi == exact``.
    Otherwise ``lo < hi`` and ``defining`` has opposite nonzero signs at the
    endpoints.  The plain constructor trusts its arguments; use
    :meth:`from_interval` or :meth:`from_rational` for validated construction.
    """

    defining: IntPolynomial
    lo: Fraction
    hi: Fraction
    exact: Optional[Fraction] = None

    @classmethod
    def from_rational(cls, r) -> "AlgebraicNumber":
        r = as_rational(r)
        return cls(_linear_factor(r), r, r, r)

    @classmethod
    def from_interval(cls, P: IntPolynomial, lo, hi) -> "AlgebraicNumber":
        """Validate ``(P, [lo, hi])`` and normalise it.

        ``P`` is replaced by its square-free part.  If an endpoint is the
        root, or ``lo == hi``, the result is an exact point.
        """
        lo, hi = as_rational(lo), as_rational(hi)
        if lo > hi:
            raise PreconditionError(f"empty interval [{lo}, {hi}]")
        if P.degree < 1:
            raise PreconditionError("defining polynomial must be non-constant")
        P = square_free_part(P)
        s_lo, s_hi = sign_at_rational(P, lo), sign_at_rational(P, hi)
        if lo == hi:
            if s_lo:
                raise PreconditionError(f"{lo} is not a root of {P}")
            return cls(P, lo, hi, lo)
        inner = _count_open(P, lo, hi)
        if s_lo == 0 or s_hi == 0:
            if inner != 0 or (s_lo == 0 and s_hi == 0):
                raise PreconditionError(f"[{lo}, {hi}] holds more than one root of {P}")
            r = lo if s_lo == 0 else hi
            return cls(P, r, r, r)
        if inner != 1:
            raise PreconditionError(f"[{lo}, {hi}] holds {inner} roots of {P}, expected 1")
        return cls(P, lo, hi)

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def sign_lo(self) -> int:
        return sign_at_rational(self.defining, self.lo)

    def sign_hi(self) -> int:
        return sign_at_rational(self.defining, self.hi)

    def __str__(self):
        if self.is_exact:
            return str(self.exact)
        return f"({self.defining}, ({self.lo}, {self.hi}))"


@dataclass(frozen=True)
class IsolatedRoot:
    number: AlgebraicNumber
    multiplicity: int


@dataclass
class IsolationStats:
    """Diagnostics of one isolation run; ``subdivisions`` counts bisections."""

    subdivisions: int = 0
    max_endpoint_bits: int = 0
    bound: Fraction = Fraction(0)

    def note_endpoint(self, x: Fraction) -> None:
        bits = max(x.numerator.bit_length(), x.denominator.bit_length())
        self.max_endpoint_bits = max(self.max_endpoint_bits, bits)


def _count_open(P: IntPolynomial, a: Fraction, b: Fraction) -> int:
    """Roots of the square-free ``P`` in ``(a, b)``; endpoints may be roots."""
    for r in (a, b):
        if sign_at_rational(P, r) == 0:
            P = exact_div(P, _linear_factor(r))
    if P.degree < 1:
        return 0
    boot = _boot(P, derivative(P))
    return _w(boot, a) - _w(boot, b)


# ---------------------------------------------------------------------------
# Isolation


def _pick_factor(factors, a: Fraction, b: Fraction) -> int:
    """Multiplicity of the one square-free factor that changes sign on ``(a, b)``."""
    hits = [m for g, m in factors if sign_at_rational(g, a) * sign_at_rational(g, b) < 0]
    if len(hits) != 1:
        raise ArithmeticError(f"{len(hits)} factors change sign on ({a}, {b})")
    return hits[0]


def _exact_multiplicity(factors, r: Fraction) -> int:
    hits = [m for g, m in factors if sign_at_rational(g, r) == 0]
    if len(hits) != 1:
        raise ArithmeticError(f"{len(hits)} factors vanish at {r}")
    return hits[0]


class _Counter:
    """Root counts of the current working polynomial, with memoised W values."""

    def __init__(self, P: IntPolynomial):
        self.reset(P)

    def reset(self, P: IntPolynomial) -> None:
        self.P = P
        self.memo = {}
        self.boot = _boot(P, derivative(P)) if P.degree >= 1 else None

    def w(self, x: Fraction) -> int:
        if x not in self.memo:
            self.memo[x] = _w(self.boot, x)
        return self.memo[x]

    def count(self, a: Fraction, b: Fraction) -> int:
        if self.boot is None:
            return 0
        return self.w(a) - self.w(b)

    def deflate(self, r: Fraction) -> None:
        self.reset(exact_div(self.P, _linear_factor(r)))


def _pull_off(counter: _Counter, f_red, a, b, stats) -> tuple:
    """Shrink ``(a, b)`` (one root of the working polynomial) until neither end is a root of ``f_red``."""
    while sign_at_rational(f_red, a) == 0 or sign_at_rational(f_red, b) == 0:
        m = (a + b) / 2
        stats.subdivisions += 1
        if sign_at_rational(counter.P, m) == 0:
            return m, m
        if counter.count(a, m) == 1:
            b = m
        else:
            a = m
    return a, b


def isolate_real_roots(f: IntPolynomial, stats: Optional[IsolationStats] = None) -> list:
    """Isolating intervals and multiplicities of the real roots of ``f``, in increasing order.

    Every number is defined by the square-free part of ``f``.  Bisection runs
    from the Cauchy bound with a FIFO queue; a midpoint that hits a root is
    emitted as an exact point and divided out of the working polynomial.
    """
    if f.degree < 1:
        raise DomainError("cannot isolate the roots of a constant")
    if stats is None:
        stats = IsolationStats()
    f_red = square_free_part(f)
    factors = tuple(square_free_factorization(f))
    B = cauchy_root_bound(f_red)
    while sign_at_rational(f_red, B) == 0 or sign_at_rational(f_red, -B) == 0:
        B += 1
    stats.bound = B
    counter = _Counter(f_red)
    found = []
    queue = deque([(-B, B)])
    while queue:
        a, b = queue.popleft()
        n = counter.count(a, b)
        if n == 0:
            continue
        if n == 1:
            a, b = _pull_off(counter, f_red, a, b, stats)
            if a == b:
                counter.deflate(a)
                found.append(IsolatedRoot(AlgebraicNumber(f_red, a, a, a), _exact_multiplicity(factors, a)))
            else:
                stats.note_endpoint(a)
                stats.note_endpoint(b)
                found.append(IsolatedRoot(AlgebraicNumber(f_red, a, b), _pick_factor(factors, a, b)))
            continue
        m = (a + b) / 2
        stats.subdivisions += 1
        if sign_at_rational(counter.P, m) == 0:
            counter.deflate(m)
            found.append(IsolatedRoot(AlgebraicNumber(f_red, m, m, m), _exact_multiplicity(factors, m)))
        queue.append((a, m))
        queue.append((m, b))
    found.sort(key=lambda root: (root.number.lo, root.number.hi))
    return found


def real_roots(f: IntPolynomial) -> list:
    """The distinct real roots of ``f`` as algebraic numbers."""
    return [root.number for root in isolate_real_roots(f)]


def refine(alpha: AlgebraicNumber) -> AlgebraicNumber:
    """Halve the isolating interval; exact numbers come back unchanged."""
    if alpha.is_exact:
        return alpha
    m = (alpha.lo + alpha.hi) / 2
    s = sign_at_rational(alpha.defining, m)
    if s == 0:
        return AlgebraicNumber(alpha.defining, m, m, m)
    if s == alpha.sign_lo():
        return AlgebraicNumber(alpha.defining, m, alpha.hi)
    return AlgebraicNumber(alpha.defining, alpha.lo, m)


def refine_to(alpha: AlgebraicNumber, width) -> AlgebraicNumber:
    """Refine until the interval is no wider than ``width`` (or exact)."""
    width = as_rational(width)
    while not alpha.is_exact and alpha.width > width:
        alpha = refine(alpha)
    return alpha


# ---------------------------------------------------------------------------
# Sign and order


def sign_at(Q: IntPolynomial, alpha: AlgebraicNumber) -> int:
    """Exact sign of ``Q(alpha)``."""
    if alpha.is_exact:
        return sign_at_rational(Q, alpha.exact)
    P = alpha.defining
    R = _reduce_mod(Q, P)
    if R.is_zero():
        return 0
    if R.degree == 0:
        return _sign(R.lc)
    # W(lo) - W(hi) = sign(P'(alpha) R(alpha)), and sign P'(alpha) = sign P(hi)
    boot = _boot(P, R)
    return (_w(boot, alpha.lo) - _w(boot, alpha.hi)) * alpha.sign_hi()


def _locate(alpha: AlgebraicNumber, lo: Fraction, hi: Fraction) -> int:
    """Region of ``alpha`` relative to ``[lo, hi]`` inside its interval.

    -2 below ``lo``, -1 at ``lo``, 0 strictly inside, 1 at ``hi``, 2 above.
    """
    s0 = alpha.sign_lo()
    s_lo = sign_at_rational(alpha.defining, lo)
    if s_lo == 0:
        return -1
    if s_lo != s0:
        return -2
    s_hi = sign_at_rational(alpha.defining, hi)
    if s_hi == 0:
        return 1
    if s_hi == s0:
        return 2
    return 0


def compare(alpha: AlgebraicNumber, beta: AlgebraicNumber) -> Order:
    """Order of two real algebraic numbers."""
    if alpha.is_exact and beta.is_exact:
        return Order(_sign(alpha.exact - beta.exact))
    if alpha.is_exact:
        return Order(-_compare_exact(beta, alpha.exact))
    if beta.is_exact:
        return _compare_exact(alpha, beta.exact)
    if alpha.hi <= beta.lo:
        return Order.LT
    if beta.hi <= alpha.lo:
        return Order.GT
    lo, hi = max(alpha.lo, beta.lo), min(alpha.hi, beta.hi)
    ra, rb = _locate(alpha, lo, hi), _locate(beta, lo, hi)
    if ra != rb:
        return Order.LT if ra < rb else Order.GT
    if ra != 0:
        return Order.EQ
    # both strictly inside J = (lo, hi): alpha >= beta iff P2(alpha) P2'(beta) >= 0
    P2 = beta.defining
    alpha_j = AlgebraicNumber(alpha.defining, lo, hi)
    return Order(sign_at(P2, alpha_j) * sign_at_rational(P2, hi))


def _compare_exact(alpha: AlgebraicNumber, r: Fraction) -> Order:
    """Order of the non-exact ``alpha`` against the rational ``r``."""
    if r <= alpha.lo:
        return Order.GT
    if r >= alpha.hi:
        return Order.LT
    s = sign_at_rational(alpha.defining, r)
    if s == 0:
        return Order.EQ
    return Order.GT if s == alpha.sign_lo() else Order.LT


def _apart(a: AlgebraicNumber, b: AlgebraicNumber) -> bool:
    if a.hi < b.lo:
        return True
    return a.hi == b.lo and not a.is_exact and not b.is_exact


def _gap_point(a: AlgebraicNumber, b: AlgebraicNumber) -> Fraction:
    """A rational strictly between ``a < b`` once their intervals are apart."""
    if a.hi == b.lo:
        return a.hi
    if not a.is_exact:
        return a.hi
    if not b.is_exact:
        return b.lo
    return (a.hi + b.lo) / 2


def separating_rationals(roots: Iterable[AlgebraicNumber]) -> list:
    """Rationals ``q_0 < r_1 < q_1 < ... < r_l < q_l`` interleaving the sorted ``roots``."""
    roots = list(roots)
    if not roots:
        return [Fraction(0)]
    for a, b in zip(roots, roots[1:]):
        order = compare(a, b)
        if order is Order.EQ:
            raise PreconditionError(f"duplicate root {a}")
        if order is Order.GT:
            raise PreconditionError("roots must be in increasing order")
    for i in range(len(roots) - 1):
        while not _apart(roots[i], roots[i + 1]):
            a, b = roots[i], roots[i + 1]
            if not a.is_exact and (b.is_exact or a.width >= b.width):
                roots[i] = refine(a)
            else:
                roots[i + 1] = refine(b)
    first, last = roots[0], roots[-1]
    out = [first.lo - 1 if first.is_exact else first.lo]
    out.extend(_gap_point(a, b) for a, b in zip(roots, roots[1:]))
    out.append(last.hi + 1 if last.is_exact else last.hi)
    return out


def satisfy_univariate(P: IntPolynomial, gt=(), lt=(), eq=()) -> list:
    """Real roots ``g`` of ``P`` with ``A(g) > 0`` for ``gt``, ``< 0`` for ``lt`` and ``= 0`` for ``eq``."""
    if P.degree < 1:
        raise DomainError("satisfy needs a non-constant polynomial")
    wanted = [(A, 1) for A in gt] + [(B, -1) for B in lt] + [(C, 0) for C in eq]
    return [
        root
        for root in isolate_real_roots(P)
        if all(sign_at(Q, root.number) == s for Q, s in wanted)
    ]


# ---------------------------------------------------------------------------
# Arithmetic in Q(alpha)


def _same_base(a: AlgebraicNumber, b: AlgebraicNumber) -> AlgebraicNumber:
    """The base to compute in, or ``BaseMismatchError``.

    Bases are compatible when they are the same number and one defining
    polynomial divides the other (this covers re-anchoring after inversion);
    the lower-degree one wins.
    """
    if a is b or a == b:
        return a
    small, big = (a, b) if a.defining.degree <= b.defining.degree else (b, a)
    try:
        exact_div(big.defining, small.defining)
    except ValueError:
        raise BaseMismatchError(f"elements over {a} and {b} cannot be combined") from None
    if compare(a, b) is not Order.EQ:
        raise BaseMismatchError(f"{a} and {b} are different numbers")
    return small


@dataclass(frozen=True, eq=False)
class ExtFieldElement:
    """``poly(alpha) / denom`` with ``deg poly < deg defining(alpha)`` and ``denom > 0``.

    Equality is by value in the field, so elements are unhashable.
    """

    poly: IntPolynomial
    denom: int
    base: AlgebraicNumber

    @classmethod
    def make(cls, poly, base: AlgebraicNumber, denom: int = 1) -> "ExtFieldElement":
        """Reduce ``poly / denom`` modulo the defining polynomial and normalise."""
        if isinstance(poly, int):
            poly = IntPolynomial([poly])
        elif isinstance(poly, RatPolynomial):
            m, poly = poly.clear_denominators()
            denom *= m
        if denom == 0:
            raise DivisionByZero("zero denominator")
        P = base.defining
        if poly.degree >= P.degree:
            _, poly, e = pseudo_divmod(poly, P)
            denom *= P.lc**e
        if denom < 0:
            poly, denom = -poly, -denom
        g = igcd(content(poly), denom)
        if g > 1:
            poly = IntPolynomial(c // g for c in poly.coeffs)
            denom //= g
        if poly.is_zero():
            denom = 1
        return cls(poly, denom, base)

    def _rebase(self, base: AlgebraicNumber) -> "ExtFieldElement":
        if base is self.base:
            return self
        return ExtFieldElement.make(self.poly, base, self.denom)

    def __add__(self, other):
        other = self._lift(other)
        base = _same_base(self.base, other.base)
        u, v = self._rebase(base), other._rebase(base)
        return ExtFieldElement.make(u.poly * v.denom + v.poly * u.denom, base, u.denom * v.denom)

    __radd__ = __add__

    def __neg__(self):
        return ExtFieldElement(-self.poly, self.denom, self.base)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        base = _same_base(self.base, other.base)
        u, v = self._rebase(base), other._rebase(base)
        return ExtFieldElement.make(u.poly * v.poly, base, u.denom * v.denom)

    __rmul__ = __mul__

    def _lift(self, other) -> "ExtFieldElement":
        if isinstance(other, ExtFieldElement):
            return other
        if isinstance(other, (int, Fraction)):
            other = as_rational(other)
            return ExtFieldElement.make(IntPolynomial([other.numerator]), self.base, other.denominator)
        return NotImplemented

    def sign(self) -> int:
        return sign_at(self.poly, self.base)

    def is_zero(self) -> bool:
        return self.sign() == 0

    def __eq__(self, other):
        if not isinstance(other, (ExtFieldElement, int, Fraction)):
            return NotImplemented
        return (self - other).is_zero()

    def inverse(self) -> "ExtFieldElement":
        """Multiplicative inverse; a zero divisor re-anchors the base to a smaller factor."""
        if self.is_zero():
            raise DivisionByZero("inverse of zero in Q(alpha)")
        base = self.base
        u = self.poly
        g = gcd(u, base.defining)
        if g.degree > 0:
            # alpha is not a root of g because u(alpha) != 0
            cofactor = primitive(exact_div(base.defining, g))
            base = AlgebraicNumber(cofactor, base.lo, base.hi, base.exact)
            u = ExtFieldElement.make(u, base).poly
        s = _inverse_mod(u, base.defining)
        m, S = s.clear_denominators()
        return ExtFieldElement.make(S * self.denom, base, m)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __str__(self):
        body = self.poly.to_string("a")
        return body if self.denom == 1 else f"({body})/{self.denom}"


def _inverse_mod(u: IntPolynomial, P: IntPolynomial) -> RatPolynomial:
    """``s`` with ``s*u = 1 mod P`` over Q, for coprime ``u`` and ``P``."""
    r0, r1 = P.to_rational(), u.to_rational()
    s0, s1 = RatPolynomial(()), RatPolynomial([1])
    while r1.degree > 0:
        q, r = rat_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r1.is_zero():
        raise ArithmeticError("element is not invertible")
    return s1 * (1 / r1.lc)


def extfield_element(poly, base: AlgebraicNumber, denom: int = 1) -> ExtFieldElement:
    return ExtFieldElement.make(poly, base, denom)


def extfield_add(u: ExtFieldElement, v: ExtFieldElement) -> ExtFieldElement:
    return u + v


def extfield_mul(u: ExtFieldElement, v: ExtFieldElement) -> ExtFieldElement:
    return u * v


def extfield_inverse(u: ExtFieldElement) -> ExtFieldElement:
    return u.inverse()


def extfield_sign(u: ExtFieldElement) -> int:
    return u.sign()


def subdivision_budget(f: IntPolynomial, constant: int = 64) -> float:
    """``constant * (d*tau + d*lg d)`` with ``d`` and ``tau`` taken from ``f``."""
    d, tau = f.degree, bitsize(f)
    return constant * (d * tau + d * log2(max(d, 1)))
