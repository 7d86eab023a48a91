"""Sturm-Habicht sequences, their quotient boot, and the algorithms built on them.

``StHa(A, B) = (H_p, ..., H_0)`` with ``H_p = A``, ``H_{p-1} = B`` and the
remaining elements given by signed subresultant determinants.  The sequence
is computed with the exact-division subresultant recurrence, so every
element has integer coefficients.  Evaluation at a point goes through the
quotient boot of the signed remainder sequence, started from its last
element.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _sres
from .errors import DomainError, EndpointRootError, PreconditionError, StructureError
from .polycore import (
    NEG_INFINITY,
    POS_INFINITY,
    ExtendedPoint,
    IntPolynomial,
    PointKind,
    RatPolynomial,
    derivative,
    eval_at_rational,
    exact_div,
    primitive,
    pseudo_divmod,
    rat_divmod,
    sign_at_rational,
)

SignSequence = tuple


def _sign(x) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class SturmHabichtSequence:
    """``polys[0]`` is ``H_p`` and ``polys[p]`` is ``H_0``; likewise ``principal``."""

    polys: tuple
    principal: tuple

    @property
    def p(self) -> int:
        return len(self.polys) - 1

    def H(self, j: int) -> IntPolynomial:
        return self.polys[self.p - j]

    def h(self, j: int) -> int:
        return self.principal[self.p - j]


@dataclass(frozen=True)
class QuotientBoot:
    """Quotients ``Q_0..Q_{k-1}`` of the signed remainder sequence plus its last element.

    ``last`` is the Sturm-Habicht element ``H_k`` proportional to the last
    remainder.  ``slots`` has one entry per sequence index ``j = p..0``:
    ``None`` for an identically-zero ``H_j``, otherwise ``(i, c)`` meaning
    ``H_j = c * R_i`` where ``R_i`` is the i-th signed remainder.
    ``scales`` lists the nonzero ``c`` in sequence order.
    """

    quotients: tuple
    last: IntPolynomial
    last_scale: Fraction
    last_index: int
    slots: tuple

    @property
    def scales(self) -> tuple:
        return tuple(slot[1] for slot in self.slots if slot is not None)

    @property
    def p(self) -> int:
        return len(self.slots) - 1


def _check_order(A: IntPolynomial, B: IntPolynomial) -> None:
    if A.is_zero():
        raise PreconditionError("first polynomial must be nonzero")
    if A.degree <= B.degree:
        raise PreconditionError(
            f"Sturm-Habicht sequence needs deg A > deg B (got {A.degree} <= {B.degree})"
        )


def stha_sequence(A: IntPolynomial, B: IntPolynomial) -> SturmHabichtSequence:
    """Full Sturm-Habicht sequence of ``A`` and ``B``.

    Integer inputs give integer elements; rational inputs are handled over Q.
    """
    _check_order(A, B)
    rational = isinstance(A, RatPolynomial) or isinstance(B, RatPolynomial)
    ring, kind = (_sres.QQ, RatPolynomial) if rational else (_sres.ZZ, IntPolynomial)
    if rational:
        A, B = RatPolynomial(A.coeffs), RatPolynomial(B.coeffs)
    S, s = _sres.signed_subresultants(A.coeffs, B.coeffs, ring)
    p = A.degree
    polys = tuple(kind(S[j]) for j in range(p, -1, -1))
    principal = tuple(s[j] for j in range(p, -1, -1))
    return SturmHabichtSequence(polys, principal)


def signed_remainder_sequence(A, B) -> list:
    """``(R_0 = A, R_1 = B, R_2 = -rem(R_0, R_1), ...)`` over Q, stopping before zero."""
    R = [RatPolynomial(A.coeffs), RatPolynomial(B.coeffs)]
    quotients = []
    if R[1].is_zero():
        return R[:1], quotients
    while True:
        q, r = rat_divmod(R[-2], R[-1])
        quotients.append(q)
        if r.is_zero():
            break
        R.append(-r)
    return R, quotients


def stha_quotient_boot(A: IntPolynomial, B: IntPolynomial) -> QuotientBoot:
    """Quotient boot of ``StHa(A, B)`` with the proportionality factors to the full sequence."""
    seq = stha_sequence(A, B)
    R, quotients = signed_remainder_sequence(A, B)
    by_degree = {r.degree: i for i, r in enumerate(R)}
    slots = []
    for H in seq.polys:
        if H.is_zero():
            slots.append(None)
            continue
        i = by_degree.get(H.degree)
        if i is None:
            raise ArithmeticError("Sturm-Habicht element without a matching remainder")
        c = Fraction(H.lc) / R[i].lc
        slots.append((i, c))
    last_i = len(R) - 1
    last, last_scale = next(
        (H, slot[1])
        for H, slot in zip(reversed(seq.polys), reversed(slots))
        if slot is not None and slot[0] == last_i
    )
    return QuotientBoot(tuple(quotients), last, last_scale, last_i, tuple(slots))


def _remainder_values(boot: QuotientBoot, x: Fraction) -> list:
    """Values ``R_0(x), ..., R_k(x)`` by back-substitution from the last element."""
    k = boot.last_index
    c_last = boot.last_scale
    values = [Fraction(0)] * (k + 2)
    values[k] = eval_at_rational(boot.last, x) / c_last
    for i in range(k, 0, -1):
        # R_{i-1} = Q_{i-1} R_i - R_{i+1}
        values[i - 1] = eval_at_rational(boot.quotients[i - 1], x) * values[i] - values[i + 1]
    return values[: k + 1]


def _remainder_tails(boot: QuotientBoot) -> list:
    """``(degree, leading coefficient)`` of every remainder, from the boot alone."""
    k = boot.last_index
    c_last = boot.last_scale
    info = [None] * (k + 1)
    info[k] = (boot.last.degree, Fraction(boot.last.lc) / c_last)
    for i in range(k, 0, -1):
        q = boot.quotients[i - 1]
        d, c = info[i]
        info[i - 1] = (d + q.degree, c * q.lc)
    return info


def eval_stha_at(boot: QuotientBoot, x) -> SignSequence:
    """Signs of ``H_p(x), ..., H_0(x)`` for ``x`` in Q or at +-infinity."""
    x = ExtendedPoint.coerce(x)
    if x.is_finite:
        values = [_sign(v) for v in _remainder_values(boot, x.value)]
    else:
        values = []
        for d, c in _remainder_tails(boot):
            sg = _sign(c)
            if x.kind is PointKind.NEG_INFINITY and d % 2:
                sg = -sg
            values.append(sg)
    out = []
    for slot in boot.slots:
        if slot is None:
            out.append(0)
        else:
            i, c = slot
            out.append(values[i] * _sign(c))
    return tuple(out)


def modified_sign_variations(signs: Sequence[int]) -> int:
    """Modified number of sign variations ``W`` of a Sturm-Habicht sign sequence.

    A run of ``z`` zeros following a nonzero entry ``a`` is read as the
    periodic filling ``-a, -a, a, a, -a, ...`` and ordinary variations are
    counted.  So ``a, 0, b`` gives 1 (``b = -a`` in valid sequences),
    ``a, 0, 0, b`` gives 1 or 2 as ``b`` is ``-a`` or ``a``.  Trailing zeros
    are ignored.
    """
    if not signs or signs[0] == 0:
        raise StructureError("sign sequence must start with a nonzero entry")
    total = 0
    prev = signs[0]
    zeros = 0
    for s in signs[1:]:
        if s == 0:
            zeros += 1
            continue
        if s not in (1, -1):
            raise StructureError(f"not a sign: {s!r}")
        half = (zeros + 1) // 2
        filled = -prev if half % 2 else prev
        total += half + (s != filled)
        prev = s
        zeros = 0
    return total


def _reduce_mod(B: IntPolynomial, A: IntPolynomial) -> IntPolynomial:
    """Integer polynomial ``R`` with ``deg R < deg A`` and ``sign R = sign B`` at every root of ``A``."""
    if B.degree < A.degree:
        return B
    _, R, e = pseudo_divmod(B, A)
    if A.lc < 0 and e % 2:
        R = -R
    return R


def _w_at(boot: QuotientBoot, x: ExtendedPoint) -> int:
    return modified_sign_variations(eval_stha_at(boot, x))


def tarski_boot(boot: QuotientBoot, a, b) -> int:
    """``W(a) - W(b)`` over an already computed boot; no precondition checks."""
    return _w_at(boot, ExtendedPoint.coerce(a)) - _w_at(boot, ExtendedPoint.coerce(b))


def cauchy_index(A: IntPolynomial, B: IntPolynomial, a, b) -> int:
    """Sum over roots ``g`` of ``A`` in ``(a, b)`` of ``sign(A'(g) B(g))`` without checks.

    ``A`` must be square-free and ``a``, ``b`` must not be roots of ``A``;
    ``B`` may share roots with ``A`` (those contribute zero).
    """
    if A.degree < 1:
        return 0
    R = _reduce_mod(B, A)
    if R.is_zero():
        return 0
    return tarski_boot(stha_quotient_boot(A, R), a, b)


def _check_endpoints(A, a: ExtendedPoint, b: ExtendedPoint) -> None:
    if not a < b:
        raise PreconditionError(f"need a < b, got a={a}, b={b}")
    for e in (a, b):
        if e.is_finite and sign_at_rational(A, e.value) == 0:
            raise EndpointRootError(f"endpoint {e} is a root of the polynomial")


def _is_square_free(A: IntPolynomial) -> bool:
    return A.degree < 1 or gcd(A, derivative(A)).degree == 0


def tarski_query(A: IntPolynomial, B: IntPolynomial, a, b) -> int:
    """``sum sign(A'(g) B(g))`` over the real roots ``g`` of ``A`` in ``(a, b)``."""
    a, b = ExtendedPoint.coerce(a), ExtendedPoint.coerce(b)
    if A.is_zero():
        raise PreconditionError("A must be nonzero")
    if not _is_square_free(A):
        raise PreconditionError("A must be square-free")
    if B.is_zero() or gcd(A, B).degree > 0:
        raise PreconditionError("A and B must be relatively prime")
    _check_endpoints(A, a, b)
    return cauchy_index(A, B, a, b)


def count_real_roots(A: IntPolynomial, a=NEG_INFINITY, b=POS_INFINITY) -> int:
    """Number of distinct real roots of the square-free ``A`` in the open interval ``(a, b)``."""
    a, b = ExtendedPoint.coerce(a), ExtendedPoint.coerce(b)
    if A.is_zero():
        raise PreconditionError("A must be nonzero")
    if not _is_square_free(A):
        raise PreconditionError("A must be square-free")
    _check_endpoints(A, a, b)
    if A.degree < 1:
        return 0
    return tarski_boot(stha_quotient_boot(A, derivative(A)), a, b)


def resultant(A: IntPolynomial, B: IntPolynomial) -> int:
    """Sylvester resultant ``Res(A, B)`` with the classical sign convention."""
    if A.is_zero() or B.is_zero():
        raise DomainError("resultant of the zero polynomial")
    return _sres.resultant(A.coeffs, B.coeffs, _sres.ZZ)


def gcd(A: IntPolynomial, B: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient, read off ``StHa``."""
    if A.is_zero() and B.is_zero():
        raise DomainError("gcd of two zero polynomials")
    if A.degree < B.degree:
        A, B = B, A
    if B.is_zero():
        return primitive(A)
    if A.degree == B.degree:
        # same gcd over Q, one degree lower
        B = B * A.lc - A * B.lc
        if B.is_zero():
            return primitive(A)
    if B.degree == 0:
        return IntPolynomial([1])
    seq = stha_sequence(A, B)
    for j in range(0, seq.p + 1):
        if seq.h(j) != 0:
            return primitive(seq.H(j))
    raise ArithmeticError("no nonzero principal coefficient")  # h_p = 1 always


def square_free_part(A: IntPolynomial) -> IntPolynomial:
    """``A / gcd(A, A')`` made primitive with positive leading coefficient."""
    if A.degree < 1:
        raise DomainError("square-free part of a constant")
    g = gcd(A, derivative(A))
    return primitive(exact_div(primitive(A), g))


@dataclass(frozen=True)
class SquareFreeDecomposition:
    """``factors[i] = (g, m)``; the product of ``g**m`` is the input up to content and sign."""

    factors: tuple

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def expand(self) -> IntPolynomial:
        out = IntPolynomial([1])
        for g, m in self.factors:
            out = out * g**m
        return out


def square_free_factorization(f: IntPolynomial) -> SquareFreeDecomposition:
    """Yun's square-free factorization over Z."""
    if f.degree < 1:
        raise DomainError("square-free factorization of a constant")
    a = primitive(f)
    b = derivative(a)
    c = gcd(a, b)
    w = exact_div(a, c)
    y = exact_div(b, c)
    z = y - derivative(w)
    factors = []
    m = 1
    while w.degree > 0:
        g = gcd(w, z) if not z.is_zero() else primitive(w)
        if g.degree > 0:
            factors.append((g, m))
        w = exact_div(w, g)
        y = exact_div(z, g)
        z = y - derivative(w)
        m += 1
    return SquareFreeDecomposition(tuple(factors))
