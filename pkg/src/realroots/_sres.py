"""Signed subresultant recurrence over an abstract integral domain.

Polynomials are tuples of ring elements, low-to-high, with no trailing zeros.
The same code serves Z (coefficients are ``int``), Q, and Z[x] (coefficients are
:class:`~realroots.polycore.IntPolynomial`), which is how the bivariate
module gets Sturm-Habicht sequences over a polynomial coefficient ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .polycore import IntPolynomial, exact_div


@dataclass(frozen=True)
class Ring:
    zero: Any
    one: Any
    exquo: Callable[[Any, Any], Any]


def _int_exquo(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"inexact division {a} / {b}")
    return q


def _poly_exquo(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    try:
        return exact_div(a, b)
    except ValueError as exc:
        raise ArithmeticError(f"inexact division ({a}) / ({b})") from exc


def _frac_exquo(a: Fraction, b: Fraction) -> Fraction:
    return a / b


ZZ = Ring(0, 1, _int_exquo)
QQ = Ring(Fraction(0), Fraction(1), _frac_exquo)
ZZ_X = Ring(IntPolynomial(()), IntPolynomial([1]), _poly_exquo)


def strip(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


def deg(P: tuple) -> int:
    return len(P) - 1


def lc(P: tuple, ring: Ring):
    return P[-1] if P else ring.zero


def scale(P: tuple, c) -> tuple:
    return strip(c * a for a in P)


def exquo_poly(P: tuple, c, ring: Ring) -> tuple:
    return strip(ring.exquo(a, c) for a in P)


def prem(F: tuple, G: tuple) -> tuple:
    """Pseudo-remainder: ``lc(G)^(deg F - deg G + 1) * F mod G``."""
    dg = deg(G)
    df = deg(F)
    if df < dg:
        return F
    b = G[-1]
    r = list(F)
    for k in range(df - dg, -1, -1):
        c = r[k + dg]
        r = [x * b for x in r]
        if c:
            for i in range(dg + 1):
                r[k + i] = r[k + i] - c * G[i]
    return strip(r[:dg])


def rem_scaled_neg(c, F: tuple, G: tuple, d, ring: Ring) -> tuple:
    """``-Rem(c*F, G) / d`` computed in the ring (the division is exact)."""
    e = deg(F) - deg(G) + 1
    R = prem(F, G)
    denom = d * G[-1] ** e
    return strip(ring.exquo(-c * a, denom) for a in R)


def signed_subresultants(P: tuple, Q: tuple, ring: Ring):
    """Signed subresultant sequence ``(S_p, ..., S_0)`` of ``P`` and ``Q``.

    Requires ``deg P = p > deg Q``.  Returns ``(S, s)`` where ``S[j]`` is the
    j-th element (a tuple, possibly empty) and ``s[j]`` its principal
    coefficient (coefficient of ``x^j``), with ``s[p] = 1``.
    """
    p = deg(P)
    q = deg(Q)
    if p <= q:
        raise ValueError("signed_subresultants needs deg P > deg Q")
    zero, one = ring.zero, ring.one
    S: list = [()] * (p + 1)
    s: list = [zero] * (p + 1)
    t: list = [zero] * (p + 1)
    S[p] = P
    s[p] = t[p] = one
    S[p - 1] = Q
    if not Q:
        return S, s
    t[p - 1] = Q[-1]
    s[p - 1] = t[p - 1] if q == p - 1 else zero
    i, j = p + 1, p
    while j >= 1 and S[j - 1]:
        k = deg(S[j - 1])
        if k == j - 1:
            s[j - 1] = t[j - 1]
            if k == 0:
                break
            S[k - 1] = rem_scaled_neg(s[j - 1] * s[j - 1], S[i - 1], S[j - 1], s[j] * t[i - 1], ring)
        else:
            s[j - 1] = zero
            for delta in range(1, j - k):
                val = ring.exquo(t[j - 1] * t[j - delta], s[j])
                t[j - delta - 1] = val if delta % 2 == 0 else -val
            s[k] = t[k]
            for l in range(j - 2, k, -1):
                S[l] = ()
                s[l] = zero
            S[k] = exquo_poly(scale(S[j - 1], s[k]), t[j - 1], ring)
            if k == 0:
                break
            S[k - 1] = rem_scaled_neg(t[j - 1] * s[k], S[i - 1], S[j - 1], s[j] * t[i - 1], ring)
        t[k - 1] = lc(S[k - 1], ring)
        i, j = j, k
    return S, s


def sign_eps(n: int) -> int:
    """``(-1)^(n(n-1)/2)``."""
    return -1 if (n * (n - 1) // 2) % 2 else 1


def resultant(P: tuple, Q: tuple, ring: Ring):
    """Sylvester resultant of two nonzero polynomials over ``ring``."""
    if not P or not Q:
        raise ValueError("resultant of a zero polynomial")
    p, q = deg(P), deg(Q)
    if p == 0 and q == 0:
        return ring.one
    if p == 0:
        return P[0] ** q
    if q == 0:
        return Q[0] ** p
    if p < q:
        r = resultant(Q, P, ring)
        return -r if (p * q) % 2 else r
    if p == q:
        # Res(P, Q) = Res(P, lc(P) Q - lc(Q) P) / lc(P)^deg(..)
        a, b = P[-1], Q[-1]
        Qr = strip(a * x - b * y for x, y in zip(Q, P))
        if not Qr:
            return ring.zero
        r = resultant(P, Qr, ring)
        return ring.exquo(r, a ** deg(Qr))
    S, _ = signed_subresultants(P, Q, ring)
    H0 = S[0]
    value = H0[0] if H0 else ring.zero
    return value if sign_eps(p) > 0 else -value
