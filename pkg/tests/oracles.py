"""Independent reference computations used by the test-suite.

Nothing here calls into the library's algorithms: determinants come from
sympy, roots from mpmath at high precision, and interval narrowing is plain
rational bisection.
"""

from __future__ import annotations

import random
from fractions import Fraction

import mpmath
import sympy

from realroots.polycore import IntPolynomial

X = sympy.Symbol("x")
Y = sympy.Symbol("y")


# ---------------------------------------------------------------------------
# Random inputs


def random_poly(rng: random.Random, degree: int, bits: int, monic=False) -> IntPolynomial:
    bound = (1 << bits) - 1
    coeffs = [rng.randint(-bound, bound) for _ in range(degree)]
    lead = 1 if monic else rng.randint(1, bound) * rng.choice((-1, 1))
    return IntPolynomial(coeffs + [lead])


def random_nonzero_poly(rng, max_degree: int, bits: int) -> IntPolynomial:
    return random_poly(rng, rng.randint(1, max_degree), bits)


def product_of_linears(roots_with_mult) -> IntPolynomial:
    P = IntPolynomial([1])
    for r, m in roots_with_mult:
        r = Fraction(r)
        P = P * IntPolynomial([-r.numerator, r.denominator]) ** m
    return P


def random_rational(rng, num_bits=8, den_bits=4) -> Fraction:
    return Fraction(rng.randint(-(1 << num_bits), 1 << num_bits), rng.randint(1, 1 << den_bits))


# ---------------------------------------------------------------------------
# Sympy bridges


def to_sympy(P: IntPolynomial, var=X):
    return sympy.Poly(list(reversed(P.coeffs)) or [0], var)


def from_sympy(expr, var=X) -> IntPolynomial:
    return IntPolynomial(int(c) for c in reversed(sympy.Poly(expr, var).all_coeffs()))


def bivar_to_sympy(F):
    return sum((c * X**i * Y**j for (i, j), c in F.terms()), sympy.Integer(0))


def minor_sequence(A: IntPolynomial, B: IntPolynomial) -> dict:
    """``{j: H_j}`` from the minors of the matrices ``M_j`` (j = p-2..0)."""
    p, q = A.degree, B.degree
    out = {}
    for j in range(p - 2, -1, -1):
        if j > q:
            out[j] = IntPolynomial(())
            continue
        ncols = p + q - j

        def row(P, shift):
            r = [0] * ncols
            for i, c in enumerate(P.coeffs):
                r[ncols - 1 - (i + shift)] = c
            return r

        rows = [row(A, s) for s in range(q - 1 - j, -1, -1)]
        rows += [row(B, s) for s in range(0, p - j)]
        n = p + q - 2 * j
        coeffs = []
        for l in range(j + 1):
            M = [r[: n - 1] + [r[ncols - 1 - l]] for r in rows]
            coeffs.append(int(sympy.Matrix(M).det(method="bareiss")))
        out[j] = IntPolynomial(coeffs)
    return out


def sylvester_resultant(A: IntPolynomial, B: IntPolynomial) -> int:
    p, q = A.degree, B.degree
    n = p + q
    rows = []
    for s in range(q):
        rows.append([0] * s + list(reversed(A.coeffs)) + [0] * (n - p - 1 - s))
    for s in range(p):
        rows.append([0] * s + list(reversed(B.coeffs)) + [0] * (n - q - 1 - s))
    return int(sympy.Matrix(rows).det(method="bareiss"))


def exact_gcd(A: IntPolynomial, B: IntPolynomial) -> IntPolynomial:
    return from_sympy(sympy.gcd(to_sympy(A).as_expr(), to_sympy(B).as_expr()), X)


# ---------------------------------------------------------------------------
# Numeric roots


def numeric_roots(P: IntPolynomial, prec: int = 128):
    """All complex roots of ``P`` at ``prec`` bits."""
    with mpmath.workprec(prec):
        return mpmath.polyroots(
            [mpmath.mpf(c) for c in reversed(P.coeffs)], maxsteps=500, extraprec=4 * prec
        )


def numeric_real_roots(P: IntPolynomial, prec: int = 128, tol_bits: int = 60) -> list:
    """Sorted distinct real roots of a square-free ``P``."""
    tol = mpmath.mpf(2) ** (-tol_bits)
    with mpmath.workprec(prec):
        roots = numeric_roots(P, prec)
        real = sorted(mpmath.re(r) for r in roots if abs(mpmath.im(r)) < tol)
    return real


def mahler_measure(P: IntPolynomial, prec: int = 128):
    with mpmath.workprec(prec):
        m = abs(mpmath.mpf(P.lc))
        for r in numeric_roots(P, prec):
            m *= max(1, abs(r))
        return m


# ---------------------------------------------------------------------------
# Rational bisection and interval evaluation


def _eval(P: IntPolynomial, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(P.coeffs):
        acc = acc * x + c
    return acc


def narrow(P: IntPolynomial, lo: Fraction, hi: Fraction, bits: int) -> tuple:
    """Bisect a sign-changing bracket of ``P`` down to width ``2^-bits``."""
    s_lo = _eval(P, lo) > 0
    width = Fraction(1, 1 << bits)
    while hi - lo > width:
        m = (lo + hi) / 2
        v = _eval(P, m)
        if v == 0:
            return m, m
        if (v > 0) == s_lo:
            lo = m
        else:
            hi = m
    return lo, hi


def interval_value(Q: IntPolynomial, lo: Fraction, hi: Fraction, prec: int):
    """Outward-rounded enclosure of ``Q`` over ``[lo, hi]`` at ``prec`` bits."""
    iv = mpmath.iv
    old = iv.prec
    iv.prec = prec
    try:
        lo_enc = iv.mpf(lo.numerator) / lo.denominator
        hi_enc = iv.mpf(hi.numerator) / hi.denominator
        x = iv.mpf([lo_enc.a, hi_enc.b])
        acc = iv.mpf(0)
        for c in reversed(Q.coeffs):
            acc = acc * x + c
        return acc
    finally:
        iv.prec = old


def oracle_sign_at(Q: IntPolynomial, P: IntPolynomial, lo, hi, exact=None) -> int:
    """Sign of ``Q`` at the root of ``P`` in ``[lo, hi]``.

    Zero is decided exactly: the root is a root of ``Q`` iff ``gcd(P, Q)``
    has a root in the interval.  Nonzero signs come from interval
    evaluation at doubling precision, starting from 60 bits.
    """
    if exact is not None:
        v = _eval(Q, Fraction(exact))
        return (v > 0) - (v < 0)
    g = to_sympy(exact_gcd(P, Q))
    if g.degree() > 0 and g.count_roots(sympy.Rational(lo), sympy.Rational(hi)) > 0:
        return 0
    bits = 60
    while True:
        a, b = narrow(P, Fraction(lo), Fraction(hi), bits)
        if a == b:
            v = _eval(Q, a)
            return (v > 0) - (v < 0)
        enc = interval_value(Q, a, b, bits + 20)
        if enc.a > 0:
            return 1
        if enc.b < 0:
            return -1
        bits *= 2
        if bits > 1 << 14:
            raise AssertionError("interval oracle failed to decide a nonzero sign")


def oracle_compare(P1, lo1, hi1, P2, lo2, hi2, ex1=None, ex2=None) -> int:
    """Order of two algebraic numbers, equality decided through their gcd."""
    a1, b1 = (Fraction(ex1), Fraction(ex1)) if ex1 is not None else (Fraction(lo1), Fraction(hi1))
    a2, b2 = (Fraction(ex2), Fraction(ex2)) if ex2 is not None else (Fraction(lo2), Fraction(hi2))
    bits = 8
    while True:
        if b1 < a2:
            return -1
        if b2 < a1:
            return 1
        if ex1 is not None and ex2 is not None:
            return 0
        if bits > 400:
            break
        if ex1 is None and a1 != b1:
            a1, b1 = narrow(P1, a1, b1, bits)
        if ex2 is None and a2 != b2:
            a2, b2 = narrow(P2, a2, b2, bits)
        if a1 == b1 and a2 == b2:
            return (a1 > a2) - (a1 < a2)
        bits *= 2
    # overlapping at 2^-400: must be a common root of both polynomials
    g = to_sympy(exact_gcd(P1, P2))
    lo, hi = max(a1, a2), min(b1, b2)
    assert g.degree() > 0 and g.count_roots(sympy.Rational(lo), sympy.Rational(hi)) >= 1
    return 0


def numeric_value(number, prec_bits: int = 300):
    """High-precision value of a library AlgebraicNumber, by plain bisection."""
    if number.exact is not None:
        return mpmath.mpf(number.exact.numerator) / number.exact.denominator
    a, b = narrow(number.defining, number.lo, number.hi, prec_bits)
    with mpmath.workprec(prec_bits + 20):
        return (mpmath.mpf(a.numerator) / a.denominator + mpmath.mpf(b.numerator) / b.denominator) / 2
