"""Bivariate integer polynomials and real solving of two-equation systems.

A bivariate polynomial is viewed as univariate in one variable with
coefficients in Z[other].  Resultants and Sturm-Habicht sequences are taken
with the exact-division subresultant recurrence over that coefficient ring.
Two solvers are provided: a candidate-pair solver that tests every pair of
projected roots, and a rational-univariate lifting that reads the
y-coordinate off the Sturm-Habicht sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key, lru_cache, partial
from typing import Iterable, Optional

from . import _sres
from .errors import (
    CommonComponentError,
    DomainError,
    GenericPositionError,
    PreconditionError,
)
from .polycore import IntPolynomial, RatPolynomial, as_rational, exact_div, primitive
from .realalg import (
    AlgebraicNumber,
    Order,
    compare,
    real_roots,
    refine,
    separating_rationals,
    sign_at,
)
from .stha import _is_square_free, gcd, modified_sign_variations


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _check_var(var: str) -> str:
    var = var.upper()
    if var not in ("X", "Y"):
        raise ValueError(f"variable must be X or Y, got {var!r}")
    return var


class BivariatePolynomial:
    """Dense matrix of integers; ``rows[i][j]`` is the coefficient of ``X^i Y^j``."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]] = ()):
        rows = [list(r) for r in rows]
        width = max((len(r) for r in rows), default=0)
        for r in rows:
            for c in r:
                if not isinstance(c, int) or isinstance(c, bool):
                    raise TypeError(f"non-integer coefficient {c!r}")
            r.extend([0] * (width - len(r)))
        while rows and not any(rows[-1]):
            rows.pop()
        while width and not any(r[width - 1] for r in rows):
            width -= 1
        object.__setattr__(self, "rows", tuple(tuple(r[:width]) for r in rows))

    def __setattr__(self, name, value):
        raise AttributeError("polynomials are immutable")

    @classmethod
    def from_terms(cls, terms: dict) -> "BivariatePolynomial":
        """Build from ``{(i, j): c}``."""
        if not terms:
            return cls()
        dx = max(i for i, _ in terms)
        dy = max(j for _, j in terms)
        rows = [[0] * (dy + 1) for _ in range(dx + 1)]
        for (i, j), c in terms.items():
            rows[i][j] += c
        return cls(rows)

    @classmethod
    def from_x(cls, P: IntPolynomial) -> "BivariatePolynomial":
        return cls([[c] for c in P.coeffs])

    @classmethod
    def from_y(cls, P: IntPolynomial) -> "BivariatePolynomial":
        return cls([list(P.coeffs)])

    @classmethod
    def from_coeffs(cls, coeffs, var: str = "Y") -> "BivariatePolynomial":
        """Inverse of :meth:`coeffs`: ``coeffs[k]`` multiplies ``var^k``."""
        var = _check_var(var)
        terms = {}
        for k, c in enumerate(coeffs):
            for m, a in enumerate(c.coeffs):
                if a:
                    terms[(m, k) if var == "Y" else (k, m)] = a
        return cls.from_terms(terms)

    def terms(self):
        for i, row in enumerate(self.rows):
            for j, c in enumerate(row):
                if c:
                    yield (i, j), c

    def is_zero(self) -> bool:
        return not self.rows

    @property
    def deg_x(self) -> int:
        return len(self.rows) - 1

    @property
    def deg_y(self) -> int:
        return len(self.rows[0]) - 1 if self.rows else -1

    def degree(self, var: str) -> int:
        return self.deg_x if _check_var(var) == "X" else self.deg_y

    @property
    def total_degree(self) -> int:
        return max((i + j for (i, j), _ in self.terms()), default=-1)

    def coeffs(self, var: str = "Y") -> tuple:
        """Coefficients as a polynomial in ``var``, each an IntPolynomial in the other variable."""
        if _check_var(var) == "X":
            return tuple(IntPolynomial(row) for row in self.rows)
        return tuple(
            IntPolynomial(row[j] for row in self.rows) for j in range(self.deg_y + 1)
        )

    def lc(self, var: str = "Y") -> IntPolynomial:
        c = self.coeffs(var)
        return c[-1] if c else IntPolynomial(())

    def transpose(self) -> "BivariatePolynomial":
        return BivariatePolynomial.from_terms({(j, i): c for (i, j), c in self.terms()})

    def __eq__(self, other):
        if isinstance(other, BivariatePolynomial):
            return self.rows == other.rows
        if isinstance(other, int):
            return self.rows == BivariatePolynomial([[other]]).rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    @staticmethod
    def _lift(other) -> "BivariatePolynomial":
        if isinstance(other, BivariatePolynomial):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return BivariatePolynomial([[other]])
        if isinstance(other, IntPolynomial):
            return BivariatePolynomial.from_x(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms())
        for k, c in other.terms():
            terms[k] = terms.get(k, 0) + c
        return BivariatePolynomial.from_terms(terms)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial([[-c for c in row] for row in self.rows])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = {}
        for (i, j), a in self.terms():
            for (k, l), b in other.terms():
                terms[(i + k, j + l)] = terms.get((i + k, j + l), 0) + a * b
        return BivariatePolynomial.from_terms(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = BivariatePolynomial([[1]])
        for _ in range(n):
            out = out * self
        return out

    def diff(self, var: str) -> "BivariatePolynomial":
        if _check_var(var) == "X":
            return BivariatePolynomial.from_terms({(i - 1, j): i * c for (i, j), c in self.terms() if i})
        return BivariatePolynomial.from_terms({(i, j - 1): j * c for (i, j), c in self.terms() if j})

    def shear(self, a: int) -> "BivariatePolynomial":
        """``F(X + a*Y, Y)``."""
        if not a:
            return self
        lin = BivariatePolynomial([[0, a], [1]])
        out = BivariatePolynomial()
        for i, row in enumerate(self.rows):
            out = out + lin**i * BivariatePolynomial([row])
        return out

    def evaluate(self, x, y) -> Fraction:
        x, y = as_rational(x), as_rational(y)
        acc = Fraction(0)
        for row in reversed(self.rows):
            inner = Fraction(0)
            for c in reversed(row):
                inner = inner * y + c
            acc = acc * x + inner
        return acc

    def specialize_x(self, x0) -> RatPolynomial:
        """``F(x0, Y)`` as a polynomial in Y."""
        x0 = as_rational(x0)
        return RatPolynomial(c(x0) if c else Fraction(0) for c in self.coeffs("Y"))

    def specialize_y(self, y0) -> RatPolynomial:
        """``F(X, y0)`` as a polynomial in X."""
        y0 = as_rational(y0)
        return RatPolynomial(c(y0) if c else Fraction(0) for c in self.coeffs("X"))

    def to_string(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0])):
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in (("x", i), ("y", j)) if e
            )
            mag = abs(c)
            body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else str(mag))
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"BivariatePolynomial({[list(r) for r in self.rows]!r})"


BivariatePolynomial.ONE = BivariatePolynomial([[1]])


def _integral(P: RatPolynomial) -> IntPolynomial:
    """Positive multiple of ``P`` with integer coefficients."""
    return P.clear_denominators()[1]


def _as_ring_poly(F: BivariatePolynomial, var: str) -> tuple:
    return tuple(F.coeffs(var))


# ---------------------------------------------------------------------------
# Resultant and Sturm-Habicht sequence over Z[other]


def bivar_resultant(F: BivariatePolynomial, G: BivariatePolynomial, var: str = "Y") -> IntPolynomial:
    """Resultant eliminating ``var``; a polynomial in the other variable."""
    var = _check_var(var)
    if F.is_zero() or G.is_zero():
        raise DomainError("resultant of the zero polynomial")
    if F.degree(var) < 1 and G.degree(var) < 1:
        raise DomainError(f"both polynomials are constant in {var}")
    return _sres.resultant(_as_ring_poly(F, var), _as_ring_poly(G, var), _sres.ZZ_X)


@dataclass(frozen=True)
class BivarStHaSequence:
    """``polys[0]`` is ``H_p``; ``principal[k]`` is the coefficient of ``var^(p-k)`` in ``polys[k]``."""

    polys: tuple
    principal: tuple
    var: str = "Y"

    @property
    def p(self) -> int:
        return len(self.polys) - 1

    def H(self, j: int) -> BivariatePolynomial:
        return self.polys[self.p - j]

    def h(self, j: int) -> IntPolynomial:
        return self.principal[self.p - j]

    def coeff(self, j: int, k: int) -> IntPolynomial:
        """Coefficient of ``var^k`` in ``H_j``, a polynomial in the other variable."""
        c = self.H(j).coeffs(self.var)
        return c[k] if k < len(c) else IntPolynomial(())

    def specialize(self, x0) -> tuple:
        """Every ``H_j`` with the coefficient variable set to ``x0``."""
        if self.var == "Y":
            return tuple(H.specialize_x(x0) for H in self.polys)
        return tuple(H.specialize_y(x0) for H in self.polys)


def _subresultants(F: BivariatePolynomial, G: BivariatePolynomial, var: str):
    S, s = _sres.signed_subresultants(_as_ring_poly(F, var), _as_ring_poly(G, var), _sres.ZZ_X)
    return S, s


def bivar_stha_sequence(F: BivariatePolynomial, G: BivariatePolynomial, var: str = "Y") -> BivarStHaSequence:
    """Sturm-Habicht sequence of ``F`` and ``G`` in ``var`` with integer coefficients."""
    var = _check_var(var)
    p, q = F.degree(var), G.degree(var)
    if G.is_zero() or p <= q:
        raise PreconditionError(f"need deg F > deg G >= 0 in {var} (got {p}, {q})")
    S, s = _subresultants(F, G, var)
    polys = tuple(BivariatePolynomial.from_coeffs(S[j], var) for j in range(p, -1, -1))
    principal = tuple(s[j] for j in range(p, -1, -1))
    return BivarStHaSequence(polys, principal, var)


def is_square_free_bivariate(F: BivariatePolynomial) -> bool:
    """True when ``F`` has no repeated factor over Q."""
    if F.is_zero():
        return False
    cols = F.coeffs("Y")
    cont = primitive(cols[-1])
    for c in cols:
        if not c.is_zero():
            cont = gcd(cont, c)
    if not _is_square_free(cont):
        return False
    if F.deg_y < 1:
        return True
    prim = BivariatePolynomial.from_coeffs([exact_div(c, cont) for c in cols], "Y")
    return not bivar_resultant(prim, prim.diff("Y"), "Y").is_zero()


# ---------------------------------------------------------------------------
# Sign of F(alpha, beta)


def _interval_pow(lo: Fraction, hi: Fraction, n: int) -> tuple:
    if n == 0:
        return Fraction(1), Fraction(1)
    a, b = lo**n, hi**n
    if n % 2 == 0 and lo < 0 < hi:
        return Fraction(0), max(a, b)
    return (a, b) if a <= b else (b, a)


def interval_sign(F: BivariatePolynomial, xs: tuple, ys: tuple) -> Optional[int]:
    """Sign of ``F`` over the box ``xs x ys`` if it is constant there, else None."""
    px = [_interval_pow(xs[0], xs[1], i) for i in range(F.deg_x + 1)]
    py = [_interval_pow(ys[0], ys[1], j) for j in range(F.deg_y + 1)]
    lo = hi = Fraction(0)
    for (i, j), c in F.terms():
        a, b = px[i]
        e, f = py[j]
        prods = (a * e, a * f, b * e, b * f)
        m, M = min(prods) * c, max(prods) * c
        if c < 0:
            m, M = M, m
        lo += m
        hi += M
    if lo > 0:
        return 1
    if hi < 0:
        return -1
    if lo == hi == 0:
        return 0
    return None


def _reduce_in_x(F: BivariatePolynomial, A: IntPolynomial) -> tuple:
    """Coefficients in X (over Z[Y]) of a positive multiple of ``F mod A``."""
    R = list(_as_ring_poly(F, "X"))
    d = A.degree
    b = A.lc
    e = 0
    for k in range(len(R) - 1 - d, -1, -1):
        c = R[k + d]
        R = [x * b for x in R]
        e += 1
        if c:
            for i in range(d + 1):
                if A.coeffs[i]:
                    R[k + i] = R[k + i] - c * A.coeffs[i]
    R = R[:d] if len(R) > d else R
    if b < 0 and e % 2:
        R = [-x for x in R]
    return _sres.strip(R)


@lru_cache(maxsize=1024)
def _x_sequence(A: IntPolynomial, R: tuple) -> tuple:
    """``StHa(A, R)`` in X over Z[Y], as tuples of Z[Y] coefficients."""
    Acoeffs = tuple(IntPolynomial([a]) for a in A.coeffs)
    S, _ = _sres.signed_subresultants(Acoeffs, R, _sres.ZZ_X)
    return tuple(S[j] for j in range(A.degree, -1, -1))


def _specialize_x(H: tuple, x: Fraction, top: int) -> IntPolynomial:
    """``d^top * H(x, Y)`` for ``x = n/d``: a positive multiple of ``H(x, Y)``."""
    n, d = x.numerator, x.denominator
    out = IntPolynomial(())
    for i, c in enumerate(H):
        if c:
            out = out + c * (n**i * d ** (top - i))
    return out


def _y_signs(seq: tuple, x: Fraction, beta: AlgebraicNumber, top: int) -> list:
    return [sign_at(_specialize_x(H, x, top), beta) if H else 0 for H in seq]


def bivar_sign_at(F: BivariatePolynomial, alpha: AlgebraicNumber, beta: AlgebraicNumber) -> int:
    """Exact sign of ``F(alpha, beta)``."""
    if F.is_zero():
        return 0
    if alpha.is_exact:
        return sign_at(_integral(F.specialize_x(alpha.exact)), beta)
    if beta.is_exact:
        return sign_at(_integral(F.specialize_y(beta.exact)), alpha)
    quick = interval_sign(F, (alpha.lo, alpha.hi), (beta.lo, beta.hi))
    if quick is not None:
        return quick
    A = alpha.defining
    R = list(_reduce_in_x(F, A))
    # terms whose Y-coefficient vanishes at beta do not change F(alpha, beta)
    while R and sign_at(R[-1], beta) == 0:
        R.pop()
        R = list(_sres.strip(R))
    if not R:
        return 0
    if len(R) == 1:
        return sign_at(R[0], beta)
    seq = _x_sequence(A, tuple(R))
    top = A.degree
    w_lo = modified_sign_variations(_y_signs(seq, alpha.lo, beta, top))
    w_hi = modified_sign_variations(_y_signs(seq, alpha.hi, beta, top))
    return (w_lo - w_hi) * alpha.sign_hi()


# ---------------------------------------------------------------------------
# Solving


@dataclass(frozen=True)
class SystemSolution:
    """A certified real solution; ``rur_witness = (k, num, den)`` gives ``y = num(x) / den(x)``."""

    x: AlgebraicNumber
    y: AlgebraicNumber
    rur_witness: Optional[tuple] = None


def _solution_key(a: SystemSolution, b: SystemSolution) -> int:
    return int(compare(a.x, b.x)) or int(compare(a.y, b.y))


def _sorted(solutions: list) -> list:
    return sorted(solutions, key=cmp_to_key(_solution_key))


def _projections(F: BivariatePolynomial, G: BivariatePolynomial) -> tuple:
    """``(R_X, R_Y)`` or None when the system has no solutions at all."""
    if F.is_zero() or G.is_zero():
        raise CommonComponentError("a zero polynomial shares every component")
    out = []
    for var in ("Y", "X"):
        if F.degree(var) < 1 and G.degree(var) < 1:
            # both are univariate in the other variable
            if gcd(F.lc(var), G.lc(var)).degree > 0:
                raise CommonComponentError("the curves share a vertical or horizontal line")
            return None
        R = bivar_resultant(F, G, var)
        if R.is_zero():
            raise CommonComponentError(f"Res_{var} vanishes identically: common component")
        out.append(R)
    return tuple(out)


def _roots(R: IntPolynomial) -> list:
    if R.degree < 1:
        return []
    return real_roots(R)


def _tight(alpha: AlgebraicNumber, bits: int = 24) -> AlgebraicNumber:
    width = Fraction(1, 1 << bits)
    while not alpha.is_exact and alpha.width > width:
        alpha = refine(alpha)
    return alpha


def _is_solution(F, G, alpha, beta) -> bool:
    return bivar_sign_at(F, alpha, beta) == 0 and bivar_sign_at(G, alpha, beta) == 0


def _pair_is_solution(F, G, pair) -> bool:
    return _is_solution(F, G, *pair)


def naive_solve(F: BivariatePolynomial, G: BivariatePolynomial, executor=None) -> list:
    """Real solutions of ``F = G = 0`` by testing every pair of projected roots.

    ``executor`` may be any object with a ``map`` method (for instance a
    ``concurrent.futures`` executor); the pair tests are independent.
    """
    proj = _projections(F, G)
    if proj is None:
        return []
    RX, RY = proj
    xs = [_tight(a) for a in _roots(RX)]
    ys = [_tight(b) for b in _roots(RY)]
    pairs = [(a, b) for a in xs for b in ys]
    run = map if executor is None else executor.map
    keep = list(run(partial(_pair_is_solution, F, G), pairs))
    return _sorted([SystemSolution(a, b) for (a, b), ok in zip(pairs, keep) if ok])


def generic_position_check(F: BivariatePolynomial, G: BivariatePolynomial) -> bool:
    """True iff no two real solutions share an x-coordinate."""
    sols = naive_solve(F, G)
    return all(compare(s.x, t.x) is not Order.EQ for s, t in zip(sols, sols[1:]))


def _lower_y_degree(F: BivariatePolynomial, G: BivariatePolynomial) -> tuple:
    """Pair with ``deg_Y F > deg_Y G`` generating the same ideal away from ``lc_Y F = 0``."""
    if F.deg_y < G.deg_y:
        F, G = G, F
    while F.deg_y == G.deg_y and not G.is_zero():
        a, b = F.lc("Y"), G.lc("Y")
        G = G * BivariatePolynomial.from_x(a) - F * BivariatePolynomial.from_x(b)
    if G.is_zero():
        raise CommonComponentError("the polynomials are proportional")
    return F, G


def _locate(num: IntPolynomial, den: IntPolynomial, alpha: AlgebraicNumber, qs: list) -> Optional[int]:
    """Index ``j`` with ``qs[j] < num(alpha)/den(alpha) < qs[j+1]``, or None."""
    s_den = sign_at(den, alpha)

    def side(q: Fraction) -> int:
        # sign(beta - q) = sign(num - q*den) * sign(den)
        U = num * q.denominator - den * q.numerator
        return sign_at(U, alpha) * s_den

    lo, hi = 0, len(qs) - 1
    if side(qs[lo]) <= 0 or side(qs[hi]) >= 0:
        return None
    while hi - lo > 1:
        mid = (lo + hi) // 2
        s = side(qs[mid])
        if s == 0:
            return None
        if s > 0:
            lo = mid
        else:
            hi = mid
    return lo


def rur_solve(F: BivariatePolynomial, G: BivariatePolynomial, shear: Optional[int] = None) -> list:
    """Real solutions via the rational univariate lifting ``y = -h_{k,k-1}(x) / (k h_k(x))``.

    With ``shear`` the system ``F(X + shear*Y, Y) = G(X + shear*Y, Y) = 0``
    is solved instead and solutions are reported in that frame.
    """
    if shear:
        F, G = F.shear(shear), G.shear(shear)
    if not generic_position_check(F, G):
        raise GenericPositionError("two real solutions share an x-coordinate")
    proj = _projections(F, G)
    if proj is None:
        return []
    RX, RY = proj
    xs = _roots(RX)
    if not xs:
        return []
    ys = _roots(RY)
    qs = separating_rationals(ys)
    P, Q = _lower_y_degree(F, G)
    seq = bivar_stha_sequence(P, Q, "Y")
    lead = P.lc("Y")
    out = []
    for alpha in xs:
        if sign_at(lead, alpha) == 0:
            raise GenericPositionError(f"leading Y-coefficient vanishes at x = {alpha}")
        k = next((j for j in range(seq.p + 1) if sign_at(_principal(seq, j, lead), alpha) != 0), None)
        if not k:
            raise GenericPositionError(f"no lifting index at x = {alpha}")
        num = -seq.coeff(k, k - 1)
        den = _principal(seq, k, lead) * k
        j = _locate(num, den, alpha, qs)
        if j is None:
            if not any(_is_solution(F, G, alpha, b) for b in ys):
                continue
            raise GenericPositionError(f"lifted y-coordinate at x = {alpha} is not a root of Res_X")
        beta = ys[j]
        if not _is_solution(F, G, alpha, beta):
            if not any(_is_solution(F, G, alpha, b) for b in ys):
                continue
            raise GenericPositionError(f"lifted point over x = {alpha} fails certification")
        out.append(SystemSolution(alpha, beta, (k, num, den)))
    return _sorted(out)


def _principal(seq: BivarStHaSequence, j: int, lead: IntPolynomial) -> IntPolynomial:
    return lead if j == seq.p else seq.h(j)


def rur_solve_with_shears(F: BivariatePolynomial, G: BivariatePolynomial, shears=(0, 1, 2, 3)) -> tuple:
    """Try :func:`rur_solve` with each shear in turn; returns ``(shear, solutions)``."""
    last = None
    for a in shears:
        try:
            return a, rur_solve(F, G, a or None)
        except GenericPositionError as exc:
            last = exc
    raise GenericPositionError(f"no shear in {tuple(shears)} gives generic position") from last


def satisfy_bivariate(P: BivariatePolynomial, Q: BivariatePolynomial, gt=(), lt=(), eq=()) -> list:
    """Real solutions of ``P = Q = 0`` meeting every sign condition."""
    wanted = [(A, 1) for A in gt] + [(B, -1) for B in lt] + [(C, 0) for C in eq]
    return [
        s
        for s in naive_solve(P, Q)
        if all(bivar_sign_at(A, s.x, s.y) == sg for A, sg in wanted)
    ]
