"""Acceptance criteria, one test per criterion.

Each test registers itself through the ``verdict`` fixture so the run ends
with a one-line PASS/FAIL summary per criterion.
"""

import json
import random
import time
from fractions import Fraction

import mpmath
import pytest

from oracles import (
    minor_sequence,
    numeric_real_roots,
    numeric_value,
    oracle_compare,
    oracle_sign_at,
    product_of_linears,
    random_poly,
    random_rational,
    sylvester_resultant,
)
from realroots.bivar import (
    BivariatePolynomial,
    bivar_sign_at,
    bivar_stha_sequence,
    generic_position_check,
    is_square_free_bivariate,
    naive_solve,
    rur_solve,
    satisfy_bivariate,
)
from realroots.cli import main, parse_polynomial, parse_text
from realroots.errors import CommonComponentError, GenericPositionError
from realroots.polycore import (
    NEG_INFINITY,
    IntPolynomial,
    davenport_mahler_lower_bound,
    mahler_measure_upper_bound,
    separation_lower_bound,
)
from realroots.realalg import (
    AlgebraicNumber,
    ExtFieldElement,
    IsolationStats,
    Order,
    compare,
    isolate_real_roots,
    satisfy_univariate,
    sign_at,
    subdivision_budget,
)
from realroots.stha import count_real_roots, resultant, square_free_part, stha_sequence

P = IntPolynomial
B = BivariatePolynomial


def mpf(q: Fraction):
    return mpmath.mpf(q.numerator) / q.denominator


def stha_corpus():
    rng = random.Random(1001)
    pairs = []
    while len(pairs) < 100:
        p = rng.randint(1, 6)
        q = rng.randint(0, p - 1)
        A = random_poly(rng, p, 8)
        Bq = random_poly(rng, q, 8)
        pairs.append((A, Bq))
    return pairs


def square_free_corpus():
    """200 random square-free polynomials of degree 2..10 with at least two real roots."""
    rng = random.Random(1005)
    out = []
    while len(out) < 200:
        f = random_poly(rng, rng.randint(2, 10), 8)
        if square_free_part(f).degree != f.degree:
            continue
        roots = numeric_real_roots(f)
        if len(roots) >= 2:
            out.append((f, roots))
    return out


# ---------------------------------------------------------------------------


def test_criterion_01_determinant_oracle(verdict):
    verdict(1, "StHa sequence equals the determinant construction", "100 pairs")
    pairs = stha_corpus()
    start = time.perf_counter()
    sequences = [stha_sequence(A, Bq) for A, Bq in pairs]
    elapsed = time.perf_counter() - start
    for (A, Bq), seq in zip(pairs, sequences):
        assert seq.H(seq.p) == A and seq.H(seq.p - 1) == Bq
        for j, H in minor_sequence(A, Bq).items():
            assert seq.H(j) == H, (A, Bq, j)
    assert elapsed < 60


def test_criterion_02_resultant_identity(verdict):
    verdict(2, "H_0 is the signed Sylvester resultant", "100 pairs")
    for A, Bq in stha_corpus():
        seq = stha_sequence(A, Bq)
        p = A.degree
        syl = sylvester_resultant(A, Bq)
        eps = -1 if (p * (p - 1) // 2) % 2 else 1
        H0 = seq.H(0).coeffs[0] if not seq.H(0).is_zero() else 0
        assert eps * H0 == syl
        assert resultant(A, Bq) == syl


def test_criterion_03_root_counts(verdict):
    verdict(3, "count_real_roots matches constructed roots", "300 polys x 10 intervals")
    rng = random.Random(1003)
    for _ in range(300):
        roots = set()
        n = rng.randint(1, 10)
        while len(roots) < n:
            roots.add(random_rational(rng, 5, 3))
        f = product_of_linears((r, 1) for r in roots)
        done = 0
        while done < 10:
            a, b = sorted(random_rational(rng, 6, 3) for _ in range(2))
            if a == b or a in roots or b in roots:
                continue
            if done == 0:
                # one unbounded query per polynomial
                truth = sum(1 for r in roots if r < b)
                assert count_real_roots(f, NEG_INFINITY, b) == truth, (f, b)
            truth = sum(1 for r in roots if a < r < b)
            assert count_real_roots(f, a, b) == truth, (f, a, b)
            done += 1


def isolation_corpus():
    rng = random.Random(1004)
    random_polys = [random_poly(rng, rng.randint(1, 12), 16) for _ in range(200)]
    products = []
    quadratics = [2, 3, 5, 6, 7, 10]
    for _ in range(50):
        factors = []
        rationals = set()
        while len(rationals) < rng.randint(1, 3):
            rationals.add(random_rational(rng, 4, 2))
        for r in rationals:
            factors.append((P([-r.numerator, r.denominator]), rng.randint(1, 3)))
        for n in rng.sample(quadratics, rng.randint(0, 2)):
            factors.append((P([-n, 0, 1]), rng.randint(1, 3)))
        f = P([rng.choice((-3, -1, 1, 2))])
        for g, m in factors:
            f = f * g**m
        products.append((f, factors))
    return random_polys, products


def check_isolation(f, stats):
    roots = isolate_real_roots(f, stats)
    f_red = square_free_part(f)
    numeric = numeric_real_roots(f_red)
    assert len(roots) == len(numeric), f
    for left, right in zip(roots, roots[1:]):
        assert left.number.hi <= right.number.lo
        if left.number.hi == right.number.lo:
            assert not (left.number.is_exact and right.number.is_exact)
    for root, value in zip(roots, numeric):
        a = root.number
        if a.is_exact:
            assert f_red(a.exact) == 0
        else:
            assert (f_red(a.lo) > 0) != (f_red(a.hi) > 0)
            assert f_red(a.lo) != 0 and f_red(a.hi) != 0
            assert mpf(a.lo) < value < mpf(a.hi)
    return roots, numeric


def test_criterion_04_isolation(verdict):
    verdict(4, "isolation agrees with a 128-bit numeric root finder", "200 random + 50 products")
    random_polys, products = isolation_corpus()
    start = time.perf_counter()
    for f in random_polys:
        check_isolation(f, IsolationStats())
    for f, factors in products:
        roots, numeric = check_isolation(f, IsolationStats())
        for root, value in zip(roots, numeric):
            tol = mpmath.mpf(2) ** -40
            expected = [m for g, m in factors if abs(mpmath.polyval(list(reversed(g.coeffs)), value)) < tol]
            assert [root.multiplicity] == expected
    assert time.perf_counter() - start < 300


def test_criterion_05_davenport_mahler(verdict):
    verdict(5, "gap products lie between the Davenport-Mahler bounds", "200 square-free polys")
    with mpmath.workprec(128):
        for f, roots in square_free_corpus():
            k = len(roots) - 1
            gaps = mpmath.mpf(1)
            for a, b in zip(roots, roots[1:]):
                gaps *= b - a
            assert gaps >= mpf(davenport_mahler_lower_bound(f, k)), f
            assert gaps <= mpf(mahler_measure_upper_bound(f)), f


def test_criterion_06_separation(verdict):
    verdict(6, "minimum root gap respects the separation bound", "200 square-free polys")
    with mpmath.workprec(128):
        for f, roots in square_free_corpus():
            gap = min(b - a for a, b in zip(roots, roots[1:]))
            assert gap >= mpf(separation_lower_bound(f)), f


def test_criterion_07_subdivisions(verdict):
    random_polys, products = isolation_corpus()
    worst = 0.0
    for f in random_polys + [f for f, _ in products]:
        stats = IsolationStats()
        isolate_real_roots(f, stats)
        ratio = stats.subdivisions / subdivision_budget(f)
        worst = max(worst, ratio)
        assert ratio <= 1, f
    verdict(7, "subdivision count within 64(d tau + d lg d)", f"worst ratio {worst:.4f}")


def random_root(rng, max_degree=6, bits=6):
    while True:
        f = random_poly(rng, rng.randint(1, max_degree), bits)
        roots = isolate_real_roots(f)
        if roots:
            return f, rng.choice(roots).number


def test_criterion_08_sign_and_compare(verdict):
    verdict(8, "sign_at and compare agree with interval oracles", "500 + 500 cases, 50 equalities")
    rng = random.Random(1008)
    for i in range(500):
        f, alpha = random_root(rng)
        if i % 5 == 0:
            Q = alpha.defining * random_poly(rng, rng.randint(0, 2), 4)
        else:
            Q = random_poly(rng, rng.randint(0, 6), 6)
        want = oracle_sign_at(Q, alpha.defining, alpha.lo, alpha.hi, alpha.exact)
        assert sign_at(Q, alpha) == want, (Q, alpha)

    equalities = 0
    for i in range(500):
        if i % 10 == 0:
            f, alpha = random_root(rng, 4)
            g = f * random_poly(rng, rng.randint(1, 3), 5)
            twins = [
                r.number
                for r in isolate_real_roots(g)
                if oracle_sign_at(f, r.number.defining, r.number.lo, r.number.hi, r.number.exact) == 0
                and oracle_compare(
                    alpha.defining, alpha.lo, alpha.hi, r.number.defining, r.number.lo, r.number.hi, alpha.exact, r.number.exact
                ) == 0
            ]
            assert len(twins) == 1
            beta = twins[0]
            equalities += 1
            assert compare(alpha, beta) is Order.EQ
            assert compare(beta, alpha) is Order.EQ
            continue
        _, alpha = random_root(rng)
        _, beta = random_root(rng)
        want = oracle_compare(
            alpha.defining, alpha.lo, alpha.hi, beta.defining, beta.lo, beta.hi, alpha.exact, beta.exact
        )
        assert int(compare(alpha, beta)) == want, (alpha, beta)
    assert equalities == 50


def test_criterion_09_field_laws(verdict):
    verdict(9, "Q(alpha) satisfies the field laws", "10 fields x 10 triples")
    rng = random.Random(1009)
    for _ in range(10):
        f, alpha = random_root(rng, 8, 5)
        while f.degree < 2:
            f, alpha = random_root(rng, 8, 5)
        d = alpha.defining.degree

        def element():
            return ExtFieldElement.make(random_poly(rng, rng.randint(0, d - 1), 5), alpha, rng.randint(1, 9))

        for _ in range(10):
            u, v, w = element(), element(), element()
            assert u + v == v + u
            assert u * v == v * u
            assert (u + v) + w == u + (v + w)
            assert (u * v) * w == u * (v * w)
            assert u * (v + w) == u * v + u * w
            for x in (u, v, w):
                if not x.is_zero():
                    assert x * x.inverse() == 1
            # numeric cross-check of the product against the defining root
            a = numeric_value(alpha, 200)
            with mpmath.workprec(200):
                val = lambda e: mpmath.polyval([mpmath.mpf(c) for c in reversed(e.poly.coeffs)] or [0], a) / e.denom
                assert abs(val(u * v) - val(u) * val(v)) < mpmath.mpf(2) ** -100 * (1 + abs(val(u) * val(v)))


def random_bivar(rng, deg, bits=3):
    terms = {}
    for i in range(deg + 1):
        for j in range(deg + 1 - i):
            if rng.random() < 0.6:
                terms[(i, j)] = rng.randint(-(1 << bits), 1 << bits)
    return B.from_terms(terms)


def test_criterion_10_specialization(verdict):
    verdict(10, "bivariate StHa specializes to the univariate sequence", "50 pairs x 30 points")
    rng = random.Random(1010)
    pairs = 0
    while pairs < 50:
        F, G = random_bivar(rng, 4), random_bivar(rng, 4)
        if G.is_zero() or F.deg_y <= G.deg_y:
            continue
        seq = bivar_stha_sequence(F, G, "Y")
        points = 0
        while points < 30:
            x0 = Fraction(rng.randint(-64, 64), rng.randint(1, 16))
            f, g = F.specialize_x(x0), G.specialize_x(x0)
            if f.degree != F.deg_y or g.degree != G.deg_y:
                continue
            want = stha_sequence(f, g).polys
            got = seq.specialize(x0)
            assert len(got) == len(want) and all(a == b for a, b in zip(got, want)), (F, G, x0)
            points += 1
        pairs += 1


def circle(rng):
    a, b, r = rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(1, 9)
    return B.from_terms({(2, 0): 1, (0, 2): 1, (1, 0): -2 * a, (0, 1): -2 * b, (0, 0): a * a + b * b - r})


def line(rng):
    return B.from_terms({(1, 0): rng.randint(-4, 4), (0, 1): rng.choice((-3, -2, -1, 1, 2, 3)), (0, 0): rng.randint(-4, 4)})


def conic(rng):
    terms = {k: rng.randint(-3, 3) for k in ((2, 0), (1, 1), (1, 0), (0, 1), (0, 0))}
    terms[(0, 2)] = rng.choice((-2, -1, 1, 2))
    return B.from_terms(terms)


def cubic(rng):
    terms = {(i, j): rng.randint(-3, 3) for i in range(4) for j in range(4 - i) if rng.random() < 0.6}
    terms[(0, 3)] = rng.choice((-1, 1))
    return B.from_terms(terms)


NON_GENERIC = [
    ({(0, 2): 1, (0, 0): -1}, {(1, 0): 1}),
    ({(2, 0): 1, (0, 2): 1, (0, 0): -1}, {(1, 0): 1}),
    ({(2, 0): 1, (0, 2): 1, (0, 0): -4}, {(2, 0): 1, (0, 0): -1}),
    ({(2, 0): 1, (0, 2): 1, (0, 0): -2}, {(2, 0): 1, (0, 2): -1}),
    ({(0, 2): 1, (1, 0): -1}, {(1, 0): 1, (0, 0): -4}),
]


def same(a, b):
    return len(a) == len(b) and all(
        compare(s.x, t.x) is Order.EQ and compare(s.y, t.y) is Order.EQ for s, t in zip(a, b)
    )


def test_criterion_11_solver_agreement(verdict):
    rng = random.Random(1011)
    families = [(circle, line), (circle, circle), (conic, cubic)]
    start = time.perf_counter()
    systems = solutions = 0
    while systems < 50:
        make_f, make_g = families[systems % 3]
        F, G = make_f(rng), make_g(rng)
        if not (is_square_free_bivariate(F) and is_square_free_bivariate(G)):
            continue
        try:
            if not generic_position_check(F, G):
                continue
        except CommonComponentError:
            continue
        naive, rur = naive_solve(F, G), rur_solve(F, G)
        assert same(naive, rur), (F, G)
        for s in rur:
            assert bivar_sign_at(F, s.x, s.y) == 0 and bivar_sign_at(G, s.x, s.y) == 0
        systems += 1
        solutions += len(naive)
    for f, g in NON_GENERIC:
        F, G = B.from_terms(f), B.from_terms(g)
        with pytest.raises(GenericPositionError):
            rur_solve(F, G)
        for shear in (1, 2, 3):
            try:
                sols = rur_solve(F, G, shear)
            except GenericPositionError:
                continue
            assert same(sols, naive_solve(F.shear(shear), G.shear(shear)))
            break
        else:
            pytest.fail(f"no shear worked for {F} | {G}")
    elapsed = time.perf_counter() - start
    assert elapsed < 600
    verdict(11, "rur_solve and naive_solve agree", f"50 systems, {solutions} solutions, {elapsed:.1f}s")


def numeric_bivar(F, x, y):
    return sum(mpmath.mpf(c) * x**i * y**j for (i, j), c in F.terms())


def numeric_sign(v, tol):
    return 0 if abs(v) < tol else (1 if v > 0 else -1)


def test_criterion_12_satisfy(verdict):
    verdict(12, "satisfy matches brute-force filtering", "50 + 50 systems")
    rng = random.Random(1012)
    for _ in range(50):
        Pp = random_poly(rng, rng.randint(1, 6), 5)
        gt = [random_poly(rng, rng.randint(0, 3), 4) for _ in range(rng.randint(0, 2))]
        lt = [random_poly(rng, rng.randint(0, 3), 4) for _ in range(rng.randint(0, 2))]
        eq = []
        if rng.random() < 0.5:
            eq.append(random_poly(rng, 1, 3) * (square_free_part(Pp) if rng.random() < 0.5 else P([1, 1])))
        want = []
        for root in isolate_real_roots(Pp):
            a = root.number
            ok = all(oracle_sign_at(A, a.defining, a.lo, a.hi, a.exact) > 0 for A in gt)
            ok = ok and all(oracle_sign_at(A, a.defining, a.lo, a.hi, a.exact) < 0 for A in lt)
            ok = ok and all(oracle_sign_at(A, a.defining, a.lo, a.hi, a.exact) == 0 for A in eq)
            if ok:
                want.append(root)
        assert satisfy_univariate(Pp, gt=gt, lt=lt, eq=eq) == want

    families = [(circle, line), (circle, circle), (conic, line)]
    done = 0
    while done < 50:
        make_f, make_g = families[done % 3]
        F, G = make_f(rng), make_g(rng)
        try:
            candidates = naive_solve(F, G)
        except CommonComponentError:
            continue
        gt = [random_bivar(rng, 2, 2) for _ in range(rng.randint(0, 2))]
        lt = [random_bivar(rng, 1, 2) for _ in range(rng.randint(0, 1))]
        eq = [F + G * random_bivar(rng, 1, 2)] if rng.random() < 0.5 else []
        if rng.random() < 0.3:
            eq.append(random_bivar(rng, 1, 2))
        tol = mpmath.mpf(2) ** -150
        want = []
        with mpmath.workprec(300):
            for s in candidates:
                x, y = numeric_value(s.x, 300), numeric_value(s.y, 300)
                signs = [numeric_sign(numeric_bivar(A, x, y), tol) for A in gt + lt + eq]
                expected = [1] * len(gt) + [-1] * len(lt) + [0] * len(eq)
                if signs == expected:
                    want.append(s)
        assert same(satisfy_bivariate(F, G, gt=gt, lt=lt, eq=eq), want)
        done += 1


# ---------------------------------------------------------------------------
# CLI round trip


def _decode_number(rec, prefix=""):
    defining = parse_polynomial(rec[f"{prefix}defining"]).poly
    if f"{prefix}exact" in rec:
        x = Fraction(rec[f"{prefix}exact"])
        return (defining, x, x, x)
    return (defining, Fraction(rec[f"{prefix}lo"]), Fraction(rec[f"{prefix}hi"]), None)


def _number_key(alpha):
    return (alpha.defining, alpha.lo, alpha.hi, alpha.exact)


def _uni(text):
    return parse_polynomial(text).poly


def _num(Pt, lo, hi):
    return AlgebraicNumber.from_interval(_uni(Pt), Fraction(lo), Fraction(hi))


CLI_EXAMPLES = [
    (["isolate", "x^2 - 2"], lambda: ("roots", isolate_real_roots(_uni("x^2-2")))),
    (["isolate", "x^3 - 3x + 2"], lambda: ("roots", isolate_real_roots(_uni("x^3-3x+2")))),
    (["isolate", "x^2 + 1"], lambda: ("roots", [])),
    (["sign-at", "x^2 - 3", "x^2 - 2", "0", "3"], lambda: ("value", sign_at(_uni("x^2-3"), _num("x^2-2", 0, 3)))),
    (["sign-at", "x^2 - 2", "x^2 - 2", "0", "3"], lambda: ("value", sign_at(_uni("x^2-2"), _num("x^2-2", 0, 3)))),
    (["sign-at", "7", "x^2 - 2", "0", "3"], lambda: ("value", sign_at(_uni("7"), _num("x^2-2", 0, 3)))),
    (
        ["compare", "x^2 - 2", "0", "2", "2x - 3", "1", "2"],
        lambda: ("value", compare(_num("x^2-2", 0, 2), _num("2x-3", 1, 2))),
    ),
    (
        ["compare", "x^2 - 2", "0", "2", "x^4 - 4", "1", "2"],
        lambda: ("value", compare(_num("x^2-2", 0, 2), _num("x^4-4", 1, 2))),
    ),
    (["compare", "x - 1", "1", "1", "x - 2", "2", "2"], lambda: ("value", compare(_num("x-1", 1, 1), _num("x-2", 2, 2)))),
    (["satisfy", "x^2 - 2", "--gt", "x"], lambda: ("roots", satisfy_univariate(_uni("x^2-2"), gt=[_uni("x")]))),
    (["satisfy", "x^2 - 2"], lambda: ("roots", satisfy_univariate(_uni("x^2-2")))),
    (["satisfy", "x^2 - 2", "--eq", "x - 5"], lambda: ("roots", satisfy_univariate(_uni("x^2-2"), eq=[_uni("x-5")]))),
]

def _bi(text):
    poly = parse_polynomial(text).poly
    return poly if isinstance(poly, B) else B.from_x(poly)


XX, XY = _bi("x"), _bi("x + y")

BIVAR_EXAMPLES = [
    (["solve2", "--method", "naive"], "x^2 + y^2 - 2", "y - x", [], naive_solve),
    (["solve2", "--method", "naive"], "x^2 + y^2 + 1", "x - y", [], naive_solve),
    (["solve2", "--method", "naive"], "y - x^2", "y - 2x", [], naive_solve),
    (["solve2", "--method", "rur"], "x^2 + y^2 - 2", "y - x", [], rur_solve),
    (["solve2", "--method", "rur"], "y^2 - x", "y - x", [], rur_solve),
    (["solve2", "--method", "rur", "--shear", "1"], "y^2 - 1", "x", [], lambda F, G: rur_solve(F, G, 1)),
    (["satisfy2"], "x^2 + y^2 - 2", "x - y", ["--gt", "x"], lambda F, G: satisfy_bivariate(F, G, gt=[XX])),
    (["satisfy2"], "x^2 + y^2 - 2", "x - y", [], satisfy_bivariate),
    (["satisfy2"], "x^2 + y^2 - 2", "x - y", ["--eq", "x + y"], lambda F, G: satisfy_bivariate(F, G, eq=[XY])),
]


def _run_cli(capsys, fmt, argv):
    code = main(["--format", fmt] + argv)
    out, err = capsys.readouterr()
    return code, out, err


def _records(fmt, out):
    if fmt == "json":
        recs = json.loads(out)
    else:
        recs = parse_text(out)
    return recs


def test_criterion_13_cli_round_trip(verdict, capsys):
    verdict(13, "CLI output round-trips to library results", f"{len(CLI_EXAMPLES) + len(BIVAR_EXAMPLES) + 1} examples, 2 formats")
    for fmt in ("text", "json"):
        for argv, expected in CLI_EXAMPLES:
            first = _run_cli(capsys, fmt, argv)
            assert first == _run_cli(capsys, fmt, argv)
            assert first[0] == 0
            kind, value = expected()
            recs = _records(fmt, first[1])
            if kind == "value":
                assert len(recs) == 1
                got = recs[0]["value"]
                if isinstance(value, Order):
                    assert got == value.name
                else:
                    assert int(got) == value
            else:
                assert len(recs) == len(value)
                for rec, root in zip(recs, value):
                    assert _decode_number(rec) == _number_key(root.number)
                    assert int(rec["multiplicity"]) == root.multiplicity
        for head, f_text, g_text, tail, solve in BIVAR_EXAMPLES:
            argv = head + [f_text, g_text] + tail
            first = _run_cli(capsys, fmt, argv)
            assert first == _run_cli(capsys, fmt, argv)
            assert first[0] == 0
            sols = solve(_bi(f_text), _bi(g_text))
            recs = _records(fmt, first[1])
            assert len(recs) == len(sols)
            for rec, s in zip(recs, sols):
                assert _decode_number(rec, "x_") == _number_key(s.x)
                assert _decode_number(rec, "y_") == _number_key(s.y)
                if s.rur_witness is not None:
                    k, num, den = s.rur_witness
                    assert int(rec["k"]) == k
                    assert _uni(rec["numerator"]) == num and _uni(rec["denominator"]) == den
        first = _run_cli(capsys, fmt, ["bounds", "x^2 - 2"])
        assert first == _run_cli(capsys, fmt, ["bounds", "x^2 - 2"])
        rec = _records(fmt, first[1])[0]
        f = _uni("x^2-2")
        assert Fraction(rec["mahler"]) == mahler_measure_upper_bound(f)
        assert Fraction(rec["separation"]) == separation_lower_bound(f)
    code, _, err = _run_cli(capsys, "text", ["solve2", "--method", "rur", "y^2 - 1", "x"])
    assert code == 1 and err.startswith("error: GenericPositionError")
