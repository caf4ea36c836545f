"""Acceptance criteria 1-9, one test each.

The terminal summary prints ``criterion N: PASS|FAIL`` for every test here.
"""
import json
import random
from fractions import Fraction as F

import mpmath
import pytest

from cubic_denest import (
    Classification,
    DepressedCubic,
    GeneralCubic,
    QuadExt,
    branch_pairs,
    cardano_numeric,
    deflate,
    denest,
    denest_real_general,
    denest_verify,
    enumerate_branches,
    eval_quadext,
    format_equation,
    format_surd,
    parse_equation,
    qe_cube,
    rational_root_search,
    residual,
    solve,
)
from cubic_denest.formatting import dumps, render
from cubic_denest.numeval import quadext_approx

from oracles import all_roots_mp, rational_roots_sympy

ROOT_3_2 = DepressedCubic(F(4, 3), F(75, 16))
ROOT_1_2 = DepressedCubic(F(-1, 3), F(-3, 16))
NO_RATIONAL = DepressedCubic(2, 2)


def close(x, target, tol):
    return abs(F(x) - F(target)) <= F(tol)


def _rand_rat(rng, bound=100):
    return F(rng.randint(-bound, bound), rng.randint(1, bound))


def mp_fraction(expr):
    """Evaluate ``expr()`` at 40 digits and convert it to a Fraction."""
    with mpmath.workdps(40):
        return F(mpmath.nstr(expr(), 35))


@pytest.mark.criterion(1)
def test_root_3_2_exact(criterion):
    r = solve(ROOT_3_2)
    assert r.classification is Classification.ONE_REAL
    assert r.roots[0].exact == F(3, 2)
    p = r.denesting
    assert (p.t, p.s) == (F(3, 4), F(12, 43))
    assert format_surd(p.w3) == "(1/12)*sqrt(273) + 3/4"
    assert format_surd(p.w4) == "(1/12)*sqrt(273) - 3/4"
    assert denest_verify(p, ROOT_3_2)
    assert p.root == F(3, 2)


@pytest.mark.criterion(2)
def test_root_3_2_numeric(criterion):
    c = cardano_numeric(ROOT_3_2, 9)
    w3 = eval_quadext(denest(ROOT_3_2, F(3, 2)).w3, 9)
    print(f"w1 = {c.w1}, w3 = {w3}, w2 = {c.w2}")
    assert str(c.w1) == "2.126892637"
    assert str(w3) == str(c.w1)
    assert close(c.w2.to_fraction(), F("0.626892637"), F(1, 10**9))


@pytest.mark.criterion(3)
def test_three_real_root_1_2_exact(criterion):
    r = solve(ROOT_1_2)
    assert r.classification is Classification.THREE_REAL
    assert r.D == F(-13, 6912)
    assert r.roots[0].exact == F(1, 2)
    p = r.denesting
    assert (p.t, p.s) == (F(1, 4), -12)
    assert format_surd(p.w3) == "1/4 - (1/12)*sqrt(39)*i"
    z = eval_quadext(p.w3, 10)
    print(f"w3 = {z}")
    # the printed 0.5204165000 is sqrt(39)/12 = 0.52041649986.. rounded up one
    # ulp too far; hold it to the evaluator's 10^(1-k) contract
    assert str(z.re) == "0.2500000000"
    assert close(z.im.to_fraction(), F("-0.5204165000"), F(1, 10**9))
    assert close(z.im.to_fraction(), -mp_fraction(lambda: mpmath.sqrt(39) / 12), F(1, 10**10))


@pytest.mark.criterion(4)
def test_three_real_branches(criterion):
    p = denest(ROOT_1_2, F(1, 2))
    xs = enumerate_branches(ROOT_1_2, p, 10)
    assert all(x.is_real for x in xs)
    reals = [x.re.to_fraction() for x in xs]
    print("branches:", ", ".join(str(x) for x in xs))
    for got, want in zip(reals, ["0.500000000", "0.651387819", "-1.151387819"]):
        assert close(got, F(want), F(1, 10**8))

    (x0, _), pair = deflate(ROOT_1_2, F(1, 2))
    exact = [F(x0)] + [quadext_approx(q, 30)[0] for q in pair]
    assert close(exact[1], mp_fraction(lambda: (-1 + mpmath.sqrt(13)) / 4), F(1, 10**25))
    for got in reals:
        assert min(abs(got - e) for e in exact) <= F(1, 10**9)

    u, _ = branch_pairs(p, 10)[1]
    print(f"eps1*w3 = {u}")
    assert close(u.re.to_fraction(), F("0.3256939095"), F(1, 10**8))
    assert close(u.im.to_fraction(), F("0.4767146009"), F(1, 10**8))


@pytest.mark.criterion(5)
def test_irrational_root_numeric(criterion):
    c = cardano_numeric(NO_RATIONAL, 10)
    g = denest_real_general(NO_RATIONAL, 10)
    print(f"x = {c.x}, w1 = {c.w1}, w2 = {c.w2}, t = {g.t}, s = {g.s}")
    assert str(c.x) == "0.6258168190"
    assert str(g.t) == "0.3129084095"
    assert str(g.s) == "0.4181219592"
    # printed to 9 decimals
    assert close(c.w1.to_fraction(), F("1.761325364"), F(1, 10**9))
    assert close(c.w2.to_fraction(), F("1.135508545"), F(1, 10**9))
    assert abs(g.w3 - c.w1) <= F(1, 10**9)
    assert abs(g.w4 - c.w2) <= F(1, 10**9)


@pytest.mark.criterion(6)
def test_planted_roots(criterion):
    rng = random.Random(20240601)
    done = failures = 0
    while done < 1000:
        x, a = _rand_rat(rng), _rand_rat(rng)
        b = (x**3 + 3 * a * x) / 2
        d = DepressedCubic(a, b)
        if d.discriminant == 0:
            continue
        done += 1
        p = denest(d, x)
        D, s, t = p.D, p.s, p.t
        ok = (
            s**3 * D + 3 * s * t * t == 1
            and t**3 + 3 * s * s * t * D == b
            and s * s * D - t * t == a
            and qe_cube(p.w3) == QuadExt(D, 1, b)
            and p.w3 - p.w4 == QuadExt(D, 0, x)
            and denest_verify(p, d)
        )
        failures += not ok
    assert failures == 0


@pytest.mark.criterion(7)
def test_cross_oracle_no_planted_root(criterion):
    rng = random.Random(77)
    checked = 0
    for _ in range(200):
        d = DepressedCubic(_rand_rat(rng), _rand_rat(rng))
        found = rational_root_search(d)
        assert (found is None) == (not rational_roots_sympy(d.a, d.b))
        if found is not None:
            continue
        checked += 1
        r = solve(d, 12)
        assert r.exact_roots == []
        assert r.denesting is None
        real = [z.re for z in r.numeric_roots if z.is_real]
        assert real
        for x in real:
            assert residual(d, x) <= F(1, 10**8)
        oracle = sorted(float(z.real) for z in all_roots_mp(d.a, d.b, 30) if abs(z.imag) < 1e-20)
        assert len(oracle) == len(real)
        for x, y in zip(sorted(real), oracle):
            assert abs(float(x.to_fraction()) - y) < 1e-11
    assert checked > 150


@pytest.mark.criterion(8)
def test_degenerate_coverage(criterion):
    d = DepressedCubic(4, 0)
    p = denest(d, 0)
    assert (p.t, p.s) == (0, F(1, 4))
    assert denest_verify(p, d)

    rng = random.Random(8)
    for c in [F(0)] + [_rand_rat(rng, 30) for _ in range(50)]:
        d = DepressedCubic(-c * c, c**3)
        assert d.discriminant == 0
        r = solve(d)
        assert r.classification is Classification.REPEATED
        assert sorted(r.exact_roots) == sorted([2 * c, -c, -c])
        assert {root.provenance for root in r.roots} == {"repeated-root"}

    r = solve(DepressedCubic(0, 4))
    assert r.roots[0].exact == 2
    assert r.denesting is not None and denest_verify(r.denesting, DepressedCubic(0, 4))


@pytest.mark.criterion(9)
def test_round_trip(criterion):
    rng = random.Random(9)
    for _ in range(200):
        coeffs = [_rand_rat(rng, 40) for _ in range(4)]
        if coeffs[0] == 0:
            coeffs[0] = F(1)
        g = GeneralCubic(*coeffs)
        text = format_equation(g)
        g2 = parse_equation(text)
        assert g2.coefficients == g.coefficients
        out = render(solve(g), "json")
        assert out == render(solve(g2), "json")
        assert dumps(json.loads(out)) == out
