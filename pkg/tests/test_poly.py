"""Exact polynomial and rational function arithmetic."""

from fractions import Fraction

import pytest

from amplitile.poly import ExactDivisionError, Poly, RatFunc
from amplitile.rng import stream


def random_poly(rng, symbols, terms=4, deg=3, lo=-9, hi=9):
    p = Poly.zero()
    for _ in range(terms):
        mono = tuple(sorted(rng.choice(symbols)
                            for _ in range(rng.randint(0, deg))))
        p = p + Poly.monomial(mono, rng.randint(lo, hi))
    return p


SYMS = ["x", "y", "z", "w"]


def test_ring_identities():
    rng = stream(7, "poly", "ring")
    for _ in range(40):
        p = random_poly(rng, SYMS)
        q = random_poly(rng, SYMS)
        r = random_poly(rng, SYMS)
        assert (p + q) * r == p * r + q * r
        assert p * q == q * p
        assert (p - q) + q == p
        assert p * Poly.const(1) == p
        assert p * Poly.zero() == Poly.zero()
        assert -(-p) == p


def test_pow_matches_repeated_product():
    rng = stream(7, "poly", "pow")
    p = random_poly(rng, SYMS, terms=3, deg=2)
    acc = Poly.const(1)
    for e in range(5):
        assert p ** e == acc
        acc = acc * p


def test_divide_exact_roundtrip_and_failure():
    rng = stream(7, "poly", "div")
    for _ in range(30):
        p = random_poly(rng, SYMS)
        q = random_poly(rng, SYMS)
        if not q:
            continue
        assert (p * q).divide_exact(q) == p
    x, y = Poly.symbol("x"), Poly.symbol("y")
    with pytest.raises(ExactDivisionError):
        (x * x + y).divide_exact(x + y)


def test_normalized_invariants():
    rng = stream(7, "poly", "norm")
    for _ in range(30):
        p = random_poly(rng, SYMS)
        if not p:
            continue
        q, f = p.normalized_with_factor()
        assert q * f == p
        assert q == p.normalized()
        assert q.leading()[1] > 0
        coeffs = [c for c in q.terms.values()]
        assert all(Fraction(c).denominator == 1 for c in coeffs)
        from math import gcd
        g = 0
        for c in coeffs:
            g = gcd(g, int(c))
        assert g == 1


def test_map_symbols_signs_and_kill():
    x, y = Poly.symbol("x"), Poly.symbol("y")
    p = x * x + x * y * 2 + y * y * 3

    def swap(s):
        return (-1, "y") if s == "x" else (1, "x")

    q = p.map_symbols(swap)
    assert q == y * y + x * y * -2 + x * x * 3

    def killx(s):
        return (0, s) if s == "x" else (1, s)

    assert p.map_symbols(killx) == y * y * 3


def test_homogeneous_and_degree():
    x, y = Poly.symbol("x"), Poly.symbol("y")
    assert (x * y + y * y).is_homogeneous()
    assert not (x + y * y).is_homogeneous()
    assert (x * y + y * y).degree() == 2
    assert Poly.zero().degree() == -1


def test_symbol_multiplicity_and_strip():
    x, y = Poly.symbol("x"), Poly.symbol("y")
    p = x * x * y + x * y * y
    assert p.symbol_multiplicity("x") == 1
    assert p.symbol_multiplicity("y") == 1
    assert p.strip_symbol("x", 1) == x * y + y * y


def test_clear_denominators():
    x = Poly.symbol("x")
    p = x * Fraction(3, 4) + Poly.const(Fraction(5, 6))
    q, mult = p.clear_denominators()
    assert q == p * mult
    assert all(Fraction(c).denominator == 1 for c in q.terms.values())


def test_evaluate():
    rng = stream(7, "poly", "eval")
    vals = {"x": Fraction(3, 2), "y": -2, "z": 5, "w": Fraction(-1, 7)}
    for _ in range(20):
        p = random_poly(rng, SYMS)
        q = random_poly(rng, SYMS)
        f = lambda s: vals[s]
        assert (p * q).evaluate(f) == p.evaluate(f) * q.evaluate(f)
        assert (p + q).evaluate(f) == p.evaluate(f) + q.evaluate(f)


def test_ratfunc_equality_and_arith():
    x, y = Poly.symbol("x"), Poly.symbol("y")
    a = RatFunc(x * x - y * y, x - y)
    b = RatFunc(x + y, Poly.const(1))
    # equal as rational functions by cross multiplication
    assert a == b
    half = RatFunc(x, x * 2)
    assert half == RatFunc(Poly.const(1), Poly.const(2))
    s = a + half
    vals = lambda t: {"x": Fraction(5), "y": Fraction(2)}[t]
    assert s.evaluate(vals) == Fraction(5 + 2) + Fraction(1, 2)
    assert (a * half).evaluate(vals) == Fraction(7, 2)
    assert (a / b).evaluate(vals) == 1


def test_ratfunc_proportional():
    x, y = Poly.symbol("x"), Poly.symbol("y")
    a = RatFunc(x * y, x + y)
    b = RatFunc(x * y * 6, (x + y) * 4)
    assert a.proportional(b) == Fraction(2, 3)
    assert a.proportional(RatFunc(x, y)) is None
