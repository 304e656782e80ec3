"""Sparse polynomials with exact coefficients over arbitrary symbol alphabets.

A monomial is a sorted tuple of symbols; symbols only need to be hashable and
mutually orderable (twistor brackets are 4-tuples of marker labels, the toy
polytope forms use the strings "x" and "y"). Coefficients are ints or Fractions.
"""

from fractions import Fraction
from math import gcd

__all__ = ["Poly", "RatFunc", "ExactDivisionError"]


class ExactDivisionError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


def _mono_mul(m1, m2):
    return tuple(sorted(m1 + m2))


def _mono_div(m, d):
    """m / d as a monomial, or None if d does not divide m."""
    out = list(m)
    for s in d:
        try:
            out.remove(s)
        except ValueError:
            return None
    return tuple(out)


def _mono_key(m):
    # graded order; ties broken by the symbols themselves
    return (len(m), m)


class Poly:
    """Immutable-by-convention sparse polynomial {monomial: coefficient}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for m, c in terms.items():
                if c:
                    t[m] = c
        self.terms = t

    # construction -----------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, c):
        return cls({(): c})

    @classmethod
    def symbol(cls, s, c=1):
        return cls({(s,): c})

    @classmethod
    def monomial(cls, syms, c=1):
        return cls({tuple(sorted(syms)): c})

    # predicates -------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return NotImplemented if r is NotImplemented else not r

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degree(self):
        """Total degree (symbol count of the largest monomial); -1 for 0."""
        return max((len(m) for m in self.terms), default=-1)

    def is_homogeneous(self):
        degs = {len(m) for m in self.terms}
        return len(degs) <= 1

    def symbols(self):
        out = set()
        for m in self.terms:
            out.update(m)
        return out

    # arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = t.get(m, 0) + c
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        p = Poly.__new__(Poly)
        p.terms = t
        return p

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        p = Poly.__new__(Poly)
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly.zero()
            p = Poly.__new__(Poly)
            p.terms = {m: c * other for m, c in self.terms.items()}
            return p
        if not isinstance(other, Poly):
            return NotImplemented
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                v = t.get(m, 0) + c1 * c2
                if v:
                    t[m] = v
                else:
                    del t[m]
        p = Poly.__new__(Poly)
        p.terms = t
        return p

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a Poly")
        out = Poly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def map_symbols(self, f):
        """Apply f to every symbol occurrence; f returns (sign, symbol)."""
        t = {}
        for m, c in self.terms.items():
            sgn, out = 1, []
            for s in m:
                sg, s2 = f(s)
                if sg == 0:
                    sgn = 0
                    break
                sgn *= sg
                out.append(s2)
            if sgn == 0:
                continue
            mm = tuple(sorted(out))
            v = t.get(mm, 0) + sgn * c
            if v:
                t[mm] = v
            else:
                del t[mm]
        p = Poly.__new__(Poly)
        p.terms = t
        return p

    # division and normal forms -----------------------------------------

    def leading(self):
        """(monomial, coeff) maximal in graded order."""
        m = max(self.terms, key=_mono_key)
        return m, self.terms[m]

    def divide_exact(self, d):
        """self / d, raising ExactDivisionError on any remainder."""
        if d.is_zero():
            raise ZeroDivisionError("Poly division by zero")
        if self.is_zero():
            return Poly.zero()
        dm, dc = d.leading()
        rem = self
        quot = {}
        while rem:
            rm, rc = rem.leading()
            qm = _mono_div(rm, dm)
            if qm is None:
                raise ExactDivisionError("division leaves a remainder")
            qc = Fraction(rc, 1) / dc
            if qc.denominator == 1:
                qc = qc.numerator
            quot[qm] = quot.get(qm, 0) + qc
            rem = rem - Poly({qm: qc}) * d
        return Poly(quot)

    def symbol_multiplicity(self, s):
        """Largest e with s**e dividing every monomial."""
        if self.is_zero():
            return 0
        return min(m.count(s) for m in self.terms)

    def strip_symbol(self, s, e):
        """Divide by s**e (every monomial must contain s at least e times)."""
        if e == 0:
            return self
        t = {}
        for m, c in self.terms.items():
            out = list(m)
            for _ in range(e):
                out.remove(s)
            t[tuple(out)] = c
        p = Poly.__new__(Poly)
        p.terms = t
        return p

    def clear_denominators(self):
        """Scale to integer coefficients; returns (poly, multiplier used)."""
        mult = 1
        for c in self.terms.values():
            if isinstance(c, Fraction) and c.denominator != 1:
                mult = mult * c.denominator // gcd(mult, c.denominator)
        if mult == 1:
            t = {m: (c.numerator if isinstance(c, Fraction) else c)
                 for m, c in self.terms.items()}
            p = Poly.__new__(Poly)
            p.terms = t
            return p, 1
        t = {}
        for m, c in self.terms.items():
            v = c * mult
            t[m] = v.numerator if isinstance(v, Fraction) else v
        p = Poly.__new__(Poly)
        p.terms = t
        return p, mult

    def normalized(self):
        """Integer content 1 and positive leading coefficient."""
        p, _ = self.normalized_with_factor()
        return p

    def normalized_with_factor(self):
        """(q, f) with self == f * q, q content-free with positive lead."""
        if self.is_zero():
            return self, Fraction(1)
        ip, mult = self.clear_denominators()
        g = 0
        for c in ip.terms.values():
            g = gcd(g, abs(c))
        _, lead = ip.leading()
        sgn = 1 if lead > 0 else -1
        q = Poly.__new__(Poly)
        q.terms = {m: c * sgn // g for m, c in ip.terms.items()}
        return q, Fraction(sgn * g, mult)

    # evaluation ---------------------------------------------------------

    def evaluate(self, value_of):
        """Exact value with symbols mapped through value_of (a callable)."""
        total = Fraction(0)
        for m, c in self.terms.items():
            v = Fraction(c)
            for s in m:
                v *= value_of(s)
            total += v
        return total

    def __repr__(self):
        if not self.terms:
            return "Poly(0)"
        bits = []
        for m in sorted(self.terms, key=_mono_key, reverse=True):
            bits.append(f"{self.terms[m]}*{m}" if m else str(self.terms[m]))
        return "Poly(" + " + ".join(bits) + ")"


class RatFunc:
    """Ratio of two Polys, canonicalized up to common content."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = Poly.const(1)
        if den.is_zero():
            raise ZeroDivisionError("RatFunc with zero denominator")
        if num.is_zero():
            self.num, self.den = Poly.zero(), Poly.const(1)
            return
        n, fn = num.normalized_with_factor()
        d, fd = den.normalized_with_factor()
        f = fn / fd
        # symbol content shared by every monomial on both sides cancels
        for s in sorted(n.symbols() & d.symbols()):
            e = min(n.symbol_multiplicity(s), d.symbol_multiplicity(s))
            if e:
                n = n.strip_symbol(s, e)
                d = d.strip_symbol(s, e)
        self.num = n * f.numerator
        self.den = d * f.denominator

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return RatFunc(self.num * other.num, self.den * other.den)
        if isinstance(other, (int, Fraction)):
            return RatFunc(self.num * other, self.den)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, RatFunc):
            return RatFunc(self.num * other.den, self.den * other.num)
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, RatFunc):
            return RatFunc(self.num * other.den + other.num * self.den,
                           self.den * other.den)
        return NotImplemented

    def __sub__(self, other):
        return self + (other * -1)

    def __neg__(self):
        return self * -1

    def proportional(self, other):
        """True if self == c * other for a nonzero rational c; c or None."""
        a = self.num * other.den
        b = other.num * self.den
        if a.is_zero() and b.is_zero():
            return Fraction(1)
        if a.is_zero() or b.is_zero():
            return None
        na, fa = a.normalized_with_factor()
        nb, fb = b.normalized_with_factor()
        if na == nb:
            return fa / fb
        return None

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return (self.num * other.den) == (other.num * self.den)
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def evaluate(self, value_of):
        d = self.den.evaluate(value_of)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at this point")
        return self.num.evaluate(value_of) / d

    def __repr__(self):
        return f"RatFunc({self.num!r} / {self.den!r})"
