"""Exact arithmetic kernel: rationals, polynomials in n, Laurent polynomials in t.

Three kinds of values circulate through the calculus:

  Rational     an alias for fractions.Fraction (always reduced, positive
               denominator, arbitrary precision).
  Poly         a univariate polynomial in the construction parameter n with
               rational coefficients, stored densely as a coefficient tuple
               (index = power of n) with no trailing zeros.  The zero
               polynomial is the empty tuple.
  LaurentPoly  a Laurent polynomial in t with *integer* coefficients, stored
               sparsely as (exponent, coefficient) pairs in ascending
               exponent order with no zero coefficients.  Integer-only
               coefficients are deliberate: the knot polynomials carried in
               this form are integral, and rational leakage indicates a
               normalization bug upstream.

A Scalar is a Fraction or a Poly.  Mixed arithmetic promotes the Fraction to
a constant polynomial; a degree-0 Poly compares (and hashes) equal to the
Fraction it denotes, so numeric and symbolic code paths can be shared.

All values are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Fraction

Scalar = Union[Fraction, "Poly"]


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"expected an integer or Fraction, got {x!r}")


def _format_coeff_term(c: Fraction, power: int, symbol: str) -> str:
    # Render one monomial without its sign: "n^7", "3*n", "1/3*n^5", "22".
    if power == 0:
        return str(abs(c))
    var = symbol if power == 1 else f"{symbol}^{power}"
    if abs(c) == 1:
        return var
    return f"{abs(c)}*{var}"


@dataclass(frozen=True)
class Poly:
    """Polynomial in n over the rationals, canonical dense form.

    coeffs[k] is the coefficient of n^k; trailing zeros are stripped so that
    equality is structural.  Supports +, -, *, ** with other polynomials,
    Fractions and ints, and evaluation via call.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [_to_fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((_to_fraction(c),))

    @classmethod
    def variable(cls) -> "Poly":
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def monomial(cls, power: int, c=1) -> "Poly":
        if power < 0:
            raise ValueError("monomial power must be nonnegative")
        return cls((Fraction(0),) * power + (_to_fraction(c),))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def constant_value(self) -> Fraction:
        """The value of a degree <= 0 polynomial as a Fraction."""
        if len(self.coeffs) > 1:
            raise ValueError(f"{self} is not constant")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(tuple(out))

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return Poly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"polynomial power must be a nonnegative integer, got {exponent!r}")
        result = Poly.const(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        # Division by a nonzero constant only; use divide_exact for polynomials.
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            d = _to_fraction(other)
            if d == 0:
                raise ZeroDivisionError("division by zero")
            return Poly(tuple(c / d for c in self.coeffs))
        return NotImplemented

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = Poly()
        r = self
        while not r.is_zero() and r.degree >= o.degree:
            shift = r.degree - o.degree
            t = Poly.monomial(shift, r.leading_coefficient / o.leading_coefficient)
            q = q + t
            r = r - t * o
        return q, r

    def __call__(self, x) -> Fraction:
        """Exact evaluation at a rational point (Horner)."""
        x = _to_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return len(self.coeffs) <= 1 and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.constant_value())
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            term = _format_coeff_term(c, power, "n")
            if not parts:
                parts.append(f"-{term}" if c < 0 else term)
            else:
                parts.append(f"- {term}" if c < 0 else f"+ {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"Poly[{self}]"


#: The construction parameter n as a polynomial.
N = Poly.variable()


def as_scalar(x) -> Scalar:
    """Coerce an int/Fraction/Poly to a Scalar (Fraction or Poly)."""
    if isinstance(x, Poly):
        return x
    return _to_fraction(x)


def scalar_eval(s: Scalar, n) -> Fraction:
    """Evaluate a Scalar at a concrete parameter value."""
    if isinstance(s, Poly):
        return s(n)
    return _to_fraction(s)


def scalar_str(s: Scalar) -> str:
    return str(as_scalar(s))


def divide_exact(a: Scalar, b: Scalar) -> Scalar:
    """Exact division of scalars; raises ValueError when b does not divide a."""
    a = as_scalar(a)
    b = as_scalar(b)
    if isinstance(b, Fraction):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b
    if isinstance(a, Fraction):
        a = Poly.const(a)
    q, r = divmod(a, b)
    if not r.is_zero():
        raise ValueError(f"({a}) is not exactly divisible by ({b})")
    return q


def integer_valued(p: Scalar) -> bool:
    """True iff p(k) is an integer for every integer k.

    Decided exactly through the Newton (binomial) basis: p is integer-valued
    on all of Z iff every iterated forward difference of p at 0, up to the
    degree, is an integer.  This is total, no sampling involved.
    """
    p = as_scalar(p)
    if isinstance(p, Fraction):
        return p.denominator == 1
    values = [p(k) for k in range(p.degree + 1)] or [Fraction(0)]
    while values:
        if values[0].denominator != 1:
            return False
        values = [b - a for a, b in zip(values, values[1:])]
    return True


@dataclass(frozen=True)
class LaurentPoly:
    """Laurent polynomial in t over the integers, canonical sparse form.

    terms is an ascending-exponent tuple of (exponent, coefficient) pairs
    with every coefficient a nonzero int.  The constructor accepts any
    mapping or iterable of pairs and normalizes it.
    """

    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        raw = self.terms
        if isinstance(raw, Mapping):
            items: Iterable = raw.items()
        else:
            items = raw
        acc: dict[int, int] = {}
        for e, c in items:
            if not isinstance(e, int) or isinstance(e, bool):
                raise TypeError(f"Laurent exponent must be an int, got {e!r}")
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"Laurent coefficient must be an int, got {c!r}")
            acc[e] = acc.get(e, 0) + c
        object.__setattr__(
            self, "terms", tuple(sorted((e, c) for e, c in acc.items() if c != 0))
        )

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls(())

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls(((0, 1),))

    @classmethod
    def t_power(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return cls(((exponent, coefficient),))

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_exponent(self) -> int:
        if not self.terms:
            raise ValueError("undefined for zero")
        return self.terms[0][0]

    @property
    def max_exponent(self) -> int:
        if not self.terms:
            raise ValueError("undefined for zero")
        return self.terms[-1][0]

    def span(self) -> int:
        """Width of the exponent support (max exponent minus min exponent)."""
        return self.max_exponent - self.min_exponent

    def coefficient(self, exponent: int) -> int:
        for e, c in self.terms:
            if e == exponent:
                return c
        return 0

    def is_symmetric(self) -> bool:
        """True iff a(t) = a(1/t) coefficientwise."""
        # terms are sorted by exponent, so mirror-match the two ends
        return all(
            e1 == -e2 and c1 == c2
            for (e1, c1), (e2, c2) in zip(self.terms, reversed(self.terms))
        )

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    def __neg__(self):
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly(acc)

    def substitute_square(self) -> "LaurentPoly":
        """The substitution t -> t^2 (every exponent doubled)."""
        return LaurentPoly(tuple((2 * e, c) for e, c in self.terms))

    def __call__(self, x) -> Fraction:
        """Exact evaluation at a nonzero rational point."""
        x = _to_fraction(x)
        if x == 0:
            raise ZeroDivisionError("Laurent polynomial evaluated at 0")
        return sum((c * x**e for e, c in self.terms), Fraction(0))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in reversed(self.terms):
            if e == 0:
                term = str(abs(c))
            else:
                var = "t" if e == 1 else f"t^{e}"
                term = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not parts:
                parts.append(f"-{term}" if c < 0 else term)
            else:
                parts.append(f"- {term}" if c < 0 else f"+ {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly[{self}]"


def is_monic_symmetric(a: LaurentPoly) -> bool:
    """True iff a is coefficientwise symmetric with top coefficient +-1.

    Fibered-knot Alexander polynomials pass this test; it is the monicity
    criterion used to split knot-surgery results into symplectic and
    non-symplectic candidates.
    """
    if a.is_zero():
        raise ValueError("undefined for zero")
    return a.is_symmetric() and abs(a.terms[-1][1]) == 1


def format_decimal(x: Fraction, places: int = 6) -> str:
    """Fixed-point decimal rendering with round-half-even, exact arithmetic."""
    scale = 10**places
    scaled = round(x * scale)  # Fraction.__round__ rounds half to even
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    return f"{sign}{scaled // scale}.{scaled % scale:0{places}d}"
