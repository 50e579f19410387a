"""Exact integer polynomials in one variable ``t`` and their quotients.

Coefficients are Python ints (arbitrary precision) stored densely, lowest
degree first. Both types are immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .errors import DivisionNotExact, InvalidBound, PoleAtZero

#: degree reported for the zero polynomial
ZERO_DEGREE = -1


def _strip(coeffs: Iterable) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPolynomial:
    """Dense polynomial with integer coefficients, ``coeffs[k]`` is the t^k term."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _strip(coeffs)
        for x in c:
            if isinstance(x, bool) or not isinstance(x, int):
                raise TypeError(f"integer coefficient expected, got {x!r}")
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls([c])

    @classmethod
    def t_minus(cls, a: int = 1) -> "IntPolynomial":
        return cls([-a, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPolynomial", self.coeffs))

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPolynomial([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_divide(self, other: "IntPolynomial") -> "IntPolynomial":
        """Quotient ``self / other``; raises DivisionNotExact unless it divides in Z[t]."""
        q, r = divmod_rational(self, other)
        if any(x for x in r) or any(x.denominator != 1 for x in q):
            raise DivisionNotExact(_rational_coeffs_repr(r))
        return IntPolynomial(int(x) for x in q)

    def __floordiv__(self, other):
        return self.exact_divide(_as_poly(other))

    def reverse(self, bound: int) -> "IntPolynomial":
        """``t**bound * self(1/t)``."""
        if bound < self.degree:
            raise InvalidBound(f"bound {bound} is below degree {self.degree}")
        padded = list(self.coeffs) + [0] * (bound + 1 - len(self.coeffs))
        return IntPolynomial(reversed(padded))

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by t**k (k >= 0)."""
        if self.is_zero():
            return self
        return IntPolynomial([0] * k + list(self.coeffs))

    def to_json(self) -> list:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "IntPolynomial":
        return cls(int(x) for x in data)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self.coeffs)


def _as_poly(x):
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return IntPolynomial([x])
    return None


def _rational_coeffs_repr(r):
    r = list(_strip(r))
    if all(x.denominator == 1 for x in r):
        return IntPolynomial(int(x) for x in r)
    return r


def format_poly(coeffs: Sequence, var: str = "t") -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def divmod_rational(p: IntPolynomial, q: IntPolynomial) -> tuple[list[Fraction], list[Fraction]]:
    """Long division over Q; returns (quotient, remainder) as Fraction lists."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = [Fraction(c) for c in p.coeffs]
    dq = q.degree
    lead = Fraction(q.leading)
    if len(rem) - 1 < dq:
        return [Fraction(0)], rem
    quot = [Fraction(0)] * (len(rem) - dq)
    for k in range(len(rem) - 1 - dq, -1, -1):
        c = rem[k + dq] / lead
        quot[k] = c
        if c:
            for j, b in enumerate(q.coeffs):
                rem[k + j] -= c * b
    return quot, list(_strip(rem[:dq]))


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient (Euclid over Q)."""
    a = [Fraction(c) for c in p.coeffs]
    b = [Fraction(c) for c in q.coeffs]
    while b:
        _, r = divmod_rational(_from_fracs(a), _from_fracs(b))
        a, b = b, r
    if not a:
        return IntPolynomial()
    return _primitive(a)


def _from_fracs(coeffs: Sequence[Fraction]) -> IntPolynomial:
    # scale a rational coefficient list to an integer polynomial; only used in
    # gcd where scalar factors are irrelevant
    den = reduce(lambda x, y: x * y // gcd(x, y), (c.denominator for c in coeffs), 1)
    return IntPolynomial(int(c * den) for c in coeffs)


def _primitive(coeffs: Sequence[Fraction]) -> IntPolynomial:
    p = _from_fracs(coeffs)
    g = p.content()
    p = IntPolynomial(c // g for c in p.coeffs)
    return -p if p.leading < 0 else p


def poly_arith(p: IntPolynomial, q: IntPolynomial, op: str) -> IntPolynomial:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "exact_divide":
        return p.exact_divide(q)
    raise ValueError(f"unknown operation {op!r}")


def reverse(p: IntPolynomial, bound: int) -> IntPolynomial:
    return p.reverse(bound)


T = IntPolynomial([0, 1])
ONE = IntPolynomial([1])
ZERO = IntPolynomial()


class RationalFunction:
    """Quotient of two IntPolynomials, always kept in canonical form.

    Canonical form: numerator and denominator coprime in Q[t], overall content 1
    and positive leading coefficient of the denominator. Structural equality of
    canonical forms therefore coincides with cross-multiplication equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = _as_poly(num) if not isinstance(num, IntPolynomial) else num
        den = _as_poly(den) if not isinstance(den, IntPolynomial) else den
        if num is None or den is None:
            raise TypeError("RationalFunction needs IntPolynomial or int parts")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = ZERO, ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_divide(g), den.exact_divide(g)
            c = gcd(num.content(), den.content())
            if den.leading < 0:
                c = -c
            num = IntPolynomial(x // c for x in num.coeffs)
            den = IntPolynomial(x // c for x in den.coeffs)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        return cls(x)

    def __eq__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash(("RationalFunction", self.num.coeffs, self.den.coeffs))

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __add__(self, other):
        other = RationalFunction.coerce(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        other = RationalFunction.coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalFunction.coerce(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def __pow__(self, k: int):
        if k >= 0:
            return RationalFunction(self.num ** k, self.den ** k)
        return RationalFunction(self.den ** -k, self.num ** -k)

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_polynomial(self) -> IntPolynomial:
        """The numerator when the function is an integer polynomial."""
        if self.den != ONE:
            raise DivisionNotExact(self.den, f"{self} is not an integer polynomial")
        return self.num

    def substitute_reciprocal(self) -> "RationalFunction":
        """f(1/t) with numerator and denominator cleared by t**max(deg)."""
        bound = max(self.num.degree, self.den.degree)
        return RationalFunction(self.num.reverse(bound), self.den.reverse(bound))

    def __call__(self, x):
        d = self.den(Fraction(x))
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(Fraction(x)) / d

    def series(self, order: int) -> list:
        return series_expand(self, order)

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "RationalFunction":
        return cls(IntPolynomial.from_json(data["num"]), IntPolynomial.from_json(data["den"]))

    def __repr__(self):
        return f"RationalFunction({list(self.num.coeffs)}, {list(self.den.coeffs)})"

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def t_power(k: int) -> RationalFunction:
    """t**k for any integer k."""
    if k >= 0:
        return RationalFunction(IntPolynomial.monomial(k))
    return RationalFunction(ONE, IntPolynomial.monomial(-k))


def ratfun_ops(a: RationalFunction, b: RationalFunction | None, op: str):
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "eq":
        return a == b
    if op == "substitute_reciprocal":
        return a.substitute_reciprocal()
    raise ValueError(f"unknown operation {op!r}")


def series_expand(f: RationalFunction, order: int) -> list:
    """Taylor coefficients of f at t = 0 up to t**order inclusive.

    Integral coefficients come back as ints, anything else as Fraction.
    """
    f = RationalFunction.coerce(f)
    d0 = f.den.coeff(0)
    if d0 == 0:
        raise PoleAtZero("denominator vanishes at t = 0")
    d0 = Fraction(d0)
    out: list[Fraction] = []
    for k in range(order + 1):
        acc = Fraction(f.num.coeff(k))
        for j in range(1, min(k, f.den.degree) + 1):
            acc -= f.den.coeffs[j] * out[k - j]
        out.append(acc / d0)
    return [int(x) if x.denominator == 1 else x for x in out]


def rational_from_series(values: Sequence[int], degree: int) -> RationalFunction:
    """Rebuild sum_m a_m t^m when a_m (m >= 1) is polynomial in m of the given degree.

    ``values`` are a_0 .. a_{degree+1}; a_0 is arbitrary. Over the denominator
    (1 - t)**(degree + 1) the numerator has degree at most degree + 1, so these
    terms pin it down.
    """
    if len(values) < degree + 2:
        raise ValueError(f"need {degree + 2} terms, got {len(values)}")
    den = IntPolynomial([1, -1]) ** (degree + 1)
    num = IntPolynomial(values[: degree + 2]) * den
    num = IntPolynomial(num.coeffs[: degree + 2])
    return RationalFunction(num, den)
