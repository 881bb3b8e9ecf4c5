"""Exact dense integer-coefficient polynomial arithmetic.

Coefficients are arbitrary-precision Python ints stored low-to-high:
``coeffs[i]`` is the coefficient of x^i.  For a domination polynomial of an
n-vertex graph the degree is n, the leading coefficient is 1, the constant
term is 0, and the least nonzero index is the domination number.

Complex evaluation is multiprecision (mpmath), default 256 bits; double
precision is useless here because coefficient magnitudes reach binomial
scale while the interesting roots sit near the unit circle.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

import mpmath

DEFAULT_PRECISION = 256  # bits
MIN_PRECISION = 53

Scalar = Union[int, Fraction]


class IntPolynomial:
    """Immutable dense polynomial over the integers.

    The zero polynomial is the empty coefficient tuple; trailing zero
    coefficients are always stripped on construction.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        items = list(coeffs)
        for c in items:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"integer coefficients required, got {c!r}")
        while items and items[-1] == 0:
            items.pop()
        object.__setattr__(self, "coeffs", tuple(items))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "IntPolynomial":
        if power < 0:
            raise ValueError("power must be >= 0")
        return cls((0,) * power + (coeff,))

    @classmethod
    def from_coeff_string(cls, text: str) -> "IntPolynomial":
        """Parse the serialization produced by :meth:`to_coeff_string`.

        Format: decimal coefficients low-to-high, comma-separated.  The
        empty string is the zero polynomial.
        """
        text = text.strip()
        if not text:
            return cls()
        try:
            return cls(int(part.strip()) for part in text.split(","))
        except ValueError as exc:
            raise ValueError(f"malformed coefficient list: {text!r}") from exc

    # -- basic queries -------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def valuation(self) -> int:
        """Least index with a nonzero coefficient; -1 for zero.

        For a domination polynomial this is the domination number.
        """
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return self == IntPolynomial.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("IntPolynomial", self.coeffs))

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"

    # -- ring operations -----------------------------------------------

    def __add__(self, other) -> "IntPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "IntPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "IntPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "IntPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPolynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = IntPolynomial.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- evaluation ----------------------------------------------------

    def eval_int(self, point: Scalar) -> Scalar:
        """Exact Horner evaluation at an integer or Fraction point."""
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def eval_complex(self, z, precision: int | None = None) -> mpmath.mpc:
        """Horner evaluation at a complex point, at `precision` bits.

        Coefficients wider than the working precision raise it so the
        conversion stays exact.
        """
        prec = _working_precision(self, precision)
        with mpmath.workprec(prec):
            acc = mpmath.mpc(0)
            zc = mpmath.mpc(z)
            for c in reversed(self.coeffs):
                acc = acc * zc + c
            return acc

    # -- calculus / transforms ------------------------------------------

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def shift(self, c: int) -> "IntPolynomial":
        """Exact composition p(x + c)."""
        if not isinstance(c, int) or isinstance(c, bool):
            raise TypeError("shift amount must be an integer")
        result: list[int] = []
        for coeff in reversed(self.coeffs):
            # result <- result*(x+c) + coeff
            nxt = [coeff] + result
            for i in range(len(result)):
                nxt[i] += c * result[i]
            result = nxt
        return IntPolynomial(result)

    # -- content / primitive --------------------------------------------

    def content(self) -> int:
        """Non-negative gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
            if g == 1:
                break
        return g

    def content_and_primitive(self) -> tuple[int, "IntPolynomial"]:
        """Split into (content, primitive part); the primitive part keeps
        the sign of the leading coefficient."""
        g = self.content()
        if g == 0:
            return 0, IntPolynomial()
        return g, IntPolynomial(c // g for c in self.coeffs)

    # -- serialization ---------------------------------------------------

    def to_coeff_string(self) -> str:
        """Decimal coefficients low-to-high, comma-separated ('' for zero)."""
        return ",".join(str(c) for c in self.coeffs)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            elif i == 1:
                body = "x" if mag == 1 else f"{mag}x"
            else:
                body = f"x^{i}" if mag == 1 else f"{mag}x^{i}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def _coerce(value) -> "IntPolynomial":
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return IntPolynomial.constant(value)
    return NotImplemented


def _working_precision(p: IntPolynomial, precision: int | None) -> int:
    prec = DEFAULT_PRECISION if precision is None else precision
    if prec < MIN_PRECISION:
        raise ValueError(f"precision must be >= {MIN_PRECISION} bits")
    width = max((abs(c).bit_length() for c in p.coeffs), default=0)
    return max(prec, width + 32)


# Handy generators for formula code.
X = IntPolynomial.x()
ONE = IntPolynomial.one()
ZERO = IntPolynomial.zero()


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Exact gcd in Z[x] via the primitive polynomial remainder sequence.

    Normalized to a positive leading coefficient so Sturm sequences built
    on top are canonical.  gcd(0, 0) = 0.
    """
    if p.is_zero:
        return _positive_lead(q)
    if q.is_zero:
        return _positive_lead(p)
    cont = math.gcd(p.content(), q.content())
    _, a = p.content_and_primitive()
    _, b = q.content_and_primitive()
    while not b.is_zero:
        r = pseudo_rem(a, b)
        _, r = r.content_and_primitive()
        a, b = b, r
    return cont * _positive_lead(a)


def pseudo_rem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Remainder of |lead(b)|^(deg a - deg b + 1) * a divided by b.

    The scaling factor is strictly positive, so the result has the same
    sign pattern as the exact rational remainder — the property Sturm
    sequences need.  Returns a unchanged when deg a < deg b.
    """
    if b.is_zero:
        raise ZeroDivisionError("pseudo-division by zero polynomial")
    da, db = a.degree, b.degree
    if da < db:
        return a
    lb = b.lead
    r = list(a.coeffs)
    bc = b.coeffs
    for k in range(da - db, -1, -1):
        top = r[db + k]
        r = [lb * c for c in r]
        if top:
            for i, cb in enumerate(bc):
                r[i + k] -= top * cb
        del r[db + k:]
    if lb < 0 and (da - db + 1) % 2 == 1:
        # make the net scale factor |lb|^(da-db+1), i.e. positive
        r = [-c for c in r]
    return IntPolynomial(r)


def exact_div(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Exact quotient p / q in Z[x]; raises ValueError if not divisible."""
    if q.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero:
        return IntPolynomial()
    rem = [Fraction(c) for c in p.coeffs]
    qc = q.coeffs
    dq = q.degree
    if p.degree < dq:
        raise ValueError("not exactly divisible")
    out = [Fraction(0)] * (p.degree - dq + 1)
    for k in range(p.degree - dq, -1, -1):
        coef = rem[dq + k] / qc[-1]
        out[k] = coef
        if coef:
            for i, cb in enumerate(qc):
                rem[i + k] -= coef * cb
    if any(rem):
        raise ValueError("not exactly divisible")
    ints = []
    for c in out:
        if c.denominator != 1:
            raise ValueError("quotient is not integral")
        ints.append(c.numerator)
    return IntPolynomial(ints)


def _positive_lead(p: IntPolynomial) -> IntPolynomial:
    return -p if p.lead < 0 else p
