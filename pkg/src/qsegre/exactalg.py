"""Exact arithmetic in the indeterminate q.

Coefficient arithmetic is fractions.Fraction throughout, so every result in
this module is exact; nothing here ever touches floating point.  A polynomial
is a tuple of coefficients in ascending degree with no trailing zeros (the
zero polynomial is the empty tuple), which makes structural equality coincide
with mathematical equality.  A rational function keeps a fully reduced
numerator/denominator pair with monic denominator, the canonical form used
for every equality test.  Truncated power series in z carry rational-function
coefficients, since the series of interest have coefficients of the shape
1/([n]_q!)^2.

Every value here is immutable once constructed and safe to share between
threads.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

Coefficient = Union[int, Fraction]


def _coerce(value: Coefficient) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an integer or Fraction, got {type(value).__name__}")


class QPolynomial:
    """Dense univariate polynomial in q; index i holds the coefficient of q^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coefficient] = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree, with the convention that the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def evaluate(self, value: Coefficient) -> Fraction:
        """Exact value at q = value, by Horner's rule."""
        v = _coerce(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        if not isinstance(other, QPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial(out)

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPolynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "QPolynomial":
        if exponent < 0:
            raise ValueError("negative polynomial powers are not defined here")
        out = ONE
        for _ in range(exponent):
            out = out * self
        return out

    def __divmod__(self, other: "QPolynomial"):
        """Long division; exact because coefficients are rational."""
        if not isinstance(other, QPolynomial):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dlen = len(other.coeffs)
        if len(rem) < dlen:
            return QPolynomial(), self
        quo = [Fraction(0)] * (len(rem) - dlen + 1)
        dlead = other.coeffs[-1]
        for shift in range(len(rem) - dlen, -1, -1):
            factor = rem[shift + dlen - 1] / dlead
            if factor:
                quo[shift] = factor
                for i, c in enumerate(other.coeffs):
                    rem[shift + i] -= factor * c
        return QPolynomial(quo), QPolynomial(rem)

    def exact_div(self, other: "QPolynomial") -> "QPolynomial":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError(f"{self} is not divisible by {other}")
        return q

    def __eq__(self, other) -> bool:
        return isinstance(other, QPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"QPolynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "q" if i == 1 else f"q^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += sign + body
        return out


ZERO = QPolynomial()
ONE = QPolynomial([1])
Q = QPolynomial([0, 1])


def constant(value: Coefficient) -> QPolynomial:
    return QPolynomial([value])


def poly_arith(a: QPolynomial, b: QPolynomial, op: str) -> QPolynomial:
    """Dispatch by name for callers that carry the operation as data;
    everything else should just use the operators."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def q_power(k: int) -> QPolynomial:
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    return QPolynomial([0] * k + [1])


def one_minus_q_power(k: int) -> QPolynomial:
    """The polynomial 1 - q^k (zero when k == 0)."""
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    if k == 0:
        return ZERO
    return QPolynomial([1] + [0] * (k - 1) + [-1])


def poly_gcd(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    """Monic greatest common divisor by the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, divmod(a, b)[1]
    if a.is_zero():
        return ZERO
    return a * (1 / a.leading_coefficient())


@lru_cache(maxsize=None)
def q_integer(n: int) -> QPolynomial:
    """1 + q + ... + q^(n-1); the zero polynomial when n == 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return QPolynomial([1] * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPolynomial:
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = ONE
    for i in range(1, n + 1):
        out = out * q_integer(i)
    return out


def poly_coeff_strings(p: QPolynomial) -> list[str]:
    """Serialization used by the CLI: ascending coefficients, "a" or "a/b"."""
    return [str(c) for c in p.coeffs]


def poly_from_coeff_strings(strings: Iterable[str]) -> QPolynomial:
    return QPolynomial(Fraction(s) for s in strings)


class QRationalFunction:
    """Reduced fraction of two q-polynomials with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = self._as_poly(num)
        den = ONE if den is None else self._as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        g = poly_gcd(num, den)
        num = num.exact_div(g)
        den = den.exact_div(g)
        lead = den.leading_coefficient()
        if lead != 1:
            inv = 1 / lead
            num = num * inv
            den = den * inv
        self.num, self.den = num, den

    @staticmethod
    def _as_poly(value) -> QPolynomial:
        if isinstance(value, QPolynomial):
            return value
        if isinstance(value, (int, Fraction)):
            return constant(value)
        raise TypeError(f"cannot interpret {type(value).__name__} as a polynomial")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: "QRationalFunction") -> "QRationalFunction":
        if not isinstance(other, QRationalFunction):
            return NotImplemented
        return QRationalFunction(self.num * other.den + other.num * self.den,
                                 self.den * other.den)

    def __sub__(self, other: "QRationalFunction") -> "QRationalFunction":
        if not isinstance(other, QRationalFunction):
            return NotImplemented
        return QRationalFunction(self.num * other.den - other.num * self.den,
                                 self.den * other.den)

    def __neg__(self) -> "QRationalFunction":
        return QRationalFunction(-self.num, self.den)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QRationalFunction(self.num * other, self.den)
        if not isinstance(other, QRationalFunction):
            return NotImplemented
        return QRationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: "QRationalFunction") -> "QRationalFunction":
        if not isinstance(other, QRationalFunction):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return QRationalFunction(self.num * other.den, self.den * other.num)

    def evaluate(self, value: Coefficient) -> Fraction:
        bottom = self.den.evaluate(value)
        if bottom == 0:
            raise ZeroDivisionError(f"denominator vanishes at q={value}")
        return self.num.evaluate(value) / bottom

    def __eq__(self, other) -> bool:
        return (isinstance(other, QRationalFunction)
                and self.num == other.num and self.den == other.den)

    def __hash__(self) -> int:
        return hash((self.num.coeffs, self.den.coeffs))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"QRationalFunction({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"


RF_ZERO = QRationalFunction(ZERO)
RF_ONE = QRationalFunction(ONE)


def ratfun_reduce(num: QPolynomial, den: QPolynomial) -> QRationalFunction:
    """Reduced canonical fraction num/den; rejects a zero denominator."""
    return QRationalFunction(num, den)


def _as_ratfun(value) -> QRationalFunction:
    if isinstance(value, QRationalFunction):
        return value
    if isinstance(value, (QPolynomial, int, Fraction)):
        return QRationalFunction(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational function")


class TruncatedSeries:
    """Power series in z known through z^order, coefficients rational in q."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = tuple(_as_ratfun(c) for c in coeffs)
        if len(cs) != order + 1:
            raise ValueError(f"expected {order + 1} coefficients, got {len(cs)}")
        self.order = order
        self.coeffs = cs

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, [RF_ONE] + [RF_ZERO] * order)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self.order != other.order:
            raise ValueError("series orders differ")
        out = []
        for n in range(self.order + 1):
            acc = RF_ZERO
            for k in range(n + 1):
                acc = acc + self.coeffs[k] * other.coeffs[n - k]
            out.append(acc)
        return TruncatedSeries(self.order, out)

    def __eq__(self, other) -> bool:
        return (isinstance(other, TruncatedSeries)
                and self.order == other.order and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order}, coeffs={[str(c) for c in self.coeffs]})"


def series_reciprocal(s: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse modulo z^(order+1).

    Triangular recurrence: t_0 = 1/s_0 and
    t_n = -(1/s_0) * sum_{k=1..n} s_k t_{n-k}.
    """
    c0 = s.coeffs[0]
    if c0.is_zero():
        raise ValueError("series with zero constant term has no reciprocal")
    inv0 = RF_ONE / c0
    out = [inv0]
    for n in range(1, s.order + 1):
        acc = RF_ZERO
        for k in range(1, n + 1):
            acc = acc + s.coeffs[k] * out[n - k]
        out.append(-(inv0 * acc))
    return TruncatedSeries(s.order, out)
