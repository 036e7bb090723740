"""Exact scalars: rational complex numbers and square roots of rationals.

Everything downstream that claims an exact zero test goes through these
two types.  Norms of vectors with rational complex coefficients are
square roots of rationals, so they are kept as their (rational) squares
and compared that way.
"""

from fractions import Fraction
from math import isqrt, sqrt


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("expected an int or Fraction, got %s" % type(x).__name__)


def _as_gaussian(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x, 0)
    return None


class GaussianRational:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    @classmethod
    def coerce(cls, x):
        got = _as_gaussian(x)
        if got is None:
            raise TypeError("cannot coerce %r to GaussianRational" % (x,))
        return got

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def abs2(self):
        "Squared modulus, an exact nonnegative rational."
        return self.re * self.re + self.im * self.im

    def __abs__(self):
        return ExactSqrt(self.abs2())

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __add__(self, other):
        other = _as_gaussian(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gaussian(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _as_gaussian(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = _as_gaussian(other)
        if other is None:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        d = other.abs2()
        if not d:
            raise ZeroDivisionError("division by zero GaussianRational")
        num = self * other.conjugate()
        return GaussianRational(num.re / d, num.im / d)

    def __eq__(self, other):
        other = _as_gaussian(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return "GaussianRational(%s, %s)" % (self.re, self.im)

    def __str__(self):
        if not self.im:
            return str(self.re)
        return "%s%+si" % (self.re, self.im)


def _square_of(other):
    "Square of a nonnegative rational comparand, or None if negative."
    if other < 0:
        return None
    return other * other


class ExactSqrt:
    """The nonnegative real sqrt(q) for an exact rational q >= 0.

    Stored by its square; comparisons against ints, Fractions and other
    ExactSqrt values are exact.
    """

    __slots__ = ("square",)

    def __init__(self, square):
        square = _frac(square)
        if square < 0:
            raise ValueError("square must be nonnegative")
        self.square = square

    def as_fraction(self):
        "The exact rational value, or None if the root is irrational."
        n, d = self.square.numerator, self.square.denominator
        rn, rd = isqrt(n), isqrt(d)
        if rn * rn == n and rd * rd == d:
            return Fraction(rn, rd)
        return None

    def __bool__(self):
        return bool(self.square)

    def __float__(self):
        return sqrt(float(self.square))

    def _cmp(self, other):
        "-1/0/+1 against other, or None if incomparable."
        if isinstance(other, ExactSqrt):
            osq = other.square
        elif isinstance(other, (int, Fraction)):
            if other < 0:
                return 1
            osq = other * other
        else:
            return None
        if self.square == osq:
            return 0
        return -1 if self.square < osq else 1

    def __eq__(self, other):
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c == 0

    def __lt__(self, other):
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c < 0

    def __le__(self, other):
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c >= 0

    def __hash__(self):
        f = self.as_fraction()
        if f is not None:
            return hash(f)
        return hash(("sqrt", self.square))

    def __mul__(self, other):
        if isinstance(other, ExactSqrt):
            return ExactSqrt(self.square * other.square)
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other < 0:
            raise ValueError("cannot scale a nonnegative root by a negative rational")
        return ExactSqrt(self.square * other * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ExactSqrt):
            if not other.square:
                raise ZeroDivisionError
            return ExactSqrt(self.square / other.square)
        other = _frac(other)
        if other <= 0:
            raise ValueError("can only divide by a positive rational")
        return ExactSqrt(self.square / (other * other))

    def __repr__(self):
        return "ExactSqrt(%s)" % (self.square,)

    def __str__(self):
        f = self.as_fraction()
        if f is not None:
            return str(f)
        return "sqrt(%s)" % (self.square,)
