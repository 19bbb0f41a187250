"""Scalar rings: rationals, hyperbolic (split-complex) numbers, polynomials.

Rationals are :class:`fractions.Fraction`, which already keeps
``gcd(|p|, q) == 1`` and ``q > 0``. Everything else here is built on top
of it so that identities hold bit-exactly. :class:`ComplexHyperbolic`
is the one floating-point carrier, used when closed forms involve the
complex roots of the characteristic cubic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import ZeroDivisor

Rational = Fraction


def to_rational(x) -> Fraction:
    """Coerce ints, Fractions, and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (_RationalABC, str, float)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


def format_rational(x: Fraction) -> str:
    """``"p/q"`` form, or ``"p"`` for integers (the JSON wire format)."""
    return str(to_rational(x))


class _HyperbolicOps:
    # Shared ring arithmetic; subclasses provide _coerce and fields re/jpart.
    __slots__ = ()

    @classmethod
    def _lift(cls, other):
        if isinstance(other, cls):
            return other
        try:
            if isinstance(other, _HyperbolicOps):
                return cls(other.re, other.jpart)
            return cls(other, 0)
        except (TypeError, ValueError):
            return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return type(self)(self.re + other.re, self.jpart + other.jpart)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return type(self)(self.re - other.re, self.jpart - other.jpart)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return type(self)(-self.re, -self.jpart)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.re, self.jpart, other.re, other.jpart
        return type(self)(a * c + b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = type(self)(1, 0), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self):
        """``a + bj -> a - bj``."""
        return type(self)(self.re, -self.jpart)

    def modulus_squared(self):
        """``(a+bj)(a-bj) = a^2 - b^2``; zero exactly on the null cone."""
        return self.re * self.re - self.jpart * self.jpart

    def inverse(self):
        d = self.modulus_squared()
        if d == 0:
            raise ZeroDivisor(f"{self} lies on the null cone and has no inverse")
        return type(self)(self.re / d, -self.jpart / d)

    def idempotent(self):
        """Coordinates ``(a+b, a-b)`` in the basis ``(1+j)/2, (1-j)/2``.

        Multiplication is componentwise in these coordinates.
        """
        return self.re + self.jpart, self.re - self.jpart

    @classmethod
    def from_idempotent(cls, u, v):
        return cls((u + v) / 2, (u - v) / 2)

    def __str__(self):
        sign = "-" if _is_negative(self.jpart) else "+"
        return f"{_fmt(self.re)}{sign}{_fmt(abs(self.jpart))}j"


def _is_negative(x):
    return isinstance(x, (int, Fraction, float)) and x < 0


def _fmt(x):
    if isinstance(x, complex):
        return f"({x.real:.12g}{x.imag:+.12g}i)"
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


@dataclass(frozen=True, slots=True)
class HyperbolicNumber(_HyperbolicOps):
    """Exact hyperbolic number ``re + jpart*j`` with ``j*j = +1``."""

    re: Fraction
    jpart: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", to_rational(self.re))
        object.__setattr__(self, "jpart", to_rational(self.jpart))

    def __eq__(self, other):
        if isinstance(other, HyperbolicNumber):
            return self.re == other.re and self.jpart == other.jpart
        if isinstance(other, (int, Fraction)):
            return self.jpart == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.jpart))

    def is_null(self) -> bool:
        return self.modulus_squared() == 0

    def to_json(self):
        return {"re": format_rational(self.re), "j": format_rational(self.jpart)}

    @classmethod
    def from_json(cls, obj):
        return cls(Fraction(obj["re"]), Fraction(obj["j"]))


J = HyperbolicNumber(0, 1)


@dataclass(frozen=True, slots=True)
class ComplexHyperbolic(_HyperbolicOps):
    """Hyperbolic number with complex double coefficients.

    ``re`` and ``jpart`` are Python complex numbers; the ``i`` of the
    coefficients and the hyperbolic ``j`` commute and never mix.
    """

    re: complex
    jpart: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "re", complex(self.re))
        object.__setattr__(self, "jpart", complex(self.jpart))

    def isclose(self, other, rel=1e-12, abs_tol=0.0) -> bool:
        other = self._lift(other)
        scale = max(abs(self.re), abs(self.jpart), abs(other.re), abs(other.jpart))
        tol = max(rel * scale, abs_tol)
        return abs(self.re - other.re) <= tol and abs(self.jpart - other.jpart) <= tol


def hyp_mul(x: HyperbolicNumber, y: HyperbolicNumber) -> HyperbolicNumber:
    return x * y


def hyp_inverse(x: HyperbolicNumber) -> HyperbolicNumber:
    """Multiplicative inverse; raises :class:`ZeroDivisor` on the null cone."""
    return x.inverse()


class Polynomial:
    """Dense univariate polynomial over the rationals, lowest degree first.

    Trailing zero coefficients are stripped, so the zero polynomial has
    ``coeffs == ()`` and ``degree == -1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, (int, Fraction, str)):
            coeffs = [coeffs]
        cs = [to_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    @staticmethod
    def _lift(other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Polynomial([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for k, b in enumerate(other.coeffs):
                    out[i + k] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        return poly_eval(self, x)

    def to_json(self):
        return [format_rational(c) for c in self.coeffs] or ["0"]

    @classmethod
    def from_json(cls, obj):
        return cls([Fraction(c) for c in obj])


def poly_eval(p: Polynomial, x) -> Fraction:
    """Horner evaluation, exact for rational ``x``."""
    x = to_rational(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc
