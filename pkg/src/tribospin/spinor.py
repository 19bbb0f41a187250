"""Hyperbolic spinors built from generalized Tribonacci split quaternions.

A split quaternion ``q0 + q1 i + q2 j + q3 k`` maps to the spinor
``[q0 + q3 j; -q1 + q2 j]``. Applied to ``V(n) + V(n+1) i + V(n+2) j + V(n+3) k``
this gives the spinor sequence ``phi(n)``, which obeys the same
third-order recurrence as ``V``.
"""

from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionViolated, ZeroDenominator, ZeroDivisor
from .gtn import (
    SequenceParams,
    _evaluate,
    binet_coefficients,
    cereceda_matrix,
    hessenberg_cofactors,
    sum_even_combination,
    sum_first_combination,
    sum_odd_combination,
    sum_s1_combination,
    terms,
)
from .linalg import hyperbolic_det, mat_pow
from .quaternion import SplitQuaternion
from .ring import ComplexHyperbolic, HyperbolicNumber, Polynomial, to_rational

J = HyperbolicNumber(0, 1)


@dataclass(frozen=True)
class HSpinor:
    """Column ``[c1; c2]`` of two hyperbolic numbers."""

    c1: HyperbolicNumber
    c2: HyperbolicNumber

    def __post_init__(self):
        for name in ("c1", "c2"):
            v = getattr(self, name)
            if not isinstance(v, HyperbolicNumber):
                object.__setattr__(self, name, HyperbolicNumber(v))

    def __add__(self, other):
        if not isinstance(other, HSpinor):
            return NotImplemented
        return HSpinor(self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other):
        if not isinstance(other, HSpinor):
            return NotImplemented
        return HSpinor(self.c1 - other.c1, self.c2 - other.c2)

    def __neg__(self):
        return HSpinor(-self.c1, -self.c2)

    def __mul__(self, k):
        # Scalar (rational or hyperbolic) multiplication; the ring is commutative.
        if isinstance(k, HSpinor):
            return NotImplemented
        try:
            k = k if isinstance(k, HyperbolicNumber) else HyperbolicNumber(k)
        except TypeError:
            return NotImplemented
        return HSpinor(k * self.c1, k * self.c2)

    __rmul__ = __mul__

    def __truediv__(self, k):
        if isinstance(k, HyperbolicNumber):
            inv = k.inverse()
            return HSpinor(self.c1 * inv, self.c2 * inv)
        k = to_rational(k)
        if k == 0:
            raise ZeroDivisionError("spinor divided by zero")
        return HSpinor(self.c1 / k, self.c2 / k)

    def apply(self, matrix) -> "HSpinor":
        """Left-multiply by a 2x2 matrix of scalars."""
        (m00, m01), (m10, m11) = matrix
        return HSpinor(self.c1 * m00 + self.c2 * m01, self.c1 * m10 + self.c2 * m11)

    @property
    def components(self):
        return (self.c1.re, self.c1.jpart, self.c2.re, self.c2.jpart)

    def __str__(self):
        return f"[{self.c1}; {self.c2}]"

    def to_json(self):
        return {"c1": self.c1.to_json(), "c2": self.c2.to_json()}

    @classmethod
    def from_json(cls, obj):
        return cls(HyperbolicNumber.from_json(obj["c1"]), HyperbolicNumber.from_json(obj["c2"]))


ZERO = HSpinor(HyperbolicNumber(0), HyperbolicNumber(0))

#: The constant matrix ``C = [[0, 1], [-1, 0]]`` used to build the conjugations.
C = ((0, 1), (-1, 0))


class ConjugationKind(enum.Enum):
    STAR = "star"    # image of the quaternion conjugate
    BAR = "bar"      # ordinary hyperbolic conjugate
    TILDE = "tilde"  # j C bar
    CHECK = "check"  # -C bar (the mate)


def f_map(q: SplitQuaternion) -> HSpinor:
    """``q0 + q1 i + q2 j + q3 k  ->  [q0 + q3 j; -q1 + q2 j]``."""
    return HSpinor(HyperbolicNumber(q.q0, q.q3), HyperbolicNumber(-q.q1, q.q2))


def f_inverse(x: HSpinor) -> SplitQuaternion:
    """Preimage of a spinor under :func:`f_map` (the map is bijective onto spinors)."""
    return SplitQuaternion(x.c1.re, -x.c2.re, x.c2.jpart, x.c1.jpart)


def conjugate(x: HSpinor, kind: ConjugationKind | str) -> HSpinor:
    """One of the four spinor conjugations.

    * star:  ``[conj(c1); -c2]``, i.e. ``f`` of the quaternion conjugate
    * bar:   ``[conj(c1); conj(c2)]``
    * tilde: ``j C bar(x)``
    * check: ``-C bar(x)``
    """
    kind = ConjugationKind(kind)
    if kind is ConjugationKind.STAR:
        return HSpinor(x.c1.conjugate(), -x.c2)
    bar = HSpinor(x.c1.conjugate(), x.c2.conjugate())
    if kind is ConjugationKind.BAR:
        return bar
    if kind is ConjugationKind.TILDE:
        return J * bar.apply(C)
    return -bar.apply(C)


def spinor_norm(x: HSpinor) -> HyperbolicNumber:
    """``bar(x)^T x``; always real, and equals the split norm of the preimage."""
    return x.c1.conjugate() * x.c1 + x.c2.conjugate() * x.c2


# -- the spinor sequence ----------------------------------------------------------------

def _from_window(v0, v1, v2, v3) -> HSpinor:
    return HSpinor(HyperbolicNumber(v0, v3), HyperbolicNumber(-v1, v2))


def spinor_terms(params: SequenceParams, count: int) -> list[HSpinor]:
    """``phi(0) .. phi(count-1)``."""
    v = terms(params, count + 3)
    return [_from_window(*v[n:n + 4]) for n in range(count)]


def spinor_term(params: SequenceParams, n: int) -> HSpinor:
    """``phi(n) = [V(n) + V(n+3) j; -V(n+1) + V(n+2) j]``."""
    if not isinstance(n, int) or n < 0:
        raise PreconditionViolated(f"index must be a non-negative integer, got {n!r}")
    return _from_window(*terms(params, n + 4)[n:])


def initial_spinors(params: SequenceParams):
    """``(phi0, phi1, phi2)`` written out in ``a, b, c, r, s, t``."""
    a, b, c = params.initials
    r, s, t = params.coefficients
    v3 = r * c + s * b + t * a
    v4 = (r * r + s) * c + (r * s + t) * b + r * t * a
    v5 = (r ** 3 + 2 * r * s + t) * c + (r * r * s + s * s + r * t) * b + (r * r * t + s * t) * a
    return (_from_window(a, b, c, v3), _from_window(b, c, v3, v4), _from_window(c, v3, v4, v5))


def spinor_term_by_matrix(params: SequenceParams, n: int) -> HSpinor:
    """Bottom entry of ``S^n [phi2; phi1; phi0]``."""
    if not isinstance(n, int) or n < 0:
        raise PreconditionViolated(f"index must be a non-negative integer, got {n!r}")
    p0, p1, p2 = spinor_terms(params, 3)
    row = mat_pow(params.companion(), n)[2]
    return p2 * row[0] + p1 * row[1] + p0 * row[2]


# -- generating functions -----------------------------------------------------------------

def gf_numerator(params: SequenceParams):
    """Spinor coefficients of ``phi0 + (phi1 - r phi0) x + (phi2 - r phi1 - s phi0) x^2``."""
    r, s, _ = params.coefficients
    p0, p1, p2 = spinor_terms(params, 3)
    return (p0, p1 - p0 * r, p2 - p1 * r - p0 * s)


def gf_numerator_polynomials(params: SequenceParams):
    """The numerator split into four rational polynomials (c1 re, c1 j, c2 re, c2 j)."""
    coeffs = gf_numerator(params)
    return tuple(Polynomial([sp.components[slot] for sp in coeffs]) for slot in range(4))


def series_times_denominator(params: SequenceParams, N: int) -> list[HSpinor]:
    """Coefficients of ``(1 - r x - s x^2 - t x^3) * sum_{n<=N} phi(n) x^n`` up to degree ``N``.

    Degrees above ``N`` are dropped: they only see the truncation.
    """
    r, s, t = params.coefficients
    phi = spinor_terms(params, N + 1)
    den = (Fraction(1), -r, -s, -t)
    out = []
    for d in range(N + 1):
        acc = ZERO
        for k, w in enumerate(den):
            if d - k >= 0 and w:
                acc = acc + phi[d - k] * w
        out.append(acc)
    return out


def generating_function_check(params: SequenceParams, N: int = 64) -> bool:
    """Exact check that the truncated series times the denominator is the numerator."""
    if N < 3:
        raise PreconditionViolated("N must be at least 3")
    prod = series_times_denominator(params, N)
    num = gf_numerator(params)
    return tuple(prod[:3]) == num and all(c == ZERO for c in prod[3:])


# -- Binet, EGF, PGF ------------------------------------------------------------------------

@dataclass(frozen=True)
class SpinorBinetWeights:
    """``zeta_i = [1 + sigma_i^3 j; (-1 + sigma_i j) sigma_i]`` as complex-hyperbolic pairs."""

    zeta1: tuple[ComplexHyperbolic, ComplexHyperbolic]
    zeta2: tuple[ComplexHyperbolic, ComplexHyperbolic]
    zeta3: tuple[ComplexHyperbolic, ComplexHyperbolic]

    @classmethod
    def from_roots(cls, roots):
        return cls(*(zeta(s) for s in roots))

    def __iter__(self):
        return iter((self.zeta1, self.zeta2, self.zeta3))


def zeta(sigma: complex):
    return (ComplexHyperbolic(1, sigma ** 3), ComplexHyperbolic(-sigma, sigma * sigma))


def _combine(weights, zetas):
    c1 = ComplexHyperbolic(0)
    c2 = ComplexHyperbolic(0)
    for w, (z1, z2) in zip(weights, zetas):
        c1 = c1 + z1 * w
        c2 = c2 + z2 * w
    return c1, c2


def spinor_binet(params: SequenceParams, n):
    """``phi(n)`` as ``sum zeta_i Phi_i sigma_i^n / prod (sigma_i - sigma_j)``."""
    roots, k = binet_coefficients(params)
    zetas = SpinorBinetWeights.from_roots(roots.roots)
    return _combine([ki * si ** n for ki, si in zip(k, roots.roots)], zetas)


def egf_closed_form(params: SequenceParams, y: float):
    """``sum phi(n) y^n / n!`` in closed form: ``sum zeta_i k_i exp(sigma_i y)``."""
    roots, k = binet_coefficients(params)
    zetas = SpinorBinetWeights.from_roots(roots.roots)
    return _combine([ki * cmath.exp(si * y) for ki, si in zip(k, roots.roots)], zetas)


def egf_series(params: SequenceParams, y: float, N: int = 40):
    """The first ``N`` terms of ``sum phi(n) y^n / n!``, evaluated in floats."""
    c1 = ComplexHyperbolic(0)
    c2 = ComplexHyperbolic(0)
    w = 1.0
    for n, ph in enumerate(spinor_terms(params, N)):
        if n:
            w *= y / n
        c1 = c1 + ComplexHyperbolic(float(ph.c1.re), float(ph.c1.jpart)) * w
        c2 = c2 + ComplexHyperbolic(float(ph.c2.re), float(ph.c2.jpart)) * w
    return c1, c2


def pgf_closed_form(params: SequenceParams, y: float):
    f = cmath.exp(-y)
    c1, c2 = egf_closed_form(params, y)
    return c1 * f, c2 * f


def pgf_series(params: SequenceParams, y: float, N: int = 40):
    f = cmath.exp(-y)
    c1, c2 = egf_series(params, y, N)
    return c1 * f, c2 * f


def _agree(lhs, rhs, rel):
    for a, b in zip(lhs, rhs):
        for x, z in ((a.re, b.re), (a.jpart, b.jpart)):
            if abs(x - z) > rel * max(1.0, abs(z)):
                return False
    return True


def egf_check(params: SequenceParams, y_samples=(-1, -0.5, 0.25, 0.5, 1), N: int = 40,
              rel: float = 1e-6) -> bool:
    return all(_agree(egf_series(params, y, N), egf_closed_form(params, y), rel)
               for y in y_samples)


def pgf_check(params: SequenceParams, y_samples=(-1, -0.5, 0.25, 0.5, 1), N: int = 40,
              rel: float = 1e-6) -> bool:
    return all(_agree(pgf_series(params, y, N), pgf_closed_form(params, y), rel)
               for y in y_samples)


# -- sums -------------------------------------------------------------------------------------

def _apply_combination(pairs, denom, v):
    # phi is linear in its window of V, so the combination is taken per component on scalars.
    return _from_window(*(_evaluate(pairs, denom, v[k:]) for k in range(4)))


def spinor_sum_first(params: SequenceParams, m: int) -> HSpinor:
    pairs, d = sum_first_combination(params, m)
    return _apply_combination(pairs, d, terms(params, m + 7))


def spinor_sum_even(params: SequenceParams, m: int) -> HSpinor:
    pairs, d = sum_even_combination(params, m)
    return _apply_combination(pairs, d, terms(params, 2 * m + 6))


def spinor_sum_odd(params: SequenceParams, m: int) -> HSpinor:
    pairs, d = sum_odd_combination(params, m)
    return _apply_combination(pairs, d, terms(params, 2 * m + 6))


def spinor_sum_special_s1(params: SequenceParams, m: int, parity: str) -> HSpinor:
    pairs, d = sum_s1_combination(params, m, parity)
    return _apply_combination(pairs, d, terms(params, 2 * m + 6))


def spinor_sums(params: SequenceParams, m: int):
    """``(sum phi(n), sum phi(2n), sum phi(2n+1))`` over ``n = 0..m``."""
    if not isinstance(m, int) or m < 0:
        raise PreconditionViolated(f"m must be a non-negative integer, got {m!r}")
    return (spinor_sum_first(params, m), spinor_sum_even(params, m), spinor_sum_odd(params, m))


# -- determinants -------------------------------------------------------------------------------

def spinor_det_hessenberg(params: SequenceParams, n: int) -> HSpinor:
    """Cofactor expansion of the Hessenberg determinant along its spinor column."""
    w0, w1, w2 = hessenberg_cofactors(params, n)
    p0, p1, p2 = spinor_terms(params, 3)
    return p0 * w0 + p1 * w1 + p2 * w2


def spinor_det_cereceda(params: SequenceParams, n: int) -> HSpinor:
    """The banded ``1/phi0`` determinant, taken separately for each hyperbolic component.

    Each component of ``phi(n)`` is a hyperbolic-valued sequence obeying the
    scalar recurrence, so the determinant is evaluated over the hyperbolic
    numbers once per component.
    """
    if not isinstance(n, int) or n < 0:
        raise PreconditionViolated(f"index must be a non-negative integer, got {n!r}")
    r, s, t = params.coefficients
    if t == 0:
        raise ZeroDenominator("t")
    p0, p1, p2 = spinor_terms(params, 3)
    out = []
    for name in ("c1", "c2"):
        x0, x1, x2 = (getattr(p, name) for p in (p0, p1, p2))
        if x0.is_null():
            raise ZeroDivisor(f"component {name} of phi0 = {x0} lies on the null cone")
        out.append(hyperbolic_det(cereceda_matrix(x0, x1, x2, r, s, t, n)))
    return HSpinor(*out)
