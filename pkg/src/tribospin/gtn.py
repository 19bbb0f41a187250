"""Generalized Tribonacci sequences ``V(n) = r V(n-1) + s V(n-2) + t V(n-3)``.

Exact paths (recurrence, companion-matrix powers, determinants, sum
formulas) work over the rationals. The Binet form needs the roots of
``x^3 - r x^2 - s x - t`` and is evaluated in complex doubles.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionViolated, RepeatedRoots, ZeroDenominator
from .linalg import bareiss_det, mat_pow
from .ring import format_rational, to_rational

#: Relative separation below which two characteristic roots count as equal.
ROOT_SEPARATION = 1e-8


@dataclass(frozen=True)
class SequenceParams:
    """Initial values ``V0=a, V1=b, V2=c`` and coefficients ``r, s, t``."""

    a: Fraction
    b: Fraction
    c: Fraction
    r: Fraction
    s: Fraction
    t: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "r", "s", "t"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))

    @classmethod
    def parse(cls, text: str) -> "SequenceParams":
        """Parse ``"a,b,c,r,s,t"`` or ``"a,b,c;r,s,t"``."""
        parts = [p.strip() for p in text.replace(";", ",").split(",") if p.strip()]
        if len(parts) != 6:
            raise ValueError(f"expected six values a,b,c,r,s,t; got {text!r}")
        return cls(*(Fraction(p) for p in parts))

    @property
    def initials(self):
        return (self.a, self.b, self.c)

    @property
    def coefficients(self):
        return (self.r, self.s, self.t)

    def with_initials(self, a, b, c) -> "SequenceParams":
        return SequenceParams(a, b, c, self.r, self.s, self.t)

    def companion(self):
        """The S-matrix ``[[r, s, t], [1, 0, 0], [0, 1, 0]]``."""
        one, zero = Fraction(1), Fraction(0)
        return [[self.r, self.s, self.t], [one, zero, zero], [zero, one, zero]]

    def __str__(self):
        vals = ",".join(format_rational(x) for x in self.initials)
        coeffs = ",".join(format_rational(x) for x in self.coefficients)
        return f"V({vals};{coeffs})"


def _check_index(n):
    if not isinstance(n, int) or n < 0:
        raise PreconditionViolated(f"index must be a non-negative integer, got {n!r}")


def terms(params: SequenceParams, count: int) -> list[Fraction]:
    """First ``count`` terms ``V0 .. V(count-1)``."""
    if _integral(params):
        # Plain ints are an order of magnitude cheaper than Fractions here.
        out = [int(x) for x in params.initials[:count]]
        r, s, t = (int(x) for x in params.coefficients)
        while len(out) < count:
            out.append(r * out[-1] + s * out[-2] + t * out[-3])
        return [Fraction(x) for x in out]
    out = list(params.initials[:count])
    r, s, t = params.coefficients
    while len(out) < count:
        out.append(r * out[-1] + s * out[-2] + t * out[-3])
    return out


def _integral(params: SequenceParams) -> bool:
    return all(x.denominator == 1 for x in (*params.initials, *params.coefficients))


def term(params: SequenceParams, n: int) -> Fraction:
    """Exact ``V(n)`` by iterating the recurrence."""
    _check_index(n)
    x, y, z = params.initials
    if n < 3:
        return (x, y, z)[n]
    r, s, t = params.coefficients
    if _integral(params):
        x, y, z, r, s, t = (int(v) for v in (x, y, z, r, s, t))
    for _ in range(n - 2):
        x, y, z = y, z, r * z + s * y + t * x
    return Fraction(z)


def term_by_matrix(params: SequenceParams, n: int) -> Fraction:
    """``V(n)`` as the top entry of ``S^(n-2) (V2, V1, V0)^T``; needs ``n >= 2``."""
    _check_index(n)
    if n < 2:
        raise PreconditionViolated("term_by_matrix needs n >= 2")
    p = mat_pow(params.companion(), n - 2)
    a, b, c = params.initials
    return p[0][0] * c + p[0][1] * b + p[0][2] * a


# -- characteristic roots and Binet ---------------------------------------------------

_OMEGA = complex(-0.5, 3 ** 0.5 / 2)


@dataclass(frozen=True)
class CharacteristicRoots:
    """Roots of ``x^3 - r x^2 - s x - t`` via Cardano.

    ``xi`` and ``gamma`` are the two cube roots combined with the
    primitive cube root of unity ``epsilon``; ``upsilon`` is the
    discriminant-like radicand.
    """

    sigma1: complex
    sigma2: complex
    sigma3: complex
    xi: complex
    gamma: complex
    epsilon: complex
    upsilon: complex
    distinct: bool

    @property
    def roots(self):
        return (self.sigma1, self.sigma2, self.sigma3)


def _cbrt(z: complex) -> complex:
    if z == 0:
        return 0j
    return cmath.exp(cmath.log(z) / 3)


def _newton(x, r, s, t):
    f = ((x - r) * x - s) * x - t
    df = (3 * x - 2 * r) * x - s
    return x if df == 0 else x - f / df


def characteristic_roots(params: SequenceParams) -> CharacteristicRoots:
    r, s, t = params.coefficients
    # Radicands are computed exactly, then rounded once.
    half_q = r ** 3 / 27 + r * s / 6 + t / 2
    upsilon = (r ** 3 * t / 27 - r ** 2 * s ** 2 / 108 + r * s * t / 6
               - s ** 3 / 27 + t ** 2 / 4)
    p3 = (s + r ** 2 / 3) / 3  # the product xi*gamma must equal this
    sq = cmath.sqrt(complex(upsilon))
    hq = complex(half_q)
    # Take the larger-magnitude radicand for xi to avoid cancellation.
    if abs(hq - sq) > abs(hq + sq):
        sq = -sq
    xi = _cbrt(hq + sq)
    if xi == 0:
        gamma = _cbrt(hq - sq)
    else:
        # Pick the cube root of (q - sqrt(upsilon)) consistent with xi*gamma = p/3.
        g0 = _cbrt(hq - sq)
        target = complex(p3)
        candidates = (g0, g0 * _OMEGA, g0 * _OMEGA ** 2) if g0 != 0 else (target / xi,)
        gamma = min(candidates, key=lambda g: abs(xi * g - target))
    eps = _OMEGA
    shift = complex(r) / 3
    raw = (shift + xi + gamma,
           shift + eps * xi + eps ** 2 * gamma,
           shift + eps ** 2 * xi + eps * gamma)
    fr, fs, ft = complex(r), complex(s), complex(t)
    roots = tuple(_newton(x, fr, fs, ft) for x in raw)
    scale = max(1.0, max(abs(x) for x in roots))
    gap = min(abs(roots[0] - roots[1]), abs(roots[0] - roots[2]), abs(roots[1] - roots[2]))
    return CharacteristicRoots(*roots, xi=xi, gamma=gamma, epsilon=eps,
                               upsilon=complex(upsilon), distinct=gap > ROOT_SEPARATION * scale)


@dataclass(frozen=True)
class BinetWeights:
    phi1: complex
    phi2: complex
    phi3: complex

    def __iter__(self):
        return iter((self.phi1, self.phi2, self.phi3))


def binet_weights(params: SequenceParams, roots: CharacteristicRoots | None = None) -> BinetWeights:
    """``Phi_i = c - (sum of the other two roots) b + (their product) a``."""
    roots = roots or characteristic_roots(params)
    s1, s2, s3 = roots.roots
    a, b, c = (complex(x) for x in params.initials)
    return BinetWeights(c - (s2 + s3) * b + s2 * s3 * a,
                        c - (s1 + s3) * b + s1 * s3 * a,
                        c - (s1 + s2) * b + s1 * s2 * a)


def binet_coefficients(params: SequenceParams):
    """Return ``(roots, k)`` with ``V(n) = sum k_i * sigma_i**n``.

    ``k_i = Phi_i / prod_{j != i} (sigma_i - sigma_j)``. Raises
    :class:`RepeatedRoots` when the roots are not distinct.
    """
    roots = characteristic_roots(params)
    if not roots.distinct:
        raise RepeatedRoots(f"characteristic roots of {params} are not distinct: {roots.roots}")
    s1, s2, s3 = roots.roots
    w1, w2, w3 = binet_weights(params, roots)
    k = (w1 / ((s1 - s2) * (s1 - s3)),
         w2 / ((s2 - s1) * (s2 - s3)),
         w3 / ((s3 - s1) * (s3 - s2)))
    return roots, k


def binet_term(params: SequenceParams, n) -> complex:
    """``V(n)`` from the three-term Binet sum (complex double)."""
    roots, k = binet_coefficients(params)
    return sum(ki * si ** n for ki, si in zip(k, roots.roots))


# -- summation formulas ---------------------------------------------------------------

def sum_denominators(params: SequenceParams):
    """``(r+s+t-1, r-s+t+1)``."""
    r, s, t = params.coefficients
    return r + s + t - 1, r - s + t + 1


def sum_first_combination(params: SequenceParams, m: int):
    """Coefficients for ``sum_{n<=m} X(n)`` over any sequence ``X`` obeying the recurrence.

    Returns ``(pairs, denominator)`` where ``pairs`` lists ``(index,
    coefficient)``; the sum equals ``sum(coef * X(index)) / denominator``.
    """
    r, s, t = params.coefficients
    d1, _ = sum_denominators(params)
    if d1 == 0:
        raise ZeroDenominator("r+s+t-1")
    pairs = [(m + 3, 1), (m + 2, 1 - r), (m + 1, 1 - r - s),
             (2, -1), (1, r - 1), (0, r + s - 1)]
    return pairs, d1


def sum_even_combination(params: SequenceParams, m: int):
    """Coefficients for ``sum_{n<=m} X(2n)``; see :func:`sum_first_combination`."""
    r, s, t = params.coefficients
    d = _parity_denominator(params)
    pairs = [(2 * m + 2, 1 - s), (2 * m + 1, t + r * s), (2 * m, t * t + r * t),
             (2, s - 1), (1, -t - r * s), (0, r * r - s * s + r * t + 2 * s - 1)]
    return pairs, d


def sum_odd_combination(params: SequenceParams, m: int):
    """Coefficients for ``sum_{n<=m} X(2n+1)``; see :func:`sum_first_combination`."""
    r, s, t = params.coefficients
    d = _parity_denominator(params)
    pairs = [(2 * m + 2, r + t), (2 * m + 1, s - s * s + t * t + r * t), (2 * m, t - s * t),
             (2, -r - t), (1, -1 + s + r * r + r * t), (0, -t + s * t)]
    return pairs, d


def _parity_denominator(params):
    d1, d2 = sum_denominators(params)
    if d2 == 0:
        raise ZeroDenominator("r-s+t+1")
    if d1 == 0:
        raise ZeroDenominator("r+s+t-1")
    return d1 * d2


def sum_s1_combination(params: SequenceParams, m: int, parity: str):
    """Shorter even/odd sum formulas valid when ``s == 1``."""
    r, s, t = params.coefficients
    if s != 1:
        raise PreconditionViolated(f"the s=1 sum formula needs s == 1, got s = {s}")
    if r + t == 0:
        raise ZeroDenominator("r+t")
    if parity == "even":
        pairs = [(2 * m + 1, 1), (2 * m, t), (1, -1), (0, r)]
    elif parity == "odd":
        pairs = [(2 * m + 2, 1), (2 * m + 1, t), (2, -1), (1, r)]
    else:
        raise PreconditionViolated(f"parity must be 'even' or 'odd', got {parity!r}")
    return pairs, r + t


def _evaluate(pairs, denom, seq):
    total = None
    for idx, coef in pairs:
        piece = seq[idx] * Fraction(coef)
        total = piece if total is None else total + piece
    return total / denom


def _check_m(m):
    if not isinstance(m, int) or m < 0:
        raise PreconditionViolated(f"m must be a non-negative integer, got {m!r}")


def sum_first(params: SequenceParams, m: int) -> Fraction:
    """``V0 + ... + Vm`` from the closed form."""
    _check_m(m)
    pairs, d = sum_first_combination(params, m)
    return _evaluate(pairs, d, terms(params, m + 4))


def sum_even(params: SequenceParams, m: int) -> Fraction:
    """``V0 + V2 + ... + V(2m)`` from the closed form."""
    _check_m(m)
    pairs, d = sum_even_combination(params, m)
    return _evaluate(pairs, d, terms(params, 2 * m + 3))


def sum_odd(params: SequenceParams, m: int) -> Fraction:
    """``V1 + V3 + ... + V(2m+1)`` from the closed form."""
    _check_m(m)
    pairs, d = sum_odd_combination(params, m)
    return _evaluate(pairs, d, terms(params, 2 * m + 3))


def sum_special_s1(params: SequenceParams, m: int, parity: str) -> Fraction:
    _check_m(m)
    pairs, d = sum_s1_combination(params, m, parity)
    return _evaluate(pairs, d, terms(params, 2 * m + 3))


# -- determinant representations ------------------------------------------------------

def hessenberg_band(params: SequenceParams, n: int):
    """Scalar part of the ``(n+1) x (n+1)`` lower-Hessenberg matrix whose
    determinant is the n-th term once the first column is filled with
    ``X0, X1, X2``.

    Column 0 is left as zeros. Rows >= 3 carry ``t, s, r`` ending on the
    diagonal; every superdiagonal entry is ``-1``.
    """
    size = n + 1
    r, s, t = params.coefficients
    m = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size - 1):
        m[i][i + 1] = Fraction(-1)
    for i in range(3, size):
        m[i][i - 2], m[i][i - 1], m[i][i] = t, s, r
    return m


def hessenberg_cofactors(params: SequenceParams, n: int):
    """Weights ``(w0, w1, w2)`` with ``det = w0 X0 + w1 X1 + w2 X2``.

    The determinant is linear in column 0, which is the only column carrying
    sequence values, so each weight is the determinant with that column
    replaced by a unit vector.
    """
    _check_index(n)
    band = hessenberg_band(params, n)
    weights = []
    for k in range(3):
        if k > n:
            weights.append(Fraction(0))
            continue
        m = [row[:] for row in band]
        for i in range(n + 1):
            m[i][0] = Fraction(1 if i == k else 0)
        weights.append(bareiss_det(m))
    return tuple(weights)


def det_term_hessenberg(params: SequenceParams, n: int) -> Fraction:
    """``V(n)`` as the determinant of the Hessenberg matrix with column ``V0, V1, V2``."""
    _check_index(n)
    m = hessenberg_band(params, n)
    for i, v in enumerate(params.initials[: n + 1]):
        m[i][0] = v
    return bareiss_det(m)


def cereceda_matrix(x0, x1, x2, r, s, t, n: int):
    """The ``(n+1) x (n+1)`` banded matrix with entries ``r, t, -s/t, 1/t``
    and ``1/x0`` whose determinant is ``X(n)``.

    Entries may be rationals or hyperbolic numbers. ``t`` and ``x0`` must be
    invertible; the caller checks.
    """
    size = n + 1
    zero = x0 * 0
    m = [[zero] * size for _ in range(size)]

    def put(i, k, v):
        if i < size and k < size:
            m[i][k] = v + zero

    inv_t = 1 / t
    put(0, 0, x0)
    put(0, 1, 1)
    put(1, 0, r * x0 - x1)
    put(1, 1, r)
    put(1, 2, 1 / x0)
    put(2, 1, r * x1 - x2)
    put(2, 2, r)
    put(2, 3, t)
    put(3, 1, x0)
    put(3, 2, -s * inv_t)
    put(3, 3, r)
    put(3, 4, t)
    for i in range(4, size):
        put(i, i - 2, inv_t)
        put(i, i - 1, -s * inv_t)
        put(i, i, r)
        put(i, i + 1, t)
    return m


def det_term_cereceda(params: SequenceParams, n: int) -> Fraction:
    """``V(n)`` from the banded determinant with ``1/t`` and ``1/V0`` entries."""
    _check_index(n)
    r, s, t = params.coefficients
    a, b, c = params.initials
    if t == 0:
        raise ZeroDenominator("t")
    if a == 0:
        raise ZeroDenominator("V0")
    return bareiss_det(cereceda_matrix(a, b, c, r, s, t, n))
