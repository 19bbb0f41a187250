"""Polynomial hyperbolic spinors.

Coefficients ``r(x), s(x), t(x)`` and initial values ``V0(x), V1(x), V2(x)``
are rational polynomials; ``V(n)(x)`` follows the usual third-order
recurrence and the spinor is assembled from four consecutive terms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionViolated
from .gtn import SequenceParams
from .ring import HyperbolicNumber, Polynomial, poly_eval
from .spinor import HSpinor


def _poly(p):
    return p if isinstance(p, Polynomial) else Polynomial(p)


@dataclass(frozen=True)
class PolySequenceParams:
    a: Polynomial
    b: Polynomial
    c: Polynomial
    r: Polynomial
    s: Polynomial
    t: Polynomial

    def __post_init__(self):
        for name in ("a", "b", "c", "r", "s", "t"):
            object.__setattr__(self, name, _poly(getattr(self, name)))

    def evaluate(self, x0) -> SequenceParams:
        return SequenceParams(*(poly_eval(getattr(self, k), x0) for k in "abcrst"))

    @classmethod
    def constant(cls, params: SequenceParams) -> "PolySequenceParams":
        return cls(*(Polynomial([getattr(params, k)]) for k in "abcrst"))

    def to_json(self):
        return {k: getattr(self, k).to_json() for k in "abcrst"}

    @classmethod
    def from_json(cls, obj):
        return cls(*(Polynomial.from_json(obj[k]) for k in "abcrst"))


@dataclass(frozen=True)
class PolyHSpinor:
    """``[c1re + c1j j; c2re + c2j j]`` with polynomial entries."""

    c1re: Polynomial
    c1j: Polynomial
    c2re: Polynomial
    c2j: Polynomial

    def evaluate(self, x0) -> HSpinor:
        return HSpinor(HyperbolicNumber(poly_eval(self.c1re, x0), poly_eval(self.c1j, x0)),
                       HyperbolicNumber(poly_eval(self.c2re, x0), poly_eval(self.c2j, x0)))

    def to_json(self):
        return {k: getattr(self, k).to_json() for k in ("c1re", "c1j", "c2re", "c2j")}

    @classmethod
    def from_json(cls, obj):
        return cls(*(Polynomial.from_json(obj[k]) for k in ("c1re", "c1j", "c2re", "c2j")))


def poly_terms(params: PolySequenceParams, count: int) -> list[Polynomial]:
    out = [params.a, params.b, params.c][:count]
    while len(out) < count:
        out.append(params.r * out[-1] + params.s * out[-2] + params.t * out[-3])
    return out


def poly_spinor_term(params: PolySequenceParams, n: int) -> PolyHSpinor:
    """``[V(n) + V(n+3) j; -V(n+1) + V(n+2) j]`` over ``Q[x]``."""
    if not isinstance(n, int) or n < 0:
        raise PreconditionViolated(f"index must be a non-negative integer, got {n!r}")
    v = poly_terms(params, n + 4)
    return PolyHSpinor(v[n], v[n + 3], -v[n + 1], v[n + 2])
