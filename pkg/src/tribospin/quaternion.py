"""Split quaternions ``q0 + q1 i + q2 j + q3 k`` over the rationals.

Unit rules: ``i^2 = -1``, ``j^2 = k^2 = +1``, ``ij = -ji = k``,
``jk = -kj = -i``, ``ki = -ik = j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionViolated
from .gtn import SequenceParams, terms
from .ring import format_rational, to_rational


@dataclass(frozen=True)
class SplitQuaternion:
    q0: Fraction
    q1: Fraction = Fraction(0)
    q2: Fraction = Fraction(0)
    q3: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("q0", "q1", "q2", "q3"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))

    @property
    def components(self):
        return (self.q0, self.q1, self.q2, self.q3)

    @property
    def scalar(self):
        return self.q0

    @property
    def vector(self):
        return (self.q1, self.q2, self.q3)

    def __add__(self, other):
        if not isinstance(other, SplitQuaternion):
            return NotImplemented
        return SplitQuaternion(*(x + y for x, y in zip(self.components, other.components)))

    def __sub__(self, other):
        if not isinstance(other, SplitQuaternion):
            return NotImplemented
        return SplitQuaternion(*(x - y for x, y in zip(self.components, other.components)))

    def __neg__(self):
        return SplitQuaternion(*(-x for x in self.components))

    def __mul__(self, other):
        if isinstance(other, SplitQuaternion):
            return sq_mul(self, other)
        try:
            w = to_rational(other)
        except TypeError:
            return NotImplemented
        return SplitQuaternion(*(w * x for x in self.components))

    def __rmul__(self, other):
        try:
            w = to_rational(other)
        except TypeError:
            return NotImplemented
        return SplitQuaternion(*(w * x for x in self.components))

    def conjugate(self):
        return sq_conjugate(self)

    def norm(self):
        return sq_norm(self)

    def __str__(self):
        q0, q1, q2, q3 = (format_rational(x) for x in self.components)
        return f"{q0} + {q1}i + {q2}j + {q3}k"

    def to_json(self):
        return {f"q{i}": format_rational(x) for i, x in enumerate(self.components)}

    @classmethod
    def from_json(cls, obj):
        return cls(*(Fraction(obj[f"q{i}"]) for i in range(4)))


ONE = SplitQuaternion(1)
I = SplitQuaternion(0, 1)
J = SplitQuaternion(0, 0, 1)
K = SplitQuaternion(0, 0, 0, 1)


def sq_mul(q: SplitQuaternion, p: SplitQuaternion) -> SplitQuaternion:
    q0, q1, q2, q3 = q.components
    p0, p1, p2, p3 = p.components
    return SplitQuaternion(
        q0 * p0 - q1 * p1 + q2 * p2 + q3 * p3,
        q0 * p1 + q1 * p0 - q2 * p3 + q3 * p2,
        q0 * p2 - q1 * p3 + q2 * p0 + q3 * p1,
        q0 * p3 + q1 * p2 - q2 * p1 + q3 * p0,
    )


def sq_conjugate(q: SplitQuaternion) -> SplitQuaternion:
    return SplitQuaternion(q.q0, -q.q1, -q.q2, -q.q3)


def sq_norm(q: SplitQuaternion) -> Fraction:
    """``q q* = q0^2 + q1^2 - q2^2 - q3^2``."""
    return q.q0 ** 2 + q.q1 ** 2 - q.q2 ** 2 - q.q3 ** 2


def gtn_quaternion(params: SequenceParams, n: int) -> SplitQuaternion:
    """``V(n) + V(n+1) i + V(n+2) j + V(n+3) k``."""
    if not isinstance(n, int) or n < 0:
        raise PreconditionViolated(f"index must be a non-negative integer, got {n!r}")
    return SplitQuaternion(*terms(params, n + 4)[n:])


def gtn_quaternions(params: SequenceParams, count: int) -> list[SplitQuaternion]:
    v = terms(params, count + 3)
    return [SplitQuaternion(*v[n:n + 4]) for n in range(count)]
