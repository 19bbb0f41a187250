"""Exception hierarchy shared by every module of the package."""


class TribospinError(Exception):
    """Base class for all errors raised by tribospin."""


class MathError(TribospinError, ArithmeticError):
    """A formula is undefined for the given parameters."""


class ZeroDenominator(MathError):
    """A closed form divides by a quantity that vanishes.

    ``factor`` names the vanishing expression, e.g. ``"r+s+t-1"``.
    """

    def __init__(self, factor, message=None):
        self.factor = factor
        super().__init__(message or f"denominator {factor} is zero")


class ZeroDivisor(MathError, ZeroDivisionError):
    """Inversion of a hyperbolic number lying on the null cone (a^2 = b^2)."""


class RepeatedRoots(MathError):
    """The characteristic cubic has (numerically) coincident roots."""


class PreconditionViolated(TribospinError, ValueError):
    """An operation was called outside its domain (other than a zero denominator)."""


class NotFound(TribospinError, LookupError):
    """Unknown family name; ``suggestions`` lists the nearest registry names."""

    def __init__(self, name, suggestions=()):
        self.name = name
        self.suggestions = list(suggestions)
        msg = f"no family named {name!r}"
        if self.suggestions:
            msg += "; did you mean: " + ", ".join(self.suggestions)
        super().__init__(msg)

    def __str__(self):
        return self.args[0]
