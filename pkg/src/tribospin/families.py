"""Registry of named generalized Tribonacci families.

The registry ships as ``families.json`` next to this module. Each record
is ``{"name", "group", "a", "b", "c", "r", "s", "t"}`` with rationals as
``"p/q"`` strings; the nine group-level entries carry ``"generic"`` in
place of the initial values and need them supplied explicitly.
"""

from __future__ import annotations

import difflib
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .errors import NotFound, PreconditionViolated
from .gtn import SequenceParams
from .ring import format_rational

GENERIC = "generic"

_ABBREVIATIONS = {"m": "modified", "a": "adjusted", "t": "third order", "g": "generalized"}


def fold_name(name: str) -> str:
    """Case-insensitive key with hyphens, underscores and dots folded to spaces.

    Single-letter abbreviations ``M. A. T. G.`` expand to modified,
    adjusted, third-order and generalized.
    """
    words = re.split(r"[\s\-_.]+", name.strip().lower())
    words = [_ABBREVIATIONS.get(w, w) for w in words if w]
    return " ".join(words)


@dataclass(frozen=True)
class FamilyDescriptor:
    name: str
    params: SequenceParams
    group: str
    generic: bool = False
    aliases: tuple[str, ...] = field(default=())

    def instantiate(self, a=None, b=None, c=None) -> SequenceParams:
        """Parameters for this family, optionally overriding the initial values.

        Generic families require all three of ``a, b, c``.
        """
        given = (a, b, c)
        if self.generic and any(x is None for x in given):
            raise PreconditionViolated(
                f"family {self.name!r} is generic; supply the initial values V0, V1, V2")
        base = self.params
        vals = [base.initials[i] if x is None else x for i, x in enumerate(given)]
        return base.with_initials(*vals)

    def to_json(self):
        p = self.params
        if self.generic:
            initials = {"a": GENERIC, "b": GENERIC, "c": GENERIC}
        else:
            initials = {k: format_rational(getattr(p, k)) for k in "abc"}
        return {"name": self.name, "group": self.group, **initials,
                **{k: format_rational(getattr(p, k)) for k in "rst"}}

    @classmethod
    def from_json(cls, obj):
        generic = obj["a"] == GENERIC
        initials = [Fraction(0)] * 3 if generic else [Fraction(obj[k]) for k in "abc"]
        params = SequenceParams(*initials, *(Fraction(obj[k]) for k in "rst"))
        return cls(obj["name"], params, obj["group"], generic, tuple(obj.get("aliases", ())))


@lru_cache(maxsize=None)
def registry() -> tuple[FamilyDescriptor, ...]:
    """All families, generic group entries first, in table order."""
    text = resources.files(__package__).joinpath("families.json").read_text(encoding="utf-8")
    return tuple(FamilyDescriptor.from_json(obj) for obj in json.loads(text))


def concrete_families() -> tuple[FamilyDescriptor, ...]:
    """Families with fixed initial values."""
    return tuple(f for f in registry() if not f.generic)


@lru_cache(maxsize=None)
def _index():
    idx = {}
    for fam in registry():
        for key in (fam.name, *fam.aliases):
            idx[fold_name(key)] = fam
    return idx


def family_lookup(name: str) -> FamilyDescriptor:
    key = fold_name(name)
    try:
        return _index()[key]
    except KeyError:
        close = difflib.get_close_matches(key, list(_index()), n=3, cutoff=0.5)
        raise NotFound(name, [_index()[k].name for k in close]) from None


def registry_json() -> str:
    """The registry as a JSON document (aliases omitted)."""
    return json.dumps([f.to_json() for f in registry()], indent=2)
