"""Catalogue of conjugation identities for the spinor sequence, and a verifier.

Every identity has a left side built from the conjugation operators, the
right side as it is stated in the literature, and the right side obtained
by expanding the component formulas ``phi(n) = [V(n) + V(n+3) j; -V(n+1) + V(n+2) j]``.
The verifier evaluates all three exactly and classifies each
(identity, family) pair:

``PASS``        left side equals the stated right side for every n checked
``DISCREPANT``  the stated form fails but the expanded form holds
``ERROR``       the left side disagrees with the expansion (an implementation bug)

``KNOWN_DISCREPANCIES`` lists the identities whose stated forms are known to
be wrong in general; :func:`unexpected` flags anything that deviates from it.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Callable

from .families import concrete_families
from .gtn import SequenceParams, terms
from .ring import HyperbolicNumber
from .spinor import ConjugationKind, HSpinor, conjugate, _from_window

STAR, BAR, TILDE, CHECK = (ConjugationKind.STAR, ConjugationKind.BAR,
                           ConjugationKind.TILDE, ConjugationKind.CHECK)

def _sp(a, b, c, d) -> HSpinor:
    return HSpinor(HyperbolicNumber(a, b), HyperbolicNumber(c, d))


def _j(x: HSpinor) -> HSpinor:
    return HyperbolicNumber(0, 1) * x


def _C(x: HSpinor) -> HSpinor:
    return x.apply(((0, 1), (-1, 0)))


@dataclass(frozen=True)
class Identity:
    theorem: str
    index: int
    label: str
    lhs: Callable[[HSpinor, Callable], HSpinor]
    stated: Callable[[Callable], HSpinor]
    expanded: Callable[[Callable], HSpinor]
    stated_text: str
    expanded_text: str
    min_n: int = 0


def _conj(phi, kind):
    return conjugate(phi, kind)


# ``V`` below is the offset accessor V(k) = V(n+k).
CATALOGUE: tuple[Identity, ...] = (
    # relations among the conjugates
    Identity("conjugate-relations", 1, "bar = C check",
             lambda p, c: c(BAR), lambda V: _C(_conj(_from_window(V(0), V(1), V(2), V(3)), CHECK)),
             lambda V: _sp(V(0), -V(3), -V(1), -V(2)),
             "C check(phi_n)", "[V_n - V_{n+3} j; -V_{n+1} - V_{n+2} j]"),
    Identity("conjugate-relations", 2, "check = -j tilde",
             lambda p, c: c(CHECK), lambda V: -_j(_conj(_from_window(V(0), V(1), V(2), V(3)), TILDE)),
             lambda V: _sp(V(1), V(2), V(0), -V(3)),
             "-j tilde(phi_n)", "[V_{n+1} + V_{n+2} j; V_n - V_{n+3} j]"),
    Identity("conjugate-relations", 3, "bar = -j C tilde",
             lambda p, c: c(BAR), lambda V: -_j(_C(_conj(_from_window(V(0), V(1), V(2), V(3)), TILDE))),
             lambda V: _sp(V(0), -V(3), -V(1), -V(2)),
             "-j C tilde(phi_n)", "[V_n - V_{n+3} j; -V_{n+1} - V_{n+2} j]"),
    # phi combined with its own star and bar
    Identity("self-star-bar", 1, "phi + star",
             lambda p, c: p + c(STAR), lambda V: _sp(2 * V(0), 0, 0, 0),
             lambda V: _sp(2 * V(0), 0, 0, 0),
             "[2V_n; 0]", "[2V_n; 0]"),
    Identity("self-star-bar", 2, "phi - star",
             lambda p, c: p - c(STAR), lambda V: _sp(0, V(3), -V(1), V(2)) * 2,
             lambda V: _sp(0, 2 * V(3), -2 * V(1), 2 * V(2)),
             "2[V_{n+3} j; -V_{n+1} + V_{n+2} j]", "2[V_{n+3} j; -V_{n+1} + V_{n+2} j]"),
    Identity("self-star-bar", 3, "phi + bar",
             lambda p, c: p + c(BAR), lambda V: _sp(V(0), 0, -V(1), 0) * 2,
             lambda V: _sp(2 * V(0), 0, -2 * V(1), 0),
             "2[V_n; -V_{n+1}]", "2[V_n; -V_{n+1}]"),
    Identity("self-star-bar", 4, "phi - bar",
             lambda p, c: p - c(BAR), lambda V: _j(_sp(V(3), 0, V(2), 0)) * 2,
             lambda V: _sp(0, 2 * V(3), 0, 2 * V(2)),
             "2j[V_{n+3}; V_{n+2}]", "2j[V_{n+3}; V_{n+2}]"),
    # phi combined with tilde and check
    Identity("self-tilde-check", 1, "phi + tilde",
             lambda p, c: p + c(TILDE), lambda V: _sp(-V(-1), V(0), V(0), V(-1)),
             lambda V: _sp(V(0) - V(2), V(3) - V(1), V(3) - V(1), V(2) - V(0)),
             "[-V_{n-1} + V_n j; V_n + V_{n-1} j]",
             "[V_n - V_{n+2} + (V_{n+3} - V_{n+1}) j; V_{n+3} - V_{n+1} + (V_{n+2} - V_n) j]",
             min_n=1),
    Identity("self-tilde-check", 2, "phi + tilde",
             lambda p, c: p + c(TILDE),
             lambda V: _sp(V(0) + V(2), V(3) + V(1), -V(1) - V(3), V(2) + V(0)),
             lambda V: _sp(V(0) - V(2), V(3) - V(1), V(3) - V(1), V(2) - V(0)),
             "[V_n + V_{n+2} + (V_{n+3} + V_{n+1}) j; -V_{n+1} - V_{n+3} + (V_{n+2} + V_n) j]",
             "[V_n - V_{n+2} + (V_{n+3} - V_{n+1}) j; V_{n+3} - V_{n+1} + (V_{n+2} - V_n) j]"
             " (the stated right side is phi - tilde)"),
    Identity("self-tilde-check", 3, "phi + check",
             lambda p, c: p + c(CHECK),
             lambda V: _sp(V(3), V(5), -V(1) + V(0), V(2) - V(3)),
             lambda V: _sp(V(0) + V(1), V(3) + V(2), V(0) - V(1), V(2) - V(3)),
             "[V_{n+3} + V_{n+5} j; -V_{n+1} + V_n + (V_{n+2} - V_{n+3}) j]",
             "[V_n + V_{n+1} + (V_{n+3} + V_{n+2}) j; -V_{n+1} + V_n + (V_{n+2} - V_{n+3}) j]"),
    Identity("self-tilde-check", 4, "phi - check",
             lambda p, c: p - c(CHECK),
             lambda V: _sp(V(0) - V(1), V(3) - V(2), -V(3), V(5)),
             lambda V: _sp(V(0) - V(1), V(3) - V(2), -V(1) - V(0), V(2) + V(3)),
             "[V_n - V_{n+1} + (V_{n+3} - V_{n+2}) j; -V_{n+3} + V_{n+5} j]",
             "[V_n - V_{n+1} + (V_{n+3} - V_{n+2}) j; -V_{n+1} - V_n + (V_{n+2} + V_{n+3}) j]"),
    # star with bar
    Identity("star-bar", 1, "star + bar",
             lambda p, c: c(STAR) + c(BAR), lambda V: _sp(V(0), -V(3), 0, V(2)) * 2,
             lambda V: _sp(2 * V(0), -2 * V(3), 0, -2 * V(2)),
             "2[V_n - V_{n+3} j; V_{n+2} j]", "2[V_n - V_{n+3} j; -V_{n+2} j]"),
    Identity("star-bar", 2, "star - bar",
             lambda p, c: c(STAR) - c(BAR), lambda V: _sp(0, 0, V(1), 0) * 2,
             lambda V: _sp(0, 0, 2 * V(1), 0),
             "2[0; V_{n+1}]", "2[0; V_{n+1}]"),
    # star with tilde and check
    Identity("star-tilde-check", 1, "star + tilde",
             lambda p, c: c(STAR) + c(TILDE),
             lambda V: _sp(V(0) - V(2), -(V(3) + V(1)), V(1) + V(3), -(V(2) + V(0))),
             lambda V: _sp(V(0) - V(2), -V(3) - V(1), V(1) + V(3), -V(2) - V(0)),
             "[V_n - V_{n+2} - (V_{n+3} + V_{n+1}) j; V_{n+1} + V_{n+3} - (V_{n+2} + V_n) j]",
             "[V_n - V_{n+2} - (V_{n+3} + V_{n+1}) j; V_{n+1} + V_{n+3} - (V_{n+2} + V_n) j]"),
    Identity("star-tilde-check", 2, "star - tilde",
             lambda p, c: c(STAR) - c(TILDE),
             lambda V: _sp(V(0) + V(2), -(V(3) - V(1)), V(1) - V(3), -(V(2) - V(0))),
             lambda V: _sp(V(0) + V(2), V(1) - V(3), V(1) - V(3), V(0) - V(2)),
             "[V_n + V_{n+2} - (V_{n+3} - V_{n+1}) j; V_{n+1} - V_{n+3} - (V_{n+2} - V_n) j]",
             "[V_n + V_{n+2} - (V_{n+3} - V_{n+1}) j; V_{n+1} - V_{n+3} - (V_{n+2} - V_n) j]"),
    Identity("star-tilde-check", 3, "star + check",
             lambda p, c: c(STAR) + c(CHECK),
             lambda V: _sp(V(3), V(5), V(3), -V(5)),
             lambda V: _sp(V(0) + V(1), V(2) - V(3), V(0) + V(1), -V(2) - V(3)),
             "[V_{n+3} + V_{n+5} j; V_{n+3} - V_{n+5} j]",
             "[V_n + V_{n+1} + (V_{n+2} - V_{n+3}) j; V_n + V_{n+1} - (V_{n+2} + V_{n+3}) j]"),
    Identity("star-tilde-check", 4, "star - check",
             lambda p, c: c(STAR) - c(CHECK),
             lambda V: _sp(V(0) - V(1), -(V(3) + V(2)), V(1) - V(0), -(V(3) - V(2))),
             lambda V: _sp(V(0) - V(1), -V(3) - V(2), V(1) - V(0), V(3) - V(2)),
             "[V_n - V_{n+1} - (V_{n+3} + V_{n+2}) j; V_{n+1} - V_n - (V_{n+3} - V_{n+2}) j]",
             "[V_n - V_{n+1} - (V_{n+3} + V_{n+2}) j; V_{n+1} - V_n + (V_{n+3} - V_{n+2}) j]"),
    # bar, tilde and check with one another
    Identity("bar-tilde-check", 1, "bar + tilde",
             lambda p, c: c(BAR) + c(TILDE),
             lambda V: _sp(-V(-1), -(V(3) + V(1)), -V(0), -(V(2) + V(0))),
             lambda V: _sp(V(0) - V(2), -V(3) - V(1), V(3) - V(1), -V(2) - V(0)),
             "[-V_{n-1} - (V_{n+3} + V_{n+1}) j; -V_n - (V_{n+2} + V_n) j]",
             "[V_n - V_{n+2} - (V_{n+3} + V_{n+1}) j; V_{n+3} - V_{n+1} - (V_{n+2} + V_n) j]",
             min_n=1),
    Identity("bar-tilde-check", 2, "bar - tilde",
             lambda p, c: c(BAR) - c(TILDE),
             lambda V: _sp(V(0) + V(2), -V(0), -V(1) - V(3), -V(-1)),
             lambda V: _sp(V(0) + V(2), V(1) - V(3), -V(1) - V(3), V(0) - V(2)),
             "[V_n + V_{n+2} - V_n j; -V_{n+1} - V_{n+3} - V_{n-1} j]",
             "[V_n + V_{n+2} + (V_{n+1} - V_{n+3}) j; -V_{n+1} - V_{n+3} + (V_n - V_{n+2}) j]",
             min_n=1),
    Identity("bar-tilde-check", 3, "tilde + check",
             lambda p, c: c(TILDE) + c(CHECK),
             lambda V: _sp(V(1) - V(2), V(2) - V(1), V(3) + V(0), -V(1)),
             lambda V: _sp(V(1) - V(2), V(2) - V(1), V(3) + V(0), -V(0) - V(3)),
             "[V_{n+1} - V_{n+2} + (V_{n+2} - V_{n+1}) j; V_{n+3} + V_n - V_{n+1} j]",
             "[V_{n+1} - V_{n+2} + (V_{n+2} - V_{n+1}) j; V_{n+3} + V_n - (V_n + V_{n+3}) j]"),
    Identity("bar-tilde-check", 4, "tilde - check",
             lambda p, c: c(TILDE) - c(CHECK),
             lambda V: _sp(-V(4), -V(4), V(1), -V(1)),
             lambda V: _sp(-V(2) - V(1), -V(1) - V(2), V(3) - V(0), V(3) - V(0)),
             "[-V_{n+4} - V_{n+4} j; V_{n+1} - V_{n+1} j]",
             "[-V_{n+1} - V_{n+2} - (V_{n+1} + V_{n+2}) j; V_{n+3} - V_n + (V_{n+3} - V_n) j]"),
    Identity("bar-tilde-check", 5, "bar - check",
             lambda p, c: c(BAR) - c(CHECK),
             lambda V: _sp(-V(4), -V(4), V(1), -V(1)),
             lambda V: _sp(V(0) - V(1), -V(3) - V(2), -V(1) - V(0), V(3) - V(2)),
             "[-V_{n+4} - V_{n+4} j; V_{n+1} - V_{n+1} j]",
             "[V_n - V_{n+1} - (V_{n+3} + V_{n+2}) j; -V_{n+1} - V_n + (V_{n+3} - V_{n+2}) j]"),
    Identity("bar-tilde-check", 6, "bar + check",
             lambda p, c: c(BAR) + c(CHECK),
             lambda V: _sp(-V(2) + V(1), V(2) - V(1), V(3) + V(0), -(V(0) + V(3))),
             lambda V: _sp(V(0) + V(1), V(2) - V(3), V(0) - V(1), -V(2) - V(3)),
             "[-V_{n+2} + V_{n+1} + (V_{n+2} - V_{n+1}) j; V_{n+3} + V_n - (V_n + V_{n+3}) j]",
             "[V_n + V_{n+1} + (V_{n+2} - V_{n+3}) j; V_n - V_{n+1} - (V_{n+2} + V_{n+3}) j]"),
)

#: Identities whose stated right side does not follow from the component formulas.
KNOWN_DISCREPANCIES = frozenset({
    ("self-tilde-check", 1), ("self-tilde-check", 2),
    ("self-tilde-check", 3), ("self-tilde-check", 4),
    ("star-bar", 1),
    ("star-tilde-check", 3), ("star-tilde-check", 4),
    ("bar-tilde-check", 1), ("bar-tilde-check", 2), ("bar-tilde-check", 3),
    ("bar-tilde-check", 4), ("bar-tilde-check", 5), ("bar-tilde-check", 6),
})

THEOREMS = tuple(dict.fromkeys(i.theorem for i in CATALOGUE))


@dataclass
class ReportEntry:
    theorem: str
    identity_index: int
    family: str
    n_max: int
    status: str
    detail: str

    def to_json(self):
        return asdict(self)


def check_identity(identity: Identity, params: SequenceParams, n_max: int,
                   family: str = "") -> ReportEntry:
    # One extra term on the left for V(n-1) and five ahead for V(n+5).
    v = terms(params, n_max + 6)
    first_bad = None
    for n in range(identity.min_n, n_max + 1):
        V = (lambda base: (lambda k: v[base + k]))(n)
        phi = _from_window(V(0), V(1), V(2), V(3))
        lhs = identity.lhs(phi, lambda kind, _p=phi: conjugate(_p, kind))
        expanded = identity.expanded(V)
        if lhs != expanded:
            return ReportEntry(identity.theorem, identity.index, family, n_max, "ERROR",
                               f"n={n}: operators give {lhs}, expansion gives {expanded}")
        stated = identity.stated(V)
        if first_bad is None and lhs != stated:
            first_bad = (n, lhs, stated)
    if first_bad is None:
        return ReportEntry(identity.theorem, identity.index, family, n_max, "PASS",
                           f"{identity.label} = {identity.stated_text}")
    n, lhs, stated = first_bad
    return ReportEntry(identity.theorem, identity.index, family, n_max, "DISCREPANT",
                       f"{identity.label}: stated {identity.stated_text} fails at n={n} "
                       f"(stated {stated}, actual {lhs}); correct form {identity.expanded_text}")


def verify_conjugation_identities(params: SequenceParams, n_max: int, family: str = ""):
    """Check every catalogued identity on one sequence for ``n <= n_max``."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    return [check_identity(i, params, n_max, family) for i in CATALOGUE]


def verify_all(n_max: int = 50, families=None):
    """Run the catalogue over the given (default: all concrete) families.

    Results are ordered by family name, then theorem, then index.
    """
    fams = sorted(families if families is not None else concrete_families(), key=lambda f: f.name)
    report = []
    for fam in fams:
        report.extend(verify_conjugation_identities(fam.params, n_max, fam.name))
    return report


def unexpected(report):
    """Entries that contradict :data:`KNOWN_DISCREPANCIES`.

    That is: any ERROR; any DISCREPANT identity not in the manifest; and,
    for identities in the manifest, a synthetic entry when none of the
    checked families shows the discrepancy (the stated form started holding).
    """
    bad = [e for e in report if e.status == "ERROR"]
    bad += [e for e in report
            if e.status == "DISCREPANT" and (e.theorem, e.identity_index) not in KNOWN_DISCREPANCIES]
    seen = {(e.theorem, e.identity_index) for e in report if e.status == "DISCREPANT"}
    checked = {(e.theorem, e.identity_index) for e in report}
    for key in sorted(KNOWN_DISCREPANCIES & checked - seen):
        n_max = max(e.n_max for e in report if (e.theorem, e.identity_index) == key)
        bad.append(ReportEntry(key[0], key[1], "*", n_max, "PASS",
                               "listed as a known discrepancy but holds on every family checked"))
    return bad


def report_json(report) -> str:
    return json.dumps([e.to_json() for e in report], indent=2)
