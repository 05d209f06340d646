"""Deciding whether two links admit equivalent C-complexes.

For two components the linking number is a complete obstruction and a
witness pair can be built.  For more components with vanishing linking
numbers the triple linking numbers are a complete obstruction; no witness
is produced in that case.  Without the vanishing hypothesis only the
necessary conditions can be checked.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .core import CComplex
from .equivalence import Verdict, decide_equivalent
from .errors import ComponentCountMismatch, NonvanishingLinking, WrongComponentCount
from .invariants import _mu_bar_value, mu3_all, pairwise_linking
from .moves import make_equivalent_pair


def theorem1_decide(D: CComplex, E: CComplex) -> Verdict:
    """Two-component case: equivalent C-complexes exist iff linking numbers agree."""
    for X in (D, E):
        if X.n != 2:
            raise WrongComponentCount(f"expected 2 components, got {X.n}")
    verdict = make_equivalent_pair(D, E)
    if verdict:
        pair = verdict.witness
        # the witness must stand on its own
        check = decide_equivalent(pair.first, pair.second)
        if not check:
            raise AssertionError(f"witness pair is not equivalent: {check.reason}")
    return verdict


def _require_vanishing(D: CComplex, which: str):
    for i, j in itertools.combinations(range(1, D.n + 1), 2):
        lk = pairwise_linking(D, i, j)
        if lk:
            raise NonvanishingLinking(
                f"{which}: lk({i},{j}) = {lk}; the triple linking criterion needs all "
                "pairwise linking numbers to vanish (use prop_mu123_check instead)",
                which=which, pair=(i, j), value=lk,
            )


def theorem2_decide(D: CComplex, E: CComplex) -> Verdict:
    """Vanishing-linking case: equivalent C-complexes exist iff all mu-bar(ijk) agree."""
    if D.n != E.n:
        raise WrongComponentCount(f"component counts differ: {D.n} vs {E.n}")
    _require_vanishing(D, "first")
    _require_vanishing(E, "second")
    mismatches = [
        (t, a.value, b.value)
        for (t, a), (_, b) in zip(mu3_all(D), mu3_all(E))
        if a.value != b.value
    ]
    if mismatches:
        t, a, b = mismatches[0]
        return Verdict(
            False,
            f"triple linking differs at ({t[0]},{t[1]},{t[2]}): {a} ≠ {b}",
            details={"mismatches": mismatches},
        )
    return Verdict(True, "all triple linking numbers agree")


@dataclass(frozen=True)
class PairCheck:
    pair: tuple[int, int]
    first: int
    second: int

    @property
    def passed(self) -> bool:
        return self.first == self.second


@dataclass(frozen=True)
class TripleCheck:
    triple: tuple[int, int, int]
    first: int
    second: int
    modulus: int

    @property
    def passed(self) -> bool:
        if self.modulus:
            return (self.first - self.second) % self.modulus == 0
        return self.first == self.second


@dataclass(frozen=True)
class ObstructionReport:
    """Outcome of the necessary-condition checks.

    ``obstructed`` means the two links certainly do not admit equivalent
    C-complexes; otherwise nothing is claimed.
    """

    linking: tuple[PairCheck, ...]
    triples: tuple[TripleCheck, ...]

    @property
    def obstructed(self) -> bool:
        return not all(c.passed for c in self.linking + self.triples)

    @property
    def summary(self) -> str:
        return "obstruction found" if self.obstructed else "no obstruction found"

    def failures(self):
        return [c for c in self.linking + self.triples if not c.passed]


def prop_mu123_check(D: CComplex, E: CComplex) -> ObstructionReport:
    """Compare linking numbers exactly and triple linking numbers modulo their gcd.

    The gcd for a triple is taken over the linking numbers of both inputs,
    so the comparison is meaningful even when those differ (in which case
    the linking check already fails).
    """
    if D.n != E.n:
        raise ComponentCountMismatch(f"component counts differ: {D.n} vs {E.n}")
    idx = range(1, D.n + 1)
    linking = tuple(
        PairCheck((i, j), pairwise_linking(D, i, j), pairwise_linking(E, i, j))
        for i, j in itertools.combinations(idx, 2)
    )
    lk = {c.pair: (c.first, c.second) for c in linking}
    triples = []
    for i, j, k in itertools.combinations(idx, 3):
        d = math.gcd(*lk[i, j], *lk[i, k], *lk[j, k])
        a, b = _mu_bar_value(D, i, j, k), _mu_bar_value(E, i, j, k)
        if d:
            a, b = a % d, b % d
        triples.append(TripleCheck((i, j, k), a, b, d))
    return ObstructionReport(linking, tuple(triples))
