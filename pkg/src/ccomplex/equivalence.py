"""Deciding equivalence of C-complex descriptors.

Two descriptors are equivalent when their genus vectors agree and, after a
single global renaming of clasps that respects signs and end pairs, each
claspword of one is a cyclic rotation of the matching claspword of the
other.  Component indices are matched to themselves.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .core import CComplex, make, rotate, SignedClasp
from .errors import BoundExceeded


@dataclass(frozen=True)
class Verdict:
    """Yes/no answer with a witness (for yes) or a reason (for no)."""

    answer: bool
    reason: str = ""
    witness: object = None
    details: dict = field(default_factory=dict, compare=False)

    def __bool__(self):
        return self.answer

    @property
    def label(self) -> str:
        return "YES" if self.answer else "NO"


@dataclass(frozen=True)
class EquivalenceCertificate:
    """Renaming ``label_map`` plus per-component rotations ``shifts``.

    Applying it to F means: rename every clasp, then rotate word ``k``
    left by ``shifts[k-1]``.  The result equals G letter for letter.
    """

    shifts: tuple[int, ...]
    label_map: tuple[tuple[str, str], ...]

    @property
    def mapping(self) -> dict[str, str]:
        return dict(self.label_map)

    def apply(self, F: CComplex) -> CComplex:
        m = self.mapping
        clasps = [SignedClasp(m[c.label], c.sign, c.ends) for c in F.clasps]
        words = [rotate([m[lab] for lab in w], s) for w, s in zip(F.words, self.shifts)]
        return make(F.genus, clasps, words)

    def inverse(self, F: CComplex) -> EquivalenceCertificate:
        """Certificate taking the image of ``F`` back to ``F``."""
        shifts = tuple((-s) % len(w) if w else 0 for s, w in zip(self.shifts, F.words))
        return EquivalenceCertificate(shifts, tuple(sorted((g, f) for f, g in self.label_map)))

    def then(self, other: EquivalenceCertificate, F: CComplex) -> EquivalenceCertificate:
        """Composite certificate: first ``self`` (defined on ``F``), then ``other``."""
        m1, m2 = self.mapping, other.mapping
        shifts = tuple(
            (s + t) % len(w) if w else 0 for s, t, w in zip(self.shifts, other.shifts, F.words)
        )
        return EquivalenceCertificate(shifts, tuple(sorted((f, m2[g]) for f, g in m1.items())))

    def __str__(self):
        lines = [f"shift {k}={s}" for k, s in enumerate(self.shifts, 1)]
        lines += [f"map {f} -> {g}" for f, g in self.label_map]
        return "\n".join(lines)

    def to_json(self):
        return {"shifts": list(self.shifts), "map": dict(self.label_map)}


def _clasp_profile(D: CComplex) -> Counter:
    return Counter((c.ends, c.sign) for c in D.clasps)


def _necessary_conditions(F: CComplex, G: CComplex):
    if F.n != G.n:
        return f"component counts differ: {F.n} vs {G.n}"
    for k, (a, b) in enumerate(zip(F.genus, G.genus), 1):
        if a != b:
            return f"genus vectors differ at component {k}: {a} vs {b}"
    for k, (a, b) in enumerate(zip(F.words, G.words), 1):
        if len(a) != len(b):
            return f"clasp counts differ at component {k}: {len(a)} vs {len(b)}"
    pf, pg = _clasp_profile(F), _clasp_profile(G)
    if pf != pg:
        for key in sorted(set(pf) | set(pg)):
            if pf[key] != pg[key]:
                (a, b), sign = key
                return (
                    f"signed clasp counts differ for pair ({a},{b}): "
                    f"{pf[key]} vs {pg[key]} clasps of sign {'+' if sign > 0 else '-'}"
                )
    return None


def decide_equivalent(F: CComplex, G: CComplex) -> Verdict:
    """Decide whether ``F`` and ``G`` are equivalent C-complexes.

    Shifts are chosen component by component; each choice pairs labels
    letter by letter, and a clasp already paired forces the shift of its
    second word.  The first solution found is the lexicographically
    least shift tuple, and the shifts determine the label map.
    """
    reason = _necessary_conditions(F, G)
    if reason:
        return Verdict(False, reason)

    n = F.n
    fwords, gwords = F.words, G.words
    gpos = [{lab: t for t, lab in enumerate(w)} for w in gwords]
    fwd: dict[str, str] = {}
    back: dict[str, str] = {}
    shifts = [0] * n

    def attempt(k, s):
        fw, gw = fwords[k], gwords[k]
        L = len(fw)
        added = []
        for t in range(L):
            f, g = fw[(t + s) % L], gw[t]
            cf, cg = F.clasp(f), G.clasp(g)
            if cf.sign != cg.sign or cf.ends != cg.ends:
                break
            if f in fwd:
                if fwd[f] != g:
                    break
                continue
            if g in back:
                break
            fwd[f] = g
            back[g] = f
            added.append(f)
        else:
            return added
        for f in added:
            del back[fwd.pop(f)]
        return None

    def search(k):
        if k == n:
            return True
        fw = fwords[k]
        L = len(fw)
        if L == 0:
            shifts[k] = 0
            return search(k + 1)
        forced = None
        for p, f in enumerate(fw):
            if f in fwd:
                t = gpos[k].get(fwd[f])
                if t is None:
                    return False
                s = (p - t) % L
                if forced is None:
                    forced = s
                elif forced != s:
                    return False
        for s in ([forced] if forced is not None else range(L)):
            added = attempt(k, s)
            if added is None:
                continue
            shifts[k] = s
            if search(k + 1):
                return True
            for f in added:
                del back[fwd.pop(f)]
        return False

    if not search(0):
        return Verdict(False, "exhausted search: no relabeling and rotations match the words")
    cert = EquivalenceCertificate(tuple(shifts), tuple(sorted(fwd.items())))
    return Verdict(True, witness=cert)


def decide_equivalent_bruteforce(F: CComplex, G: CComplex, bound: int = 8) -> Verdict:
    """Reference decider: try every shift tuple in lexicographic order.

    Each tuple pairs labels letter by letter; the pairing must be a
    well-defined bijection preserving signs and end pairs.  A prefix of
    shifts that already fails is not extended.  No other pruning is done.
    """
    total = max(len(F.clasps), len(G.clasps))
    if total > bound:
        raise BoundExceeded(f"{total} clasps exceeds brute-force bound {bound}")
    if F.n != G.n:
        return Verdict(False, f"component counts differ: {F.n} vs {G.n}")
    if F.genus != G.genus:
        return Verdict(False, f"genus vectors differ: {F.genus} vs {G.genus}")
    if any(len(a) != len(b) for a, b in zip(F.words, G.words)) or len(F.clasps) != len(G.clasps):
        return Verdict(False, "exhausted search: word lengths differ")

    kf = {c.label: (c.sign, c.ends) for c in F.clasps}
    kg = {c.label: (c.sign, c.ends) for c in G.clasps}
    rotations = [[rotate(w, s) for s in range(len(w))] or [()] for w in F.words]
    n = F.n

    def extend(k, pairs, used):
        if k == n:
            return (), pairs
        for s, rw in enumerate(rotations[k]):
            new_pairs, new_used = dict(pairs), set(used)
            for f, g in zip(rw, G.words[k]):
                prev = new_pairs.get(f)
                if prev is None:
                    if g in new_used or kf[f] != kg[g]:
                        break
                    new_pairs[f] = g
                    new_used.add(g)
                elif prev != g:
                    break
            else:
                found = extend(k + 1, new_pairs, new_used)
                if found is not None:
                    return (s,) + found[0], found[1]
        return None

    found = extend(0, {}, set())
    if found is None:
        return Verdict(False, "exhausted search: no relabeling and rotations match the words")
    shifts, pairs = found
    return Verdict(True, witness=EquivalenceCertificate(shifts, tuple(sorted(pairs.items()))))
