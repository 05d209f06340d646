"""C-complex modifications and the two-component normal form.

Three moves are supported: transposing two adjacent clasps that share a
partner surface (the partner's genus goes up by one), inserting a pair of
canceling clasps, and stabilizing a surface.  Every move returns a new
descriptor; transcripts record moves together with before/after digests so
they can be replayed and checked.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    CComplex,
    MoveRecord,
    MoveTranscript,
    SignedClasp,
    check_component,
    cyclic_shift,
    make,
    relabel,
)
from .equivalence import EquivalenceCertificate, Verdict, decide_equivalent
from .errors import DifferentPartners, EqualIndices, PositionOutOfRange, WrongComponentCount
from .invariants import pairwise_linking


def transpose(D: CComplex, i: int, p: int) -> CComplex:
    """Swap the letters at cyclic positions ``p`` and ``p+1`` (1-based) of word ``i``.

    Both clasps must run to the same component ``j``; the genus of ``j``
    increases by one.
    """
    check_component(D, i)
    w = list(D.words[i - 1])
    L = len(w)
    if L < 2:
        raise PositionOutOfRange(f"word {i} has {L} letter(s); nothing to transpose")
    if isinstance(p, bool) or not isinstance(p, int) or not 1 <= p <= L:
        raise PositionOutOfRange(f"position {p!r} not in 1..{L}")
    a, b = p - 1, p % L
    ja = D.clasp(w[a]).partner(i)
    jb = D.clasp(w[b]).partner(i)
    if ja != jb:
        raise DifferentPartners(
            f"clasps {w[a]} and {w[b]} run to components {ja} and {jb}; "
            "only clasps with a common partner can be transposed"
        )
    w[a], w[b] = w[b], w[a]
    words = list(D.words)
    words[i - 1] = tuple(w)
    genus = list(D.genus)
    genus[ja - 1] += 1
    return make(genus, D.clasps, words)


def fresh_labels(D: CComplex, count: int, prefix: str = "d") -> list[str]:
    taken = set(D.labels)
    out = []
    for idx in itertools.count(1):
        if len(out) == count:
            return out
        name = f"{prefix}{idx}"
        if name not in taken:
            out.append(name)


def add_cancel_pair(D: CComplex, i: int, j: int, p: int, q: int, labels=None) -> CComplex:
    """Insert two new clasps between ``i`` and ``j``, signs ``+`` then ``-``.

    ``p`` and ``q`` count the letters preceding the inserted pair in words
    ``i`` and ``j`` respectively (0 inserts at the front).
    """
    check_component(D, i)
    check_component(D, j)
    if i == j:
        raise EqualIndices(f"canceling clasps need two different components, got {i} twice")
    wi, wj = D.words[i - 1], D.words[j - 1]
    for name, pos, w in (("p", p, wi), ("q", q, wj)):
        if isinstance(pos, bool) or not isinstance(pos, int) or not 0 <= pos <= len(w):
            raise PositionOutOfRange(f"insertion position {name}={pos!r} not in 0..{len(w)}")
    pos_label, neg_label = labels if labels is not None else fresh_labels(D, 2)
    if pos_label in D.labels or neg_label in D.labels or pos_label == neg_label:
        raise ValueError(f"labels {pos_label}, {neg_label} are not fresh")
    ends = (min(i, j), max(i, j))
    new = [SignedClasp(pos_label, 1, ends), SignedClasp(neg_label, -1, ends)]
    words = list(D.words)
    words[i - 1] = wi[:p] + (pos_label, neg_label) + wi[p:]
    words[j - 1] = wj[:q] + (pos_label, neg_label) + wj[q:]
    return make(D.genus, list(D.clasps) + new, words)


def stabilize(D: CComplex, i: int) -> CComplex:
    check_component(D, i)
    genus = list(D.genus)
    genus[i - 1] += 1
    return make(genus, D.clasps, D.words)


def apply_move(D: CComplex, kind: str, **params) -> tuple[CComplex, MoveRecord]:
    """Apply one move by name and return the result with its record."""
    if kind == "transpose":
        out = transpose(D, params["component"], params["position"])
        rec = (("component", params["component"]), ("position", params["position"]))
    elif kind == "cancel_pair":
        i, j, p, q = (params[k] for k in ("i", "j", "p", "q"))
        labels = tuple(params.get("labels") or fresh_labels(D, 2))
        out = add_cancel_pair(D, i, j, p, q, labels)
        rec = (("i", i), ("j", j), ("p", p), ("q", q), ("labels", labels))
    elif kind == "stabilize":
        out = stabilize(D, params["component"])
        rec = (("component", params["component"]),)
    elif kind == "relabel":
        mapping = dict(params["map"])
        out = relabel(D, mapping)
        rec = (("map", tuple(sorted(mapping.items()))),)
    elif kind == "shift":
        out = cyclic_shift(D, params["component"], params["offset"])
        rec = (("component", params["component"]), ("offset", params["offset"]))
    else:
        raise ValueError(f"unknown move kind {kind!r}")
    return out, MoveRecord(kind, rec, D.digest(), out.digest())


def replay(D: CComplex, transcript: MoveTranscript) -> CComplex:
    """Re-apply a transcript, checking every recorded digest on the way."""
    for step, rec in enumerate(transcript, 1):
        if rec.before != D.digest():
            raise ValueError(f"step {step}: descriptor digest {D.digest()} != recorded {rec.before}")
        D, again = apply_move(D, rec.kind, **dict(rec.params))
        if again.after != rec.after:
            raise ValueError(f"step {step}: replay produced {again.after}, recorded {rec.after}")
    return D


class _Recorder:
    def __init__(self, D):
        self.D = D
        self.records = []

    def __call__(self, kind, **params):
        self.D, rec = apply_move(self.D, kind, **params)
        self.records.append(rec)

    @property
    def transcript(self):
        return MoveTranscript(tuple(self.records))


def is_canonical_2comp(D: CComplex) -> bool:
    """Both words equal as label sequences and read ``(+)^m (-)^(k-m)``."""
    if D.n != 2 or D.words[0] != D.words[1]:
        return False
    signs = [D.clasp(lab).sign for lab in D.words[0]]
    return signs == sorted(signs, reverse=True)


def _sort_word(rec: _Recorder, k: int, key):
    """Insertion sort of word ``k`` by adjacent (non-wrapping) transpositions."""
    w = list(rec.D.words[k - 1])
    for end in range(1, len(w)):
        pos = end
        while pos > 0 and key(w[pos - 1]) > key(w[pos]):
            rec("transpose", component=k, position=pos)
            w[pos - 1], w[pos] = w[pos], w[pos - 1]
            pos -= 1
    assert tuple(w) == rec.D.words[k - 1]


def canonicalize_2comp(D: CComplex) -> tuple[CComplex, MoveTranscript]:
    """Bring a 2-component descriptor to the form ``c1+ ... cm+ c(m+1)- ... ck-`` in both words.

    Sorting word 1 by sign costs one genus on surface 2 per swap, sorting
    word 2 into the order of word 1 costs one genus on surface 1 per swap.
    A descriptor already in that shape is returned untouched.
    """
    if D.n != 2:
        raise WrongComponentCount(f"expected 2 components, got {D.n}")
    if is_canonical_2comp(D):
        return D, MoveTranscript()
    rec = _Recorder(D)
    _sort_word(rec, 1, key=lambda lab: -rec.D.clasp(lab).sign)
    mapping = {lab: f"c{idx}" for idx, lab in enumerate(rec.D.words[0], 1)}
    if any(k != v for k, v in mapping.items()):
        rec("relabel", map=mapping)
    order = {lab: idx for idx, lab in enumerate(rec.D.words[0])}
    _sort_word(rec, 2, key=order.__getitem__)
    return rec.D, rec.transcript


@dataclass(frozen=True)
class EquivalentPair:
    first: CComplex
    second: CComplex
    first_moves: MoveTranscript
    second_moves: MoveTranscript
    certificate: EquivalenceCertificate


def _positive_count(D: CComplex) -> int:
    return sum(1 for c in D.clasps if c.sign > 0)


def make_equivalent_pair(D: CComplex, E: CComplex) -> Verdict:
    """Modify two 2-component descriptors with equal linking number until equivalent.

    Both are canonicalized, the one with fewer positive clasps receives
    canceling pairs between its positive and negative blocks, and genera
    are equalized by stabilizing.
    """
    for X in (D, E):
        if X.n != 2:
            raise WrongComponentCount(f"expected 2 components, got {X.n}")
    lk_d, lk_e = pairwise_linking(D, 1, 2), pairwise_linking(E, 1, 2)
    if lk_d != lk_e:
        return Verdict(False, f"linking numbers differ: {lk_d} vs {lk_e}",
                       details={"lk": (lk_d, lk_e)})

    D1, td = canonicalize_2comp(D)
    E1, te = canonicalize_2comp(E)
    rd, re_ = _Recorder(D1), _Recorder(E1)
    while _positive_count(rd.D) != _positive_count(re_.D):
        r = rd if _positive_count(rd.D) < _positive_count(re_.D) else re_
        m = _positive_count(r.D)
        r("cancel_pair", i=1, j=2, p=m, q=m)
    for k in (1, 2):
        gd, ge = rd.D.genus[k - 1], re_.D.genus[k - 1]
        r = rd if gd < ge else re_
        for _ in range(abs(gd - ge)):
            r("stabilize", component=k)

    check = decide_equivalent(rd.D, re_.D)
    if not check:
        raise AssertionError(f"construction failed to produce equivalent descriptors: {check.reason}")
    pair = EquivalentPair(rd.D, re_.D, td + rd.transcript, te + re_.transcript, check.witness)
    return Verdict(True, witness=pair)
