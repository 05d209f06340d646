"""Descriptor data model for abstract C-complexes.

A descriptor records, for an ``n``-component C-complex, the genus of every
surface, the signed clasps between surfaces and the claspword read along
each boundary.  Components are numbered from 1.  Basepoints are not stored:
every comparison of claspwords made elsewhere in the package is cyclic.
"""

from __future__ import annotations

import hashlib
import re
from collections.abc import Mapping
from dataclasses import dataclass, field

from .errors import (
    DuplicateIndex,
    DuplicateLabel,
    ExtraOccurrence,
    IndexOutOfRange,
    MalformedDescriptor,
    MissingOccurrence,
    NegativeGenus,
    NonBijective,
    SelfClasp,
    UnknownLabel,
)

LABEL_RE = re.compile(r"[A-Za-z0-9_]+\Z")


def is_label(name) -> bool:
    return isinstance(name, str) and LABEL_RE.match(name) is not None


def sign_char(sign: int) -> str:
    return "+" if sign > 0 else "-"


@dataclass(frozen=True)
class SignedClasp:
    label: str
    sign: int
    ends: tuple[int, int]

    def partner(self, k: int) -> int:
        """The component at the other end of the clasp, seen from ``k``."""
        a, b = self.ends
        if k == a:
            return b
        if k == b:
            return a
        raise ValueError(f"clasp {self.label} does not touch component {k}")

    def __str__(self):
        return f"{self.label}{sign_char(self.sign)}"


@dataclass(frozen=True)
class CComplex:
    """A validated C-complex descriptor.

    Build one with :func:`validate` (or the text parser); the constructor
    trusts its arguments.  ``clasps`` is kept in order of first appearance
    when reading the words from component 1 upwards, so two descriptors are
    equal exactly when their genus vectors and signed words agree.
    """

    genus: tuple[int, ...]
    clasps: tuple[SignedClasp, ...]
    words: tuple[tuple[str, ...], ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {c.label: c for c in self.clasps})

    @property
    def n(self) -> int:
        return len(self.genus)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(c.label for c in self.clasps)

    def clasp(self, label: str) -> SignedClasp:
        return self._index[label]

    def word(self, k: int) -> tuple[str, ...]:
        """Claspword of component ``k`` (1-based)."""
        check_component(self, k)
        return self.words[k - 1]

    def signed_word(self, k: int) -> tuple[tuple[str, int], ...]:
        return tuple((lab, self._index[lab].sign) for lab in self.word(k))

    def word_str(self, k: int) -> str:
        return " ".join(str(self._index[lab]) for lab in self.word(k))

    def digest(self) -> str:
        """Short content hash, used to tag move records."""
        parts = [str(self.n), ",".join(map(str, self.genus))]
        parts += [self.word_str(k) for k in range(1, self.n + 1)]
        return hashlib.sha256("|".join(parts).encode()).hexdigest()[:16]

    def to_raw(self) -> dict:
        """Plain-data form accepted back by :func:`validate`."""
        return {
            "components": self.n,
            "genus": list(self.genus),
            "clasps": [
                {"label": c.label, "sign": c.sign, "ends": list(c.ends)}
                for c in self.clasps
            ],
            "words": [list(w) for w in self.words],
        }

    def __str__(self):
        words = "; ".join(f"w{k}={self.word_str(k) or '1'}" for k in range(1, self.n + 1))
        return f"CComplex(n={self.n}, genus={self.genus}, {words})"


def make(genus, clasps, words) -> CComplex:
    """Assemble a descriptor from trusted parts, normalizing clasp order."""
    words = tuple(tuple(w) for w in words)
    by_label = {c.label: c for c in clasps}
    ordered = []
    seen = set()
    for w in words:
        for lab in w:
            if lab not in seen:
                seen.add(lab)
                ordered.append(by_label[lab])
    return CComplex(tuple(genus), tuple(ordered), words)


def check_component(D: CComplex, k) -> int:
    if isinstance(k, bool) or not isinstance(k, int) or not 1 <= k <= D.n:
        raise IndexOutOfRange(f"component index {k!r} not in 1..{D.n}")
    return k


def _parse_sign(value, label):
    if value in (1, "+", "+1"):
        return 1
    if value in (-1, "-", "-1"):
        return -1
    raise MalformedDescriptor(f"clasp {label}: sign must be +1 or -1, got {value!r}")


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _raw_clasps(raw):
    entries = raw.get("clasps", [])
    if isinstance(entries, Mapping):
        entries = [dict(v, label=k) for k, v in entries.items()]
    out = []
    for entry in entries:
        if isinstance(entry, SignedClasp):
            out.append((entry.label, entry.sign, entry.ends))
        elif isinstance(entry, Mapping):
            try:
                out.append((entry["label"], entry["sign"], entry["ends"]))
            except KeyError as exc:
                raise MalformedDescriptor(f"clasp entry missing field {exc}") from None
        else:
            try:
                label, sign, ends = entry
            except (TypeError, ValueError):
                raise MalformedDescriptor(f"cannot read clasp entry {entry!r}") from None
            out.append((label, sign, ends))
    return out


def _raw_words(raw, n):
    words = raw.get("words", [])
    if isinstance(words, Mapping):
        out = [[] for _ in range(n)]
        for k, w in words.items():
            k = int(k)
            if not 1 <= k <= n:
                raise MalformedDescriptor(f"word given for component {k}, not in 1..{n}")
            out[k - 1] = w
        words = out
    words = list(words)
    if len(words) != n:
        raise MalformedDescriptor(f"expected {n} words, got {len(words)}")
    result = []
    for k, w in enumerate(words, 1):
        if isinstance(w, str):
            raise MalformedDescriptor(f"word {k} must be a sequence of labels, not a string")
        result.append(list(w))
    return result


def validate(raw) -> CComplex:
    """Check raw descriptor data against the C-complex axioms.

    ``raw`` is a mapping with keys ``components`` (or ``n``), ``genus``,
    ``clasps`` (entries ``{"label", "sign", "ends"}``) and ``words`` (``n``
    lists of labels, component 1 first).  A :class:`CComplex` is returned
    unchanged.  Checks run in a fixed order and the first failure raises.
    """
    if isinstance(raw, CComplex):
        return raw
    if not isinstance(raw, Mapping):
        raise MalformedDescriptor(f"descriptor data must be a mapping, got {type(raw).__name__}")

    n = raw.get("components", raw.get("n"))
    if not _is_int(n) or n < 1:
        raise MalformedDescriptor(f"component count must be a positive integer, got {n!r}")

    genus = list(raw.get("genus", [0] * n))
    if len(genus) != n:
        raise MalformedDescriptor(f"expected {n} genus values, got {len(genus)}")
    for k, g in enumerate(genus, 1):
        if not _is_int(g):
            raise MalformedDescriptor(f"genus of component {k} must be an integer, got {g!r}")
        if g < 0:
            raise NegativeGenus(f"genus of component {k} is negative ({g})")

    clasps = {}
    for label, sign, ends in _raw_clasps(raw):
        if not is_label(label):
            raise MalformedDescriptor(f"invalid clasp label {label!r}")
        if label in clasps:
            raise DuplicateLabel(f"clasp label {label} is used twice")
        sign = _parse_sign(sign, label)
        try:
            a, b = ends
        except (TypeError, ValueError):
            raise MalformedDescriptor(f"clasp {label}: ends must be a pair") from None
        if not (_is_int(a) and _is_int(b)):
            raise MalformedDescriptor(f"clasp {label}: ends must be integers")
        if a == b:
            raise SelfClasp(f"clasp {label} has both ends on component {a}")
        for e in (a, b):
            if not 1 <= e <= n:
                raise MalformedDescriptor(f"clasp {label}: end {e} not in 1..{n}")
        clasps[label] = SignedClasp(label, sign, (min(a, b), max(a, b)))

    words = _raw_words(raw, n)
    for k, w in enumerate(words, 1):
        seen = set()
        for pos, label in enumerate(w, 1):
            if label not in clasps:
                raise UnknownLabel(f"word {k}, letter {pos}: unknown clasp {label!r}")
            if k not in clasps[label].ends:
                raise ExtraOccurrence(
                    f"word {k}, letter {pos}: clasp {label} joins components "
                    f"{clasps[label].ends}, not {k}"
                )
            if label in seen:
                raise ExtraOccurrence(f"word {k}: clasp {label} appears more than once")
            seen.add(label)
    for c in clasps.values():
        for e in c.ends:
            if c.label not in words[e - 1]:
                raise MissingOccurrence(f"clasp {c.label} is missing from word {e}")

    return make(genus, clasps.values(), words)


def relabel(D: CComplex, mapping: Mapping[str, str]) -> CComplex:
    """Rename clasps; signs, ends, genera and letter order are untouched."""
    mapping = dict(mapping)
    if set(mapping) != set(D.labels):
        missing = sorted(set(D.labels) - set(mapping))
        extra = sorted(set(mapping) - set(D.labels))
        raise NonBijective(f"relabeling must cover exactly the clasp labels (missing {missing}, extra {extra})")
    images = list(mapping.values())
    if len(set(images)) != len(images):
        raise NonBijective("relabeling is not injective")
    for name in images:
        if not is_label(name):
            raise NonBijective(f"invalid target label {name!r}")
    clasps = [SignedClasp(mapping[c.label], c.sign, c.ends) for c in D.clasps]
    words = [[mapping[lab] for lab in w] for w in D.words]
    return make(D.genus, clasps, words)


def rotate(word, s: int):
    """Cyclic left rotation: position ``s`` becomes the first letter."""
    if not word:
        return tuple(word)
    s %= len(word)
    return tuple(word[s:]) + tuple(word[:s])


def cyclic_shift(D: CComplex, k: int, s: int) -> CComplex:
    """Move the basepoint of component ``k`` forward by ``s`` letters."""
    check_component(D, k)
    words = list(D.words)
    words[k - 1] = rotate(words[k - 1], s)
    return make(D.genus, D.clasps, words)


def check_indices(D: CComplex, S) -> tuple[int, ...]:
    S = tuple(S)
    for k in S:
        check_component(D, k)
    if len(set(S)) != len(S):
        raise DuplicateIndex(f"repeated component index in {S}")
    return S


def sublink(D: CComplex, S) -> CComplex:
    """Restrict to the components listed in ``S``, renumbered by position."""
    S = check_indices(D, S)
    position = {k: p for p, k in enumerate(S, 1)}
    kept = [
        SignedClasp(c.label, c.sign, tuple(sorted(position[e] for e in c.ends)))
        for c in D.clasps
        if c.ends[0] in position and c.ends[1] in position
    ]
    keep = {c.label for c in kept}
    words = [[lab for lab in D.words[k - 1] if lab in keep] for k in S]
    return make([D.genus[k - 1] for k in S], kept, words)


@dataclass(frozen=True)
class MoveRecord:
    kind: str
    params: tuple
    before: str
    after: str

    def param(self, key):
        return dict(self.params)[key]

    def __str__(self):
        parts = ["move", self.kind]
        parts += [f"{k}={_fmt_param(v)}" for k, v in self.params]
        parts += [f"before={self.before}", f"after={self.after}"]
        return " ".join(parts)


def _fmt_param(v):
    if isinstance(v, tuple) and v and isinstance(v[0], tuple):
        return ",".join(f"{a}:{b}" for a, b in v)
    if isinstance(v, tuple):
        return ",".join(map(str, v))
    return str(v)


@dataclass(frozen=True)
class MoveTranscript:
    records: tuple[MoveRecord, ...] = ()

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def __add__(self, other: MoveTranscript) -> MoveTranscript:
        return MoveTranscript(self.records + other.records)

    def __str__(self):
        return "\n".join(map(str, self.records))

    def to_json(self):
        return [
            {"kind": r.kind, "params": {k: _json_param(v) for k, v in r.params},
             "before": r.before, "after": r.after}
            for r in self.records
        ]


def _json_param(v):
    if isinstance(v, tuple) and v and isinstance(v[0], tuple):
        return dict(v)
    if isinstance(v, tuple):
        return list(v)
    return v
