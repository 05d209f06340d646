"""Line-oriented text format for descriptors.

::

    ccomplex v1
    components 3
    genus 0 0 0
    word 1: c1- c3- c2+ c4+
    word 2: c1- c2+
    word 3: c3- c4+

``#`` starts a comment.  Missing ``word`` lines mean empty words and a
missing ``genus`` line means all genera are zero.  The ends of a clasp are
the two words it occurs in.
"""

from __future__ import annotations

import re

from .core import CComplex, sign_char, validate
from .errors import (
    ExtraOccurrence,
    FormatSyntaxError,
    InconsistentSign,
    MissingOccurrence,
    NegativeGenus,
    SelfClasp,
)

HEADER = "ccomplex v1"
_INT = re.compile(r"-?\d+\Z")
_LETTER = re.compile(r"([A-Za-z0-9_]+)([+-])\Z")
_WORD = re.compile(r"word\s+(\S+?)\s*:(.*)\Z")
_TOKEN = re.compile(r"\S+")


def _significant_lines(text):
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].rstrip()
        if body.strip():
            yield lineno, body


def _tokens(body, offset=0):
    return [(m.group(), m.start() + offset + 1) for m in _TOKEN.finditer(body)]


def _expect_int(tok, col, lineno, what):
    if not _INT.match(tok):
        raise FormatSyntaxError(f"expected integer {what}, got {tok!r}", lineno, col)
    return int(tok)


def parse(text: str) -> CComplex:
    """Parse one descriptor.  Errors carry line and column numbers."""
    lines = list(_significant_lines(text))
    if not lines:
        raise FormatSyntaxError("empty input; expected header 'ccomplex v1'", 1, 1)

    lineno, body = lines[0]
    if body.split() != HEADER.split():
        raise FormatSyntaxError(f"expected header {HEADER!r}, got {body.strip()!r}", lineno, 1)

    if len(lines) < 2:
        raise FormatSyntaxError("missing 'components <n>' line", lineno + 1, 1)
    lineno, body = lines[1]
    toks = _tokens(body)
    if toks[0][0] != "components" or len(toks) != 2:
        raise FormatSyntaxError("expected 'components <n>'", lineno, toks[0][1])
    n = _expect_int(*toks[1], lineno, "component count")
    if n < 1:
        raise FormatSyntaxError(f"component count must be positive, got {n}", lineno, toks[1][1])

    rest = lines[2:]
    genus = [0] * n
    if rest and _tokens(rest[0][1])[0][0] == "genus":
        lineno, body = rest[0]
        rest = rest[1:]
        toks = _tokens(body)[1:]
        if len(toks) != n:
            raise FormatSyntaxError(f"expected {n} genus values, got {len(toks)}", lineno, 1)
        genus = [_expect_int(t, c, lineno, "genus") for t, c in toks]
        for (t, c), g in zip(toks, genus):
            if g < 0:
                raise NegativeGenus(f"negative genus {g}", lineno, c)

    words = [[] for _ in range(n)]
    seen_words = {}
    occurrences = {}
    for lineno, body in rest:
        stripped = body.lstrip()
        lead = len(body) - len(stripped)
        m = _WORD.match(stripped)
        if not m:
            tok, col = _tokens(body)[0]
            raise FormatSyntaxError(f"unexpected line starting with {tok!r}", lineno, col)
        k = _expect_int(m.group(1), lead + m.start(1) + 1, lineno, "component index")
        if not 1 <= k <= n:
            raise FormatSyntaxError(f"component {k} not in 1..{n}", lineno, lead + m.start(1) + 1)
        if k in seen_words:
            raise FormatSyntaxError(f"word {k} already given on line {seen_words[k]}", lineno, lead + 1)
        seen_words[k] = lineno
        for tok, col in _tokens(m.group(2), lead + m.start(2)):
            lm = _LETTER.match(tok)
            if not lm:
                raise FormatSyntaxError(f"bad letter {tok!r}; expected <label>+ or <label>-", lineno, col)
            label, sign = lm.group(1), 1 if lm.group(2) == "+" else -1
            occ = occurrences.setdefault(label, [])
            for k0, s0, l0, c0 in occ:
                if k0 == k:
                    raise SelfClasp(f"clasp {label} appears twice in word {k}", lineno, col)
                if s0 != sign:
                    raise InconsistentSign(
                        f"clasp {label} has sign {sign_char(s0)} on line {l0} but {sign_char(sign)} here",
                        lineno, col,
                    )
            if len(occ) == 2:
                raise ExtraOccurrence(f"clasp {label} appears in more than two words", lineno, col)
            occ.append((k, sign, lineno, col))
            words[k - 1].append(label)

    clasps = []
    for label, occ in occurrences.items():
        if len(occ) == 1:
            k, _, l0, c0 = occ[0]
            raise MissingOccurrence(f"clasp {label} appears only in word {k}", l0, c0)
        (a, sign, _, _), (b, _, _, _) = occ
        clasps.append({"label": label, "sign": sign, "ends": (a, b)})

    return validate({"components": n, "genus": genus, "clasps": clasps, "words": words})


def serialize(D: CComplex) -> str:
    lines = [HEADER, f"components {D.n}", "genus " + " ".join(map(str, D.genus))]
    for k in range(1, D.n + 1):
        if D.words[k - 1]:
            lines.append(f"word {k}: {D.word_str(k)}")
    return "\n".join(lines) + "\n"


def load(path) -> CComplex:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def dump(D: CComplex, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(D))
