"""Free-group words and their Magnus expansion truncated at degree 2.

The expansion sends ``x_i`` to ``1 + h_i`` and ``x_i^-1`` to the geometric
series ``1 - h_i + h_i^2 - ...`` in non-commuting variables ``h_i``.  Only
the terms of total degree at most 2 are ever kept.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class GroupWord:
    """A word in the letters ``x_i^{+1}``, ``x_i^{-1}``.

    ``letters`` is a tuple of ``(variable, exponent)`` pairs.  No free
    reduction is performed; ``x1 x1^-1`` stays a two-letter word.
    """

    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        letters = tuple((int(i), int(e)) for i, e in self.letters)
        for i, e in letters:
            if i < 1:
                raise ValueError(f"variable index must be positive, got {i}")
            if e not in (1, -1):
                raise ValueError(f"exponent must be +1 or -1, got {e}")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def exponent_sum(self, i: int) -> int:
        return sum(e for v, e in self.letters if v == i)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"x{i}^{'+1' if e > 0 else '-1'}" for i, e in self.letters)


class TruncatedSeries:
    """Element of Z<<h_1, ..., h_n>> modulo terms of degree 3 and higher.

    Coefficients live in a dict keyed by monomials written as tuples of
    variable indices: ``()`` for the constant, ``(i,)`` for ``h_i`` and
    ``(i, j)`` for the ordered product ``h_i h_j``.  Zero coefficients are
    never stored, so ``==`` compares series exactly.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            self._coeffs = {}
            return
        clean = {}
        for mono, c in coeffs.items():
            mono = tuple(mono)
            if len(mono) > 2:
                continue
            if c:
                clean[mono] = clean.get(mono, 0) + int(c)
        self._coeffs = {m: c for m, c in clean.items() if c}

    @classmethod
    def _trusted(cls, coeffs):
        # coeffs: tuple-keyed, degree <= 2, may contain zeros
        out = cls.__new__(cls)
        out._coeffs = {m: c for m, c in coeffs.items() if c}
        return out

    @classmethod
    def one(cls) -> TruncatedSeries:
        return cls({(): 1})

    @classmethod
    def factor(cls, i: int, e: int) -> TruncatedSeries:
        """Image of a single letter ``x_i^e``."""
        if e > 0:
            return cls({(): 1, (i,): 1})
        return cls({(): 1, (i,): -1, (i, i): 1})

    @property
    def constant(self) -> int:
        return self._coeffs.get((), 0)

    @property
    def linear(self) -> dict[int, int]:
        return {m[0]: c for m, c in self._coeffs.items() if len(m) == 1}

    @property
    def quadratic(self) -> dict[tuple[int, int], int]:
        return {m: c for m, c in self._coeffs.items() if len(m) == 2}

    def coefficient(self, *mono: int) -> int:
        return self._coeffs.get(tuple(mono), 0)

    def as_dict(self) -> dict[tuple[int, ...], int]:
        """Nonzero coefficients keyed by monomial, in no particular order."""
        return dict(self._coeffs)

    def items(self):
        return sorted(self._coeffs.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        out = {}
        for m1, c1 in self._coeffs.items():
            for m2, c2 in other._coeffs.items():
                if len(m1) + len(m2) <= 2:
                    m = m1 + m2
                    out[m] = out.get(m, 0) + c1 * c2
        return TruncatedSeries(out)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            out[m] = out.get(m, 0) + c
        return TruncatedSeries(out)

    def __neg__(self):
        return TruncatedSeries({m: -c for m, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self):
        return f"TruncatedSeries({self})"

    def __str__(self):
        terms = self.items()
        if not terms:
            return "0"
        out = []
        for idx, (mono, c) in enumerate(terms):
            name = "".join(f"h{i}" for i in mono)
            mag = abs(c)
            body = str(mag) if not name else (name if mag == 1 else f"{mag}{name}")
            if idx == 0:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(out)

    def to_json(self):
        return {"".join(f"h{i}" for i in m) or "1": c for m, c in self.items()}


def magnus_expand(word) -> TruncatedSeries:
    """Truncated Magnus expansion of a word.

    Accepts a :class:`GroupWord` or any iterable of ``(variable, exponent)``
    pairs.  The running product is right-multiplied by one letter's series
    at a time and truncated at degree 2 after every step.

    >>> str(magnus_expand([(2, -1), (3, -1), (2, 1), (3, 1)]))
    '1 + h2h3 - h3h2'
    """
    const = 1
    lin = {}
    quad = {}
    for i, e in word:
        # (c + sum l_a h_a + ...) * (1 + e h_i [+ h_i^2 if e = -1])
        for a, la in lin.items():
            quad[a, i] = quad.get((a, i), 0) + e * la
        if e < 0:
            quad[i, i] = quad.get((i, i), 0) + const
        lin[i] = lin.get(i, 0) + e * const
    coeffs = {(): const}
    for a, c in lin.items():
        coeffs[(a,)] = c
    coeffs.update(quad)
    return TruncatedSeries._trusted(coeffs)
