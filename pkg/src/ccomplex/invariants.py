"""Linking numbers and Milnor triple linking numbers read off claspwords."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .core import CComplex, check_component, check_indices, sublink
from .errors import EqualIndices, IndexOutOfRange, NotStrictlyOrdered, RepeatedIndex
from .magnus import GroupWord, TruncatedSeries, magnus_expand


@dataclass(frozen=True)
class TripleLinking:
    """A triple linking number, well defined modulo ``modulus``.

    ``modulus`` is the gcd of the three pairwise linking numbers (0 when
    they all vanish, in which case ``value`` is an honest integer).
    Otherwise ``value`` is the least nonnegative residue.
    """

    value: int
    modulus: int

    def __str__(self):
        if self.modulus == 0:
            return str(self.value)
        return f"{self.value} (mod {self.modulus})"

    def to_json(self):
        return {"value": self.value, "modulus": self.modulus}


def pairwise_linking(D: CComplex, i: int, j: int) -> int:
    """Signed count of the clasps joining components ``i`` and ``j``."""
    check_component(D, i)
    check_component(D, j)
    if i == j:
        raise EqualIndices(f"linking number needs two different components, got {i} twice")
    ends = (min(i, j), max(i, j))
    return sum(c.sign for c in D.clasps if c.ends == ends)


def linking_matrix(D: CComplex) -> list[list[int]]:
    n = D.n
    mat = [[0] * n for _ in range(n)]
    for c in D.clasps:
        a, b = c.ends
        mat[a - 1][b - 1] += c.sign
        mat[b - 1][a - 1] += c.sign
    return mat


def substitution_word(D: CComplex, k: int, scope=None) -> GroupWord:
    """Replace each letter ``c^e`` of word ``k`` by ``x_j^e``, j the partner.

    Variables are numbered by position inside ``scope`` (all components by
    default).  Letters whose partner lies outside ``scope`` are dropped,
    which is what restricting to the sublink on ``scope`` would do.
    """
    check_component(D, k)
    scope = tuple(range(1, D.n + 1)) if scope is None else check_indices(D, scope)
    if k not in scope:
        raise IndexOutOfRange(f"component {k} is not in scope {scope}")
    position = {c: p for p, c in enumerate(scope, 1)}
    letters = []
    for lab in D.words[k - 1]:
        clasp = D.clasp(lab)
        j = clasp.partner(k)
        if j in position:
            letters.append((position[j], clasp.sign))
    return GroupWord(tuple(letters))


def magnus_series(D: CComplex, k: int, scope=None) -> TruncatedSeries:
    return magnus_expand(substitution_word(D, k, scope))


def _distinct_triple(D, i, j, k):
    for x in (i, j, k):
        check_component(D, x)
    if len({i, j, k}) != 3:
        raise RepeatedIndex(f"indices must be distinct, got ({i}, {j}, {k})")


def epsilon(D: CComplex, i: int, j: int, k: int) -> int:
    """Coefficient of ``h_i h_j`` in the expansion of word ``k``.

    The substitution is taken over the sorted triple ``{i, j, k}``.
    """
    _distinct_triple(D, i, j, k)
    scope = tuple(sorted((i, j, k)))
    pos = {c: p for p, c in enumerate(scope, 1)}
    return magnus_series(D, k, scope).coefficient(pos[i], pos[j])


def _triple_sum(D: CComplex) -> int:
    # D has exactly three components here
    return epsilon(D, 1, 2, 3) + epsilon(D, 3, 1, 2) + epsilon(D, 2, 3, 1)


def _mu_bar_value(D: CComplex, i: int, j: int, k: int) -> int:
    """Unreduced triple linking sum for the sublink taken in the order (i, j, k).

    Any ordering of distinct indices is accepted.  Only the reduction
    modulo the gcd of linking numbers is an invariant; the symmetry
    relations between orderings hold modulo that gcd.
    """
    _distinct_triple(D, i, j, k)
    return _triple_sum(sublink(D, (i, j, k)))


def triple_modulus(D: CComplex, i: int, j: int, k: int) -> int:
    return math.gcd(
        pairwise_linking(D, i, j), pairwise_linking(D, i, k), pairwise_linking(D, j, k)
    )


def mu3(D: CComplex, i: int, j: int, k: int) -> TripleLinking:
    """Milnor's triple linking number of the sublink on ``i < j < k``."""
    _distinct_triple(D, i, j, k)
    if not i < j < k:
        raise NotStrictlyOrdered(f"mu3 expects i < j < k, got ({i}, {j}, {k})")
    value = _mu_bar_value(D, i, j, k)
    d = triple_modulus(D, i, j, k)
    return TripleLinking(value % d if d else value, d)


def mu3_all(D: CComplex) -> list[tuple[tuple[int, int, int], TripleLinking]]:
    return [(t, mu3(D, *t)) for t in itertools.combinations(range(1, D.n + 1), 3)]
