"""Seeded random descriptors for fuzzing and property tests."""

from __future__ import annotations

import itertools
import random

from .core import SignedClasp, make


def random_descriptor(n: int, clasp_count: int, seed=None, *, max_genus: int = 0,
                      zero_linking: bool = False):
    """Draw a descriptor with ``clasp_count`` clasps labeled ``c1, c2, ...``.

    End pairs, signs and the order of letters in every word are uniform.
    With ``zero_linking`` clasps come in +/- pairs on the same end pair, so
    every pairwise linking number vanishes (``clasp_count`` must be even).
    Genera are uniform on ``0..max_genus``.  Same arguments, same output.
    """
    if n < 1:
        raise ValueError(f"need at least one component, got {n}")
    if clasp_count < 0:
        raise ValueError("clasp count must be nonnegative")
    if n == 1 and clasp_count:
        raise ValueError("a single component cannot carry clasps")
    if zero_linking and clasp_count % 2:
        raise ValueError("zero_linking needs an even clasp count")
    rng = random.Random(seed)
    pairs = list(itertools.combinations(range(1, n + 1), 2))

    clasps = []
    if zero_linking:
        for idx in range(clasp_count // 2):
            ends = rng.choice(pairs)
            clasps.append(SignedClasp(f"c{2 * idx + 1}", 1, ends))
            clasps.append(SignedClasp(f"c{2 * idx + 2}", -1, ends))
    else:
        for idx in range(clasp_count):
            clasps.append(SignedClasp(f"c{idx + 1}", rng.choice((1, -1)), rng.choice(pairs)))

    words = [[] for _ in range(n)]
    for c in clasps:
        for e in c.ends:
            words[e - 1].append(c.label)
    for w in words:
        rng.shuffle(w)
    genus = [rng.randint(0, max_genus) for _ in range(n)]
    return make(genus, clasps, words)
