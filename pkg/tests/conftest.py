import pytest

from ccomplex import cyclic_shift, parse, relabel

BORROMEAN = """\
ccomplex v1
components 3
genus 0 0 0
word 1: c1- c3- c2+ c4+
word 2: c1- c2+
word 3: c3- c4+
"""

DOUBLED_BORROMEAN = """\
ccomplex v1
components 3
genus 0 0 0
word 1: c1- c3- c2+ c4+ c5- c7- c6+ c8+
word 2: c1- c2+ c5- c6+
word 3: c3- c4+ c7- c8+
"""


def descriptor(n, *words, genus=None):
    """Build a descriptor from word strings such as ``"a- b+"``."""
    lines = ["ccomplex v1", f"components {n}"]
    if genus is not None:
        lines.append("genus " + " ".join(map(str, genus)))
    lines += [f"word {k}: {w}" for k, w in enumerate(words, 1) if w]
    return parse("\n".join(lines))


def scramble(D, rng):
    """Random relabeling and random rotations of every word."""
    names = [f"q{i}" for i in range(len(D.labels))]
    rng.shuffle(names)
    mapping = dict(zip(D.labels, names))
    E = relabel(D, mapping)
    shifts = []
    for k in range(1, D.n + 1):
        s = rng.randrange(len(D.word(k))) if D.word(k) else 0
        shifts.append(s)
        E = cyclic_shift(E, k, s)
    return E, mapping, shifts

def transposable(D):
    """(component, position) pairs where a transposition is legal."""
    out = []
    for k in range(1, D.n + 1):
        w = D.word(k)
        if len(w) < 2:
            continue
        for p in range(1, len(w) + 1):
            if D.clasp(w[p - 1]).partner(k) == D.clasp(w[p % len(w)]).partner(k):
                out.append((k, p))
    return out


@pytest.fixture
def borromean():
    return parse(BORROMEAN)


@pytest.fixture
def doubled_borromean():
    return parse(DOUBLED_BORROMEAN)


@pytest.fixture
def unlink2():
    return descriptor(2)


@pytest.fixture
def unlink3():
    return descriptor(3)


@pytest.fixture
def hopf():
    return descriptor(2, "a+", "a+")
