import random

import pytest
from hypothesis import given, settings, strategies as st

from ccomplex import cyclic_shift, random_descriptor, relabel, sublink, validate
from ccomplex.core import rotate
from ccomplex.errors import (
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

from oracles import rotate_oracle


def borromean_raw():
    return {
        "components": 3,
        "genus": [0, 0, 0],
        "clasps": [
            {"label": "c1", "sign": -1, "ends": [1, 2]},
            {"label": "c2", "sign": 1, "ends": [1, 2]},
            {"label": "c3", "sign": -1, "ends": [1, 3]},
            {"label": "c4", "sign": 1, "ends": [1, 3]},
        ],
        "words": [["c1", "c3", "c2", "c4"], ["c1", "c2"], ["c3", "c4"]],
    }


def test_validate_borromean(borromean):
    D = validate(borromean_raw())
    assert D == borromean
    assert D.n == 3 and D.genus == (0, 0, 0)
    assert D.word_str(1) == "c1- c3- c2+ c4+"
    assert D.word_str(2) == "c1- c2+"
    assert D.word_str(3) == "c3- c4+"
    assert D.clasp("c1").ends == (1, 2) and D.clasp("c4").ends == (1, 3)


def test_validate_unlink():
    D = validate({"components": 2, "genus": [0, 0], "clasps": [], "words": [[], []]})
    assert D.words == ((), ()) and D.clasps == ()


def test_validate_accepts_mapping_forms():
    raw = borromean_raw()
    raw["clasps"] = {c["label"]: {"sign": c["sign"], "ends": c["ends"]} for c in raw["clasps"]}
    raw["words"] = {1: raw["words"][0], 2: raw["words"][1], 3: raw["words"][2]}
    assert validate(raw) == validate(borromean_raw())


def _mutated(**changes):
    raw = borromean_raw()
    raw.update(changes)
    return raw


@pytest.mark.parametrize(
    "raw, error",
    [
        ({"components": 2, "genus": [0, 0],
          "clasps": [{"label": "c1", "sign": 1, "ends": [1, 1]}], "words": [["c1"], []]}, SelfClasp),
        (_mutated(genus=[0, -1, 0]), NegativeGenus),
        (_mutated(clasps=borromean_raw()["clasps"] + [{"label": "c1", "sign": 1, "ends": [2, 3]}]),
         DuplicateLabel),
        (_mutated(words=[["c1", "c3", "c2", "c4"], ["c1", "c2", "c9"], ["c3", "c4"]]), UnknownLabel),
        (_mutated(words=[["c1", "c3", "c2", "c4"], ["c1"], ["c3", "c4"]]), MissingOccurrence),
        (_mutated(words=[["c1", "c3", "c2", "c4"], ["c1", "c2"], ["c3", "c4", "c1"]]), ExtraOccurrence),
        (_mutated(words=[["c1", "c3", "c2", "c4", "c1"], ["c1", "c2"], ["c3", "c4"]]), ExtraOccurrence),
        (_mutated(components=0), MalformedDescriptor),
        (_mutated(genus=[0, 0]), MalformedDescriptor),
        (_mutated(words=[["c1", "c3", "c2", "c4"], ["c1", "c2"]]), MalformedDescriptor),
        ({"components": 2, "clasps": [{"label": "bad label", "sign": 1, "ends": [1, 2]}],
          "words": [["bad label"], ["bad label"]]}, MalformedDescriptor),
        ({"components": 2, "clasps": [{"label": "a", "sign": 0, "ends": [1, 2]}],
          "words": [["a"], ["a"]]}, MalformedDescriptor),
        ({"components": 2, "clasps": [{"label": "a", "sign": 1, "ends": [1, 3]}],
          "words": [["a"], []]}, MalformedDescriptor),
    ],
)
def test_validate_errors(raw, error):
    with pytest.raises(error):
        validate(raw)


def test_first_violated_axiom_is_reported():
    # negative genus is checked before clasp problems
    raw = _mutated(genus=[-1, 0, 0], words=[["c1"], ["c1"], []])
    with pytest.raises(NegativeGenus):
        validate(raw)


def test_descriptor_is_immutable(borromean):
    with pytest.raises(AttributeError):
        borromean.genus = (1, 1, 1)


def test_validate_roundtrip_raw(borromean):
    assert validate(borromean.to_raw()) == borromean
    assert validate(validate(borromean.to_raw()).to_raw()) == borromean


def test_equality_ignores_clasp_listing_order():
    raw = borromean_raw()
    raw["clasps"] = list(reversed(raw["clasps"]))
    assert validate(raw) == validate(borromean_raw())


# relabel

def test_relabel_identity(borromean):
    assert relabel(borromean, {x: x for x in borromean.labels}) == borromean


def test_relabel_swap(borromean):
    D = relabel(borromean, {"c1": "c2", "c2": "c1", "c3": "c3", "c4": "c4"})
    assert D.word_str(1) == "c2- c3- c1+ c4+"
    assert D.word_str(2) == "c2- c1+"
    assert D.clasp("c2").sign == -1 and D.clasp("c1").sign == 1
    # replay oracle: map letters of the original words by hand
    swap = {"c1": "c2", "c2": "c1"}
    for k in (1, 2, 3):
        expected = [(swap.get(lab, lab), borromean.clasp(lab).sign) for lab in borromean.word(k)]
        assert list(D.signed_word(k)) == expected


@pytest.mark.parametrize(
    "mapping",
    [
        {"c1": "x", "c2": "y", "c3": "z"},
        {"c1": "x", "c2": "x", "c3": "z", "c4": "w"},
        {"c1": "x", "c2": "y", "c3": "z", "c4": "w", "c5": "v"},
        {"c1": "x y", "c2": "y", "c3": "z", "c4": "w"},
    ],
)
def test_relabel_non_bijective(borromean, mapping):
    with pytest.raises(NonBijective):
        relabel(borromean, mapping)


# cyclic_shift

def test_cyclic_shift_examples(borromean):
    assert cyclic_shift(borromean, 2, 1).word_str(2) == "c2+ c1-"
    assert cyclic_shift(borromean, 2, 2) == borromean
    assert cyclic_shift(borromean, 1, 2).word_str(1) == "c2+ c4+ c1- c3-"
    assert cyclic_shift(borromean, 1, 2).word(1) == rotate_oracle(borromean.word(1), 2)


def test_cyclic_shift_empty_word(unlink2):
    assert cyclic_shift(unlink2, 1, 5) == unlink2


def test_cyclic_shift_negative_offset(borromean):
    assert cyclic_shift(borromean, 1, -1) == cyclic_shift(borromean, 1, 3)


def test_cyclic_shift_bad_component(borromean):
    with pytest.raises(IndexOutOfRange):
        cyclic_shift(borromean, 4, 1)


@given(st.lists(st.integers(0, 9), max_size=8), st.integers(-20, 20))
def test_rotate_matches_oracle(word, s):
    assert rotate(word, s) == rotate_oracle(word, s % len(word) if word else 0)


# sublink

def test_sublink_examples(borromean):
    S = sublink(borromean, (1, 2))
    assert S.n == 2
    assert S.word_str(1) == "c1- c2+" and S.word_str(2) == "c1- c2+"
    assert sublink(borromean, (1, 2, 3)) == borromean
    S = sublink(borromean, (2, 3))
    assert S.words == ((), ()) and S.clasps == ()


def test_sublink_reorders_components(borromean):
    S = sublink(borromean, (3, 1))
    assert S.word_str(1) == "c3- c4+"
    assert S.word_str(2) == "c3- c4+"
    assert S.clasp("c3").ends == (1, 2)


def test_sublink_filter_oracle():
    for seed in range(50):
        D = random_descriptor(4, 8, seed, max_genus=2)
        S = (4, 2, 1)
        sub = sublink(D, S)
        for pos, k in enumerate(S, 1):
            expected = [lab for lab in D.word(k)
                        if all(e in S for e in D.clasp(lab).ends)]
            assert list(sub.word(pos)) == expected
            assert sub.genus[pos - 1] == D.genus[k - 1]


@pytest.mark.parametrize("S, error", [((1, 4), IndexOutOfRange), ((1, 1), DuplicateIndex),
                                      ((0, 2), IndexOutOfRange)])
def test_sublink_errors(borromean, S, error):
    with pytest.raises(error):
        sublink(borromean, S)


# properties over random descriptors

@settings(max_examples=150, deadline=None)
@given(st.integers(2, 5), st.integers(0, 10), st.integers(0, 10**6))
def test_letter_count_is_twice_clasp_count(n, m, seed):
    D = random_descriptor(n, m, seed)
    assert sum(len(w) for w in D.words) == 2 * len(D.clasps) == 2 * m


@settings(max_examples=150, deadline=None)
@given(st.integers(3, 5), st.integers(0, 10), st.integers(0, 10**6), st.data())
def test_relabel_and_shift_commute_with_sublink(n, m, seed, data):
    D = random_descriptor(n, m, seed, max_genus=1)
    S = tuple(data.draw(st.permutations(range(1, n + 1)))[: data.draw(st.integers(1, n))])
    rng = random.Random(seed)
    names = [f"z{i}" for i in range(len(D.labels))]
    rng.shuffle(names)
    mapping = dict(zip(D.labels, names))
    sub_mapping = {lab: mapping[lab] for lab in sublink(D, S).labels}
    assert sublink(relabel(D, mapping), S) == relabel(sublink(D, S), sub_mapping)

    k = data.draw(st.integers(1, n))
    s = data.draw(st.integers(0, 12))
    shifted = sublink(cyclic_shift(D, k, s), S)
    if k in S:
        pos = S.index(k) + 1
        # the retained letters keep their cyclic order, so the restriction
        # of a rotation is a rotation of the restriction
        w, sw = sublink(D, S).word(pos), shifted.word(pos)
        assert sorted(w) == sorted(sw)
        assert any(rotate(w, t) == sw for t in range(max(len(w), 1)))
        others = [p for p in range(1, len(S) + 1) if p != pos]
        assert all(shifted.word(p) == sublink(D, S).word(p) for p in others)
    else:
        assert shifted == sublink(D, S)


def test_digest_tracks_content(borromean):
    assert borromean.digest() == validate(borromean.to_raw()).digest()
    assert borromean.digest() != cyclic_shift(borromean, 1, 1).digest()
