"""Combinatorics of C-complexes: claspwords, linking numbers, triple
linking numbers, equivalence and normalization moves."""

__version__ = "0.1.0"

from .core import (
    CComplex,
    MoveRecord,
    MoveTranscript,
    SignedClasp,
    cyclic_shift,
    relabel,
    sublink,
    validate,
)
from .equivalence import (
    EquivalenceCertificate,
    Verdict,
    decide_equivalent,
    decide_equivalent_bruteforce,
)
from .generate import random_descriptor
from .invariants import (
    TripleLinking,
    epsilon,
    mu3,
    mu3_all,
    pairwise_linking,
    substitution_word,
)
from .magnus import GroupWord, TruncatedSeries, magnus_expand
from .moves import (
    add_cancel_pair,
    canonicalize_2comp,
    make_equivalent_pair,
    replay,
    stabilize,
    transpose,
)
from .obstruction import prop_mu123_check, theorem1_decide, theorem2_decide
from .textio import parse, serialize
