"""Shared corpus fixtures: fixed branches plus seeded random valid sequences."""

import random

import pytest

from branchzeta.branch import CharSeq, derive_numerics, random_charseq

FIXED_CASES = [
    CharSeq(2, (3,)),
    CharSeq(4, (9,)),
    CharSeq(4, (6, 7)),
    CharSeq(6, (9, 22)),
]

CORPUS_SEED = 20240917


def make_corpus(count=200, seed=CORPUS_SEED, max_n=12, max_beta=400):
    rng = random.Random(seed)
    return [random_charseq(rng, max_n=max_n, max_beta=max_beta) for _ in range(count)]


@pytest.fixture(scope="session")
def corpus():
    """200 randomized valid characteristic sequences plus the fixed cases."""
    return FIXED_CASES + make_corpus()


@pytest.fixture(scope="session")
def small_corpus():
    """Cheaper slice for the heavier per-branch checks."""
    return FIXED_CASES + make_corpus(count=40, seed=CORPUS_SEED + 1, max_beta=150)


@pytest.fixture(scope="session")
def corpus_numerics(corpus):
    return [derive_numerics(cs) for cs in corpus]


@pytest.fixture(scope="session")
def small_corpus_numerics(small_corpus):
    return [derive_numerics(cs) for cs in small_corpus]
