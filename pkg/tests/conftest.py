import random

import pytest

from splitsearch.algebra import HyperNumber
from splitsearch.weighting import Vocabulary


def hn(*dense: float) -> HyperNumber:
    """HyperNumber from dense coefficients (e_1, e_2, ...)."""
    return HyperNumber.from_dense(dense)


def random_hn(rng: random.Random, n_terms: int, lo: float = -1.0, hi: float = 1.0) -> HyperNumber:
    return HyperNumber.from_dense(
        [rng.uniform(lo, hi) for _ in range(2 * n_terms)]
    )


def make_vocab(*terms: str) -> Vocabulary:
    """Synthetic vocabulary with df = 1 everywhere."""
    return Vocabulary(
        terms=list(terms),
        term_to_id={t: i for i, t in enumerate(terms)},
        df=[1] * len(terms),
    )


@pytest.fixture
def fixture_vocab() -> Vocabulary:
    return make_vocab("apple", "banana", "cherry")
