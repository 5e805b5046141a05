import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from fincat.corpus import CorpusSpec, generate_corpus, generate_functor_corpus  # noqa: E402


@pytest.fixture(scope="session")
def corpus():
    return generate_corpus(CorpusSpec(seed=7, count=25))


@pytest.fixture(scope="session")
def functor_corpus(corpus):
    return generate_functor_corpus(corpus, seed=7)
