import os
from importlib.resources import files

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from qheegaard.braid_core import BraidWord
from qheegaard.checks import read_corpus

settings.register_profile(
    "ci", deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("dev", deadline=None, max_examples=200)
settings.load_profile(os.environ.get("QH_HYPOTHESIS_PROFILE", "ci"))

CORPUS_PATH = str(files("qheegaard").joinpath("data", "corpus.txt"))


@pytest.fixture(scope="session")
def corpus():
    return read_corpus(CORPUS_PATH)


@pytest.fixture(scope="session")
def knot_corpus(corpus):
    from qheegaard.braid_core import closure_info

    return [e for e in corpus if closure_info(e.braid()).is_knot]


@st.composite
def braids(draw, min_n=2, max_n=4, max_len=6):
    n = draw(st.integers(min_n, max_n))
    letters = draw(st.lists(st.integers(1, n - 1).flatmap(lambda k: st.sampled_from((k, -k))), max_size=max_len))
    return BraidWord(n, tuple(letters))


def knot_braids(**kw):
    from qheegaard.braid_core import closure_info

    return braids(**kw).filter(lambda w: closure_info(w).is_knot)
