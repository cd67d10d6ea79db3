import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from braidsurgery.braid import BraidWord  # noqa: E402


@st.composite
def braid_words(draw, min_strands=1, max_strands=6, max_length=24):
    k = draw(st.integers(min_strands, max_strands))
    if k == 1:
        return BraidWord(1, ())
    letters = draw(
        st.lists(
            st.integers(1, k - 1).flatmap(lambda i: st.sampled_from((i, -i))),
            max_size=max_length,
        )
    )
    return BraidWord(k, tuple(letters))


@st.composite
def word_pairs(draw, max_strands=6, max_length=12):
    a = draw(braid_words(2, max_strands, max_length))
    b = draw(braid_words(a.strands, a.strands, max_length))
    return a, b


@pytest.fixture
def hopf():
    return BraidWord(2, (1, 1))


@pytest.fixture
def trefoil():
    return BraidWord(2, (1, 1, 1))
