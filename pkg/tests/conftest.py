import random

import pytest
from hypothesis import strategies as st

from symprice.digraph import Digraph


@st.composite
def digraphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    slots = [(i, j) for i in range(n) for j in range(n) if i != j]
    arrows = draw(st.sets(st.sampled_from(slots)) if slots else st.just(set()))
    return Digraph.from_arrows(n, arrows)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
