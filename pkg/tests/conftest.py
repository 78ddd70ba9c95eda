import os
import tempfile

# Keep test runs from writing into the project log directory.
os.environ.setdefault("RANKPOP_LOG_DIR", os.path.join(tempfile.gettempdir(), "rankpop-test-logs"))
os.environ.setdefault("RANKPOP_LOG_LEVEL", "WARNING")

import pytest
from hypothesis import strategies as st

from src.core import Ranking, VotingInstance
from src.generators import appendix_b_instance, example1_instance, fig1_instance, obs4_instance


def blocks(*groups) -> Ranking:
    return Ranking.from_blocks(*groups)


@st.composite
def rankings(draw, m: int):
    return Ranking(tuple(draw(st.permutations(range(1, m + 1)))))


@st.composite
def instances(draw, min_n=1, max_n=5, min_m=1, max_m=5):
    m = draw(st.integers(min_m, max_m))
    n = draw(st.integers(min_n, max_n))
    return VotingInstance(m, tuple(draw(rankings(m)) for _ in range(n)))


@pytest.fixture
def fig1():
    return fig1_instance()


@pytest.fixture
def sigma1():
    return blocks([1, 2, 3], [5, 6, 4], [9, 7, 8])


@pytest.fixture
def sigma2():
    return Ranking.identity(9)


@pytest.fixture
def example1():
    return example1_instance()


@pytest.fixture
def obs4():
    return obs4_instance()


@pytest.fixture
def appendix_b():
    return appendix_b_instance()


@pytest.fixture
def condorcet3():
    return VotingInstance.from_rankings([[1, 2, 3], [2, 3, 1], [3, 1, 2]])
