import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from hopfield_recall import BipolarPattern  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"


def bipolar_lists(min_size=1, max_size=32):
    return st.lists(st.sampled_from([-1, 1]), min_size=min_size, max_size=max_size)


@st.composite
def pattern_sets(draw, min_n=1, max_n=16, max_m=5):
    n = draw(st.integers(min_n, max_n))
    m = draw(st.integers(1, max_m))
    return [BipolarPattern(draw(bipolar_lists(n, n))) for _ in range(m)]


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def glyph_paths():
    return [FIXTURES / name for name in ("checker16.pbm", "rings16.pbm", "diagonal16.pbm")]


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


# test_acceptance appends one pass/fail line per criterion here
ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    return request.config.stash.setdefault(ACCEPTANCE_KEY, [])


def pytest_terminal_summary(terminalreporter):
    lines = terminalreporter.config.stash.get(ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
