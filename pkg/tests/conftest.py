import pytest
from hypothesis import settings, strategies as st

from superweights import ShiftedWeight

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@st.composite
def dominant_weights(draw, max_m=4, max_n=4, span=8, min_m=0, min_n=0):
    """Dominant shifted weights with positions in [-span//2, span - span//2]."""
    m = draw(st.integers(min_m, max_m))
    n = draw(st.integers(min_n, max_n))
    lo = -(span // 2)
    pool = list(range(lo, lo + span + 1))
    eps = draw(st.lists(st.sampled_from(pool), min_size=m, max_size=m, unique=True))
    dlt = draw(st.lists(st.sampled_from(pool), min_size=n, max_size=n, unique=True))
    return ShiftedWeight(sorted(eps, reverse=True), [-q for q in sorted(dlt)])


@st.composite
def any_weights(draw, max_m=4, max_n=4, span=6):
    m = draw(st.integers(0, max_m))
    n = draw(st.integers(0, max_n))
    a = draw(st.lists(st.integers(-span, span), min_size=m, max_size=m))
    b = draw(st.lists(st.integers(-span, span), min_size=n, max_size=n))
    return ShiftedWeight(a, b)


@st.composite
def words(draw, max_m=4, max_n=4):
    m = draw(st.integers(0, max_m))
    n = draw(st.integers(0, max_n))
    letters = ["e"] * m + ["d"] * n
    return "".join(draw(st.permutations(letters)))


@pytest.fixture
def W():
    return ShiftedWeight.parse


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
