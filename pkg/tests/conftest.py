from __future__ import annotations

from hypothesis import settings
from hypothesis import strategies as st

from uvbraid.free2 import F2Word
from uvbraid.perms import Permutation
from uvbraid.uvb import NormalForm
from uvbraid.uvp import PureElement
from uvbraid.words import BraidWord, rho, sigma, sigma_inv

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []

strands = st.integers(min_value=2, max_value=6)


@st.composite
def braid_words(draw, n=None, max_len=25, kinds=(sigma, sigma_inv, rho)):
    n = draw(strands) if n is None else n
    letters = draw(
        st.lists(
            st.tuples(st.sampled_from(kinds), st.integers(1, n - 1)).map(lambda t: t[0](t[1])),
            max_size=max_len,
        )
    )
    return BraidWord(n, tuple(letters))


@st.composite
def f2_words(draw, pair=(1, 2), max_len=30):
    i, j = pair
    syl = draw(st.lists(st.tuples(st.sampled_from([(i, j), (j, i)]), st.sampled_from([1, -1])), max_size=max_len))
    return F2Word.from_syllables(pair, syl)


@st.composite
def permutations(draw, n):
    return Permutation(tuple(draw(st.permutations(list(range(1, n + 1))))))


@st.composite
def pure_elements(draw, n, max_len=15):
    letters = draw(
        st.lists(
            st.tuples(st.integers(1, n), st.integers(1, n), st.sampled_from([1, -1])).filter(lambda t: t[0] != t[1]),
            max_size=max_len,
        )
    )
    return PureElement.from_words(n, [F2Word.generator(a, b, e) for a, b, e in letters])


@st.composite
def normal_forms(draw, n=None, max_len=12):
    n = draw(strands) if n is None else n
    return NormalForm(draw(pure_elements(n, max_len)), draw(permutations(n)))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
