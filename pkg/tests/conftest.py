import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from braidtwist.word import BraidWord, Rewrite, apply_rewrite, rewrite_sites  # noqa: E402


def rand_word(rng: random.Random, n: int, length: int) -> BraidWord:
    letters = tuple(rng.randint(1, n - 1) * rng.choice((1, -1)) for _ in range(length))
    return BraidWord(n, letters)


def rand_positive(rng: random.Random, n: int, length: int) -> BraidWord:
    return BraidWord(n, tuple(rng.randint(1, n - 1) for _ in range(length)))


def random_legal_rewrite(rng, word, pairs=None):
    sites = rewrite_sites(word)
    if not sites or rng.random() < 0.15:
        g = rng.randint(1, word.strands - 1) * rng.choice((1, -1))
        move = Rewrite("insert", rng.randint(0, len(word)), g)
    else:
        move = rng.choice(sites)
    return apply_rewrite(word, move, pairs)


def w(n, *letters) -> BraidWord:
    return BraidWord(n, tuple(letters))


# a B_5 conjugate of sigma_1 on which the single-shot check fails
STUBBORN = w(5, -4, 1, -3, -1, -3, 4, 4, -1, 1, -2, 1, -2, 1, 2, -1, 2, -1, 1, -4, -4, 3, 1, 3,
             -1, 4)


@pytest.fixture
def rng():
    return random.Random(20240611)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
