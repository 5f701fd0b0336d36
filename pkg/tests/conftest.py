import random

import pytest

from lodhamoore.core import GroupWord, XLetter, YLetter, valid_y_index
from lodhamoore.words import EvPeriodicWord


def random_y_index(rng: random.Random, n: int, max_len: int = 4):
    while True:
        k = rng.randint(2, max_len)
        s = tuple(rng.randrange(n) for _ in range(k))
        if valid_y_index(n, s):
            return s


def random_group_word(rng: random.Random, n: int, max_len: int = 8) -> GroupWord:
    letters = []
    for _ in range(rng.randint(0, max_len)):
        sign = rng.choice([1, -1])
        if rng.random() < 0.45:
            i = rng.randrange(n - 1)
            alpha = tuple(rng.randrange(n) for _ in range(rng.randint(0, 2)))
            letters.append(XLetter(i, alpha, sign))
        else:
            letters.append(YLetter(random_y_index(rng, n), sign))
    return GroupWord(n, tuple(letters))


def random_point(rng: random.Random, n: int, max_pre: int = 4, max_per: int = 4):
    pre = tuple(rng.randrange(n) for _ in range(rng.randint(0, max_pre)))
    per = tuple(rng.randrange(n) for _ in range(rng.randint(1, max_per)))
    return EvPeriodicWord(n, pre, per)


@pytest.fixture
def rng():
    return random.Random(20240811)
