import itertools

import pytest

from lodhamoore.words import (
    DomainError,
    EvPeriodicWord,
    PrefixRelation,
    all_words,
    canonicalize_ep,
    digit_sum_mod,
    ep_const,
    ep_point_lt,
    format_point,
    parse_point,
    parse_word,
    prefix_relation,
    word_lt,
)


def test_prefix_relation_cases():
    assert prefix_relation((), (0, 1)) is PrefixRelation.PROPER_PREFIX
    assert prefix_relation((0, 1), (0, 1)) is PrefixRelation.EQUAL
    assert prefix_relation((0, 2), (0, 1)) is PrefixRelation.INDEPENDENT
    assert prefix_relation((0, 1), (0,)) is PrefixRelation.EXTENDS


def test_prefix_independence_symmetric():
    for s in all_words(3, 3):
        for t in all_words(3, 3):
            lhs = prefix_relation(s, t) is PrefixRelation.INDEPENDENT
            rhs = prefix_relation(t, s) is PrefixRelation.INDEPENDENT
            assert lhs == rhs


def _word_lt_by_definition(s, t):
    """Literal enumeration of the order's two defining cases."""
    # (a) t is a proper prefix of s
    if len(t) < len(s) and s[: len(t)] == t:
        return True
    # (b) independent with s smaller at the first difference
    m = min(len(s), len(t))
    if s[:m] != t[:m]:
        i = next(i for i in range(m) if s[i] != t[i])
        return s[i] < t[i]
    return False


def test_word_lt_paper_cases():
    assert word_lt((0, 1), (0,), 2)       # case (a)
    assert word_lt((0,), (1,), 2)         # case (b)
    assert not word_lt((1,), (0, 1), 2)   # neither case applies


def test_word_lt_strictness():
    with pytest.raises(DomainError):
        word_lt((0, 1), (0, 1), 2)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_word_lt_matches_definition_and_is_total(n):
    words = list(all_words(n, 4))
    for s in words:
        for t in words:
            if s == t:
                continue
            lt = word_lt(s, t, n)
            assert lt == _word_lt_by_definition(s, t)
            assert lt != word_lt(t, s, n)


def test_word_lt_transitive_exhaustive_small():
    for s, t, u in itertools.product(list(all_words(3, 3)), repeat=3):
        if s == t or t == u or s == u:
            continue
        if word_lt(s, t, 3) and word_lt(t, u, 3):
            assert word_lt(s, u, 3)


def test_digit_sum_mod():
    assert digit_sum_mod((), 3) == 0
    assert digit_sum_mod((3, 0), 3) == 0     # n=4 generator index
    assert digit_sum_mod((2, 1), 3) == 0     # 2+1 = 3 = 0 mod 3


def test_canonicalize_examples():
    assert canonicalize_ep(2, (0,), (1, 1)) == EvPeriodicWord(2, (0,), (1,))
    assert canonicalize_ep(2, (0, 1), (0,)) == EvPeriodicWord(2, (0, 1), (0,))
    assert canonicalize_ep(2, (), (0, 1)) == EvPeriodicWord(2, (), (0, 1))
    # absorbing: 0 0 0... with a redundant preperiod
    assert canonicalize_ep(2, (0, 0), (0,)) == ep_const(2, 0)


def test_canonicalize_errors():
    with pytest.raises(DomainError):
        canonicalize_ep(2, (0,), ())


def test_canonicalize_idempotent_and_expansion_equal(rng):
    for _ in range(300):
        n = rng.choice([2, 3, 4])
        pre = tuple(rng.randrange(n) for _ in range(rng.randint(0, 4)))
        per = tuple(rng.randrange(n) for _ in range(rng.randint(1, 4)))
        x = canonicalize_ep(n, pre, per)
        assert canonicalize_ep(n, x.pre, x.per) == x
        horizon = 4 * (len(pre) + len(per))
        raw = (pre + per * (horizon // len(per) + 1))[:horizon]
        assert x.prefix(horizon) == raw


def test_expansion_equality_implies_structural_equality(rng):
    for _ in range(300):
        n = rng.choice([2, 3])
        x = canonicalize_ep(
            n,
            tuple(rng.randrange(n) for _ in range(rng.randint(0, 3))),
            tuple(rng.randrange(n) for _ in range(rng.randint(1, 3))),
        )
        reps = rng.randint(1, 3)
        shift = rng.randint(0, 5)
        y = canonicalize_ep(n, x.prefix(len(x.pre) + shift), x.drop(len(x.pre) + shift).per * reps)
        assert x == y


def test_ep_point_lt_cases():
    assert ep_point_lt(ep_const(3, 0), ep_const(3, 2))
    assert ep_point_lt(
        EvPeriodicWord(3, (0,), (2,)), EvPeriodicWord(3, (2,), (0,))
    )
    # 010101... vs 010000...
    assert not ep_point_lt(EvPeriodicWord(2, (0,), (1, 0)), EvPeriodicWord(2, (0, 1), (0,)))
    with pytest.raises(DomainError):
        ep_point_lt(ep_const(2, 0), ep_const(2, 0))


def test_ep_point_lt_agrees_with_expansion(rng):
    for _ in range(500):
        n = rng.choice([2, 3, 4])
        x = canonicalize_ep(
            n,
            tuple(rng.randrange(n) for _ in range(rng.randint(0, 4))),
            tuple(rng.randrange(n) for _ in range(rng.randint(1, 4))),
        )
        y = canonicalize_ep(
            n,
            tuple(rng.randrange(n) for _ in range(rng.randint(0, 4))),
            tuple(rng.randrange(n) for _ in range(rng.randint(1, 4))),
        )
        a, b = x.prefix(64), y.prefix(64)
        if a != b:
            assert ep_point_lt(x, y) == (a < b)


def test_point_parsing_round_trip(rng):
    for _ in range(100):
        n = rng.choice([2, 3, 4, 10])
        x = canonicalize_ep(
            n,
            tuple(rng.randrange(n) for _ in range(rng.randint(0, 4))),
            tuple(rng.randrange(n) for _ in range(rng.randint(1, 4))),
        )
        assert parse_point(format_point(x), n) == x
    big = EvPeriodicWord(12, (11, 0), (5,))
    assert parse_point(format_point(big), 12) == big


def test_word_parsing():
    assert parse_word("3012", 4) == (3, 0, 1, 2)
    assert parse_word("", 4) == ()
    assert parse_word("[10,0,2]", 11) == (10, 0, 2)
