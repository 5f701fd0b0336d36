import itertools

import pytest

from lodhamoore.words import DomainError, EvPeriodicWord, ep_const
from lodhamoore.transducer import (
    COPY,
    Calculation,
    OPEN,
    YTok,
    calculation_from_prefix,
    contains_potential_cancellation,
    exponent,
    format_calculation,
    is_potential_cancellation,
    substitute_all,
    substitute_once,
    y_apply_ep,
    y_apply_finite,
    y_step,
)

YP, YN = YTok(1), YTok(-1)


# -- independent oracle: the literal rewriting system ------------------------

def _naive_rules(n):
    """The defining rules as literal token rewrites (y is -2/-3 sentinels)."""
    Y, Yi = "y", "y'"
    top = n - 1
    rules = []
    rules.append(([Y, 0, 0], [0, Y]))
    rules.append(([Y, 0, top], [top, 0, Yi]))
    rules.append(([Y, top], [top, top, Y]))
    rules.append(([Yi, 0], [0, 0, Yi]))
    rules.append(([Yi, top, 0], [0, top, Y]))
    rules.append(([Yi, top, top], [top, Yi]))
    for k in range(1, n - 1):
        rules.append(([Y, 0, k], [k]))
        rules.append(([Y, k], [top, k]))
        rules.append(([Yi, k], [0, k]))
        rules.append(([Yi, top, k], [k]))
    return rules


def naive_substitute_all(n, tokens):
    """Apply the rule table anywhere until no rule matches."""
    rules = _naive_rules(n)
    tokens = list(tokens)
    changed = True
    while changed:
        changed = False
        for i in range(len(tokens)):
            for lhs, rhs in rules:
                if tokens[i : i + len(lhs)] == lhs:
                    tokens[i : i + len(lhs)] = rhs
                    changed = True
                    break
            if changed:
                break
    return tokens


def naive_is_pc(n, t1, sigma, t2):
    start = ["y" if t1 > 0 else "y'"] + list(sigma)
    result = naive_substitute_all(n, start)
    want_tail = "y" if -t2 > 0 else "y'"
    return (
        len(result) >= 1
        and result[-1] == want_tail
        and all(isinstance(tok, int) for tok in result[:-1])
    )


# -- rule table ---------------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_y_step_paper_rules(n):
    top = n - 1
    assert y_step(n, +1, 0, 0) == ((0,), +1, 2)
    assert y_step(n, +1, 0, top) == ((top, 0), -1, 2)
    for k in range(1, n - 1):
        assert y_step(n, +1, 0, k) == ((k,), COPY, 2)
        assert y_step(n, +1, k, None) == ((top, k), COPY, 1)
        assert y_step(n, -1, k, None) == ((0, k), COPY, 1)
        assert y_step(n, -1, top, k) == ((k,), COPY, 2)
    assert y_step(n, +1, top, None) == ((top, top), +1, 1)
    assert y_step(n, -1, 0, None) == ((0, 0), -1, 1)
    assert y_step(n, -1, top, 0) == ((0, top), +1, 2)
    assert y_step(n, -1, top, top) == ((top,), -1, 2)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_y_step_exhaustive(n):
    # defined for every sign and letter combination given enough lookahead
    for sign in (+1, -1):
        for a in range(n):
            for b in range(n):
                emitted, state, consumed = y_step(n, sign, a, b)
                assert consumed in (1, 2)
                assert state in (+1, -1, COPY)
                assert all(0 <= c < n for c in emitted)
    with pytest.raises(DomainError):
        y_step(3, +1, 0, None)
    with pytest.raises(DomainError):
        y_step(3, -1, 2, None)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_y_apply_finite_examples(n):
    top = n - 1
    assert y_apply_finite(n, +1, (0, top)) == ((top, 0), -1, ())
    assert y_apply_finite(n, +1, (0, 0)) == ((0,), +1, ())
    for k in range(1, n - 1):
        assert y_apply_finite(n, +1, (0, k)) == ((k,), None, ())
    # boundary: rule needs an absent second letter
    assert y_apply_finite(n, +1, (0,)) == ((), +1, (0,))


def test_y_apply_finite_matches_naive(rng):
    for _ in range(400):
        n = rng.choice([2, 3, 4])
        w = tuple(rng.randrange(n) for _ in range(rng.randint(0, 8)))
        sign = rng.choice([+1, -1])
        out, residue, unconsumed = y_apply_finite(n, sign, w)
        tokens = naive_substitute_all(n, ["y" if sign > 0 else "y'"] + list(w))
        rebuilt = list(out)
        if residue is not None:
            rebuilt.append("y" if residue > 0 else "y'")
            rebuilt.extend(unconsumed)
        assert tokens == rebuilt


# -- action on points ---------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3, 4])
def test_y_fixes_zero_ray(n):
    assert y_apply_ep(+1, ep_const(n, 0)) == ep_const(n, 0)
    assert y_apply_ep(-1, ep_const(n, 0)) == ep_const(n, 0)


def test_y_round_trip_ep(rng):
    for _ in range(300):
        n = rng.choice([2, 3, 4])
        x = EvPeriodicWord(
            n,
            tuple(rng.randrange(n) for _ in range(rng.randint(0, 6))),
            tuple(rng.randrange(n) for _ in range(rng.randint(1, 6))),
        )
        sign = rng.choice([+1, -1])
        assert y_apply_ep(-sign, y_apply_ep(sign, x)) == x


def test_y_round_trip_finite_over_end_letters(rng):
    # pushing y then y' through a {0, n-1} word recovers the word
    for _ in range(200):
        n = rng.choice([2, 3, 4])
        top = n - 1
        w = tuple(rng.choice([0, top]) for _ in range(rng.randint(0, 12)))
        sign = rng.choice([+1, -1])
        out, res, unconsumed = y_apply_finite(n, sign, w)
        assert res is not None  # y never vanishes over {0, n-1}
        back, res2, unc2 = y_apply_finite(n, -sign, out)
        assert unc2 == ()
        assert res2 == -res
        assert back + unconsumed == w


def test_n2_matches_binary_definition(rng):
    # the n-adic map restricted to {0, n-1} mirrors the binary map
    def binary_y(sign, x):
        # independent n=2 recursion straight from the defining rules
        out = []
        pos = 0
        for _ in range(80):
            a, b = x.letter(pos), x.letter(pos + 1)
            if sign > 0:
                if a == 0 and b == 0:
                    out.append(0); pos += 2
                elif a == 0 and b == 1:
                    out += [1, 0]; sign = -1; pos += 2
                else:
                    out += [1, 1]; pos += 1
            else:
                if a == 0:
                    out += [0, 0]; pos += 1
                elif a == 1 and b == 0:
                    out += [0, 1]; sign = +1; pos += 2
                else:
                    out.append(1); pos += 2
        return out

    for _ in range(200):
        n = rng.choice([2, 3, 5])
        top = n - 1
        x = EvPeriodicWord(
            n,
            tuple(rng.choice([0, top]) for _ in range(rng.randint(0, 6))),
            tuple(rng.choice([0, top]) for _ in range(rng.randint(1, 6))),
        )
        sign = rng.choice([+1, -1])
        image = y_apply_ep(sign, x)
        x2 = EvPeriodicWord(2, tuple(int(a == top) for a in x.pre), tuple(int(a == top) for a in x.per))
        expected2 = binary_y(sign, x2)
        got = [int(a == top) for a in image.prefix(60)]
        assert got == expected2[:60][: len(got)] or got == expected2[: len(got)]


def test_double_y_paper_output():
    for n in (3, 4):
        top = n - 1
        x = EvPeriodicWord(n, (), (0, 0, 0, 0, top))
        twice = y_apply_ep(+1, y_apply_ep(+1, x))
        assert twice == EvPeriodicWord(n, (), (0, top, top, top, top))


# -- substitutions on calculations --------------------------------------------

def test_substitute_all_paper_chain():
    n = 4
    top = n - 1
    calc = Calculation(n, (YN, top, 0, 0, top, YN))
    result = substitute_all(calc)
    assert result.items == (0, top, top, 0, YN, YN)
    # intermediate step goes through 0 (n-1) y 0 (n-1) y'
    step1 = substitute_once(calc)
    assert step1.items == (0, top, YP, 0, top, YN)


def test_substitute_all_stuck_and_vanish():
    assert substitute_all(Calculation(3, (YP, 0))).items == (YP, 0)
    assert substitute_all(Calculation(3, (YP, 0, 1))).items == (1,)
    assert substitute_all(Calculation(4, (YP, 0, 2, 3, 1))).items == (2, 3, 1)


def test_substitute_all_matches_naive(rng):
    for _ in range(300):
        n = rng.choice([2, 3, 4])
        items = []
        for _ in range(rng.randint(0, 10)):
            if rng.random() < 0.3:
                items.append(rng.choice([YP, YN]))
            else:
                items.append(rng.randrange(n))
        calc = Calculation(n, tuple(items))
        mine = substitute_all(calc).items
        tokens = ["y" if it == YP else "y'" if it == YN else it for it in items]
        naive = naive_substitute_all(n, tokens)
        rebuilt = tuple(
            YP if t == "y" else YN if t == "y'" else t for t in naive
        )
        assert mine == rebuilt


# -- potential cancellations ---------------------------------------------------

@pytest.mark.parametrize("n", [2, 3, 4])
def test_is_pc_paper_examples(n):
    top = n - 1
    assert is_potential_cancellation(n, +1, (0, top), +1)
    assert is_potential_cancellation(n, +1, (0, 0), -1)
    assert not is_potential_cancellation(n, -1, (top, 0, 0, top), -1)
    assert not is_potential_cancellation(n, +1, (0,), +1)


def test_is_pc_sigma_with_middle_letter_is_never_pc(rng):
    for _ in range(300):
        n = rng.choice([3, 4, 5])
        k = rng.randint(1, 6)
        sigma = tuple(rng.randrange(n) for _ in range(k))
        if set(sigma) <= {0, n - 1}:
            continue
        assert not is_potential_cancellation(
            n, rng.choice([1, -1]), sigma, rng.choice([1, -1])
        )


@pytest.mark.parametrize("n", [2, 3])
def test_is_pc_matches_naive_exhaustive(n):
    top = n - 1
    for length in range(0, 7):
        for sigma in itertools.product([0, top], repeat=length):
            for t1 in (1, -1):
                for t2 in (1, -1):
                    assert is_potential_cancellation(n, t1, sigma, t2) == naive_is_pc(
                        n, t1, sigma, t2
                    )


def test_substitution_preserves_no_pc(rng):
    # a substitution never creates a potential cancellation
    for _ in range(400):
        n = rng.choice([2, 3, 4])
        top = n - 1
        items = []
        for _ in range(rng.randint(2, 10)):
            if rng.random() < 0.4:
                items.append(rng.choice([YP, YN]))
            else:
                items.append(rng.choice([0, top]))
        calc = Calculation(n, tuple(items))
        if contains_potential_cancellation(calc):
            continue
        step = substitute_once(calc)
        if step is not None:
            assert not contains_potential_cancellation(step)


# -- exponent -------------------------------------------------------------------

def test_exponent_paper_examples():
    zeros = ep_const(4, 0)
    assert exponent(Calculation(4, (YP, 0, YP, 0, 2, YN, 3, YP, 0), zeros)) == 2
    assert exponent(Calculation(4, (YP, 1), zeros)) == 0
    assert exponent(Calculation(4, (3, 0, 2), zeros)) == 0


def test_exponent_requires_no_pc():
    with pytest.raises(DomainError):
        exponent(Calculation(2, (YP, 0, 1, YP)))


def test_exponent_open_tail_rejected():
    with pytest.raises(DomainError):
        exponent(Calculation(2, (YP, 0), OPEN))


# -- calculations from prefixes ----------------------------------------------

def test_calculation_from_prefix_golden():
    calc = calculation_from_prefix(2, [((0, 0, 1), +1)], (0, 0, 1, 0, 1, 1, 0, 1))
    assert format_calculation(substitute_all(calc)) == "0011001y1..."

    calc4 = calculation_from_prefix(
        4, [((3, 0, 0), -1), ((3, 0), +1), ((1,), +1)], (3, 0, 0, 2)
    )
    assert format_calculation(calc4) == "30y0y'2..."
    with pytest.raises(DomainError):
        calculation_from_prefix(4, [((3, 0, 0), -1)], (3,))
