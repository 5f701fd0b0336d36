"""Finite and eventually-periodic words over the n-letter alphabet {0, ..., n-1}.

Finite words are plain tuples of ints; the arity travels on the composite
objects (points, tree pairs, group words) that own them.  Eventually-periodic
words are kept in a canonical form (primitive period, shortest preperiod) so
that equality of points of the n-ary Cantor space is structural equality.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum

Word = tuple[int, ...]

EMPTY: Word = ()


class ParseError(ValueError):
    """Malformed textual input."""


class DomainError(ValueError):
    """Operation applied outside its domain (undefined action, bad arity...)."""


def check_arity(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"arity must be an integer >= 2, got {n!r}")


def check_word(n: int, w: Word) -> None:
    for a in w:
        if not 0 <= a < n:
            raise DomainError(f"letter {a} out of range for arity {n}")


class PrefixRelation(Enum):
    PROPER_PREFIX = "proper_prefix"  # s is a proper prefix of t
    EQUAL = "equal"
    EXTENDS = "extends"              # t is a proper prefix of s
    INDEPENDENT = "independent"


def prefix_relation(s: Word, t: Word) -> PrefixRelation:
    """Classify the pair (s, t) as one of prefix / equal / extension / independent."""
    m = min(len(s), len(t))
    if s[:m] != t[:m]:
        return PrefixRelation.INDEPENDENT
    if len(s) == len(t):
        return PrefixRelation.EQUAL
    return PrefixRelation.PROPER_PREFIX if len(s) < len(t) else PrefixRelation.EXTENDS


def is_prefix(s: Word, t: Word) -> bool:
    """True iff s is a (not necessarily proper) prefix of t."""
    return len(s) <= len(t) and t[: len(s)] == s


def independent(s: Word, t: Word) -> bool:
    m = min(len(s), len(t))
    return s[:m] != t[:m]


def word_key(w: Word, n: int) -> Word:
    """Sort key realizing the word order: extensions come before their prefixes,
    otherwise first-difference order.  The end of a word compares as the
    out-of-alphabet letter n."""
    return w + (n,)


def word_lt(s: Word, t: Word, n: int) -> bool:
    """Strict order on distinct finite words: s < t iff t is a proper prefix of s,
    or s and t are independent and s has the smaller first differing letter."""
    if s == t:
        raise DomainError("word order is strict; arguments are equal")
    return word_key(s, n) < word_key(t, n)


def digit_sum_mod(s: Word, m: int) -> int:
    if m <= 0:
        raise DomainError("modulus must be positive")
    return sum(s) % m


def _primitive_root(w: Word) -> Word:
    """Shortest word whose power equals w."""
    k = len(w)
    for d in range(1, k + 1):
        if k % d == 0 and w[:d] * (k // d) == w:
            return w[:d]
    return w


@dataclass(frozen=True)
class EvPeriodicWord:
    """A point of the n-ary Cantor space with eventually periodic expansion.

    Stored canonically: the period is primitive and the preperiod is shortest
    (its last letter differs from the last letter of the rotated-in period),
    so two instances denote the same point iff they are equal.
    """

    n: int
    pre: Word
    per: Word

    def __post_init__(self) -> None:
        check_arity(self.n)
        if not self.per:
            raise DomainError("period must be nonempty")
        check_word(self.n, self.pre)
        check_word(self.n, self.per)
        pre, per = self.pre, _primitive_root(self.per)
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = per[-1:] + per[:-1]
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "per", per)

    def letter(self, i: int) -> int:
        if i < len(self.pre):
            return self.pre[i]
        return self.per[(i - len(self.pre)) % len(self.per)]

    def prefix(self, k: int) -> Word:
        """The first k letters of the expansion."""
        if k <= len(self.pre):
            return self.pre[:k]
        body = k - len(self.pre)
        reps = -(-body // len(self.per))
        return self.pre + (self.per * reps)[:body]

    def drop(self, k: int) -> "EvPeriodicWord":
        """The tail after removing the first k letters."""
        if k <= len(self.pre):
            return EvPeriodicWord(self.n, self.pre[k:], self.per)
        shift = (k - len(self.pre)) % len(self.per)
        return EvPeriodicWord(self.n, EMPTY, self.per[shift:] + self.per[:shift])

    def prepend(self, s: Word) -> "EvPeriodicWord":
        check_word(self.n, s)
        return EvPeriodicWord(self.n, s + self.pre, self.per)

    def startswith(self, s: Word) -> bool:
        return self.prefix(len(s)) == s

    def letters(self) -> set[int]:
        """The set of letters occurring in the expansion (eventually and before)."""
        return set(self.pre) | set(self.per)

    def tail_letters(self, k: int) -> set[int]:
        """Letters occurring at positions >= k."""
        if k <= len(self.pre):
            return set(self.pre[k:]) | set(self.per)
        return set(self.per)

    def __str__(self) -> str:
        return format_point(self)


def canonicalize_ep(n: int, pre: Word, per: Word) -> EvPeriodicWord:
    """Build the canonical eventually-periodic word pre per per per ..."""
    return EvPeriodicWord(n, tuple(pre), tuple(per))


def ep_const(n: int, letter: int) -> EvPeriodicWord:
    return EvPeriodicWord(n, EMPTY, (letter,))


def ep_point_lt(x: EvPeriodicWord, y: EvPeriodicWord) -> bool:
    """Lexicographic order on points; raises on equal points."""
    if x.n != y.n:
        raise DomainError("points over different alphabets")
    if x == y:
        raise DomainError("point order is strict; arguments are equal")
    horizon = len(x.pre) + len(y.pre) + math.lcm(len(x.per), len(y.per))
    return x.prefix(horizon) < y.prefix(horizon)


def all_words(n: int, max_len: int):
    """All finite words over {0,...,n-1} of length <= max_len, shortest first."""
    for k in range(max_len + 1):
        yield from map(tuple, itertools.product(range(n), repeat=k))


# Textual syntax: digits for n <= 10, otherwise bracketed comma-separated
# integers; eventually periodic points are written pre(per)*.

def format_word(w: Word, n: int) -> str:
    if n <= 10:
        return "".join(str(a) for a in w)
    return "[" + ",".join(str(a) for a in w) + "]"


def _parse_letters(text: str, n: int) -> Word:
    text = text.strip()
    if not text:
        return EMPTY
    if text.startswith("["):
        if not text.endswith("]"):
            raise ParseError(f"unterminated letter list: {text!r}")
        inner = text[1:-1].strip()
        if not inner:
            return EMPTY
        try:
            letters = tuple(int(p) for p in inner.split(","))
        except ValueError as exc:
            raise ParseError(f"bad letter list {text!r}") from exc
    else:
        if not text.isdigit():
            raise ParseError(f"expected digits, got {text!r}")
        letters = tuple(int(c) for c in text)
    for a in letters:
        if not 0 <= a < n:
            raise ParseError(f"letter {a} out of range for arity {n}")
    return letters


def parse_word(text: str, n: int) -> Word:
    """Parse a finite word."""
    check_arity(n)
    return _parse_letters(text, n)


def format_point(x: EvPeriodicWord) -> str:
    return f"{format_word(x.pre, x.n)}({format_word(x.per, x.n)})*"


def parse_point(text: str, n: int) -> EvPeriodicWord:
    """Parse an eventually periodic point written pre(per)*."""
    check_arity(n)
    text = text.strip()
    if not text.endswith(")*"):
        raise ParseError(f"point must end with (per)*: {text!r}")
    open_idx = text.rfind("(")
    if open_idx < 0:
        raise ParseError(f"missing '(' in point: {text!r}")
    pre = _parse_letters(text[:open_idx], n)
    per = _parse_letters(text[open_idx + 1 : -2], n)
    if not per:
        raise ParseError("period must be nonempty")
    return EvPeriodicWord(n, pre, per)
