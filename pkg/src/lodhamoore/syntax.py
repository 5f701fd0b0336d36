"""Textual syntax for group words and calculations.

Group words are whitespace-separated letters `x<i>`, `x<i>[alpha]`, `y[s]`,
each with an optional integer exponent `^k`; an optional leading `n=<arity>`
header fixes the alphabet.  Calculations interleave plain letters with `y`
and `y'` (the inverse); `(per)*` ends an eventually periodic tail and `...`
an unknown one.
"""

from __future__ import annotations

import re

from .words import (
    EvPeriodicWord,
    ParseError,
    Word,
    check_arity,
    format_word,
    parse_point,
    parse_word,
)
from .transducer import OPEN, Calculation, YTok
from .core import GroupWord, StandardForm, XLetter, YLetter, y_index_violation
from . import thompson

_TOKEN = re.compile(
    r"(?P<kind>[xy])(?P<index>\d+)?(?:\[(?P<arg>[^\]]*)\])?(?:\^(?P<exp>-?\d+))?$"
)


def split_header(text: str) -> tuple[int | None, str]:
    """Strip an optional leading n=<arity> header."""
    text = text.strip()
    m = re.match(r"n\s*=\s*(\d+)\s*(.*)$", text, re.DOTALL)
    if m:
        return int(m.group(1)), m.group(2)
    return None, text


def parse_group_word(text: str, n: int) -> GroupWord:
    """Parse a group word; rejects y indices outside the generating family
    with a diagnostic naming the violated clause."""
    check_arity(n)
    letters: list = []
    for token in text.split():
        m = _TOKEN.match(token)
        if m is None:
            raise ParseError(f"bad letter {token!r}")
        kind = m.group("kind")
        exp = int(m.group("exp")) if m.group("exp") else 1
        if exp == 0:
            continue
        sign = 1 if exp > 0 else -1
        if kind == "x":
            if m.group("index") is None:
                raise ParseError(f"x letter needs an index: {token!r}")
            i = int(m.group("index"))
            if not 0 <= i <= n - 2:
                raise ParseError(f"x index {i} out of range for arity {n}")
            alpha = parse_word(m.group("arg") or "", n)
            letters.extend([XLetter(i, alpha, sign)] * abs(exp))
        else:
            if m.group("index") is not None:
                raise ParseError(f"y letter takes a bracketed index: {token!r}")
            if m.group("arg") is None:
                raise ParseError(f"y letter needs an index: {token!r}")
            s = parse_word(m.group("arg"), n)
            reason = y_index_violation(n, s)
            if reason is not None:
                raise ParseError(f"y[{m.group('arg')}] is not a generator: {reason}")
            letters.extend([YLetter(s, sign)] * abs(exp))
    return GroupWord(n, tuple(letters))


def format_group_word(word: GroupWord) -> str:
    parts = []
    for letter in word.letters:
        if isinstance(letter, XLetter):
            body = f"x{letter.i}"
            if letter.alpha:
                body += f"[{format_word(letter.alpha, word.n)}]"
        else:
            body = f"y[{format_word(letter.s, word.n)}]"
        parts.append(body + ("" if letter.sign == 1 else "^-1"))
    return " ".join(parts)


def format_form(form: StandardForm) -> str:
    """Render a standard form as a parseable group word."""
    parts = []
    for t, e in thompson.to_x_normal_form(form.f).word():
        j, i = divmod(t, form.n - 1)
        body = f"x{i}"
        if j:
            body += f"[{format_word((form.n - 1,) * j, form.n)}]"
        parts.append(body + (f"^{e}" if e != 1 else ""))
    for s, t in form.ys:
        parts.append(f"y[{format_word(s, form.n)}]" + (f"^{t}" if t != 1 else ""))
    return " ".join(parts) if parts else "1"


def parse_form_text(text: str, n: int) -> GroupWord:
    if text.strip() == "1":
        return GroupWord(n, ())
    return parse_group_word(text, n)


def parse_calculation(text: str, n: int) -> Calculation:
    """Parse a calculation such as `y 0 y' 2 (0)*` or `30y0y'2...`."""
    check_arity(n)
    if n > 10:
        raise ParseError("calculation syntax is only defined for arity <= 10")
    items: list = []
    tail = None
    pos = 0
    text = text.strip()
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch == "y":
            if pos + 1 < len(text) and text[pos + 1] == "'":
                items.append(YTok(-1))
                pos += 2
            else:
                items.append(YTok(+1))
                pos += 1
        elif ch.isdigit():
            letter = int(ch)
            if letter >= n:
                raise ParseError(f"letter {letter} out of range for arity {n}")
            items.append(letter)
            pos += 1
        elif text.startswith("...", pos):
            if pos + 3 != len(text):
                raise ParseError("'...' must end the calculation")
            tail = OPEN
            pos += 3
        elif ch == "(":
            rest = text[pos:]
            if not rest.endswith(")*"):
                raise ParseError("unterminated periodic tail")
            per = parse_word(rest[1:-2], n)
            if not per:
                raise ParseError("period must be nonempty")
            if pos + len(rest) != len(text):
                raise ParseError("periodic tail must end the calculation")
            tail = EvPeriodicWord(n, (), per)
            pos = len(text)
        else:
            raise ParseError(f"bad character {ch!r} in calculation")
    if tail is not None and isinstance(tail, EvPeriodicWord):
        # absorb trailing plain letters into the tail preperiod
        k = len(items)
        while k > 0 and isinstance(items[k - 1], int):
            k -= 1
        tail = tail.prepend(tuple(items[k:]))
        items = items[:k]
    return Calculation(n, tuple(items), tail)


def form_json(form: StandardForm) -> dict:
    return {
        "schema": 1,
        "arity": form.n,
        "f": [
            [format_word(a, form.n), format_word(b, form.n)]
            for a, b in zip(form.f.dom, form.f.ran)
        ],
        "ys": [[format_word(s, form.n), t] for s, t in form.ys],
    }
