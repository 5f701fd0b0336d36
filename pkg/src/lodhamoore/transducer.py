"""The homeomorphism y of the n-ary Cantor space as a finite-state transducer.

The defining rules (k ranges over the middle letters 1..n-2):

    y(00z)      = 0 y(z)          y'(0z)       = 00 y'(z)
    y(0kz)      = k z             y'(kz)       = 0k z
    y(0(n-1)z)  = (n-1)0 y'(z)    y'((n-1)0z)  = 0(n-1) y(z)
    y(kz)       = (n-1)k z        y'((n-1)kz)  = k z
    y((n-1)z)   = (n-1)(n-1) y(z) y'((n-1)(n-1)z) = (n-1) y'(z)

A rule consumes one or two input letters; once a middle letter is consumed the
machine enters the copying state and y has vanished.  Calculations are words
interleaving plain letters with y / y' tokens, optionally ending in an
eventually periodic tail or an open tail "..." of unknown letters.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import (
    DomainError,
    EMPTY,
    EvPeriodicWord,
    Word,
    check_arity,
    check_word,
    format_word,
)

COPY = 0  # transducer state after y vanished; otherwise the state is the sign


@dataclass(frozen=True)
class YTok:
    """A y^{+1} or y^{-1} token inside a calculation."""

    sign: int

    def __post_init__(self) -> None:
        if self.sign not in (+1, -1):
            raise DomainError(f"y exponent token must be +-1, got {self.sign}")


YP = YTok(+1)
YN = YTok(-1)


class _OpenTail:
    """Marker for an unspecified infinite continuation, printed '...'."""

    def __repr__(self) -> str:  # pragma: no cover
        return "OPEN"


OPEN = _OpenTail()


def rule_consumes_two(n: int, sign: int, first: int) -> bool:
    """Whether the rule at (sign, first letter) inspects a second letter."""
    return (sign == +1 and first == 0) or (sign == -1 and first == n - 1)


def y_step(n: int, sign: int, first: int, second: int | None):
    """One transducer step.

    Returns (emitted letters, next state, consumed letter count); the next
    state is +1, -1 or COPY.  Raises if the rule needs a second letter and
    none is supplied.
    """
    check_arity(n)
    if sign not in (+1, -1):
        raise DomainError(f"sign must be +-1, got {sign}")
    if not 0 <= first < n:
        raise DomainError(f"letter {first} out of range")
    top = n - 1
    if sign == +1:
        if first == 0:
            if second is None:
                raise DomainError("rule y(0?) needs a second letter")
            if second == 0:
                return (0,), +1, 2
            if second == top:
                return (top, 0), -1, 2
            return (second,), COPY, 2
        if first == top:
            return (top, top), +1, 1
        return (top, first), COPY, 1
    if first == top:
        if second is None:
            raise DomainError("rule y'((n-1)?) needs a second letter")
        if second == 0:
            return (0, top), +1, 2
        if second == top:
            return (top,), -1, 2
        return (second,), COPY, 2
    if first == 0:
        return (0, 0), -1, 1
    return (0, first), COPY, 1


def y_apply_finite(n: int, sign: int, w: Word):
    """Push y^sign through a finite word as far as the rules allow.

    Returns (out, residue, unconsumed): residue is the pending sign if a y
    remains, or None if y vanished.  When a rule would need a letter past the
    end of w, the walk stops with that single letter unconsumed; the resulting
    word reads out + y^residue + unconsumed.  After vanishing, the remainder
    is copied verbatim into out and also reported as unconsumed.
    """
    check_word(n, w)
    out: list[int] = []
    i = 0
    while i < len(w):
        first = w[i]
        if rule_consumes_two(n, sign, first) and i + 1 >= len(w):
            return tuple(out), sign, w[i:]
        second = w[i + 1] if i + 1 < len(w) else None
        emitted, state, consumed = y_step(n, sign, first, second)
        out.extend(emitted)
        i += consumed
        if state == COPY:
            rest = w[i:]
            out.extend(rest)
            return tuple(out), None, rest
        sign = state
    return tuple(out), sign, EMPTY


def y_apply_ep(sign: int, x: EvPeriodicWord) -> EvPeriodicWord:
    """The image y^sign(x); total since y is a homeomorphism.

    If y never vanishes the output is detected as eventually periodic by
    cycling over (state, position within the period).
    """
    n = x.n
    out: list[int] = []
    pos = 0
    seen: dict[tuple[int, int], tuple[int, int]] = {}
    while True:
        if pos >= len(x.pre):
            key = (sign, (pos - len(x.pre)) % len(x.per))
            if key in seen:
                _, out_start = seen[key]
                return EvPeriodicWord(n, tuple(out[:out_start]), tuple(out[out_start:]))
            seen[key] = (pos, len(out))
        emitted, state, consumed = y_step(n, sign, x.letter(pos), x.letter(pos + 1))
        out.extend(emitted)
        pos += consumed
        if state == COPY:
            return x.drop(pos).prepend(tuple(out))
        sign = state


def is_potential_cancellation(n: int, t1: int, sigma: Word, t2: int) -> bool:
    """Whether y^{t1} sigma y^{t2} is a potential cancellation: substituting
    y^{t1} sigma as far as possible must leave exactly sigma' y^{-t2}."""
    out, residue, unconsumed = y_apply_finite(n, t1, sigma)
    return residue == -t2 and unconsumed == EMPTY


@dataclass(frozen=True)
class Calculation:
    """A word over letters and y/y' tokens, with an optional infinite tail."""

    n: int
    items: tuple
    tail: EvPeriodicWord | _OpenTail | None = None

    def __post_init__(self) -> None:
        check_arity(self.n)
        for it in self.items:
            if isinstance(it, YTok):
                continue
            if not (isinstance(it, int) and 0 <= it < self.n):
                raise DomainError(f"bad calculation item {it!r}")
        if isinstance(self.tail, EvPeriodicWord) and self.tail.n != self.n:
            raise DomainError("tail arity mismatch")

    def y_positions(self) -> list[int]:
        return [i for i, it in enumerate(self.items) if isinstance(it, YTok)]

    def __str__(self) -> str:
        return format_calculation(self)


def format_calculation(c: Calculation) -> str:
    parts = []
    for it in c.items:
        if isinstance(it, YTok):
            parts.append("y" if it.sign > 0 else "y'")
        else:
            parts.append(format_word((it,), c.n))
    if isinstance(c.tail, EvPeriodicWord):
        parts.append(f"{format_word(c.tail.pre, c.n)}({format_word(c.tail.per, c.n)})*")
    elif c.tail is OPEN:
        parts.append("...")
    return "".join(parts)


def _letters_after(items: tuple, pos: int) -> tuple[Word, bool]:
    """Plain letters following position pos, and whether they run to the end."""
    letters = []
    for it in items[pos + 1 :]:
        if isinstance(it, YTok):
            return tuple(letters), False
        letters.append(it)
    return tuple(letters), True


def substitute_once(c: Calculation) -> Calculation | None:
    """Apply one substitution at the rightmost substitutable y, or None.

    A y is substitutable when the rule matching its following letters can
    fire: on a finite calculation the rules apply up to the word boundary; an
    eventually periodic tail supplies letters indefinitely; past an open tail
    a full two-letter window is required.
    """
    items = c.items
    for pos in reversed(c.y_positions()):
        block, to_end = _letters_after(items, pos)
        sign = items[pos].sign
        if to_end and isinstance(c.tail, EvPeriodicWord):
            first = block[0] if block else c.tail.letter(0)
            second = block[1] if len(block) > 1 else c.tail.letter(1 - len(block))
        elif to_end and c.tail is OPEN:
            if len(block) < 2:
                continue
            first, second = block[0], block[1]
        else:
            if not block:
                continue
            first = block[0]
            if rule_consumes_two(c.n, sign, first) and len(block) < 2:
                continue
            second = block[1] if len(block) > 1 else None
        emitted, state, consumed = y_step(c.n, sign, first, second)
        head = list(items[:pos])
        head.extend(emitted)
        if state != COPY:
            head.append(YTok(state))
        if consumed <= len(block):
            head.extend(block[consumed:])
            rest = items[pos + 1 + len(block) :]
            return Calculation(c.n, tuple(head) + tuple(rest), c.tail)
        # consumed letters reach into the eventually periodic tail
        return Calculation(c.n, tuple(head), c.tail.drop(consumed - len(block)))
    return None


def substitute_all(c: Calculation) -> Calculation:
    """Substitute until no rule applies.

    With an eventually periodic tail, a y adjacent to the tail is absorbed in
    the limit via y_apply_ep (the y either vanishes or escapes to infinity).
    """
    while True:
        items = c.items
        ys = c.y_positions()
        if ys and isinstance(c.tail, EvPeriodicWord):
            pos = ys[-1]
            block, to_end = _letters_after(items, pos)
            if to_end:
                image = y_apply_ep(items[pos].sign, c.tail.prepend(block))
                c = Calculation(c.n, items[:pos], image)
                continue
        step = substitute_once(c)
        if step is None:
            return c
        c = step


def calculation_from_prefix(
    n: int, factors, prefix: Word, tail=OPEN
) -> Calculation:
    """The calculation of a point known by a finite prefix under y_s factors
    applied in order: each matching factor contributes a marker after its
    cone prefix, with no substitution performed.

    The factor indices need not lie in the generating family.  Raises when a
    factor's cone cannot be decided from the known letters.
    """
    check_arity(n)
    check_word(n, prefix)
    marks: dict[int, list[YTok]] = {}
    for s, sign in factors:
        s = tuple(s)
        check_word(n, s)
        m = min(len(s), len(prefix))
        if s[:m] != prefix[:m]:
            continue  # the point is outside the cone; the factor fixes it
        if len(s) > len(prefix):
            raise DomainError(
                f"calculation not defined: prefix too short to match {s}"
            )
        marks.setdefault(len(s), []).insert(0, YTok(sign))  # later factors go left
    items: list = []
    for d in range(len(prefix) + 1):
        items.extend(marks.get(d, ()))
        if d < len(prefix):
            items.append(prefix[d])
    return Calculation(n, tuple(items), tail)


def contains_potential_cancellation(c: Calculation) -> bool:
    """Whether some subword y^{t1} sigma y^{t2} is a potential cancellation."""
    ys = c.y_positions()
    for a, b in zip(ys, ys[1:]):
        sigma = c.items[a + 1 : b]
        if is_potential_cancellation(c.n, c.items[a].sign, tuple(sigma), c.items[b].sign):
            return True
    return False


def exponent(c: Calculation) -> int:
    """Number of y tokens whose whole suffix stays inside {0, n-1, y, y'}.

    Defined only for calculations without potential cancellations and with a
    determined tail.
    """
    if contains_potential_cancellation(c):
        raise DomainError("exponent undefined: calculation contains a potential cancellation")
    if c.tail is OPEN:
        raise DomainError("exponent undefined for an open-ended calculation")
    allowed = {0, c.n - 1}
    tail_ok = not isinstance(c.tail, EvPeriodicWord) or c.tail.letters() <= allowed
    count = 0
    for pos in c.y_positions():
        suffix = {it for it in c.items[pos + 1 :] if not isinstance(it, YTok)}
        if tail_ok and suffix <= allowed:
            count += 1
    return count
