"""Elements of the n-adic group G0(n) as words over the infinite generating set.

The generating set joins the Thompson generators x_{i[alpha]} with the twisted
generators y_s, where the index s avoids the shapes eps, 0^i, (n-1)^i and has
digit sum 0 mod n-1.  The working representation is the standard form

    f . y_{s1}^{t1} ... y_{sm}^{tm}      (s1 < s2 < ... < sm in the word order)

with f a reduced tree pair.  Words act left to right: (w1 w2)(z) = w2(w1(z)).

Normalization runs the four-step pipeline: (1) push all tree-pair letters to
the left and sort the y-part, (2) remove potential cancellations by
expand-rearrange moves and cancellations, (3) undo expansion images by
contraction moves, (4) keep f as the reduced tree pair.  The result is the
unique normal form of the element, which solves the word problem.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .words import (
    DomainError,
    EMPTY,
    EvPeriodicWord,
    Word,
    check_arity,
    check_word,
    format_word,
    independent,
    is_prefix,
    word_key,
    word_lt,
)
from .transducer import (
    Calculation,
    YTok,
    exponent as calculation_exponent,
    is_potential_cancellation,
    y_apply_ep,
)
from . import thompson
from .thompson import TreePair, apply_ep, apply_prefix, compose, generator, identity


# -- generator letters and words --------------------------------------------

def y_index_violation(n: int, s: Word) -> str | None:
    """Reason string if y_s is not a generator, else None."""
    if not s:
        return "index is the empty word"
    if all(a == 0 for a in s):
        return "index is a power of 0"
    if all(a == n - 1 for a in s):
        return f"index is a power of {n - 1}"
    if n > 2 and sum(s) % (n - 1) != 0:
        return f"digit sum {sum(s)} is not 0 mod {n - 1}"
    return None


def valid_y_index(n: int, s: Word) -> bool:
    return y_index_violation(n, s) is None


def check_y_index(n: int, s: Word) -> None:
    reason = y_index_violation(n, s)
    if reason is not None:
        raise DomainError(f"y[{format_word(s, n)}] is not a generator: {reason}")


@dataclass(frozen=True)
class XLetter:
    """One letter x_{i[alpha]}^{+-1}."""

    i: int
    alpha: Word
    sign: int


@dataclass(frozen=True)
class YLetter:
    """One letter y_s^{+-1}."""

    s: Word
    sign: int


@dataclass(frozen=True)
class GroupWord:
    n: int
    letters: tuple

    def __post_init__(self) -> None:
        check_arity(self.n)
        for letter in self.letters:
            if isinstance(letter, XLetter):
                if not 0 <= letter.i <= self.n - 2:
                    raise DomainError(f"x index {letter.i} out of range")
                check_word(self.n, letter.alpha)
            elif isinstance(letter, YLetter):
                check_y_index(self.n, letter.s)
            else:
                raise DomainError(f"bad letter {letter!r}")
            if letter.sign not in (+1, -1):
                raise DomainError("letter exponents must be +-1")

    def inverse(self) -> "GroupWord":
        flipped = []
        for letter in reversed(self.letters):
            if isinstance(letter, XLetter):
                flipped.append(XLetter(letter.i, letter.alpha, -letter.sign))
            else:
                flipped.append(YLetter(letter.s, -letter.sign))
        return GroupWord(self.n, tuple(flipped))

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        if self.n != other.n:
            raise DomainError("arity mismatch")
        return GroupWord(self.n, self.letters + other.letters)


# -- standard forms ----------------------------------------------------------

YRuns = tuple[tuple[Word, int], ...]


@dataclass(frozen=True)
class StandardForm:
    """f . y_{s1}^{t1} ... y_{sm}^{tm} with strictly increasing indices."""

    n: int
    f: TreePair
    ys: YRuns

    def __post_init__(self) -> None:
        # forms validate structure only; membership of the indices in the
        # generating family is enforced at the word / parser boundary (the
        # move calculus itself is index-agnostic)
        check_arity(self.n)
        if self.f.n != self.n:
            raise DomainError("tree pair arity mismatch")
        prev = None
        for s, t in self.ys:
            check_word(self.n, s)
            if not s:
                raise DomainError("empty y index in standard form")
            if t == 0:
                raise DomainError("zero exponent in standard form")
            if prev is not None and not word_lt(prev, s, self.n):
                raise DomainError("standard form indices must strictly increase")
            prev = s

    def depth(self) -> int | None:
        """Minimum index length; None encodes infinite depth (pure F element)."""
        return min((len(s) for s, _ in self.ys), default=None)

    def is_identity(self) -> bool:
        return self.f.is_identity() and not self.ys

    def __str__(self) -> str:
        parts = [] if self.f.is_identity() else [str(self.f)]
        for s, t in self.ys:
            parts.append(f"y[{format_word(s, self.n)}]" + (f"^{t}" if t != 1 else ""))
        return " ".join(parts) if parts else "1"


class NormalForm(StandardForm):
    """A standard form with no potential cancellations or contractions and a
    reduced tree pair: the unique representative of its element."""

    def __post_init__(self) -> None:
        super().__post_init__()
        letters = _expand_runs(self.ys)
        pc = _find_pc(self.n, letters)
        if pc is not None:
            raise DomainError("normal form may not contain a potential cancellation")
        if _contraction_sites(self.n, letters):
            raise DomainError("normal form may not contain a potential contraction")


def _expand_runs(ys: YRuns) -> list[tuple[Word, int]]:
    letters = []
    for s, t in ys:
        letters.extend([(s, +1 if t > 0 else -1)] * abs(t))
    return letters


def _aggregate(letters) -> YRuns:
    runs: list[tuple[Word, int]] = []
    for s, sign in letters:
        if runs and runs[-1][0] == s:
            runs[-1] = (s, runs[-1][1] + sign)
        else:
            runs.append((s, sign))
    return tuple((s, t) for s, t in runs if t != 0)


def _assert_weak_standard(n: int, letters) -> None:
    # a proper prefix may never precede its extension
    for a in range(len(letters)):
        sa = letters[a][0]
        for b in range(a + 1, len(letters)):
            sb = letters[b][0]
            if is_prefix(sa, sb) and sa != sb:
                raise AssertionError(
                    f"weak-standard violation: {sa} precedes its extension {sb}"
                )


def _sort_merge(n: int, letters) -> list[tuple[Word, int]]:
    """Commuting moves to sorted order, then cancellation of opposite pairs."""
    _assert_weak_standard(n, letters)
    ordered = sorted(letters, key=lambda lt: word_key(lt[0], n))
    out: list[tuple[Word, int]] = []
    for s, sign in ordered:
        if out and out[-1][0] == s and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((s, sign))
    return out


def _expansion_children(n: int, s: Word, sign: int) -> list[tuple[Word, int]]:
    top = n - 1
    if sign > 0:
        return [(s + (0,), +1), (s + (top, 0), -1), (s + (top, top), +1)]
    return [(s + (0, 0), -1), (s + (0, top), +1), (s + (top,), -1)]


class _Blocked(Exception):
    """An expand-rearrange move hit a factor the tree letter cannot act on."""

    def __init__(self, pos: int):
        self.pos = pos


def _cone_generator(n: int, s: Word, sign: int) -> TreePair:
    g = generator(0, s, n)
    return g if sign > 0 else thompson.invert(g)


def _er(n: int, f: TreePair, letters, pos: int):
    """Expand-rearrange at letters[pos]: the factor is replaced by its three
    expansion children and x_{0[s]}^{sign} passes left into f, acting on every
    preceding index."""
    s, sign = letters[pos]
    g = _cone_generator(n, s, sign)
    mapped = []
    for k in range(pos):
        v, w = letters[k]
        if independent(v, s):
            mapped.append((v, w))
            continue
        img = apply_prefix(g, v)
        if img is None:
            raise _Blocked(k)
        mapped.append((img, w))
    new_letters = mapped + _expansion_children(n, s, sign) + list(letters[pos + 1 :])
    return compose(f, g), _sort_merge(n, new_letters)


def _first_of_run(letters, pos: int) -> int:
    while pos > 0 and letters[pos - 1] == letters[pos]:
        pos -= 1
    return pos


def _er_unblocked(n: int, f: TreePair, letters, pos: int):
    """Expand-rearrange with recursive unblocking of the causing factors."""
    target = letters[pos]
    while True:
        try:
            return _er(n, f, letters, pos)
        except _Blocked as blocked:
            f, letters = _er_unblocked(
                n, f, letters, _first_of_run(letters, blocked.pos)
            )
            pos = letters.index(target)


def _raise_depth(n: int, f: TreePair, letters, depth: int):
    """Expand factors until every index has length >= depth.

    Expanding a shortest factor strictly shrinks the population at the minimal
    length, so the loop terminates.
    """
    while True:
        shallow = [k for k, (s, _) in enumerate(letters) if len(s) < depth]
        if not shallow:
            return f, letters
        k = min(shallow, key=lambda k: (len(letters[k][0]), k))
        f, letters = _er_unblocked(n, f, letters, _first_of_run(letters, k))


# -- potential cancellations --------------------------------------------------

def _adjacent_pc_pairs(n: int, letters):
    """All adjacent pairs (inner_pos, outer_pos) that are potential
    cancellations, in the scan order: outer index first, then inner."""
    index_set = {s for s, _ in letters}
    found = []
    seen = set()
    for b, (s, ts) in enumerate(letters):
        for a in range(b):
            u, tu = letters[a]
            if u == s or not is_prefix(s, u):
                continue
            if (u, tu, s, ts) in seen:
                continue
            seen.add((u, tu, s, ts))
            if any(u[:d] in index_set for d in range(len(s) + 1, len(u))):
                continue  # not adjacent: some index strictly between
            sigma = u[len(s):]
            if not set(sigma) <= {0, n - 1}:
                continue
            if is_potential_cancellation(n, ts, sigma, tu):
                found.append((a, b))
    found.sort(key=lambda ab: (word_key(letters[ab[1]][0], n), word_key(letters[ab[0]][0], n)))
    return found


def _find_pc(n: int, letters):
    pairs = _adjacent_pc_pairs(n, letters)
    return pairs[0] if pairs else None


def _append_letter_no_pc(n: int, f: TreePair, clean, s: Word, sign: int):
    """Append one y letter to a cancellation-free prefix and restore the
    cancellation-free state (the inductive step of pipeline step 2)."""
    if any(is_prefix(v, s) and v != s for v, _ in clean):
        # a factor indexed by a proper prefix of s must first be expanded deeper
        f, clean = _raise_depth(n, f, clean, len(s) + 1)
    letters = _sort_merge(n, clean + [(s, sign)])
    guard = 0
    while True:
        pc = _find_pc(n, letters)
        if pc is None:
            return f, letters
        guard += 1
        if guard > 10000:
            raise AssertionError("potential-cancellation removal failed to settle")
        _, outer_pos = pc
        f, letters = _er_unblocked(n, f, letters, _first_of_run(letters, outer_pos))


def _remove_pcs(n: int, f: TreePair, letters):
    clean: list[tuple[Word, int]] = []
    for s, sign in letters:
        f, clean = _append_letter_no_pc(n, f, clean, s, sign)
    return f, clean


# -- potential contractions ----------------------------------------------------

def _contraction_sites(n: int, letters):
    """All (s, kind) sites eligible for a contraction move, deepest site first."""
    agg: dict[Word, int] = {}
    for s, sign in letters:
        agg[s] = agg.get(s, 0) + sign
    top = n - 1
    sites = []
    for u, t in agg.items():
        if t > 0 and u and u[-1] == 0:
            s = u[:-1]
            if (
                agg.get(s + (top, 0), 0) < 0
                and agg.get(s + (top, top), 0) > 0
                and s + (top,) not in agg
            ):
                sites.append((s, 1))
        if t < 0 and len(u) >= 2 and u[-2:] == (0, 0):
            s = u[:-2]
            if (
                agg.get(s + (0, top), 0) > 0
                and agg.get(s + (top,), 0) < 0
                and s + (0,) not in agg
            ):
                sites.append((s, 2))
    sites.sort(key=lambda sk: (-len(sk[0]), word_key(sk[0], n), sk[1]))
    return sites


def _contract(n: int, f: TreePair, letters, s: Word, kind: int):
    """One contraction move at site s: consume the expansion image and emit
    x_{0[s]}^{-sign} y_s^{sign}, rearranging the tree letter into f."""
    top = n - 1
    if kind == 1:
        consumed = [(s + (0,), +1), (s + (top, 0), -1), (s + (top, top), +1)]
        g = _cone_generator(n, s, -1)
        replacement = (s, +1)
    else:
        consumed = [(s + (0, 0), -1), (s + (0, top), +1), (s + (top,), -1)]
        g = _cone_generator(n, s, +1)
        replacement = (s, -1)
    remaining = list(letters)
    for item in consumed:
        remaining.remove(item)
    out = []
    key_s = word_key(s, n)
    for v, w in remaining:
        if word_key(v, n) < key_s and not independent(v, s):
            img = apply_prefix(g, v)
            if img is None:
                raise AssertionError("contraction rearrangement must be defined")
            out.append((img, w))
        else:
            out.append((v, w))
    # the new y_s is created at the consumed subword's position: before any
    # factor indexed by a prefix of s (the tree letter never crosses those)
    at = next((k for k, (v, _) in enumerate(out) if key_s < word_key(v, n)), len(out))
    out.insert(at, replacement)
    return compose(f, g), _sort_merge(n, out)


def _remove_contractions(n: int, f: TreePair, letters):
    while True:
        sites = _contraction_sites(n, letters)
        if not sites:
            return f, letters
        s, kind = sites[0]
        f, letters = _contract(n, f, letters, s, kind)


# -- step 1: standardization ---------------------------------------------------

def _push_tree_letter(n: int, f: TreePair, letters, g: TreePair):
    """Rearrange the tree-pair letter g left across the whole y part,
    expanding any factor it cannot act on."""
    while True:
        mapped = []
        blocked = None
        for k, (v, w) in enumerate(letters):
            img = apply_prefix(g, v)
            if img is None:
                blocked = k
                break
            mapped.append((img, w))
        if blocked is None:
            return compose(f, g), _sort_merge(n, mapped)
        f, letters = _er_unblocked(n, f, letters, _first_of_run(letters, blocked))


def _insert_y_letter(n: int, f: TreePair, letters, s: Word, sign: int):
    """Insert y_s^{sign} at its sorted position, expanding any factor indexed
    by a proper prefix of s out of the way first."""
    while True:
        blockers = [
            k for k, (v, _) in enumerate(letters) if is_prefix(v, s) and v != s
        ]
        if not blockers:
            return f, _sort_merge(n, letters + [(s, sign)])
        # deepest blocker first; new blockers from its expansion are deeper
        k = min(blockers, key=lambda k: word_key(letters[k][0], n))
        f, letters = _er_unblocked(n, f, letters, _first_of_run(letters, k))


def _standardize_letters(word: GroupWord, f: TreePair | None = None, letters=None):
    n = word.n
    f = identity(n) if f is None else f
    letters = [] if letters is None else list(letters)
    for letter in word.letters:
        if isinstance(letter, XLetter):
            g = generator(letter.i, letter.alpha, n)
            if letter.sign < 0:
                g = thompson.invert(g)
            f, letters = _push_tree_letter(n, f, letters, g)
        else:
            f, letters = _insert_y_letter(n, f, letters, letter.s, letter.sign)
    return f, letters


# -- the public pipeline -------------------------------------------------------

def standardize(word: GroupWord, min_depth: int = 0) -> StandardForm:
    """Rewrite a word into an equal standard form of at least the given depth."""
    f, letters = _standardize_letters(word)
    if min_depth:
        f, letters = _raise_depth(word.n, f, letters, min_depth)
    return StandardForm(word.n, f, _aggregate(letters))


def remove_potential_cancellations(form: StandardForm) -> StandardForm:
    f, letters = _remove_pcs(form.n, form.f, _expand_runs(form.ys))
    return StandardForm(form.n, f, _aggregate(letters))


def remove_potential_contractions(form: StandardForm) -> StandardForm:
    letters = _expand_runs(form.ys)
    if _find_pc(form.n, letters) is not None:
        raise DomainError("form still contains a potential cancellation")
    f, letters = _remove_contractions(form.n, form.f, letters)
    return StandardForm(form.n, f, _aggregate(letters))


def normalize(word: GroupWord | StandardForm) -> NormalForm:
    """The unique normal form of the element represented by the word."""
    if isinstance(word, StandardForm):
        n, f, letters = word.n, word.f, _expand_runs(word.ys)
    else:
        n = word.n
        f, letters = _standardize_letters(word)
    f, letters = _remove_pcs(n, f, letters)
    f, letters = _remove_contractions(n, f, letters)
    return NormalForm(n, f, _aggregate(letters))


def form_word(form: StandardForm) -> GroupWord:
    """The form re-read as a word over the generating set."""
    letters = []
    for t, e in thompson.to_x_normal_form(form.f).word():
        j, i = divmod(t, form.n - 1)
        letters.extend([XLetter(i, (form.n - 1,) * j, +1 if e > 0 else -1)] * abs(e))
    for s, t in form.ys:
        letters.extend([YLetter(s, +1 if t > 0 else -1)] * abs(t))
    return GroupWord(form.n, tuple(letters))


def multiply(a: StandardForm, b: StandardForm) -> NormalForm:
    if a.n != b.n:
        raise DomainError("arity mismatch")
    f, letters = _standardize_letters(form_word(b), a.f, _expand_runs(a.ys))
    f, letters = _remove_pcs(a.n, f, letters)
    f, letters = _remove_contractions(a.n, f, letters)
    return NormalForm(a.n, f, _aggregate(letters))


def inverse(a: StandardForm) -> NormalForm:
    return normalize(form_word(a).inverse())


def equals(a: StandardForm, b: StandardForm) -> bool:
    na = a if isinstance(a, NormalForm) else normalize(a)
    nb = b if isinstance(b, NormalForm) else normalize(b)
    return na.f == nb.f and na.ys == nb.ys


def identity_form(n: int) -> NormalForm:
    return NormalForm(n, identity(n), ())


# -- evaluation ----------------------------------------------------------------

def evaluate(obj, x: EvPeriodicWord) -> EvPeriodicWord:
    """Apply the element to a point of the Cantor space (letters left first)."""
    if isinstance(obj, GroupWord):
        if obj.n != x.n:
            raise DomainError("arity mismatch")
        for letter in obj.letters:
            if isinstance(letter, XLetter):
                g = generator(letter.i, letter.alpha, obj.n)
                if letter.sign < 0:
                    g = thompson.invert(g)
                x = apply_ep(g, x)
            else:
                x = _apply_y_factor(x, letter.s, letter.sign)
        return x
    if isinstance(obj, StandardForm):
        if obj.n != x.n:
            raise DomainError("arity mismatch")
        x = apply_ep(obj.f, x)
        for s, t in obj.ys:
            x = _apply_y_factor(x, s, t)
        return x
    raise DomainError(f"cannot evaluate {obj!r}")


def _apply_y_factor(x: EvPeriodicWord, s: Word, t: int) -> EvPeriodicWord:
    if not x.startswith(s):
        return x
    tail = x.drop(len(s))
    sign = +1 if t > 0 else -1
    for _ in range(abs(t)):
        tail = y_apply_ep(sign, tail)
    return tail.prepend(s)


def calculation_of(form: StandardForm, x: EvPeriodicWord) -> Calculation:
    """The calculation of the point under the form: apply f, then mark each
    matching y factor at its cone without substituting."""
    if form.n != x.n:
        raise DomainError("arity mismatch")
    z = apply_ep(form.f, x)
    marks: dict[int, list[YTok]] = {}
    for s, t in form.ys:
        if z.startswith(s):
            marks.setdefault(len(s), []).extend([YTok(+1 if t > 0 else -1)] * abs(t))
    if not marks:
        return Calculation(form.n, (), z)
    deepest = max(marks)
    items: list = []
    for d in range(deepest + 1):
        items.extend(marks.get(d, ()))
        if d < deepest:
            items.append(z.letter(d))
    return Calculation(form.n, tuple(items), z.drop(deepest))


def exponent_of_element_at(form: StandardForm, x: EvPeriodicWord) -> int:
    """Exponent of the calculation of x under the form; the calculation must
    not contain potential cancellations."""
    return calculation_exponent(calculation_of(form, x))


# -- the five moves on words and forms ------------------------------------------

def rearranging_move(word: GroupWord, pos: int) -> GroupWord:
    """y_t^i x_{j[s]}^d -> x_{j[s]}^d y_{x(t)}^i at positions (pos, pos+1)."""
    a, b = word.letters[pos], word.letters[pos + 1]
    if not (isinstance(a, YLetter) and isinstance(b, XLetter)):
        raise DomainError("rearranging move needs a y letter then an x letter")
    g = generator(b.i, b.alpha, word.n)
    if b.sign < 0:
        g = thompson.invert(g)
    image = apply_prefix(g, a.s)
    if image is None:
        raise DomainError(
            f"x{b.i}[{format_word(b.alpha, word.n)}]^{b.sign} is undefined on "
            f"{format_word(a.s, word.n)}"
        )
    swapped = (b, YLetter(image, a.sign))
    return GroupWord(word.n, word.letters[:pos] + swapped + word.letters[pos + 2 :])


def expansion_move(word: GroupWord, pos: int) -> GroupWord:
    """Replace y_s^{+-1} by its four-letter expansion image."""
    a = word.letters[pos]
    if not isinstance(a, YLetter):
        raise DomainError("expansion move needs a y letter")
    x = XLetter(0, a.s, a.sign)
    ys = [YLetter(s, sign) for s, sign in _expansion_children(word.n, a.s, a.sign)]
    return GroupWord(
        word.n, word.letters[:pos] + (x, *ys) + word.letters[pos + 1 :]
    )


def commuting_move(word: GroupWord, pos: int) -> GroupWord:
    """Swap adjacent y letters with independent indices."""
    a, b = word.letters[pos], word.letters[pos + 1]
    if not (isinstance(a, YLetter) and isinstance(b, YLetter)):
        raise DomainError("commuting move needs two y letters")
    if not independent(a.s, b.s):
        raise DomainError("commuting move needs independent indices")
    return GroupWord(word.n, word.letters[:pos] + (b, a) + word.letters[pos + 2 :])


def cancellation_move(word: GroupWord, pos: int) -> GroupWord:
    """Delete an adjacent y_s^{d} y_s^{-d} pair."""
    a, b = word.letters[pos], word.letters[pos + 1]
    if not (
        isinstance(a, YLetter)
        and isinstance(b, YLetter)
        and a.s == b.s
        and a.sign == -b.sign
    ):
        raise DomainError("cancellation move needs y_s^d y_s^-d")
    return GroupWord(word.n, word.letters[:pos] + word.letters[pos + 2 :])


def er_move(form: StandardForm, pos: int) -> StandardForm:
    """Expand-rearrange on the pos-th unit letter of the y part.

    Raises when a preceding factor blocks the rearrangement; the caller must
    expand the blocking factor first.
    """
    letters = _expand_runs(form.ys)
    try:
        f, letters = _er(form.n, form.f, letters, pos)
    except _Blocked as blocked:
        v, _ = letters[blocked.pos]
        raise DomainError(
            f"blocked by preceding factor y[{format_word(v, form.n)}]; "
            "expand it first"
        ) from None
    return StandardForm(form.n, f, _aggregate(letters))


def contraction_move(form: StandardForm, s: Word, kind: int) -> StandardForm:
    """Contraction move at the given site of a standard form."""
    letters = _expand_runs(form.ys)
    if (s, kind) not in _contraction_sites(form.n, letters):
        raise DomainError("no potential contraction at that site")
    f, letters = _contract(form.n, form.f, letters, s, kind)
    return StandardForm(form.n, f, _aggregate(letters))


def has_potential_cancellation(form: StandardForm):
    """First potential-cancellation pair as (inner, outer) positions into the
    aggregated y part, or None."""
    letters = _expand_runs(form.ys)
    pc = _find_pc(form.n, letters)
    if pc is None:
        return None
    indices = [s for s, _ in form.ys]
    return indices.index(letters[pc[0]][0]), indices.index(letters[pc[1]][0])


def has_potential_contraction(form: StandardForm):
    sites = _contraction_sites(form.n, _expand_runs(form.ys))
    return sites[0] if sites else None


def check_normal_form(form: StandardForm) -> None:
    """Independent validation of all normal-form clauses; raises on failure."""
    StandardForm(form.n, form.f, form.ys)  # re-validate standardness
    if has_potential_cancellation(form) is not None:
        raise DomainError("potential cancellation present")
    if has_potential_contraction(form) is not None:
        raise DomainError("potential contraction present")
    reduced = thompson.reduce_pair(form.n, list(form.f.dom), list(form.f.ran))
    if reduced != form.f:
        raise DomainError("tree pair is not reduced")
    thompson.check_x_normal_form(thompson.to_x_normal_form(form.f))


# -- instantiated relations -----------------------------------------------------

def relation_oracle(n: int, kind: int, **params) -> tuple[GroupWord, GroupWord]:
    """An instantiated defining relation (lhs, rhs), both words for the same
    element.

    kind 1: X_i^-1 X_j X_i = X_{j+n-1} for i < j (params i, j), or the normal
            form of a generator x_{i[alpha]} (params i, alpha);
    kind 2: y_t x_{i[s]} = x_{i[s]} y_{x_{i[s]}(t)} (params t, i, s, sign);
    kind 3: y_s y_t = y_t y_s for independent s, t (params s, t);
    kind 4: y_s = x_{0[s]} y_{s0} y_{s(n-1)0}^-1 y_{s(n-1)(n-1)} (params s).
    """
    check_arity(n)
    if kind == 1:
        if "j" in params:
            i, j = params["i"], params["j"]
            if not 0 <= i < j:
                raise DomainError("kind 1 needs 0 <= i < j")
            lhs = GroupWord(n, (_x_letter(n, i, -1), _x_letter(n, j, +1), _x_letter(n, i, +1)))
            rhs = GroupWord(n, (_x_letter(n, j + n - 1, +1),))
            return lhs, rhs
        i, alpha = params["i"], tuple(params["alpha"])
        lhs = GroupWord(n, (XLetter(i, alpha, +1),))
        rhs = form_word(StandardForm(n, generator(i, alpha, n), ()))
        return lhs, rhs
    if kind == 2:
        t, i, s = tuple(params["t"]), params["i"], tuple(params["s"])
        sign = params.get("sign", +1)
        g = generator(i, s, n)
        if sign < 0:
            g = thompson.invert(g)
        image = apply_prefix(g, t)
        if image is None:
            raise DomainError(
                f"x{i}[{format_word(s, n)}]^{sign} is undefined on {format_word(t, n)}"
            )
        x = XLetter(i, s, sign)
        lhs = GroupWord(n, (YLetter(t, +1), x))
        rhs = GroupWord(n, (x, YLetter(image, +1)))
        return lhs, rhs
    if kind == 3:
        s, t = tuple(params["s"]), tuple(params["t"])
        if not independent(s, t):
            raise DomainError("kind 3 needs independent indices")
        lhs = GroupWord(n, (YLetter(s, +1), YLetter(t, +1)))
        rhs = GroupWord(n, (YLetter(t, +1), YLetter(s, +1)))
        return lhs, rhs
    if kind == 4:
        s = tuple(params["s"])
        lhs = GroupWord(n, (YLetter(s, +1),))
        rhs = expansion_move(lhs, 0)
        return lhs, rhs
    raise DomainError(f"unknown relation kind {kind}")


def _x_letter(n: int, t: int, sign: int) -> XLetter:
    j, i = divmod(t, n - 1)
    return XLetter(i, (n - 1,) * j, sign)
