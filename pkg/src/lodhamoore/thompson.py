"""The Brown-Thompson group F(n) as reduced pairs of n-ary trees.

A tree is its leaf set: a finite complete prefix-free family of words (every
infinite word extends exactly one leaf).  A TreePair (D, R) with both leaf
tuples sorted lexicographically encodes the prefix-replacement homeomorphism
sending D[i] z to R[i] z; the reduced pair is the canonical representative.

Generators: x_i (0 <= i <= n-2) has domain "caret at leaf i", range "caret at
leaf n-1"; x_{i[alpha]} acts as x_i inside the cone alpha.  The indexed family
X_t (t = j(n-1)+i corresponds to x_{i[(n-1)^j]}) satisfies
X_u^-1 X_t X_u = X_{t+n-1} for u < t, which yields the unique normal form

    X_{i1}^{r1} ... X_{im}^{rm} X_{jk}^{-sk} ... X_{j1}^{-s1},
    i1 < ... < im != jk > ... > j1,

with the extra condition that whenever X_i and X_i^-1 both occur, some
X_{i+1}^{+-1}, ..., X_{i+n-1}^{+-1} occurs as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .words import (
    DomainError,
    EMPTY,
    EvPeriodicWord,
    Word,
    check_arity,
    check_word,
    format_word,
    is_prefix,
)


def _validate_tree(n: int, leaves: tuple[Word, ...]) -> None:
    if not leaves:
        raise DomainError("tree must have at least one leaf")
    if list(leaves) != sorted(leaves):
        raise DomainError("leaves must be sorted")
    # completeness: weights in base n sum to 1
    total = 0
    unit = n ** max(len(w) for w in leaves)
    for w in leaves:
        check_word(n, w)
        total += unit // n ** len(w)
    if total != unit:
        raise DomainError("leaf set is not a complete antichain")
    for a, b in zip(leaves, leaves[1:]):
        if is_prefix(a, b):
            raise DomainError("leaf set is not prefix-free")


def internal_nodes(leaves: tuple[Word, ...]) -> set[Word]:
    nodes: set[Word] = set()
    for w in leaves:
        for k in range(len(w)):
            nodes.add(w[:k])
    return nodes


@dataclass(frozen=True)
class TreePair:
    """A reduced pair of n-ary trees: the homeomorphism dom[i] z -> ran[i] z."""

    n: int
    dom: tuple[Word, ...]
    ran: tuple[Word, ...]

    def __post_init__(self) -> None:
        check_arity(self.n)
        if len(self.dom) != len(self.ran):
            raise DomainError("domain and range leaf counts differ")
        _validate_tree(self.n, self.dom)
        _validate_tree(self.n, self.ran)

    def is_identity(self) -> bool:
        return self.dom == self.ran

    def __str__(self) -> str:
        pairs = ", ".join(
            f"{format_word(a, self.n)}->{format_word(b, self.n)}"
            for a, b in zip(self.dom, self.ran)
        )
        return f"<{pairs}>"


def _sibling_block(n: int, leaves: tuple[Word, ...], i: int) -> Word | None:
    """If leaves[i:i+n] are the n children of one node, return that node."""
    if i + n > len(leaves):
        return None
    first = leaves[i]
    if not first or first[-1] != 0:
        return None
    parent = first[:-1]
    for k in range(n):
        if leaves[i + k] != parent + (k,):
            return None
    return parent


def reduce_pair(n: int, dom: list[Word], ran: list[Word]) -> TreePair:
    """Remove opposing caret pairs until the pair is reduced."""
    changed = True
    while changed:
        changed = False
        for i in range(len(dom)):
            p = _sibling_block(n, tuple(dom), i)
            if p is None:
                continue
            q = _sibling_block(n, tuple(ran), i)
            if q is None:
                continue
            dom[i : i + n] = [p]
            ran[i : i + n] = [q]
            changed = True
            break
    return TreePair(n, tuple(dom), tuple(ran))


def identity(n: int) -> TreePair:
    return TreePair(n, (EMPTY,), (EMPTY,))


def _refine(a: tuple[Word, ...], b: tuple[Word, ...]) -> list[Word]:
    """Common refinement of two complete antichains: the deeper of each
    comparable pair."""
    out: set[Word] = set()
    for u in a:
        for v in b:
            if is_prefix(u, v):
                out.add(v)
            elif is_prefix(v, u):
                out.add(u)
    return sorted(out)


def _map_through(leaves: tuple[Word, ...], images: tuple[Word, ...], w: Word) -> Word:
    """Image of w under the prefix replacement, assuming w extends some leaf."""
    for a, b in zip(leaves, images):
        if is_prefix(a, w):
            return b + w[len(a):]
    raise DomainError(f"word does not extend any domain leaf")


def compose(f: TreePair, g: TreePair) -> TreePair:
    """The composite applying f first, then g: (f.g)(z) = g(f(z))."""
    if f.n != g.n:
        raise DomainError("arity mismatch in composition")
    mid = _refine(f.ran, g.dom)
    dom = [_map_through(f.ran, f.dom, c) for c in mid]
    ran = [_map_through(g.dom, g.ran, c) for c in mid]
    order = sorted(range(len(mid)), key=lambda i: dom[i])
    return reduce_pair(f.n, [dom[i] for i in order], [ran[i] for i in order])


def compose_all(pairs, n: int | None = None) -> TreePair:
    result = None
    for p in pairs:
        result = p if result is None else compose(result, p)
    if result is None:
        if n is None:
            raise DomainError("empty composition needs an arity")
        return identity(n)
    return result


def invert(f: TreePair) -> TreePair:
    return TreePair(f.n, f.ran, f.dom)


def power(f: TreePair, k: int) -> TreePair:
    if k < 0:
        return power(invert(f), -k)
    result = identity(f.n)
    for _ in range(k):
        result = compose(result, f)
    return result


@lru_cache(maxsize=None)
def generator(i: int, alpha: Word, n: int) -> TreePair:
    """The generator x_{i[alpha]}: acts as x_i inside the cone alpha."""
    check_arity(n)
    if not 0 <= i <= n - 2:
        raise DomainError(f"generator index {i} out of range for arity {n}")
    check_word(n, alpha)
    base = tuple(range(n))
    dom_in = sorted([(k,) for k in base if k != i] + [(i, k) for k in base])
    ran_in = sorted([(k,) for k in base if k != n - 1] + [(n - 1, k) for k in base])
    outside = [alpha[:d] + (b,) for d in range(len(alpha)) for b in base if b != alpha[d]]
    dom = sorted(outside + [alpha + w for w in dom_in])
    ran = sorted(outside + [alpha + w for w in ran_in])
    return reduce_pair(n, dom, ran)


def x_generator(t: int, n: int) -> TreePair:
    """The indexed generator X_t = x_{i[(n-1)^j]} with t = j(n-1) + i."""
    if t < 0:
        raise DomainError("generator index must be nonnegative")
    j, i = divmod(t, n - 1)
    return generator(i, (n - 1,) * j, n)


def apply_prefix(f: TreePair, t: Word) -> Word | None:
    """Prefix action: f(t) if t extends a domain leaf, else None.

    The None result is load-bearing: callers use it to trigger expansions.
    """
    check_word(f.n, t)
    for a, b in zip(f.dom, f.ran):
        if is_prefix(a, t):
            return b + t[len(a):]
    return None


def apply_ep(f: TreePair, x: EvPeriodicWord) -> EvPeriodicWord:
    """Action on an eventually periodic point (total)."""
    if f.n != x.n:
        raise DomainError("arity mismatch")
    depth = max(len(a) for a in f.dom)
    head = x.prefix(depth)
    for a, b in zip(f.dom, f.ran):
        if is_prefix(a, head):
            return x.drop(len(a)).prepend(b)
    raise AssertionError("complete antichain must cover the point")


# -- X normal form ----------------------------------------------------------

XLetterSeq = tuple[tuple[int, int], ...]  # (index, exponent != 0) runs


@dataclass(frozen=True)
class XNormalForm:
    """pos: ascending (index, exp>0) runs; neg: ascending (index, exp>0) runs
    read in reverse in the word (descending indices, negative exponents)."""

    n: int
    pos: XLetterSeq
    neg: XLetterSeq

    def word(self) -> list[tuple[int, int]]:
        """The normal form as a list of (index, +-exponent) runs in word order."""
        out = [(t, r) for t, r in self.pos]
        out.extend((t, -s) for t, s in reversed(self.neg))
        return out

    def __str__(self) -> str:
        if not self.pos and not self.neg:
            return "1"
        parts = []
        for t, r in self.word():
            parts.append(f"X{t}" + (f"^{r}" if r != 1 else ""))
        return " ".join(parts)


def check_x_normal_form(nf: XNormalForm) -> None:
    """Raise unless the data satisfies all normal-form clauses."""
    for seq in (nf.pos, nf.neg):
        for t, r in seq:
            if t < 0 or r <= 0:
                raise DomainError("bad run in normal form")
        for (t1, _), (t2, _) in zip(seq, seq[1:]):
            if not t1 < t2:
                raise DomainError("normal form indices not strictly ordered")
    if nf.pos and nf.neg and nf.pos[-1][0] == nf.neg[-1][0]:
        raise DomainError("top positive and negative indices coincide")
    pos_idx = {t for t, _ in nf.pos}
    neg_idx = {t for t, _ in nf.neg}
    both = pos_idx & neg_idx
    occur = pos_idx | neg_idx
    for i in both:
        if not any(i < u <= i + nf.n - 1 for u in occur):
            raise DomainError(f"index {i} occurs with both signs but no successor occurs")


def vine(n: int, leaf_count: int) -> tuple[Word, ...]:
    """The all-right tree with the given number of leaves."""
    if (leaf_count - 1) % (n - 1) != 0:
        raise DomainError("impossible leaf count for an n-ary tree")
    carets = (leaf_count - 1) // (n - 1)
    leaves = [EMPTY] if carets == 0 else []
    for level in range(carets):
        spine = (n - 1,) * level
        last = level == carets - 1
        leaves.extend(spine + (b,) for b in range(n - 1 + (1 if last else 0)))
    return tuple(sorted(leaves))


def _positive_word_to_vine(n: int, leaves: tuple[Word, ...]) -> list[int]:
    """Indices t with (T, vine) = X_{t1} X_{t2} ... as elements.

    Greedy peel: X_t applies to T when the right spine reaches depth j and the
    node (n-1)^j i is internal (t = j(n-1)+i); applying it moves T one step
    closer to the vine.
    """
    word: list[int] = []
    target = vine(n, len(leaves))
    current = leaves
    guard = 0
    while current != target:
        guard += 1
        if guard > 16 + 8 * len(leaves) * sum(len(w) for w in leaves):
            raise AssertionError("tree-to-vine walk failed to terminate")
        nodes = internal_nodes(current)
        t = None
        for node in sorted(nodes, key=lambda nd: (len(nd), nd)):
            if not node or node[-1] == n - 1 or node[:-1] != (n - 1,) * (len(node) - 1):
                continue
            t = (len(node) - 1) * (n - 1) + node[-1]
            break
        if t is None:
            raise AssertionError("no applicable generator; tree walk is stuck")
        pair = x_generator(t, n)
        nxt = tuple(sorted(apply_prefix(pair, leaf) for leaf in current))
        word.append(t)
        current = nxt
    return word


def _sort_positive(letters: list[int], n: int) -> list[tuple[int, int]]:
    """Normalize a positive X-word to ascending runs using
    X_b X_a -> X_a X_{b+n-1} (a < b)."""
    seq = list(letters)
    changed = True
    while changed:
        changed = False
        for k in range(len(seq) - 1):
            if seq[k] > seq[k + 1]:
                seq[k], seq[k + 1] = seq[k + 1], seq[k] + n - 1
                changed = True
    runs: list[tuple[int, int]] = []
    for t in seq:
        if runs and runs[-1][0] == t:
            runs[-1] = (t, runs[-1][1] + 1)
        else:
            runs.append((t, 1))
    return runs


def _strip_balanced(n: int, pos: list[tuple[int, int]], neg: list[tuple[int, int]]):
    """Enforce the occurrence condition by cancelling X_i ... X_i^-1 pairs,
    shifting the enclosed indices down by n-1."""
    while True:
        occur = {t for t, _ in pos} | {t for t, _ in neg}
        target = None
        for t, _ in pos:
            if t in {u for u, _ in neg} and not any(t < u <= t + n - 1 for u in occur):
                target = t
                break
        if target is None:
            return tuple(pos), tuple(neg)
        # cancel ONE X_target ... X_target^-1 pair; the enclosed (strictly
        # higher) indices shift down by n-1, which may itself satisfy the
        # occurrence condition, so re-check before stripping again
        pi = next(k for k, (t, _) in enumerate(pos) if t == target)
        ni = next(k for k, (t, _) in enumerate(neg) if t == target)
        pos = (pos[:pi] + [(pos[pi][0], pos[pi][1] - 1)]
               + [(t - (n - 1), r) for t, r in pos[pi + 1:]])
        neg = (neg[:ni] + [(neg[ni][0], neg[ni][1] - 1)]
               + [(t - (n - 1), r) for t, r in neg[ni + 1:]])
        pos = [(t, r) for t, r in pos if r > 0]
        neg = [(t, r) for t, r in neg if r > 0]


def to_x_normal_form(f: TreePair) -> XNormalForm:
    """The unique normal form of f over the indexed generators X_t."""
    n = f.n
    u = _positive_word_to_vine(n, f.dom)
    v = _positive_word_to_vine(n, f.ran)
    pos = _sort_positive(u, n)
    neg = _sort_positive(v, n)
    pos_t, neg_t = _strip_balanced(n, list(pos), list(neg))
    nf = XNormalForm(n, pos_t, neg_t)
    check_x_normal_form(nf)
    return nf


def from_x_word(n: int, runs) -> TreePair:
    """Compose (index, exponent) runs of X letters into a reduced TreePair."""
    result = identity(n)
    for t, e in runs:
        result = compose(result, power(x_generator(t, n), e))
    return result


def from_x_normal_form(nf: XNormalForm) -> TreePair:
    return from_x_word(nf.n, nf.word())


def abelianization_a(f: TreePair) -> tuple[int, ...]:
    """The map onto Z^n: coordinate 0 is the X_0 exponent sum, coordinate k
    (1 <= k <= n-1) the total exponent over indices congruent to k mod n-1."""
    n = f.n
    vec = [0] * n
    for t, e in to_x_normal_form(f).word():
        if t == 0:
            vec[0] += e
        else:
            k = t % (n - 1)
            vec[k if k else n - 1] += e
    return tuple(vec)


def right_support_element(n: int, s: Word) -> TreePair:
    """An element of F(n) supported exactly on the open interval
    (s 0bar, (n-1)bar)."""
    check_arity(n)
    check_word(n, s)
    if not s:
        raise DomainError("prefix must be nonempty")
    if s[-1] == n - 1:
        s = s + (0,)  # same boundary point: s (n-1) 0bar = s (n-1) 0 0bar
    if len(s) == 1:
        return generator(s[0], EMPTY, n)
    head, i = s[:-1], s[-1]
    if all(b == n - 1 for b in head):
        return generator(i, head, n)
    base = generator(i, head, n)
    dom = list(base.dom)
    ran = list(base.ran)
    caret_leaf = s + (n - 1,)
    if caret_leaf not in dom:
        raise AssertionError("expected domain leaf s(n-1) in the cone generator")
    dom.remove(caret_leaf)
    dom.extend(caret_leaf + (b,) for b in range(n))
    top = max(ran)  # lex-max leaf = rightmost leaf of the range tree
    ran.remove(top)
    ran.extend(top + (b,) for b in range(n))
    return reduce_pair(n, sorted(dom), sorted(ran))
