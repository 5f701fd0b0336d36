"""Arity-changing embeddings G0(p) -> G0(q) and the abelianization onto Z^{n+1}.

When q - 1 = d (p - 1), stretching every letter by the factor d embeds the
p-ary Cantor space into the q-ary one; on tree pairs this is the caret
replacement inserting d - 1 fresh edges between adjacent edges of every caret.
"""

from __future__ import annotations

from .words import DomainError, EvPeriodicWord, Word, check_arity
from .thompson import TreePair, abelianization_a, internal_nodes, reduce_pair
from .core import NormalForm, StandardForm, check_normal_form


def stretch_factor(p: int, q: int) -> int:
    check_arity(p)
    check_arity(q)
    if (q - 1) % (p - 1) != 0:
        raise DomainError(f"no embedding: {p - 1} does not divide {q - 1}")
    return (q - 1) // (p - 1)


def letter_stretch(s: Word, p: int, q: int) -> Word:
    """Multiply every letter by d = (q-1)/(p-1)."""
    d = stretch_factor(p, q)
    return tuple(d * a for a in s)


def point_stretch(x: EvPeriodicWord, q: int) -> EvPeriodicWord:
    d = stretch_factor(x.n, q)
    return EvPeriodicWord(q, tuple(d * a for a in x.pre), tuple(d * a for a in x.per))


def embed_tree_pair(f: TreePair, q: int) -> TreePair:
    """Caret replacement: stretched leaves plus a fresh leaf at every skipped
    edge of every caret, paired in sorted order."""
    p = f.n
    d = stretch_factor(p, q)
    multiples = {d * a for a in range(p)}

    def stretch_tree(leaves):
        out = [letter_stretch(w, p, q) for w in leaves]
        for node in internal_nodes(leaves):
            base = letter_stretch(node, p, q)
            out.extend(base + (c,) for c in range(q) if c not in multiples)
        return sorted(out)

    return reduce_pair(q, stretch_tree(f.dom), stretch_tree(f.ran))


def embed(g: StandardForm, q: int) -> NormalForm:
    """The embedding of G0(p) into G0(q); preserves normal forms."""
    p = g.n
    image = NormalForm(
        q,
        embed_tree_pair(g.f, q),
        tuple((letter_stretch(s, p, q), t) for s, t in g.ys),
    )
    check_normal_form(image)
    return image


def abelianize(g: StandardForm) -> tuple[int, ...]:
    """The map onto Z^{n+1}: the tree-pair abelianization followed by the
    total y exponent."""
    return abelianization_a(g.f) + (sum(t for _, t in g.ys),)
