"""n-adic Lodha-Moore group G0(n): words, normal forms, evaluation, embeddings."""

from .words import (
    DomainError,
    EvPeriodicWord,
    ParseError,
    PrefixRelation,
    canonicalize_ep,
    digit_sum_mod,
    ep_const,
    ep_point_lt,
    parse_point,
    prefix_relation,
    word_lt,
)
from .transducer import (
    Calculation,
    OPEN,
    YTok,
    exponent,
    is_potential_cancellation,
    substitute_all,
    y_apply_ep,
    y_apply_finite,
    y_step,
)
from .thompson import (
    TreePair,
    XNormalForm,
    abelianization_a,
    apply_ep,
    apply_prefix,
    compose,
    from_x_word,
    generator,
    identity,
    invert,
    right_support_element,
    to_x_normal_form,
)
from .core import (
    GroupWord,
    NormalForm,
    StandardForm,
    XLetter,
    YLetter,
    equals,
    evaluate,
    exponent_of_element_at,
    inverse,
    multiply,
    normalize,
    relation_oracle,
    standardize,
    valid_y_index,
)
from .morphisms import abelianize, embed, letter_stretch, point_stretch

__all__ = [name for name in dir() if not name.startswith("_")]
