"""Command-line front end.

Exit codes: 0 ok, 2 parse error, 3 domain error, 4 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys

from .words import DomainError, ParseError, format_word, parse_point
from . import core, morphisms, selftest, syntax, thompson
from .transducer import exponent as calculation_exponent
from .transducer import format_calculation, substitute_all


def _arity(args, text_arities=()) -> int:
    candidates = [a for a in (args.n, *text_arities) if a is not None]
    if not candidates:
        raise ParseError("arity unknown: pass -n or an n=<arity> word header")
    n = candidates[0]
    if any(c != n for c in candidates):
        raise ParseError("conflicting arities given")
    return n


def _parse_form(text: str, n: int | None, flag_n: int | None):
    header_n, body = syntax.split_header(text)
    arity = n if n is not None else header_n if header_n is not None else flag_n
    if arity is None:
        raise ParseError("arity unknown: pass -n or an n=<arity> word header")
    if header_n is not None and header_n != arity:
        raise ParseError("conflicting arities given")
    return syntax.parse_form_text(body, arity), arity


def _emit_form(form: core.StandardForm, as_json: bool) -> None:
    if as_json:
        print(json.dumps(syntax.form_json(form)))
    else:
        print(syntax.format_form(form))


def cmd_normalize(args) -> int:
    word, _ = _parse_form(args.word, None, args.n)
    _emit_form(core.normalize(word), args.json)
    return 0


def cmd_eq(args) -> int:
    a, n = _parse_form(args.left, None, args.n)
    b, _ = _parse_form(args.right, n, args.n)
    same = core.equals(core.normalize(a), core.normalize(b))
    print("equal" if same else "different")
    return 0


def cmd_eval(args) -> int:
    word, n = _parse_form(args.word, None, args.n)
    point = parse_point(args.point, n)
    print(core.evaluate(word, point))
    return 0


def cmd_exponent(args) -> int:
    word, n = _parse_form(args.word, None, args.n)
    point = parse_point(args.point, n)
    form = core.normalize(word)
    print(core.exponent_of_element_at(form, point))
    return 0


def cmd_transduce(args) -> int:
    header_n, body = syntax.split_header(args.calculation)
    n = _arity(args, (header_n,))
    calc = syntax.parse_calculation(body, n)
    result = substitute_all(calc)
    print(format_calculation(result))
    try:
        print(f"exponent {calculation_exponent(result)}")
    except DomainError as exc:
        print(f"exponent undefined: {exc}")
    return 0


def cmd_embed(args) -> int:
    word, _ = _parse_form(args.word, args.source, args.source)
    image = morphisms.embed(core.normalize(word), args.target)
    _emit_form(image, args.json)
    return 0


def cmd_abelianize(args) -> int:
    word, _ = _parse_form(args.word, None, args.n)
    vec = morphisms.abelianize(core.normalize(word))
    print("(" + ", ".join(str(v) for v in vec) + ")")
    return 0


def cmd_draw(args) -> int:
    word, _ = _parse_form(args.word, None, args.n)
    form = core.normalize(word)
    print(draw_dot(form))
    return 0


def cmd_selftest(args) -> int:
    return 0 if selftest.run_selftest() else 4


def draw_dot(form: core.StandardForm) -> str:
    """DOT rendering of the tree pair; y factors decorate range-tree nodes
    with filled (positive) or open (negative) circles."""
    n = form.n
    marks = {s: t for s, t in form.ys}

    def tree(prefix: str, leaves, decorate: bool):
        lines = [f"  subgraph cluster_{prefix} {{", f'    label="{prefix}";']
        nodes = thompson.internal_nodes(leaves) | set(leaves)
        for node in sorted(nodes):
            name = f'{prefix}_{format_word(node, n) or "root"}'
            shape = "circle" if node in thompson.internal_nodes(leaves) else "box"
            label = format_word(node, n) or "e"
            style = ""
            if decorate and node in marks:
                t = marks[node]
                fill = "black" if t > 0 else "white"
                label += f" y^{t}"
                style = f', style=filled, fillcolor="{fill}", fontcolor="gray"'
            lines.append(f'    "{name}" [shape={shape}, label="{label}"{style}];')
        for node in sorted(nodes):
            if node:
                parent = f'{prefix}_{format_word(node[:-1], n) or "root"}'
                child = f'{prefix}_{format_word(node, n)}'
                lines.append(f'    "{parent}" -> "{child}" [label="{node[-1]}"];')
        lines.append("  }")
        return lines

    # refine the pair so every y index is a node of the range tree
    from .words import is_prefix

    dom, ran = list(form.f.dom), list(form.f.ran)
    for s in marks:
        while s not in thompson.internal_nodes(tuple(ran)) | set(ran):
            i, leaf = next((i, l) for i, l in enumerate(ran) if is_prefix(l, s))
            ran[i : i + 1] = [leaf + (b,) for b in range(n)]
            dom[i : i + 1] = [dom[i] + (b,) for b in range(n)]
    lines = ["digraph treepair {", "  node [fontsize=10];"]
    lines.extend(tree("domain", tuple(sorted(dom)), False))
    lines.extend(tree("range", tuple(sorted(ran)), True))
    lines.append("}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lodhamoore",
        description="n-adic Lodha-Moore group calculator: normal forms, "
        "evaluation, embeddings, abelianization",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true", help="emit JSON")
        return p

    p = add("normalize", cmd_normalize, help="print the unique normal form")
    p.add_argument("-n", type=int, default=None)
    p.add_argument("word")

    p = add("eq", cmd_eq, help="decide equality of two words")
    p.add_argument("-n", type=int, default=None)
    p.add_argument("left")
    p.add_argument("right")

    p = add("eval", cmd_eval, help="apply a word to a point pre(per)*")
    p.add_argument("-n", type=int, default=None)
    p.add_argument("word")
    p.add_argument("point")

    p = add("exponent", cmd_exponent, help="exponent of the calculation at a point")
    p.add_argument("-n", type=int, default=None)
    p.add_argument("word")
    p.add_argument("point")

    p = add("transduce", cmd_transduce, help="substitute a calculation fully")
    p.add_argument("-n", type=int, default=None)
    p.add_argument("calculation")

    p = add("embed", cmd_embed, help="arity-changing embedding")
    p.add_argument("--from", dest="source", type=int, required=True)
    p.add_argument("--to", dest="target", type=int, required=True)
    p.add_argument("word")

    p = add("abelianize", cmd_abelianize, help="image in Z^{n+1}")
    p.add_argument("-n", type=int, default=None)
    p.add_argument("word")

    p = add("draw", cmd_draw, help="DOT diagram of the tree pair with y marks")
    p.add_argument("-n", type=int, default=None)
    p.add_argument("word")

    add("selftest", cmd_selftest, help="run the bundled golden corpus")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3
    except AssertionError as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
