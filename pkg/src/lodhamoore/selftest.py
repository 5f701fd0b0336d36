"""Golden test corpus: worked calculations with frozen expected results.

Each case returns (name, passed, detail); `run_selftest` evaluates the whole
corpus.  The CLI `selftest` subcommand and the acceptance suite both run it.
"""

from __future__ import annotations

from .words import EvPeriodicWord
from .transducer import (
    Calculation,
    OPEN,
    YTok,
    calculation_from_prefix,
    exponent,
    format_calculation,
    substitute_all,
    substitute_once,
    y_apply_ep,
)
from .words import DomainError
from .core import StandardForm, evaluate, remove_potential_contractions
from .thompson import generator, identity, invert


def _case(name, actual, expected):
    return (name, actual == expected, f"expected {expected!r}, got {actual!r}")


def _binary_image_case():
    # y_{001} on 00101101... : partial substitution stops at 0011001 y 1...
    calc = calculation_from_prefix(2, [((0, 0, 1), +1)], (0, 0, 1, 0, 1, 1, 0, 1))
    partial = substitute_all(calc)
    yield _case("binary-partial-substitution", format_calculation(partial), "0011001y1...")
    # full transduction of the concrete point 00101101(0)*
    form = StandardForm(2, identity(2), (((0, 0, 1), 1),))
    image = evaluate(form, EvPeriodicWord(2, (0, 0, 1, 0, 1, 1, 0, 1), (0,)))
    yield _case(
        "binary-full-image", image, EvPeriodicWord(2, (0, 0, 1, 1, 0, 0, 1, 1, 1), (0,))
    )


def _quaternary_calculation_case():
    # n=4: 3002... under y_300^-1 y_30 y_1 reads 30 y 0 y' 2...
    calc = calculation_from_prefix(
        4, [((3, 0, 0), -1), ((3, 0), +1), ((1,), +1)], (3, 0, 0, 2)
    )
    yield _case("quaternary-calculation", format_calculation(calc), "30y0y'2...")
    yield _case(
        "quaternary-calculation-stuck",
        format_calculation(substitute_all(calc)),
        "30y0y'2...",
    )
    # the calculation of the too-short word 3 is not defined
    try:
        calculation_from_prefix(4, [((3, 0, 0), -1), ((3, 0), +1), ((1,), +1)], (3,))
        yield ("quaternary-undefined", False, "expected DomainError")
    except DomainError:
        yield ("quaternary-undefined", True, "")


def _double_y_output_case():
    # y^2 on 0^4(n-1) 0^4(n-1) ... has output string 0 (n-1)^4 0 (n-1)^4 ...
    for n in (3, 4):
        top = n - 1
        point = EvPeriodicWord(n, (), (0, 0, 0, 0, top))
        once = y_apply_ep(+1, point)
        yield _case(f"double-y-single-step-n{n}", once, EvPeriodicWord(n, (), (0, 0, top, top)))
        twice = y_apply_ep(+1, once)
        yield _case(f"double-y-output-n{n}", twice, EvPeriodicWord(n, (), (0, top, top, top, top)))
        # first two substitutions of the finite-prefix chain
        calc = Calculation(n, (YTok(1), YTok(1), 0, 0, 0, 0, top, 0, 0, 0, 0, top), OPEN)
        step1 = substitute_once(calc)
        yield _case(
            f"double-y-chain1-n{n}",
            step1.items,
            (YTok(1), 0, YTok(1), 0, 0, top, 0, 0, 0, 0, top),
        )
        step2 = substitute_once(step1)
        yield _case(
            f"double-y-chain2-n{n}",
            step2.items,
            (YTok(1), 0, 0, YTok(1), top, 0, 0, 0, 0, top),
        )


def _contraction_case():
    # n=4: y_300 y_3030^-1 y_3031 y_3033 y_30 contracts to x_{0[30]}^-1 y_301 y_30^2
    form = StandardForm(
        4,
        identity(4),
        (
            ((3, 0, 0), 1),
            ((3, 0, 3, 0), -1),
            ((3, 0, 3, 1), 1),
            ((3, 0, 3, 3), 1),
            ((3, 0), 1),
        ),
    )
    contracted = remove_potential_contractions(form)
    expected_f = invert(generator(0, (3, 0), 4))
    yield _case("contraction-f", contracted.f, expected_f)
    yield _case("contraction-ys", contracted.ys, (((3, 0, 1), 1), ((3, 0), 2)))


def _exponent_case():
    # n=4: y0y02y'3y00... has exponent 2; y100... has exponent 0
    zeros = EvPeriodicWord(4, (), (0,))
    big = Calculation(4, (YTok(1), 0, YTok(1), 0, 2, YTok(-1), 3, YTok(1), 0), zeros)
    yield _case("exponent-two", exponent(big), 2)
    small = Calculation(4, (YTok(1), 1), zeros)
    yield _case("exponent-zero", exponent(small), 0)


def golden_cases():
    yield from _binary_image_case()
    yield from _quaternary_calculation_case()
    yield from _double_y_output_case()
    yield from _contraction_case()
    yield from _exponent_case()


def run_selftest(report=print) -> bool:
    ok = True
    for name, passed, detail in golden_cases():
        status = "ok" if passed else f"FAIL ({detail})"
        report(f"{name}: {status}")
        ok = ok and passed
    return ok
