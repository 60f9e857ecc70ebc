import random

import pytest
from fractions import Fraction
from hypothesis import given, settings
from hypothesis import strategies as st

from cmccheck.parse import ParseError, parse_polynomial, to_text
from cmccheck.ring import Polynomial, RingContext
from oracles import random_polynomial

CTX = RingContext.geometric(3)
CTXP = RingContext.with_parameters(["x1", "x2"], ["Ht", "k0", "a_11", "r_1", "s_1"])


def parse(src, ctx=CTX):
    return parse_polynomial(src, ctx)


def test_literals_and_terms():
    assert parse("3") == Polynomial.constant(CTX, 3)
    assert parse("3/2") == Polynomial.constant(CTX, Fraction(3, 2))
    assert parse("-7") == Polynomial.constant(CTX, -7)
    assert parse("-3/2") == Polynomial.constant(CTX, Fraction(-3, 2))
    x1, x2 = Polynomial.variable(CTX, "x1"), Polynomial.variable(CTX, "x2")
    assert parse("x1^2 - x2^2") == x1**2 - x2**2
    assert parse("2*x1*x2") == x1 * x2 * 2
    assert parse("x1^2^3") == x1**6  # chained powers apply left to right


def test_parentheses_and_signs():
    x1, x2 = Polynomial.variable(CTX, "x1"), Polynomial.variable(CTX, "x2")
    assert parse("(x1 + x2)^2") == x1**2 + x1 * x2 * 2 + x2**2
    assert parse("-x1^2") == -(x1**2)
    assert parse("-3*x1") == x1 * -3
    assert parse("(-x1 + x2)*(x1 + x2)") == x2**2 - x1**2
    assert parse("+x1") == x1


def test_whitespace_and_newlines():
    got = parse("x1\n  + x2\n  - 1/3")
    want = (
        Polynomial.variable(CTX, "x1")
        + Polynomial.variable(CTX, "x2")
        - Fraction(1, 3)
    )
    assert got == want


@pytest.mark.parametrize(
    "src",
    [
        "2x1",  # implicit multiplication
        "x1 x2",
        "3*-7",  # sign not at expression start
        "--x1",
        "x1^-2",
        "x1^(2)",  # exponent must be a literal
        "x1^x2",
        "x1/2",  # '/' only inside rational literals
        "1/0",
        "(x1",
        "x1 +",
        "",
        "x1 @ x2",
    ],
)
def test_syntax_errors(src):
    with pytest.raises(ParseError):
        parse(src)


def test_undeclared_variable_error_position():
    with pytest.raises(ParseError) as err:
        parse("x1 + zz", CTX)
    assert "zz" in str(err.value)
    assert err.value.line == 1 and err.value.col == 6


def test_error_reports_line_and_column():
    with pytest.raises(ParseError) as err:
        parse("x1 +\n x2 ^ x3")
    assert err.value.line == 2
    assert err.value.col == 7


def test_canonical_printing():
    assert to_text(Polynomial.zero(CTX)) == "0"
    assert to_text(parse("x2 + x1")) == "x1 + x2"
    assert to_text(parse("1*x1")) == "x1"
    assert to_text(parse("0*x1")) == "0"
    assert to_text(parse("x1 - x2")) == "x1 - x2"
    assert to_text(parse("-x1 - 1/3")) == "-x1 - 1/3"
    assert to_text(parse("2/4*x1")) == "1/2*x1"
    assert to_text(parse("x3*x1")) == "x1*x3"
    f = parse("x1^2 + x1*x2 + x2^2")
    assert to_text(f) == "x1^2 + x1*x2 + x2^2"


def test_parameters_print_by_name():
    # factors inside a monomial follow declaration order: geometric first
    f = parse_polynomial("Ht^2 + k0*x1 + a_11*x2 + r_1 - s_1", CTXP)
    assert to_text(f) == "x1*k0 + x2*a_11 + Ht^2 + r_1 - s_1"


def test_round_trip_seeded():
    rng = random.Random(13)
    for _ in range(200):
        f = random_polynomial(rng, CTXP, max_degree=5, max_terms=7)
        assert parse_polynomial(to_text(f), CTXP) == f


@settings(max_examples=120, deadline=None)
@given(
    st.lists(
        st.tuples(
            st.lists(st.integers(0, 5), min_size=3, max_size=3),
            st.fractions(
                min_value=-50, max_value=50, max_denominator=20
            ).filter(lambda q: q != 0),
        ),
        max_size=8,
    )
)
def test_round_trip_hypothesis(items):
    f = Polynomial(CTX, [(tuple(m), c) for m, c in items])
    assert parse_polynomial(to_text(f), CTX) == f
