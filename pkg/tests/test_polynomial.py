import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import (
    FIRST_FACTOR,
    PRODUCT_BASE_LINE,
    PRODUCT_EXPONENT_LINE,
    SECOND_FACTOR,
    random_polynomial,
    raw_polynomials,
    terms,
)
from engine.errors import ArithmeticOverflowError, PolynomialParseError
from engine.polynomial import (
    evaluate,
    multiply,
    parse_polynomial,
    product,
    render_polynomial,
    render_two_line,
    simplify_sorted,
    simplify_unsorted,
    term_compare,
    term_product,
    term_sort_key,
)
from engine.states import INT64_MAX, Polynomial, Term


def T(c, x=0, y=0) -> Term:
    return Term(coeff=c, xexp=x, yexp=y)


def P(*triples) -> Polynomial:
    return Polynomial.from_tuples(triples)


# ─────────────────────────────────────────────────────────────────────────────
# parse_polynomial
# ─────────────────────────────────────────────────────────────────────────────

def test_parse_second_factor():
    assert parse_polynomial(SECOND_FACTOR).as_tuples() == [(1, 5, 1), (1, 0, 0), (1, 3, 0)]


def test_parse_first_factor_reads_y_as_y():
    assert parse_polynomial(FIRST_FACTOR).as_tuples() == [(-1, 8, 1), (9, 3, 0), (-1, 0, 0), (1, 0, 1)]


def test_parse_constant():
    assert parse_polynomial("1").as_tuples() == [(1, 0, 0)]


def test_parse_leading_plus_and_full_term():
    assert parse_polynomial("+12x3y4-y2x").as_tuples() == [(12, 3, 4), (-1, 1, 2)]


def test_parse_keeps_duplicates_raw():
    assert parse_polynomial("x+x-x").as_tuples() == [(1, 1, 0), (1, 1, 0), (-1, 1, 0)]


@pytest.mark.parametrize(
    "text, position",
    [
        ("", 0),
        ("x2x3", 2),
        ("x+", 2),
        ("x+-y", 2),
        ("3a", 1),
        ("x y", 1),
        ("z", 0),
        ("2x3*y", 3),
    ],
)
def test_parse_errors_name_the_position(text, position):
    with pytest.raises(PolynomialParseError) as info:
        parse_polynomial(text)
    assert info.value.position == position


def test_parse_rejects_coefficient_overflow():
    with pytest.raises(PolynomialParseError, match="64 bits"):
        parse_polynomial(str(INT64_MAX + 1) + "x")


@pytest.mark.parametrize("text, position", [("9" * 5000 + "x", 0), ("x" + "7" * 5000, 1), ("3x2+y" + "1" * 20, 5)])
def test_parse_rejects_very_long_digit_runs(text, position):
    with pytest.raises(PolynomialParseError, match="digits does not fit") as info:
        parse_polynomial(text)
    assert info.value.position == position


def test_parse_accepts_leading_zeros():
    assert parse_polynomial("0000000000000000000000007x02").as_tuples() == [(7, 2, 0)]


def test_parse_rejects_exponent_overflow():
    with pytest.raises(PolynomialParseError) as info:
        parse_polynomial("x" + str(INT64_MAX + 1))
    assert info.value.position == 1


# ─────────────────────────────────────────────────────────────────────────────
# term_product / term_compare
# ─────────────────────────────────────────────────────────────────────────────

def test_term_product_examples():
    assert term_product(T(-1, 8, 1), T(1, 5, 1)) == T(-1, 13, 2)
    assert term_product(T(9, 3, 0), T(1, 3, 0)) == T(9, 6, 0)
    assert term_product(T(7, 2, 5), T(1)) == T(7, 2, 5)


def test_term_product_overflow():
    with pytest.raises(ArithmeticOverflowError):
        term_product(T(2 ** 40), T(2 ** 40))
    with pytest.raises(ArithmeticOverflowError):
        term_product(T(1, INT64_MAX), T(1, 1))


@given(terms, terms, terms)
def test_term_product_commutative_and_associative(a, b, c):
    assert term_product(a, b) == term_product(b, a)
    assert term_product(term_product(a, b), c) == term_product(a, term_product(b, c))


def test_term_compare_examples():
    assert term_compare(T(1, 5, 2), T(-3, 5, 1)) == -1
    assert term_compare(T(7, 3, 3), T(-7, 3, 3)) == 0
    assert term_compare(T(1, 0, 1), T(1, 0, 0)) == -1
    assert term_compare(T(1, 0, 0), T(1, 1, 0)) == 1


@given(terms, terms, terms)
def test_term_compare_is_total_preorder(a, b, c):
    assert term_compare(a, b) == -term_compare(b, a)
    if term_compare(a, b) <= 0 and term_compare(b, c) <= 0:
        assert term_compare(a, c) <= 0


@given(st.lists(terms, max_size=15))
def test_sort_is_stable_on_equal_exponents(items):
    ordered = sorted(items, key=term_sort_key)
    for key in {term_sort_key(t) for t in items}:
        assert [t for t in ordered if term_sort_key(t) == key] == [
            t for t in items if term_sort_key(t) == key
        ]


# ─────────────────────────────────────────────────────────────────────────────
# multiply / simplify
# ─────────────────────────────────────────────────────────────────────────────

def test_multiply_keeps_every_pair():
    raw = multiply(parse_polynomial(FIRST_FACTOR), parse_polynomial(SECOND_FACTOR))
    assert len(raw.terms) == 12


def test_multiply_singletons():
    assert multiply(P((2, 1, 0)), P((3, 0, 1))).as_tuples() == [(6, 1, 1)]


def test_published_product_canonical_terms():
    result = product(parse_polynomial(FIRST_FACTOR), parse_polynomial(SECOND_FACTOR))
    assert result.as_tuples() == [
        (-1, 13, 2), (-1, 11, 1), (8, 8, 1), (9, 6, 0), (1, 5, 2),
        (-1, 5, 1), (1, 3, 1), (8, 3, 0), (1, 0, 1), (-1, 0, 0),
    ]


@pytest.mark.parametrize("simplify", [simplify_unsorted, simplify_sorted])
def test_simplify_examples(simplify):
    assert simplify(P((40, 2, 3), (-38, 2, 3))).as_tuples() == [(2, 2, 3)]
    assert simplify(P((1, 2, 3), (-1, 2, 3))).as_tuples() == []
    canonical = P((3, 4, 1), (-2, 4, 0), (5, 0, 0))
    assert simplify(canonical) == canonical


@pytest.mark.parametrize("simplify", [simplify_unsorted, simplify_sorted])
def test_simplify_sum_overflow(simplify):
    with pytest.raises(ArithmeticOverflowError):
        simplify(P((INT64_MAX, 1, 1), (1, 1, 1)))


def test_cleanup_strategies_agree_on_ten_thousand_raw_polynomials(rng):
    for _ in range(10_000):
        raw = random_polynomial(rng, max_terms=20, max_exp=4)
        assert simplify_unsorted(raw) == simplify_sorted(raw)


@given(raw_polynomials)
def test_simplify_is_idempotent(raw):
    once = simplify_sorted(raw)
    assert simplify_sorted(once) == once
    assert simplify_unsorted(once) == once


@given(raw_polynomials)
def test_canonical_form_invariants(raw):
    result = simplify_unsorted(raw)
    keys = [term_sort_key(t) for t in result.terms]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
    assert all(t.coeff != 0 for t in result.terms)


def test_numeric_oracle_on_a_thousand_pairs(rng):
    for _ in range(1000):
        p1 = simplify_sorted(random_polynomial(rng))
        p2 = simplify_sorted(random_polynomial(rng))
        result = product(p1, p2)
        for _ in range(20):
            x, y = rng.randint(-5, 5), rng.randint(-5, 5)
            assert evaluate(result, x, y) == evaluate(p1, x, y) * evaluate(p2, x, y)


@given(raw_polynomials, raw_polynomials)
@settings(max_examples=200)
def test_product_is_commutative(p1, p2):
    assert product(p1, p2) == product(p2, p1, "unsorted")


@given(
    st.lists(st.builds(Term, coeff=st.integers(1, 99), xexp=st.integers(0, 9), yexp=st.integers(0, 9)),
             min_size=1, max_size=8),
    st.lists(st.builds(Term, coeff=st.integers(1, 99), xexp=st.integers(0, 9), yexp=st.integers(0, 9)),
             min_size=1, max_size=8),
)
def test_leading_term_of_positive_product(left, right):
    p1 = simplify_sorted(Polynomial(terms=tuple(left)))
    p2 = simplify_sorted(Polynomial(terms=tuple(right)))
    assert product(p1, p2).terms[0] == term_product(p1.terms[0], p2.terms[0])


def test_product_rejects_unknown_strategy():
    with pytest.raises(ValueError):
        product(P((1, 0, 0)), P((1, 0, 0)), "bogus")


# ─────────────────────────────────────────────────────────────────────────────
# render_two_line
# ─────────────────────────────────────────────────────────────────────────────

def test_render_published_product():
    result = product(parse_polynomial(FIRST_FACTOR), parse_polynomial(SECOND_FACTOR), "unsorted")
    assert render_two_line(result) == (PRODUCT_EXPONENT_LINE, PRODUCT_BASE_LINE)


@pytest.mark.parametrize(
    "triples, expected",
    [
        ([(1, 0, 0)], ("", "1")),
        ([], ("", "0")),
        ([(2, 2, 3)], ("  2 3", "2x y")),
        ([(1, 1, 1)], ("", "xy")),
        ([(-1, 0, 0)], ("", "- 1")),
        ([(-7, 1, 0), (1, 0, 12)], ("        12", "- 7x + y")),
        ([(123, 10, 0)], ("    10", "123x")),
    ],
)
def test_render_rules(triples, expected):
    assert render_two_line(P(*triples)) == expected


@given(raw_polynomials)
def test_exponent_digits_sit_over_blanks(raw):
    upper, lower = render_two_line(simplify_sorted(raw))
    for col, glyph in enumerate(upper):
        if glyph != " ":
            assert glyph.isdigit()
            assert col >= len(lower) or lower[col] == " "


def test_render_polynomial_joins_lines():
    assert render_polynomial(P((2, 2, 3))) == "  2 3\n2x y"


def test_evaluate():
    assert evaluate(P((3, 2, 1), (-1, 0, 0)), 2, 5) == 59
    assert evaluate(P(), 4, 4) == 0

