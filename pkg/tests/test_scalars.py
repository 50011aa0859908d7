"""Arithmetic of the a+bI residues: hand oracles, ring laws, text grammar."""

from hypothesis import given
from hypothesis import strategies as st

from neutrolab.scalars import (
    CLASS_MIXED,
    CLASS_PURE,
    CLASS_REAL,
    CLASS_ZERO,
    I,
    ONE,
    ZERO,
    ns_add,
    ns_classify,
    ns_elements,
    ns_format,
    ns_is_unit,
    ns_mul,
    ns_neg,
    ns_parse,
    ns_scale,
    ns_sub,
    ring_axiom_violations,
)

def test_mul_oracles():
    # hand-expanded products (a+bI)(c+dI) = ac + (ad+bc+bd)I, reduced mod n
    assert ns_mul(10, (2, 3), (4, 5)) == (8, 7)
    assert ns_mul(10, I, I) == I
    assert ns_mul(10, I, (5, 0)) == (0, 5)
    assert ns_mul(4, (2, 2), (2, 2)) == (0, 0)
    assert ns_mul(12, (6, 2), (6, 4)) == (0, 8)


def test_product_with_i_kills_real_part():
    for n in (2, 3, 10):
        for x in ns_elements(n):
            assert ns_classify(ns_mul(n, I, x)) in (CLASS_ZERO, CLASS_PURE)


def test_zero_times_i_is_zero():
    for n in (2, 5, 12):
        assert ns_mul(n, ZERO, I) == ZERO
        assert ns_mul(n, I, ZERO) == ZERO


def test_ring_axioms_exhaustive_small_moduli():
    for n in range(2, 7):
        assert ring_axiom_violations(n) == []


def test_classify():
    assert ns_classify((0, 0)) == CLASS_ZERO
    assert ns_classify((3, 0)) == CLASS_REAL
    assert ns_classify((0, 3)) == CLASS_PURE
    assert ns_classify((3, 3)) == CLASS_MIXED


def test_format_grammar():
    assert ns_format((0, 0)) == "0"
    assert ns_format((7, 0)) == "7"
    assert ns_format((0, 1)) == "I"
    assert ns_format((0, 5)) == "5I"
    assert ns_format((5, 1)) == "5+I"
    assert ns_format((6, 5)) == "6+5I"


def test_parse_accepts_every_grammar_form():
    assert ns_parse("0") == (0, 0)
    assert ns_parse("7") == (7, 0)
    assert ns_parse("I") == (0, 1)
    assert ns_parse("5I") == (0, 5)
    assert ns_parse("5+I") == (5, 1)
    assert ns_parse("6+5I") == (6, 5)
    assert ns_parse("13", n=10) == (3, 0)


def test_parse_rejects_garbage():
    for bad in ("", "x", "1+", "+I", "I+1", "1+2", "2I+1"):
        try:
            ns_parse(bad)
        except ValueError:
            continue
        raise AssertionError("parsed %r" % bad)


@given(st.integers(2, 30), st.integers(0, 400), st.integers(0, 400))
def test_parse_format_roundtrip(n, a, b):
    x = (a % n, b % n)
    assert ns_parse(ns_format(x), n=n) == x


@given(st.integers(2, 12), st.integers(-50, 50), st.integers(-50, 50),
       st.integers(-50, 50), st.integers(-50, 50))
def test_mul_matches_expansion(n, a, b, c, d):
    x, y = (a % n, b % n), (c % n, d % n)
    expanded = ((a * c) % n, (a * d + b * c + b * d) % n)
    assert ns_mul(n, x, y) == expanded


@given(st.integers(2, 9), st.integers(0, 80), st.integers(0, 80))
def test_sub_is_add_neg(n, a, b):
    x = (a % n, (a * 7 + 1) % n)
    y = (b % n, (b * 3 + 2) % n)
    assert ns_sub(n, x, y) == ns_add(n, x, ns_neg(n, y))


def test_scale_matches_repeated_addition():
    n = 7
    x = (3, 5)
    total = ZERO
    for k in range(1, 6):
        total = ns_add(n, total, x)
        assert ns_scale(n, k, x) == total


def test_elements_order_and_count():
    assert ns_elements(3)[:4] == [(0, 0), (0, 1), (0, 2), (1, 0)]
    assert len(ns_elements(5)) == 25


def test_units():
    assert ns_is_unit(5, ONE)
    assert not ns_is_unit(5, I)          # I has no inverse: I*x is pure or zero
    assert ns_is_unit(5, (2, 4))         # inverse 3+3I: (2+4I)(3+3I) = 6+30I = 1
    assert ns_mul(5, (2, 4), (3, 3)) == ONE
