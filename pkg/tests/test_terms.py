import random

import pytest
from hypothesis import given, settings, strategies as st

from lamwork.numerals import nour_numeral, p_term
from lamwork.syntax import parse
from lamwork.terms import (
    FALSE, TRUE, App, Bound, Free, Lam, alpha_eq, free_vars, from_named, lam, pair, size,
    substitute, to_named, var,
)
from lamwork.random_terms import random_term

NAMES = ("a", "b", "c", "x", "y")


@st.composite
def terms(draw, max_size=20, free=NAMES):
    seed = draw(st.integers(0, 2**32))
    n = draw(st.integers(1, max_size))
    return random_term(random.Random(seed), n, free, redex_bias=0.3)


@st.composite
def substitutions(draw):
    keys = draw(st.lists(st.sampled_from(NAMES), unique=True, max_size=4))
    return {k: draw(terms(max_size=8, free=NAMES + ("z",))) for k in keys}


class TestAlphaEq:
    def test_binder_renaming(self):
        assert alpha_eq(parse(r"\x.x"), parse(r"\y.y"))

    def test_true_is_not_false(self):
        assert not alpha_eq(TRUE, FALSE)

    def test_d0_is_pair_true_p0(self):
        assert alpha_eq(pair(TRUE, p_term(0)), parse(r"\z.(z (\a.\b.a) (\c.c))"))

    def test_free_names_matter(self):
        assert not alpha_eq(var("x"), var("y"))

    def test_hint_ignored_by_hash(self):
        assert hash(Lam(Bound(0), "x")) == hash(Lam(Bound(0), "y"))

    @given(terms(), terms(), terms())
    def test_equivalence_relation(self, a, b, c):
        assert alpha_eq(a, a)
        assert alpha_eq(a, b) == alpha_eq(b, a)
        if alpha_eq(a, b) and alpha_eq(b, c):
            assert alpha_eq(a, c)

    @given(terms())
    def test_consistent_renaming(self, t):
        renamed = from_named(to_named(t, canonical=True))
        assert alpha_eq(t, renamed)


class TestFreeVars:
    def test_identity_closed(self):
        assert free_vars(parse(r"\x.x")) == frozenset()

    def test_probe_application(self):
        q = parse(r"\n. n (\x.\y.x)")
        assert free_vars(App(App(App(q, var("ν")), var("x")), var("y"))) == {"ν", "x", "y"}

    def test_partial(self):
        assert free_vars(parse(r"\x.(x y)")) == {"y"}


class TestSubstitute:
    def test_variable(self):
        assert substitute(var("x"), {"x": parse(r"\z.z")}) == parse(r"\z.z")

    def test_simultaneous(self):
        got = substitute(parse("x y"), {"x": var("y"), "y": var("x")})
        assert got == parse("y x")

    def test_capture_avoiding(self):
        got = substitute(parse(r"\y.(x y)"), {"x": var("y")})
        # the binder now differs from the free y
        assert got == Lam(App(Free("y"), Bound(0)))
        assert free_vars(got) == {"y"}

    @given(terms())
    def test_empty_is_identity(self, m):
        assert alpha_eq(substitute(m, {}), m)

    @given(terms(), substitutions())
    def test_free_variable_bound(self, m, sigma):
        fm = free_vars(m)
        allowed = (fm - set(sigma)) | set().union(*(free_vars(sigma[v]) for v in fm & set(sigma)))
        assert free_vars(substitute(m, sigma)) <= allowed


class TestSize:
    @pytest.mark.parametrize("text,expected", [("x", 1), (r"\x.x", 2), (r"\x.\y.x", 3), ("x y", 3)])
    def test_examples(self, text, expected):
        assert size(parse(text)) == expected

    @given(terms())
    def test_matches_named_count(self, t):
        from oracle import size as named_size

        assert size(t) == named_size(to_named(t))


class TestPair:
    def test_d0(self):
        assert pair(TRUE, lam("x", var("x"))) == nour_numeral(0)
        assert pair(TRUE, p_term(0)) == parse(r"\w.(w (\x.\y.x) (\x.x))")

    def test_open(self):
        assert pair(var("x"), var("y")) == parse(r"\w.(w x y)")

    def test_no_capture(self):
        # the pair binder must not capture a free variable of the components
        assert pair(var("z"), var("w")) == parse(r"\q. q z w")

    def test_d1(self):
        assert pair(FALSE, p_term(1)) == nour_numeral(1)


@given(terms())
@settings(max_examples=200)
def test_named_round_trip(t):
    assert from_named(to_named(t)) == t
    assert from_named(to_named(t, canonical=True)) == t
