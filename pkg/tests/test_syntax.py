import random

import pytest
from hypothesis import given, settings

from lamwork.numerals import NOUR_ZERO_TEST, nour_numeral
from lamwork.random_terms import random_term
from lamwork.syntax import (
    ParseError, SourceText, UnknownName, canonical, parse, parse_definitions, parse_program,
    print_term,
)
from lamwork.terms import TRUE, App, Bound, Free, Lam, alpha_eq, lam, var

from test_terms import terms


def test_true():
    assert parse(r"\x.\y. x") == TRUE


def test_zero_test_of_nour():
    assert parse(r"\n. (n \x.\y.x)") == NOUR_ZERO_TEST


def test_unclosed_paren_reports_end_of_input():
    with pytest.raises(ParseError) as info:
        parse(r"(\x. x x")
    err = info.value
    assert "end of input" in str(err)
    assert (err.line, err.column) == (1, 9)


@pytest.mark.parametrize("text", ["\\x. x", "λx. x", "\\x.x", "(\\x.(x))"])
def test_both_sigils(text):
    assert parse(text) == Lam(Bound(0))


def test_multi_binder_sugar():
    assert parse(r"\x y z. x z (y z)") == parse(r"\x.\y.\z. x z (y z)")


def test_application_left_assoc():
    assert parse("a b c") == App(App(Free("a"), Free("b")), Free("c"))


def test_body_extends_right():
    assert parse(r"\x. x y") == Lam(App(Bound(0), Free("y")))


def test_comments_and_newlines():
    assert parse("# identity\n\\x. # bind\n x") == parse(r"\x.x")


def test_identifier_characters():
    assert parse("x_1' y2") == App(Free("x_1'"), Free("y2"))


def test_greek_identifier():
    assert free_vars_of("ν x") == {"ν", "x"}


def free_vars_of(text):
    from lamwork.terms import free_vars

    return free_vars(parse(text))


@pytest.mark.parametrize("text,line,col", [
    ("x )", 1, 3),
    ("\\. x", 1, 2),
    ("\\x x", 1, 5),
    ("x\n  $", 2, 3),
    ("", 1, 1),
])
def test_error_positions(text, line, col):
    with pytest.raises(ParseError) as info:
        parse(SourceText(text, "t.lam"))
    assert (info.value.line, info.value.column) == (line, col)
    assert str(info.value).startswith(f"t.lam:{line}:{col}:")


class TestPrinting:
    def test_canonical_ignores_binder_names(self):
        assert canonical(parse(r"\x.\y.x")) == canonical(parse(r"\a.\b.a"))

    def test_canonical_true(self):
        assert canonical(TRUE) == r"\x.\y. x"

    def test_d0_readable(self):
        assert print_term(nour_numeral(0), "readable") == r"\z. z (\x.\y. x) (\x. x)"

    def test_readable_reuses_names(self):
        assert print_term(parse(r"\f.\n. f (n f)")) == r"\f.\n. f (n f)"

    def test_readable_avoids_capture(self):
        t = lam("y", App(var("x"), var("y")))
        from lamwork.terms import substitute

        assert print_term(substitute(t, {"x": var("y")})) == r"\y1. y y1"

    def test_canonical_avoids_free_names(self):
        t = lam("q", App(var("x"), var("q")))
        assert canonical(t) == r"\x'. x x'"
        assert parse(canonical(t)) == t

    def test_lambda_in_head_position(self):
        assert print_term(parse(r"(\x.x) y")) == r"(\x. x) y"

    def test_unicode_sigil(self):
        assert print_term(TRUE, sigil="λ") == "λx.λy. x"

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            print_term(TRUE, "fancy")

    @given(terms(max_size=30))
    @settings(max_examples=300)
    def test_round_trip_readable(self, t):
        assert alpha_eq(parse(print_term(t, "readable")), t)

    @given(terms(max_size=30))
    @settings(max_examples=300)
    def test_round_trip_canonical(self, t):
        assert parse(canonical(t)) == t

    def test_canonical_injective_on_sample(self):
        rng = random.Random(5)
        seen = {}
        for _ in range(500):
            t = random_term(rng, rng.randint(1, 12), ("a", "x"))
            assert seen.setdefault(canonical(t), t) == t


class TestDefinitions:
    def test_references_inline(self):
        defs = parse_definitions("T = \\x y. x\nF = \\x y. y\npairTF = \\z. z T F\n")
        assert defs["pairTF"] == parse(r"\z. z (\x y. x) (\x y. y)")

    def test_later_may_not_be_referenced_early(self):
        with pytest.raises(UnknownName) as info:
            parse_definitions("A = \\x. B x\nB = \\x. x\n")
        assert info.value.line == 1

    def test_bound_names_shadow_definitions(self):
        defs = parse_definitions("x = \\a. a\nK = \\x y. x\n")
        assert defs["K"] == TRUE

    def test_program_with_main_term(self):
        defs, main = parse_program("I = \\x. x\n# the candidate\nI I y\n")
        assert main == App(App(defs["I"], defs["I"]), Free("y"))

    def test_program_without_main(self):
        defs, main = parse_program("I = \\x. x\n")
        assert main is None and "I" in defs

    def test_error_line_numbers_in_program(self):
        with pytest.raises(ParseError) as info:
            parse_program("I = \\x. x\n\nI (\n")
        assert (info.value.line, info.value.column) == (3, 4)

    def test_bundled_definitions(self):
        from importlib import resources

        text = resources.files("lamwork").joinpath("data/pairs.lam").read_text(encoding="utf-8")
        defs = parse_definitions(text)
        assert defs["d0"] == nour_numeral(0)
        assert defs["d2"] == nour_numeral(2)
        assert defs["T"] == TRUE
