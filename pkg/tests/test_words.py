import pytest
from hypothesis import given, strategies as st

from repvar.words import (FreeWord, Presentation, PresentationError, WordSyntaxError,
                          central_flip_factor, commutator, exponent_profile, format_word,
                          free_reduce, has_even_nonzero_sum, in_commutator_subgroup,
                          minus_condition_holds, parse_presentation, parse_relation, parse_word,
                          pm_condition_holds)

GENS = ["x", "y", "z"]
syllables = st.lists(st.tuples(st.integers(0, 2), st.integers(-4, 4)), max_size=12)


def W(text, gens=GENS):
    return parse_word(text, gens)


class TestParse:
    def test_commutator_convention(self):
        assert W("[x,y]", "xy").letters == ((0, 1), (1, 1), (0, -1), (1, -1))

    def test_cancels_to_identity(self):
        assert W("x x^-1", "x").is_trivial()

    def test_already_reduced(self):
        assert W("x^2 y^3 x^-2", "xy").letters == ((0, 2), (1, 3), (0, -2))

    def test_star_and_parens(self):
        assert W("(x*y)^2") == W("x y x y")
        assert W("(x y)^-1") == W("y^-1 x^-1")

    def test_optional_separator(self):
        assert W("[x,y^2]y^2") == W("[x, y^2] y^2")

    def test_nested_brackets(self):
        u, v = W("[x,y]"), W("z")
        assert W("[[x,y],z]") == commutator(u, v)

    def test_multichar_names(self):
        assert parse_word("a1 a2 a1^-1", ["a1", "a2"]).letters == ((0, 1), (1, 1), (0, -1))

    @pytest.mark.parametrize("text,offset", [("x^0", 2), ("x w", 2), ("x^", 2), ("[x y]", 4),
                                             ("(x", 2), ("x)", 1)])
    def test_errors_carry_byte_offset(self, text, offset):
        with pytest.raises(WordSyntaxError) as err:
            W(text)
        assert err.value.offset == offset

    def test_relation_form(self):
        assert parse_relation("x^2 = y^3", GENS) == W("x^2 y^-3")

    def test_empty_word_is_identity(self):
        assert W("").is_trivial()
        assert format_word(FreeWord(), GENS) == "1"

    @given(syllables)
    def test_print_parse_round_trip(self, raw):
        w = free_reduce(raw)
        assert parse_word(format_word(w, GENS), GENS) == w


class TestReduce:
    @pytest.mark.parametrize("raw,expected", [
        ([(0, 1), (0, -1)], ()),
        ([(0, 2), (0, 3)], ((0, 5),)),
        ([(0, 1), (1, 2), (1, -2), (0, -1)], ()),
    ])
    def test_examples(self, raw, expected):
        assert free_reduce(raw).letters == expected

    @given(syllables)
    def test_idempotent(self, raw):
        once = free_reduce(raw)
        assert free_reduce(once.letters) == once

    @given(syllables)
    def test_invariants(self, raw):
        letters = free_reduce(raw).letters
        assert all(e != 0 for _, e in letters)
        assert all(a[0] != b[0] for a, b in zip(letters, letters[1:]))

    @given(syllables, syllables, syllables)
    def test_associative(self, a, b, c):
        u, v, w = free_reduce(a), free_reduce(b), free_reduce(c)
        assert (u * v) * w == u * (v * w)

    @given(syllables)
    def test_inverse(self, raw):
        w = free_reduce(raw)
        assert (w * w.inverse()).is_trivial()

    def test_unreduced_construction_rejected(self):
        with pytest.raises(ValueError):
            FreeWord(((0, 1), (0, 2)))

    def test_cyclic_reduce_and_rotations(self):
        w = W("[x, y^2] y^2")
        assert w == W("x y^2 x^-1")
        assert w.cyclic_reduce() == W("y^2")
        assert {r.letters for r in W("x y z").rotations()} == {
            W("x y z").letters, W("y z x").letters, W("z x y").letters}


class TestExponentSums:
    def test_commutator(self):
        p = exponent_profile(W("[x,y]"), 2)
        assert p.sums == (0, 0) and p.total == 0

    def test_mixed(self):
        p = exponent_profile(W("x^2 y^3 x^-2"), 2)
        assert p.sums == (0, 3) and p.total == 3

    def test_surface(self):
        w = parse_word("[a,b][c,d]", "abcd")
        assert exponent_profile(w, 4).sums == (0, 0, 0, 0)

    def test_undeclared_generator(self):
        with pytest.raises(ValueError):
            exponent_profile(W("z"), 2)

    def test_absent_generators_recorded(self):
        assert exponent_profile(W("x^2"), 3).sums == (2, 0, 0)


class TestParity:
    def test_commutator_subgroup(self):
        assert not in_commutator_subgroup(W("[x, y^2] y^2"), 2)
        assert in_commutator_subgroup(W("[x,y]"), 2)
        assert not in_commutator_subgroup(W("x^3 y^5"), 2)

    def test_pm_condition(self):
        assert pm_condition_holds(W("[x,y][y,z]"), 3)
        assert pm_condition_holds(W("x^2"), 3)
        assert not pm_condition_holds(W("x^3"), 1)

    def test_minus_condition(self):
        for n in (1, 3, 5, 7):
            assert minus_condition_holds(FreeWord.gen(0, n), 1)
        for n in (2, 4, 6):
            assert not minus_condition_holds(FreeWord.gen(0, n), 1)
        assert not minus_condition_holds(W("[x,y]"), 2)

    def test_even_nonzero(self):
        assert has_even_nonzero_sum(W("x^2 y"), 2)
        assert not has_even_nonzero_sum(W("[x,y]"), 2)

    @pytest.mark.parametrize("text,signs,factor", [
        ("x^2", (-1,), 1), ("x^3", (-1,), -1),
        ("[x,y] x^2", (-1, 1), 1), ("[x,y] x^2", (1, -1), 1), ("[x,y] x^2", (-1, -1), 1),
        ("x y", (-1, 1), -1), ("x y", (-1, -1), 1),
    ])
    def test_flip_factor(self, text, signs, factor):
        assert central_flip_factor(W(text), signs) == factor

    def test_flip_factor_rejects_bad_signs(self):
        with pytest.raises(ValueError):
            central_flip_factor(W("x"), (2,))

    @given(syllables)
    def test_implications(self, raw):
        w = free_reduce(raw)
        if in_commutator_subgroup(w, 3):
            assert pm_condition_holds(w, 3)
        if minus_condition_holds(w, 3):
            assert not pm_condition_holds(w, 3)


class TestPresentation:
    def test_parse_file_format(self):
        p = parse_presentation("gens: x, y  # two\n\nrel: [x,y]\nrel: x^2 = y^3\n")
        assert p.names == ["x", "y"]
        assert p.relators == (W("[x,y]"), W("x^2 y^-3"))
        assert p.deficiency == 0

    def test_error_location(self):
        with pytest.raises(PresentationError) as err:
            parse_presentation("gens: x, y\nrel: x^0", "f.txt")
        assert (err.value.source, err.value.line, err.value.offset) == ("f.txt", 2, 7)
        assert str(err.value).startswith("f.txt:2:7:")

    def test_unknown_generator(self):
        with pytest.raises(PresentationError) as err:
            parse_presentation("gens: x\nrel: x q")
        assert err.value.line == 2 and err.value.offset == 7

    @pytest.mark.parametrize("text", ["rel: x", "gens: x\ngens: y", "gens: x, x", "gens: 1x",
                                      "foo: x", ""])
    def test_malformed(self, text):
        with pytest.raises(PresentationError):
            parse_presentation(text)

    def test_trivial_relator_flagged(self):
        p = parse_presentation("gens: x\nrel: x x^-1")
        assert any("trivial relator" in m for m in p.validate())

    def test_relator_index_checked(self):
        with pytest.raises(ValueError):
            Presentation(("x",), (W("y"),))

    def test_str(self):
        assert str(parse_presentation("gens: x,y\nrel: [x,y]")) == "<x, y ; x y x^-1 y^-1>"
