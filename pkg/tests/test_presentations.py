"""Word algebra and the presentation text format."""

import pytest

from coclasslab.errors import InvalidPresentation, ParseError
from coclasslab.presentations import (
    Presentation,
    commutator,
    parse_presentation,
    parse_word,
    render_presentation,
    render_word,
    winv,
    wmul,
    wpow,
)


class TestWords:
    def test_free_reduction(self):
        assert wmul((1, -1)) == ()
        assert wmul((1, 2), (-2, -1)) == ()
        assert wmul((1,), (2,), (-2,)) == (1,)

    def test_inverse(self):
        w = (1, 2, -1)
        assert winv(w) == (1, -2, -1)
        assert wmul(w, winv(w)) == ()

    def test_powers(self):
        assert wpow((1,), 3) == (1, 1, 1)
        assert wpow((1, 2), -1) == (-2, -1)
        assert wpow((1,), 0) == ()

    def test_commutator(self):
        assert commutator((2,), (1,)) == (-2, -1, 2, 1)


class TestParse:
    NAMES = ("x", "y")

    def test_letters_and_inverses(self):
        assert parse_word("xY", self.NAMES) == (1, -2)

    def test_power(self):
        assert parse_word("x^3", self.NAMES) == (1, 1, 1)
        assert parse_word("x^-2", self.NAMES) == (-1, -1)

    def test_commutator_shorthand(self):
        assert parse_word("[y,x]", self.NAMES) == (-2, -1, 2, 1)
        assert parse_word("[[y,x],x]", self.NAMES) == \
            wmul(winv((-2, -1, 2, 1)), (-1,), (-2, -1, 2, 1), (1,))

    def test_groups_and_identity(self):
        assert parse_word("(xy)^2", self.NAMES) == (1, 2, 1, 2)
        assert parse_word("1", self.NAMES) == ()

    @pytest.mark.parametrize("bad", ["z", "[x,y", "(xy", "x^", "x^y", "[x]"])
    def test_errors(self, bad):
        with pytest.raises(ParseError):
            parse_word(bad, self.NAMES)

    def test_parser_total_on_junk(self):
        from hypothesis import given, strategies as st

        @given(st.text(alphabet="xyXY[](),^-0123456789 1", max_size=30))
        def run(text):
            try:
                parse_word(text, self.NAMES)
            except ParseError:
                pass

        run()

    def test_presentation_file(self):
        p = parse_presentation("""
            gens x y
            x^3
            y^3
            [y,x]            # a comment
            """)
        assert p.generator_count == 2
        assert len(p.relators) == 3

    def test_equation_sugar(self):
        p = parse_presentation("gens x y\n[y,x] = x^3\ny^3")
        assert p.relators[0] == wmul((-2, -1, 2, 1), (-1, -1, -1))

    def test_round_trip(self):
        p = parse_presentation("gens x y\nx^9\ny^3\n[y,x]X^3")
        again = parse_presentation(render_presentation(p))
        assert again.relators == p.relators

    def test_requires_gens_line(self):
        with pytest.raises(ParseError):
            parse_presentation("x^3")


class TestPresentationValidation:
    def test_empty_relators_rejected(self):
        with pytest.raises(InvalidPresentation):
            Presentation(2, ())

    def test_letter_range_checked(self):
        with pytest.raises(InvalidPresentation):
            Presentation(1, ((2,),))
        with pytest.raises(InvalidPresentation):
            Presentation(1, ((0,),))

    def test_render_word_runs(self):
        assert render_word((1, 1, 1, -2), ("x", "y")) == "x^3Y"
        assert render_word((), ("x", "y")) == "1"
