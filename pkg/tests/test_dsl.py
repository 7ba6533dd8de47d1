"""Tests for the text format: tokenizer, parser, printer, round trips."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadops.catalog import ASCII_ALIASES, BUILTIN_NAMES, builtin, catalog
from quadops.dsl import (
    Diagnostic,
    ParseResult,
    format_relation,
    parse,
    parse_relation,
    print_presentation,
    tokenize,
)
from quadops.linalg import span
from quadops.presentations import (
    GeneratorSet,
    Presentation,
    RelVector,
    dual,
    relation_vector,
)

AS_TEXT = "operad As { ops: m; rel: (x m y) m z = x m (y m z); }"


def kinds_and_texts(tokens):
    return [(t.kind, t.text) for t in tokens]


class TestTokenizer:
    def test_empty_text(self):
        tokens = tokenize("")
        assert kinds_and_texts(tokens) == [("eof", "")]

    def test_basic_split(self):
        tokens = tokenize("operad E {ops: a;}")
        assert kinds_and_texts(tokens) == [
            ("ident", "operad"),
            ("ident", "E"),
            ("punct", "{"),
            ("ident", "ops"),
            ("punct", ":"),
            ("ident", "a"),
            ("punct", ";"),
            ("punct", "}"),
            ("eof", ""),
        ]

    def test_star_continues_an_identifier(self):
        assert kinds_and_texts(tokenize("∧* m*")) == [
            ("ident", "∧*"),
            ("ident", "m*"),
            ("eof", ""),
        ]

    def test_star_alone_is_punctuation(self):
        assert kinds_and_texts(tokenize("3 * m")) == [
            ("int", "3"),
            ("punct", "*"),
            ("ident", "m"),
            ("eof", ""),
        ]
        assert kinds_and_texts(tokenize("*m")) == [
            ("punct", "*"),
            ("ident", "m"),
            ("eof", ""),
        ]

    def test_numbers_and_signs(self):
        assert kinds_and_texts(tokenize("-3/2")) == [
            ("punct", "-"),
            ("int", "3"),
            ("punct", "/"),
            ("int", "2"),
            ("eof", ""),
        ]

    def test_identifier_may_contain_digits(self):
        assert kinds_and_texts(tokenize("x1 2a")) == [
            ("ident", "x1"),
            ("int", "2"),
            ("ident", "a"),
            ("eof", ""),
        ]

    def test_comments_are_skipped(self):
        tokens = tokenize("a # rest is gone ; { }\nb")
        assert kinds_and_texts(tokens) == [
            ("ident", "a"),
            ("ident", "b"),
            ("eof", ""),
        ]

    def test_positions_are_one_based(self):
        tokens = tokenize("ab cd\n  ef")
        assert [(t.text, t.line, t.column) for t in tokens[:3]] == [
            ("ab", 1, 1),
            ("cd", 1, 4),
            ("ef", 2, 3),
        ]


class TestParseHappyPath:
    def test_single_operation_associativity(self):
        result = parse(AS_TEXT)
        assert result.ok
        p = result.presentations["As"]
        assert p.generators.names == ("m",)
        assert p.relations.dimension == 1
        # subspaces compare by coordinates, so the differently named
        # built-in is directly comparable
        assert p.relations == builtin("As").relations

    def test_block_without_relations(self):
        result = parse("operad E { ops: a; }")
        assert result.ok
        p = result.presentations["E"]
        assert p.relations.dimension == 0

    def test_mixed_shapes_on_one_side(self):
        one_sided = parse(
            "operad E { ops: a; rel: (x a y) a z - x a (y a z) = 0; }"
        )
        assert one_sided.ok
        assert (
            one_sided.presentations["E"].relations == builtin("As").relations
        )

    def test_scaled_relation_spans_the_same_line(self):
        result = parse(
            "operad E { ops: a; rel: 2 * (x a y) a z = 2 * x a (y a z); }"
        )
        assert result.ok
        assert result.presentations["E"].relations == builtin("As").relations

    def test_fraction_coefficient_changes_the_line(self):
        result = parse(
            "operad E { ops: a; rel: 1/2 * (x a y) a z = x a (y a z); }"
        )
        assert result.ok
        p = result.presentations["E"]
        assert p.relations.dimension == 1
        assert p.relations != builtin("As").relations

    def test_leading_minus_on_both_sides(self):
        result = parse(
            "operad E { ops: a; rel: -(x a y) a z = -x a (y a z); }"
        )
        assert result.ok
        assert result.presentations["E"].relations == builtin("As").relations

    def test_zero_equals_zero_is_the_zero_relation(self):
        result = parse("operad E { ops: a; rel: 0 = 0; }")
        assert result.ok
        assert result.presentations["E"].relations.dimension == 0

    def test_zero_coefficient_term_parses(self):
        result = parse("operad E { ops: a; rel: 0/2 * (x a y) a z = 0; }")
        assert result.ok
        assert result.presentations["E"].relations.dimension == 0

    def test_negative_coefficient_after_separator(self):
        result = parse(
            "operad E { ops: a; rel: (x a y) a z + -1 * x a (y a z) = 0; }"
        )
        assert result.ok
        assert result.presentations["E"].relations == builtin("As").relations

    def test_multiple_blocks_preserve_order(self):
        result = parse(AS_TEXT + "\noperad F { ops: a, b; }")
        assert result.ok
        assert list(result.presentations) == ["As", "F"]
        assert result.presentations["F"].generators.names == ("a", "b")

    def test_comments_inside_blocks(self):
        result = parse(
            "operad E { # one op\n  ops: a;\n  # no relations\n}"
        )
        assert result.ok
        assert result.presentations["E"].relations.dimension == 0


class TestDiagnostics:
    def test_undeclared_operation_position(self):
        text = "operad E {\n  ops: a;\n  rel: (x q y) a z = 0;\n}"
        result = parse(text)
        assert not result.ok
        (diag,) = result.diagnostics
        assert diag.message == "undeclared operation q"
        assert (diag.line, diag.column) == (3, 11)
        # the failed relation contributes nothing
        assert result.presentations["E"].relations.dimension == 0

    def test_recovery_keeps_later_relations(self):
        text = (
            "operad E { ops: a;\n"
            "  rel: (x q y) a z = 0;\n"
            "  rel: (x a y) a z = x a (y a z);\n"
            "}"
        )
        result = parse(text)
        assert not result.ok
        assert result.presentations["E"].relations == builtin("As").relations

    def test_malformed_monomial_wrong_variable(self):
        result = parse("operad E { ops: a; rel: (x a z) a z = 0; }")
        assert not result.ok
        assert any(
            "malformed monomial: expected variable y" in d.message
            for d in result.diagnostics
        )

    def test_malformed_monomial_wrong_order_on_the_right(self):
        result = parse("operad E { ops: a; rel: x a (z a y) = 0; }")
        assert not result.ok
        assert any(
            "expected variable y" in d.message for d in result.diagnostics
        )

    def test_duplicate_operad_name_keeps_the_first(self):
        result = parse(AS_TEXT + " operad As { ops: q; }")
        assert not result.ok
        assert any(
            "duplicate operad name As" in d.message
            for d in result.diagnostics
        )
        assert result.presentations["As"].generators.names == ("m",)

    def test_duplicate_operation_name(self):
        result = parse("operad E { ops: a, a; }")
        assert not result.ok
        assert any(
            "duplicate operation name a" in d.message
            for d in result.diagnostics
        )
        assert result.presentations["E"].generators.names == ("a",)

    def test_missing_star_after_coefficient(self):
        result = parse("operad E { ops: a; rel: 3 (x a y) a z = 0; }")
        assert not result.ok
        assert any("expected '*'" in d.message for d in result.diagnostics)

    def test_zero_denominator(self):
        result = parse("operad E { ops: a; rel: 1/0 * (x a y) a z = 0; }")
        assert not result.ok
        assert any(
            "denominator must be positive" in d.message
            for d in result.diagnostics
        )

    def test_missing_monomial(self):
        result = parse("operad E { ops: a; rel: 3 * = 0; }")
        assert not result.ok
        assert any(
            "expected a monomial" in d.message for d in result.diagnostics
        )

    def test_junk_before_first_block(self):
        result = parse("junk tokens operad E { ops: a; }")
        assert not result.ok
        assert any(
            "expected 'operad'" in d.message for d in result.diagnostics
        )
        assert "E" in result.presentations

    def test_unexpected_end_of_input(self):
        result = parse("operad E { ops: a;")
        assert not result.ok
        assert any(
            "unexpected end of input" in d.message
            for d in result.diagnostics
        )

    def test_diagnostics_never_raise(self):
        # a pile of malformed fragments must produce diagnostics, not
        # exceptions
        for text in (
            "operad",
            "operad {",
            "operad E",
            "operad E { ops }",
            "operad E { ops: ; }",
            "operad E { ops: a, ; }",
            "operad E { ops: a; rel }",
            "operad E { ops: a; rel: }",
            "operad E { ops: a; rel: (x a y) a z; }",
            "operad E { ops: a; rel: (x a y) a z = x a (y a z) }",
            "operad E { ops: a; rel: 1/ * (x a y) a z = 0; }",
            "operad E { ops: a; rel: - = 0; }",
            "} } ;",
        ):
            result = parse(text)
            assert not result.ok, text

    def test_diagnostic_string_form(self):
        diag = Diagnostic(3, 11, "undeclared operation q")
        assert str(diag) == "3:11: error: undeclared operation q"


class TestParseRelationHelper:
    def test_aliases_resolve_against_arrow_names(self):
        names = builtin("Xplus").generators.names
        vector, diagnostics = parse_relation(
            "(x nw y) se z - (x ne y) se z = 0",
            names,
            dict(ASCII_ALIASES),
        )
        assert diagnostics == ()
        nonzero = {
            i: c for i, c in enumerate(vector.coordinates) if c != 0
        }
        assert nonzero == {3: Fraction(1), 7: Fraction(-1)}

    def test_unicode_names_work_without_aliases(self):
        vector, diagnostics = parse_relation(
            "(x ∧ y) ∨ z + (x ∨ y) ∨ z = x ∨ (y ∨ z)",
            builtin("Dend").generators.names,
        )
        assert diagnostics == ()
        assert vector is not None

    def test_alias_needs_a_matching_target(self):
        vector, diagnostics = parse_relation(
            "(x dot y) dot z = 0", ("a",), dict(ASCII_ALIASES)
        )
        assert vector is None
        assert any(
            "undeclared operation dot" in d.message for d in diagnostics
        )

    def test_trailing_input_is_rejected(self):
        vector, diagnostics = parse_relation(
            "0 = 0 extra", builtin("As").generators.names
        )
        assert vector is None
        assert any("trailing input" in d.message for d in diagnostics)


class TestPrinter:
    def test_single_operation_golden(self):
        text = print_presentation(builtin("As"), "As")
        assert text == (
            "operad As {\n"
            "  ops: ·;\n"
            "  rel: (x · y) · z = x · (y · z);\n"
            "}\n"
        )

    def test_no_relations_prints_no_rel_lines(self):
        p = Presentation(GeneratorSet(("a",)), span([], 2))
        assert print_presentation(p, "E") == (
            "operad E {\n  ops: a;\n}\n"
        )

    def test_fraction_coefficients_survive_normalization(self):
        vector = relation_vector(1, [(Fraction(2), 0, 0)], [(1, 0, 0)])
        p = Presentation(GeneratorSet(("a",)), span([vector.coordinates], 2))
        text = print_presentation(p, "E")
        assert "rel: (x a y) a z = 1/2 * x a (y a z);" in text
        result = parse(text)
        assert result.ok
        assert result.presentations["E"].relations == p.relations

    def test_minus_separator(self):
        coords = [Fraction(0)] * 8
        coords[0] = Fraction(1)
        coords[1] = Fraction(-1)
        line = format_relation(RelVector(tuple(coords)), ("a", "b"))
        assert line == "(x a y) a z - (x a y) b z = 0"

    def test_right_only_rows_lead_positively(self):
        for c in (Fraction(1), Fraction(-1)):
            line = format_relation(RelVector((Fraction(0), c)), ("a",))
            assert line == "0 = x a (y a z)"

    def test_invalid_operad_name_rejected(self):
        with pytest.raises(ValueError):
            print_presentation(builtin("As"), "two words")
        with pytest.raises(ValueError):
            print_presentation(builtin("As"), "3X")

    def test_unprintable_operation_name_rejected(self):
        p = Presentation(GeneratorSet(("a b",)), span([], 2))
        with pytest.raises(ValueError):
            print_presentation(p, "E")


class TestRoundTrip:
    @pytest.mark.parametrize("name", BUILTIN_NAMES)
    def test_builtins_reach_a_textual_fixed_point(self, name):
        p = catalog().presentation(name)
        text = print_presentation(p, name)
        result = parse(text)
        assert result.ok
        q = result.presentations[name]
        assert q.generators == p.generators
        assert q.relations == p.relations
        assert print_presentation(q, name) == text

    @pytest.mark.parametrize("name", BUILTIN_NAMES)
    def test_duals_round_trip_with_starred_names(self, name):
        d = dual(catalog().presentation(name))
        text = print_presentation(d, "D")
        result = parse(text)
        assert result.ok
        assert result.presentations["D"].relations == d.relations

    @given(
        k=st.integers(min_value=1, max_value=3),
        rows=st.lists(
            st.lists(
                st.fractions(
                    min_value=-3, max_value=3, max_denominator=3
                ),
                min_size=18,
                max_size=18,
            ),
            max_size=3,
        ),
    )
    @settings(max_examples=60, deadline=None)
    def test_random_presentations_round_trip(self, k, rows):
        names = ("a", "b", "c")[:k]
        ambient = 2 * k * k
        p = Presentation(
            GeneratorSet(names),
            span([tuple(row[:ambient]) for row in rows], ambient),
        )
        text = print_presentation(p, "R")
        result = parse(text)
        assert result.ok
        q = result.presentations["R"]
        assert q.relations == p.relations
        assert print_presentation(q, "R") == text
