from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from ologism.core import SerializeError, TypeDecl, Ologism, structurally_equal
from ologism.dsl import parse_model, parse_ologism, serialize
from .oracles import random_document


class TestParseOlogism:
    def test_animals_document(self, animals):
        assert animals.name == "animals"
        assert len(animals.types) == 4
        assert len(animals.premisses) == 5
        assert [a.source for a in animals.is_aspects()] == ["B", "M"]

    def test_aspect_is_sugar(self):
        a = parse_ologism('ologism "x" { type X "an x"\n type Y "a y"\n A X Y }').value
        b = parse_ologism('ologism "x" { type X "an x"\n type Y "a y"\n aspect is : X -> Y }').value
        assert structurally_equal(a, b)

    def test_fact_with_composite_side(self, has_mother):
        (fact,) = has_mother.facts
        assert fact.name == "has-mother"
        assert len(fact.lhs) == 1 and len(fact.rhs) == 2

    def test_diagnostics_carry_positions(self):
        result = parse_ologism('ologism "x" {\n  type X "an x"\n  E X Y\n}')
        assert result.value is None
        (diag,) = result.errors
        assert diag.code == "UnknownType"
        assert (diag.line, diag.column) == (3, 3)

    def test_non_parallel_fact_diagnostic(self):
        src = (
            'ologism "x" {\n  type X "an x"\n  type Y "a y"\n'
            "  aspect f : X -> Y\n  fact : f = id(X)\n}"
        )
        result = parse_ologism(src)
        assert any(d.code == "NonParallelFact" for d in result.errors)

    def test_duplicate_declarations_are_errors(self):
        src = 'ologism "x" { type X "an x"\n type X "an x"\n E X X\n E X X }'
        codes = {d.code for d in parse_ologism(src).errors}
        assert {"DuplicateType", "DuplicatePremiss"} <= codes

    def test_reserved_type_id(self):
        result = parse_ologism('ologism "x" { type is "an is" }')
        assert any(d.code == "ReservedIdentifier" for d in result.errors)

    def test_label_without_article_warns(self):
        result = parse_ologism('ologism "x" { type X "pure essence" }')
        assert result.ok is False or result.value is not None
        assert any(d.code == "LabelWithoutArticle" and d.severity == "warning"
                   for d in result.diagnostics)

    def test_comments_and_whitespace(self):
        src = 'ologism "x" {  # header\n\n  type X "an x"  # trailing\n}'
        assert parse_ologism(src).value is not None

    def test_shared_name_disambiguated_by_parallelism(self):
        src = (
            'ologism "x" {\n  type X "an x"\n  type Y "a y"\n'
            "  aspect f : X -> Y\n  aspect f : X -> X\n"
            "  aspect g : X -> Y\n  fact : f = g\n}"
        )
        result = parse_ologism(src)
        assert result.value is not None
        (fact,) = result.value.facts
        assert fact.lhs.target == "Y"

    def test_genuinely_ambiguous_fact(self):
        # f and h both fork, and both forks recombine: two parallel readings.
        src = (
            'ologism "x" {\n  type X "an x"\n  type Y "a y"\n  type Z "a z"\n'
            '  type W "a w"\n'
            "  aspect f : X -> Y\n  aspect f : X -> Z\n"
            "  aspect h : Y -> W\n  aspect h : Z -> W\n"
            "  aspect g : X -> W\n  fact : f ; h = g\n}"
        )
        result = parse_ologism(src)
        assert any(d.code == "AmbiguousAspect" for d in result.errors)

    def test_unterminated_string(self):
        result = parse_ologism('ologism "x { }')
        assert any(d.code == "UnterminatedString" for d in result.errors)


class TestParseModel:
    def test_custodian_model(self, custodian_model):
        assert custodian_model.for_ologism == "custodian"
        assert custodian_model.carriers["C"] == frozenset({"C10", "C11", "C12", "C13"})
        assert custodian_model.maps["has"]["C12"] == "H12I3"

    def test_quoted_pair_elements(self, family_model):
        assert "(Susan,Juan)" in family_model.carriers["Pair"]

    def test_empty_set(self):
        result = parse_model('model "m" for "d" { set X = {} }')
        assert result.value is not None
        assert result.value.carriers["X"] == frozenset()

    def test_duplicate_set(self):
        result = parse_model('model "m" for "d" { set X = {a}\n set X = {b} }')
        assert any(d.code == "DuplicateSet" for d in result.errors)

    def test_bad_arrow(self):
        result = parse_model('model "m" for "d" { map f : a b }')
        assert result.value is None and result.errors


class TestSerialize:
    def test_animals_roundtrip(self, animals):
        text = serialize(animals)
        again = parse_ologism(text).value
        assert structurally_equal(animals, again)
        assert serialize(again) == text

    def test_model_roundtrip(self, family_model):
        text = serialize(family_model)
        again = parse_model(text).value
        assert again == family_model
        assert serialize(again) == text

    def test_reserved_type_id_refused(self):
        bad = Ologism("x", (TypeDecl("is", "an is"),))
        with pytest.raises(SerializeError):
            serialize(bad)

    def test_non_identifier_refused(self):
        bad = Ologism("x", (TypeDecl("a b", "weird"),))
        with pytest.raises(SerializeError):
            serialize(bad)

    def test_escapes_in_labels(self):
        doc = Ologism.build("q", [TypeDecl("X", 'a "quoted" \\ thing')])
        again = parse_ologism(serialize(doc)).value
        assert again.label("X") == 'a "quoted" \\ thing'

    def test_random_documents_roundtrip(self):
        rng = random.Random(42)
        for _ in range(150):
            doc = random_document(rng)
            text = serialize(doc)
            again = parse_ologism(text).value
            assert again is not None, text
            assert structurally_equal(doc, again), text
            assert serialize(again) == text


@settings(max_examples=300, suppress_health_check=[HealthCheck.too_slow], deadline=None)
@given(st.text(max_size=200))
def test_parser_never_raises_on_arbitrary_text(text):
    parse_ologism(text)
    parse_model(text)


@settings(max_examples=150, deadline=None)
@given(st.text(alphabet='ologism"{}#->;:,()ABEIO xyz_\\\n\t\r"', max_size=120))
def test_parser_never_raises_on_near_miss_text(text):
    parse_ologism(text)
    parse_model(text)
