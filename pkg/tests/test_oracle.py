from __future__ import annotations

import random

import pytest

from ologism.core import A, E, I, O, Ologism, proposition
from ologism.deduce import close, contradictions
from ologism.model import satisfies
from ologism.oracle import (
    FragmentError,
    OracleConfig,
    ScaleError,
    all_propositions,
    check_completeness,
    check_soundness,
    count_models,
    enumerate_models,
    is_only,
    sample_models,
    semantic_consequences,
)
from .oracles import random_ologism


class TestEnumeration:
    def test_free_type_has_all_subsets(self):
        doc = Ologism.build("one", ["X"])
        assert count_models(doc, OracleConfig(universe_size=3)) == 8

    def test_import_premiss_drops_empty_carrier(self):
        doc = Ologism.build("one", ["X"], premisses=[I("X", "X")])
        assert count_models(doc, OracleConfig(universe_size=3)) == 7

    def test_contradictory_pairs_have_no_models(self):
        for premisses in ([A("S", "P"), O("S", "P")], [I("S", "P"), E("S", "P")]):
            doc = Ologism.build("sq", ["S", "P"], premisses=premisses)
            for n in (1, 2, 3):
                assert count_models(doc, OracleConfig(universe_size=n)) == 0

    def test_models_satisfy_premisses(self, animals):
        for model in enumerate_models(animals, OracleConfig(universe_size=2)):
            for p in animals.premisses:
                assert satisfies(model, p)

    def test_deterministic_order(self, animals):
        config = OracleConfig(universe_size=2)
        first = [m.carriers for m in enumerate_models(animals, config)]
        second = [m.carriers for m in enumerate_models(animals, config)]
        assert first == second

    def test_count_invariant_under_type_renaming(self, animals):
        renamed = Ologism.build(
            "renamed",
            [t.id + "x" for t in animals.types],
            premisses=[
                proposition(p.form, p.subject + "x", p.predicate + "x") for p in animals.premisses
            ],
        )
        config = OracleConfig(universe_size=3)
        assert count_models(renamed, config) == count_models(animals, config)

    def test_type_cap(self):
        doc = Ologism.build("big", [f"T{i}" for i in range(7)])
        with pytest.raises(ScaleError):
            count_models(doc)

    def test_fragment_guard(self, has_mother):
        assert not is_only(has_mother)
        with pytest.raises(FragmentError):
            count_models(has_mother)


class TestSemanticConsequences:
    def test_lone_inclusion(self):
        doc = Ologism.build("ab", ["A", "B"], premisses=[A("A", "B")])
        sc = semantic_consequences(doc)
        assert A("A", "B") in sc
        assert I("A", "B") not in sc  # the empty carrier refutes it

    def test_import_makes_subalternation_semantic(self):
        doc = Ologism.build("imp", ["S", "P"], premisses=[I("S", "S"), A("S", "P")])
        assert I("S", "P") in semantic_consequences(doc)

    def test_vacuous_when_no_model(self):
        doc = Ologism.build("sq", ["S", "P"], premisses=[A("S", "P"), O("S", "P")])
        assert semantic_consequences(doc) == frozenset(all_propositions(["S", "P"]))

    def test_antitone_in_universe_size(self, animals):
        small = semantic_consequences(animals, OracleConfig(universe_size=2))
        large = semantic_consequences(animals, OracleConfig(universe_size=3))
        assert large <= small


class TestSoundness:
    def test_animals_exhaustive(self, animals):
        verdict = check_soundness(animals)
        assert verdict.passed and verdict.mode == "exhaustive"
        assert verdict.models_checked == 42

    def test_custodian_sampled(self, custodian):
        verdict = check_soundness(custodian, OracleConfig(seed=1, sample_count=200))
        assert verdict.passed and verdict.mode == "sampled"
        assert verdict.models_checked == 200

    def test_sampling_reproducible(self, custodian):
        config = OracleConfig(seed=3, sample_count=25)
        a, _ = sample_models(custodian, config)
        b, _ = sample_models(custodian, config)
        assert [m.carriers for m in a] == [m.carriers for m in b]

    def test_tampered_theory_caught(self, animals):
        # E(M,V) is false in some model; smuggle it into the proposition set.
        from ologism.oracle import _verify_theory

        theory = close(animals)
        props = sorted(theory.propositions() | {E("M", "V")}, key=lambda p: p.sort_key())
        _, offence = _verify_theory(props, enumerate_models(animals, OracleConfig()))
        assert offence is not None
        prop, model = offence
        assert prop == E("M", "V")
        assert not satisfies(model, prop)

    def test_inconclusive_when_models_cannot_be_sampled(self):
        # A full-fragment document with unsatisfiable premisses: every
        # attempt is rejected, so the verdict must be inconclusive.
        from ologism.core import Aspect

        doc = Ologism.build(
            "nope",
            ["X", "Y"],
            aspects=[Aspect("f", "X", "Y")],
            premisses=[I("X", "X"), E("X", "X")],
        )
        verdict = check_soundness(doc, OracleConfig(sample_count=3, attempts_per_sample=5))
        assert verdict.inconclusive and not verdict.passed


class TestCompleteness:
    def test_explicit_import_closes_the_gap(self):
        doc = Ologism.build("imp", ["S", "P"], premisses=[I("S", "S"), A("S", "P")])
        verdict = check_completeness(doc)
        assert verdict.passed

    def test_a_chain(self):
        doc = Ologism.build("chain", ["A", "B", "C"], premisses=[A("A", "B"), A("B", "C")])
        verdict = check_completeness(doc)
        assert verdict.passed
        theory = close(doc)
        assert A("A", "C") in theory.alpha_star
        assert A("A", "C") in semantic_consequences(doc)

    def test_contradictory_document_diagonal_is_closed(self):
        doc = Ologism.build("sq", ["A", "B"], premisses=[I("A", "B"), E("A", "B")])
        theory = close(doc)
        assert O("A", "A") in theory.o_star and O("B", "B") in theory.o_star
        gap = semantic_consequences(doc) - theory.propositions()
        assert not any(p.form == "O" and p.subject == p.predicate for p in gap)

    def test_implied_import_gap_is_detected_and_classified(self):
        doc = Ologism.build("iab", ["A", "B"], premisses=[I("A", "B")])
        verdict = check_completeness(doc)
        assert not verdict.passed
        assert verdict.gap == {I("A", "A"), I("B", "B")}
        assert verdict.gap_at_next == verdict.gap  # not a universe-size artifact
        assert verdict.gap_closed_by_import

    def test_contradiction_implies_unsatisfiable(self):
        rng = random.Random(13)
        for _ in range(60):
            doc = random_ologism(rng)
            if contradictions(close(doc)):
                assert count_models(doc, OracleConfig(universe_size=3)) == 0, doc

    def test_unsatisfiable_but_uncontradicted_documents_assert_emptiness(self):
        # The O(X,X) marker misses exactly one shape of inconsistency: a type
        # forced empty (a derivable E(X,X)) while another premiss forces it
        # nonempty.  No rule turns an O-form nonemptiness into the I-form
        # that R6 would need.  {E(X,X), O(X,Y)} is the minimal instance.
        doc = Ologism.build("hole", ["X", "Y"], premisses=[E("X", "X"), O("X", "Y")])
        theory = close(doc)
        assert not contradictions(theory)
        assert count_models(doc, OracleConfig(universe_size=3)) == 0
        # Every discrepancy in a random sample carries that signature.
        rng = random.Random(13)
        for _ in range(60):
            doc = random_ologism(rng)
            theory = close(doc)
            if not contradictions(theory) and count_models(doc, OracleConfig(universe_size=3)) == 0:
                assert any(p.subject == p.predicate for p in theory.epsilon_star), doc

    def test_soundness_direction_always_holds(self):
        rng = random.Random(14)
        for _ in range(40):
            doc = random_ologism(rng)
            closure = close(doc).propositions()
            sc = semantic_consequences(doc, OracleConfig(universe_size=3))
            assert closure <= sc, doc

    def test_growing_premisses_never_remove_a_consequence(self):
        rng = random.Random(15)
        config = OracleConfig(universe_size=3)
        for _ in range(40):
            doc = random_ologism(rng)
            if len(doc.premisses) < 2:
                continue
            fewer = doc.replace_premisses(doc.premisses[:-1])
            assert semantic_consequences(fewer, config) <= semantic_consequences(doc, config)
