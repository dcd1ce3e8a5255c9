from __future__ import annotations

import io
import json
from pathlib import Path

import jsonschema
import pytest

from ologism.cli import main
from ologism.repl import Repl
from .oracles import check_dot

DATA = Path(__file__).resolve().parents[1] / "src" / "ologism" / "data"
SCHEMA = json.loads(
    (Path(__file__).resolve().parents[1] / "src" / "ologism" / "schemas" / "report.schema.json").read_text()
)


def run(capsys, *argv: str) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv: str) -> tuple[int, dict]:
    code, out = run(capsys, "--format", "json", *argv)
    payload = json.loads(out)
    jsonschema.validate(payload, SCHEMA)
    return code, payload


@pytest.fixture
def contradictory(tmp_path) -> str:
    path = tmp_path / "square.olgm"
    path.write_text(
        'ologism "square" {\n  type S "a square"\n  type P "a polygon"\n  A S P\n  O S P\n}\n'
    )
    return str(path)


class TestCheck:
    def test_animals_ok(self, capsys):
        code, out = run(capsys, "check", str(DATA / "animals.olgm"))
        assert code == 0
        assert "O(A,B)" in out and "I(A,V)" in out and "O(V,A)" in out
        assert "Some animal that is able to fly is not a bird" in out
        assert "consistent" in out

    def test_contradiction_exit_1(self, capsys, contradictory):
        code, out = run(capsys, "check", contradictory)
        assert code == 1
        assert "CONTRADICTION" in out and "Some square is not a square" in out

    def test_malformed_exit_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.olgm"
        bad.write_text('ologism "x" {\n  E A B\n}\n')
        code, out = run(capsys, "check", str(bad))
        assert code == 2
        assert "UnknownType" in out and "2:3" in out

    def test_missing_file_exit_3(self, capsys, tmp_path):
        code, _ = run(capsys, "check", str(tmp_path / "absent.olgm"))
        assert code == 3

    def test_json_report(self, capsys):
        code, payload = run_json(capsys, "check", str(DATA / "animals.olgm"))
        assert code == 0 and payload["status"] == "ok"
        derived = {entry["proposition"] for entry in payload["sections"]["derived"]}
        assert derived == {"I(A,V)", "O(A,B)", "O(V,A)"}

    def test_json_contradiction(self, capsys, contradictory):
        code, payload = run_json(capsys, "check", contradictory)
        assert code == 1 and payload["status"] == "contradiction"
        assert {c["type"] for c in payload["sections"]["contradictions"]} == {"S", "P"}

    def test_byte_identical_runs(self, capsys):
        _, first = run(capsys, "check", str(DATA / "custodian.olgm"))
        _, second = run(capsys, "check", str(DATA / "custodian.olgm"))
        assert first == second


class TestProve:
    def test_valid(self, capsys):
        code, out = run(capsys, "prove", "--premiss", "E:M,P", "--premiss", "A:S,M",
                        "--conclusion", "E:S,P")
        assert code == 0 and "valid" in out and "Axiom-Premiss" in out

    def test_bullet_rejection(self, capsys):
        code, out = run(capsys, "prove", "--premiss", "E:M,P", "--premiss", "I:M,S",
                        "--conclusion", "I:S,P")
        assert code == 1
        assert "BulletCountMismatch" in out and "2" in out and "1" in out

    def test_import_flag(self, capsys):
        code, out = run(capsys, "prove", "--premiss", "A:S,P", "--import", "S",
                        "--conclusion", "I:S,P")
        assert code == 0 and "Axiom-ExistentialImport" in out

    def test_rejected_without_import(self, capsys):
        code, _ = run(capsys, "prove", "--premiss", "A:S,P", "--conclusion", "I:S,P")
        assert code == 1

    def test_json_schema(self, capsys):
        code, payload = run_json(capsys, "prove", "--premiss", "E:M,P", "--premiss", "E:S,M",
                                 "--conclusion", "O:S,P")
        assert code == 1
        assert payload["sections"]["rejection"]["reason"] == "DiscordantArrows"

    def test_bad_literal(self, capsys):
        with pytest.raises(SystemExit):
            main(["prove", "--premiss", "whatever", "--conclusion", "A:S,P"])

    def test_proof_tree_as_dot(self, capsys):
        code, out = run(capsys, "prove", "--premiss", "E:M,P", "--premiss", "A:S,M",
                        "--conclusion", "E:S,P", "--dot")
        assert code == 0
        counts = check_dot(out)
        assert counts["edges"] == 3  # two leaves -> superposition -> composition


class TestEnumerate:
    def test_totals(self, capsys):
        code, payload = run_json(capsys, "enumerate")
        assert code == 0
        assert payload["sections"]["total"] == 256
        assert payload["sections"]["valid"] == 15

    def test_with_import(self, capsys):
        code, payload = run_json(capsys, "enumerate", "--import")
        assert payload["sections"]["valid"] == 24
        imports = [m for m in payload["sections"]["moods"] if m["valid"] and not m["direct"]]
        assert len(imports) == 9

    def test_stable_output(self, capsys):
        _, a = run(capsys, "--format", "json", "enumerate")
        _, b = run(capsys, "--format", "json", "enumerate")
        assert a == b


class TestModelCheck:
    def test_family_ok(self, capsys):
        code, _ = run(capsys, "model-check", str(DATA / "has_mother.olgm"),
                      str(DATA / "has_mother.olgmodel"))
        assert code == 0

    def test_custodian_against_closure(self, capsys):
        code, payload = run_json(capsys, "model-check", str(DATA / "custodian.olgm"),
                                 str(DATA / "custodian.olgmodel"), "--against", "closure")
        assert code == 0 and payload["sections"]["violations"] == []

    def test_mutated_model_fails(self, capsys, tmp_path):
        source = (DATA / "has_mother.olgmodel").read_text()
        mutated = tmp_path / "broken.olgmodel"
        mutated.write_text(source.replace("Susan -> Elen2", "Susan -> Elen1"))
        code, out = run(capsys, "model-check", str(DATA / "has_mother.olgm"), str(mutated))
        assert code == 1 and "FactBroken" in out and "Susan" in out


class TestOracle:
    def test_soundness(self, capsys):
        code, payload = run_json(capsys, "oracle", str(DATA / "animals.olgm"),
                                 "--mode", "soundness")
        assert code == 0
        assert payload["sections"]["soundness"]["passed"] is True

    def test_models_count(self, capsys):
        code, payload = run_json(capsys, "oracle", str(DATA / "animals.olgm"), "--mode", "models")
        assert code == 0 and payload["sections"]["models"] == 42

    def test_contradictory_has_no_models(self, capsys, contradictory):
        code, payload = run_json(capsys, "oracle", contradictory, "--mode", "models")
        assert payload["sections"]["models"] == 0

    def test_completeness_reports_import_gap(self, capsys):
        code, payload = run_json(capsys, "oracle", str(DATA / "animals.olgm"),
                                 "--mode", "completeness")
        assert code == 1
        section = payload["sections"]["completeness"]
        assert section["passed"] is False
        assert section["gap_closed_by_import"] is True
        assert "I(A,A)" in section["gap"]


class TestExportDot:
    def test_animals_parses(self, capsys):
        code, out = run(capsys, "export-dot", str(DATA / "animals.olgm"))
        assert code == 0
        counts = check_dot(out)
        assert counts["edges"] >= 8  # 2 inclusions + E/I/O bullet wiring

    def test_derived_edges_appear(self, capsys):
        _, plain = run(capsys, "export-dot", str(DATA / "animals.olgm"))
        _, derived = run(capsys, "export-dot", str(DATA / "animals.olgm"), "--derived")
        check_dot(derived)
        assert derived.count("style=dashed") - plain.count("style=dashed") == 3

    def test_fact_checkmark(self, capsys):
        _, out = run(capsys, "export-dot", str(DATA / "has_mother.olgm"))
        assert "✓ has-mother" in out
        check_dot(out)

    def test_empty_document(self, capsys, tmp_path):
        empty = tmp_path / "empty.olgm"
        empty.write_text('ologism "void" {\n}\n')
        code, out = run(capsys, "export-dot", str(empty))
        assert code == 0
        assert check_dot(out) == {"nodes": 1, "edges": 0}  # just the node-defaults statement

    def test_json_envelope(self, capsys):
        code, payload = run_json(capsys, "export-dot", str(DATA / "animals.olgm"), "--derived")
        assert code == 0
        check_dot(payload["sections"]["dot"])


class TestRepl:
    def run_session(self, lines: list[str]) -> str:
        out = io.StringIO()
        Repl(out).run(io.StringIO("\n".join(lines) + "\n"), prompt="")
        return out.getvalue()

    def test_load_and_query(self):
        out = self.run_session([
            f"load {DATA / 'animals.olgm'}",
            "derived",
            "why O V A",
            "quit",
        ])
        assert "O(V,A)" in out and "R7" in out

    def test_add_then_contradiction_then_retract(self):
        out = self.run_session([
            f"load {DATA / 'animals.olgm'}",
            "add E M A",
            "contradictions",
            "retract E M A",
            "contradictions",
            "quit",
        ])
        assert "CONTRADICTION" in out
        assert "O(M,M)" in out or "O(A,A)" in out
        assert "consistent" in out

    def test_models_and_save(self, tmp_path):
        target = tmp_path / "copy.olgm"
        out = self.run_session([
            f"load {DATA / 'animals.olgm'}",
            "models 3",
            f"save {target}",
            "quit",
        ])
        assert "42 model(s)" in out
        assert target.exists()
        from ologism.dsl import parse_ologism
        assert parse_ologism(target.read_text()).value is not None

    def test_errors_do_not_kill_the_loop(self):
        out = self.run_session(["why X", "derived", "load /nope/missing.olgm", "help", "quit"])
        assert out.count("error:") >= 2
        assert "commands:" in out

    def test_state_equals_closure_from_scratch(self, tmp_path):
        # After a mutation the session state must equal the closure computed
        # from scratch over the final premiss set: no incremental drift.
        target = tmp_path / "edited.olgm"
        out = self.run_session([
            f"load {DATA / 'square.olgm'}",
            "add I S S",
            "retract A R Q",
            "derived",
            f"save {target}",
            "quit",
        ])
        assert "I(S,Q)" in out or "I(Q,S)" in out  # derived while A R Q held

        from ologism.core import A, I
        from ologism.deduce import close
        from ologism.dsl import parse_ologism

        saved = parse_ologism(target.read_text()).value
        assert set(saved.premisses) == {A("S", "R"), I("S", "S")}
        replayed = close(saved)
        fresh = close(saved.replace_premisses(saved.premisses))
        for form in "AEIO":
            assert replayed.star(form) == fresh.star(form)
        assert I("S", "R") in replayed.iota_star
        assert A("S", "Q") not in replayed.alpha_star
