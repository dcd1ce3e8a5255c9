"""Command-line front end.

Exit codes are uniform across subcommands:

    0  success (document ok, proof found, checks pass)
    1  a logical finding (contradiction, rejection, violation, failed check)
    2  parse or validation error in an input document
    3  I/O error

``--format json`` renders the same report as a stable JSON envelope
(validated by ``schemas/report.schema.json``); text output is byte-identical
for identical inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from . import deduce, dsl, dot, oracle, syll
from .core import Ologism, proposition, reading, validate
from .model import check_model
from .oracle import OracleConfig
from .repl import Repl

OK, FINDING, PARSE_ERROR, IO_ERROR = 0, 1, 2, 3


@dataclass
class Report:
    """What a command has to say, renderable as text or JSON."""

    command: str
    status: str = "ok"  # ok | contradiction | rejection | violation | fail | parse_error | io_error
    sections: dict[str, Any] = field(default_factory=dict)
    lines: list[str] = field(default_factory=list)

    def say(self, text: str = "") -> None:
        self.lines.append(text)

    def emit(self, fmt: str, out, color: bool = False) -> None:
        if fmt == "json":
            json.dump({"command": self.command, "status": self.status, "sections": self.sections},
                      out, indent=2, sort_keys=True)
            out.write("\n")
            return
        for line in self.lines:
            if color:
                if line.startswith("CONTRADICTION") or line.startswith("rejected:"):
                    line = f"\x1b[31m{line}\x1b[0m"
                elif line.startswith(("consistent:", "valid;")) or line.endswith(" ok"):
                    line = f"\x1b[32m{line}\x1b[0m"
            out.write(line + "\n")


def _read_file(path: str, report: Report) -> Optional[str]:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        report.status = "io_error"
        report.say(f"cannot read {path}: {exc}")
        report.sections["error"] = str(exc)
        return None


def _load_ologism(path: str, report: Report) -> Optional[Ologism]:
    source = _read_file(path, report)
    if source is None:
        return None
    result = dsl.parse_ologism(source)
    diags = [str(d) for d in result.diagnostics]
    if diags:
        report.sections["diagnostics"] = diags
        for d in diags:
            report.say(d)
    if result.value is None:
        report.status = "parse_error"
        return None
    problems = validate(result.value)
    if problems:
        report.status = "parse_error"
        report.sections["diagnostics"] = diags + [str(p) for p in problems]
        for p in problems:
            report.say(str(p))
        return None
    return result.value


def _prop_json(p) -> str:
    key = p.sort_key()
    return f"{key[0]}({key[1]},{key[2]})"


def _parse_literal(text: str):
    """Proposition literals as written on the command line: ``E:M,P``."""
    try:
        form, pair = text.split(":", 1)
        subject, predicate = pair.split(",", 1)
        return proposition(form.strip(), subject.strip(), predicate.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a proposition literal like A:S,P"
        ) from exc


# --- subcommands ---------------------------------------------------------------


def cmd_check(args, report: Report) -> int:
    doc = _load_ologism(args.path, report)
    if doc is None:
        return PARSE_ERROR if report.status == "parse_error" else IO_ERROR
    theory = deduce.close(doc)
    derived = sorted(theory.derived_beyond_premisses(), key=lambda p: p.sort_key())
    clashes = deduce.contradictions(theory)

    report.say(f"ologism {doc.name!r}: {len(doc.types)} types, "
               f"{len(doc.aspects)} aspects, {len(doc.facts)} facts, "
               f"{len(doc.premisses)} premisses")
    report.sections["ologism"] = doc.name
    report.sections["derived"] = [
        {"proposition": _prop_json(p), "reading": reading(p, doc)} for p in derived
    ]
    if derived:
        report.say("derived beyond the premisses:")
        for p in derived:
            report.say(f"  {p}   \"{reading(p, doc)}\"")
    else:
        report.say("nothing derivable beyond the premisses")

    report.sections["contradictions"] = [
        {"type": x, "reading": reading(proposition("O", x, x), doc), "derivation": d.render()}
        for x, d in clashes
    ]
    if clashes:
        report.status = "contradiction"
        for x, derivation in clashes:
            said = reading(proposition("O", x, x), doc)
            report.say(f"CONTRADICTION O({x},{x}), read \"{said}\":")
            report.say(derivation.render(indent=1))
        return FINDING
    report.say("consistent: no O(X,X) is derivable")
    return OK


def cmd_prove(args, report: Report) -> int:
    premisses = list(args.premiss)
    if args.existential_import:
        premisses.append(proposition("I", args.existential_import, args.existential_import))
    try:
        result = syll.prove(premisses, args.conclusion)
    except syll.PatternError as exc:
        report.status = "parse_error"
        report.sections["error"] = str(exc)
        report.say(f"not a syllogistic pattern: {exc}")
        return PARSE_ERROR
    prem_text = ", ".join(str(p) for p in premisses)
    if isinstance(result, syll.Rejection):
        report.status = "rejection"
        report.sections["rejection"] = {"reason": result.reason, "detail": result.detail}
        report.say(f"{prem_text} |- {args.conclusion}")
        report.say(str(result))
        return FINDING
    report.sections["proof"] = result.render()
    if args.dot:
        text = dot.proof_tree_dot(result)
        report.sections["dot"] = text
        report.lines = [text.rstrip("\n")]
        return OK
    report.say(f"{prem_text} |- {args.conclusion}")
    report.say("valid; proof tree:")
    report.say(result.render(indent=1))
    return OK


def cmd_enumerate(args, report: Report) -> int:
    records = syll.enumerate_moods(with_import=args.existential_import)
    valid = [r for r in records if r.valid]
    direct = [r for r in records if r.valid_direct]
    report.sections["total"] = len(records)
    report.sections["valid"] = len(valid)
    report.sections["valid_direct"] = len(direct)
    report.sections["moods"] = [
        {
            "mood": r.mood,
            "valid": r.valid,
            "direct": r.valid_direct,
            "imports": list(r.import_terms),
            "rejection": r.rejection,
        }
        for r in records
    ]
    report.say(f"{len(records)} forms; {len(direct)} valid outright"
               + (f", {len(valid)} with existential import" if args.existential_import else ""))
    for r in records:
        if not r.valid:
            continue
        note = "" if r.valid_direct else f"   (import on {', '.join(r.import_terms)})"
        report.say(f"  {r.mood}{note}")
    return OK


def cmd_model_check(args, report: Report) -> int:
    doc = _load_ologism(args.ologism, report)
    if doc is None:
        return PARSE_ERROR if report.status == "parse_error" else IO_ERROR
    source = _read_file(args.model, report)
    if source is None:
        return IO_ERROR
    parsed = dsl.parse_model(source)
    if parsed.value is None:
        report.status = "parse_error"
        for d in parsed.diagnostics:
            report.say(str(d))
        report.sections["diagnostics"] = [str(d) for d in parsed.diagnostics]
        return PARSE_ERROR
    model = parsed.value
    if model.for_ologism and model.for_ologism != doc.name:
        report.say(f"note: model is declared for {model.for_ologism!r}, checking against {doc.name!r}")
    outcome = check_model(doc, model, against=args.against)
    report.sections["violations"] = [str(v) for v in outcome.violations]
    report.sections["alarms"] = list(outcome.alarms)
    if outcome.ok:
        report.say(f"model {model.name!r} satisfies {doc.name!r} against {args.against}")
        return OK
    report.status = "violation"
    for v in outcome.violations:
        report.say(str(v))
    for a in outcome.alarms:
        report.say(f"ALARM: {a}")
    return FINDING


def cmd_oracle(args, report: Report) -> int:
    doc = _load_ologism(args.path, report)
    if doc is None:
        return PARSE_ERROR if report.status == "parse_error" else IO_ERROR
    config = OracleConfig(universe_size=args.universe, seed=args.seed,
                          sample_count=args.samples)
    try:
        if args.mode == "models":
            count = oracle.count_models(doc, config)
            report.sections["models"] = count
            report.say(f"{count} model(s) on a {args.universe}-element universe")
            return OK
        if args.mode == "soundness":
            verdict = oracle.check_soundness(doc, config)
            report.sections["soundness"] = {
                "passed": verdict.passed,
                "mode": verdict.mode,
                "models_checked": verdict.models_checked,
                "inconclusive": verdict.inconclusive,
            }
            report.say(str(verdict))
            return OK if verdict.passed else FINDING
        verdict = oracle.check_completeness(doc, config)
        report.sections["completeness"] = {
            "passed": verdict.passed,
            "universe_size": verdict.universe_size,
            "gap": [_prop_json(p) for p in sorted(verdict.gap, key=lambda p: p.sort_key())],
            "gap_at_next": [
                _prop_json(p) for p in sorted(verdict.gap_at_next, key=lambda p: p.sort_key())
            ],
            "gap_closed_by_import": verdict.gap_closed_by_import,
        }
        report.say(str(verdict))
        if not verdict.passed:
            report.say(f"gap re-checked at universe size {verdict.universe_size + 1}: "
                       f"{len(verdict.gap_at_next)} proposition(s) remain")
            report.status = "fail"
            return FINDING
        return OK
    except (oracle.FragmentError, oracle.ScaleError) as exc:
        report.status = "fail"
        report.sections["error"] = str(exc)
        report.say(str(exc))
        return FINDING


def cmd_export_dot(args, report: Report) -> int:
    doc = _load_ologism(args.path, report)
    if doc is None:
        return PARSE_ERROR if report.status == "parse_error" else IO_ERROR
    theory = deduce.close(doc) if args.derived else None
    text = dot.export_dot(doc, theory)
    report.sections["dot"] = text
    report.lines = [text.rstrip("\n")]
    return OK


def cmd_repl(args, report: Report) -> int:
    repl = Repl(sys.stdout)
    repl.run(sys.stdin)
    return OK


# --- wiring ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ologism",
        description="reasoning tools for ontology logs with syllogistic constraints",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default: text)")
    parser.add_argument("--no-color", action="store_true", help="disable ANSI color")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a document, close it, report contradictions")
    p.add_argument("path")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("prove", help="run the diagrammatic validity algorithm")
    p.add_argument("--premiss", action="append", required=True, type=_parse_literal,
                   metavar="FORM:S,P", help="premiss literal, e.g. E:M,P (repeatable)")
    p.add_argument("--import", dest="existential_import", metavar="X",
                   help="add the existential import premiss I(X,X)")
    p.add_argument("--conclusion", required=True, type=_parse_literal, metavar="FORM:S,P")
    p.add_argument("--dot", action="store_true", help="emit the proof tree as Graphviz DOT")
    p.set_defaults(run=cmd_prove)

    p = sub.add_parser("enumerate", help="classify all 256 syllogistic forms")
    p.add_argument("--import", dest="existential_import", action="store_true",
                   help="retry failures with existential import premisses")
    p.set_defaults(run=cmd_enumerate)

    p = sub.add_parser("model-check", help="check a model document against an ologism")
    p.add_argument("ologism")
    p.add_argument("model")
    p.add_argument("--against", choices=("premisses", "closure"), default="premisses")
    p.set_defaults(run=cmd_model_check)

    p = sub.add_parser("oracle", help="exhaustive and randomized semantic checks")
    p.add_argument("path")
    p.add_argument("--universe", type=int, default=3, metavar="N")
    p.add_argument("--mode", choices=("soundness", "completeness", "models"), default="soundness")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1000)
    p.set_defaults(run=cmd_oracle)

    p = sub.add_parser("export-dot", help="write the document as Graphviz DOT")
    p.add_argument("path")
    p.add_argument("--derived", action="store_true", help="include derived propositions as dashed edges")
    p.set_defaults(run=cmd_export_dot)

    p = sub.add_parser("repl", help="interactive authoring loop")
    p.set_defaults(run=cmd_repl)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    report = Report(command=args.command)
    code = args.run(args, report)
    if args.command != "repl":
        color = (not args.no_color) and args.format == "text" and sys.stdout.isatty()
        report.emit(args.format, sys.stdout, color)
    return code


if __name__ == "__main__":
    sys.exit(main())
