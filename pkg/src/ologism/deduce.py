"""The logical theory of an ologism: the layered closure of its premisses.

The closure runs in three strata, mirroring how the inference rules feed
each other (no rule consumes a particular-negative to produce anything else,
and only universal affirmatives compose among themselves):

    layer 1   alpha*:  A-premisses plus the identity A(X,X) for every type,
                       closed under R1  (A_xy, A_yz |- A_xz)
    layer 2   epsilon*: E-premisses with alpha*, closed under symmetry,
                       R2 (E_xy, A_zy |- E_xz) and R3 (A_xy, E_yz |- E_xz)
              iota*:   I-premisses with alpha*, closed under symmetry,
                       R4 (I_xy, A_yz |- I_xz) and R5 (A_yx, I_yz |- I_xz)
    layer 3   o*:      O-premisses with the closed layers, closed under
                       R6 (I_xy, E_yz |- O_xz), R7 (A_yx, O_yz |- O_xz)
                       and R8 (O_xy, A_zy |- O_xz)

Every proposition in the theory carries one minimal-depth derivation;
ties break on the rule tag, then on operand order, so output is stable.
A derivable O(X,X) reads "Some X is not X" and marks the document as
contradictory.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, Optional

from .core import (
    CategoricalProposition,
    InvalidOlogismError,
    Ologism,
    proposition,
    validate,
)

PREMISS = "Premiss"
IDENTITY = "Identity"
SYMMETRY = "Symmetry"

Triple = tuple[str, str, str]  # (form, subject, predicate), orientation significant


@dataclass(frozen=True)
class Derivation:
    """One step of a derivation tree; ``conclusion`` keeps the orientation
    this step states it in, so printed trees mirror diagram reversals."""

    conclusion: CategoricalProposition
    rule: str
    children: tuple["Derivation", ...] = ()

    @property
    def height(self) -> int:
        return 1 + max((c.height for c in self.children), default=0)

    def replay(self) -> CategoricalProposition:
        """Re-check every rule instance bottom-up; raises when a step is off."""
        kids = [c.replay() for c in self.children]
        f, s, p = self.conclusion.form, self.conclusion.subject, self.conclusion.predicate
        shapes: dict[str, Callable[[], bool]] = {
            PREMISS: lambda: not kids,
            IDENTITY: lambda: not kids and f == "A" and s == p,
            SYMMETRY: lambda: (
                len(kids) == 1
                and f in ("E", "I")
                and (kids[0].form, kids[0].subject, kids[0].predicate) == (f, p, s)
            ),
            "R1": lambda: _matches(kids, ("A", s, "?"), ("A", "?", p)) and f == "A",
            "R2": lambda: f == "E" and _matches(kids, ("E", s, "?"), ("A", p, "?"))
            and kids[0].predicate == kids[1].predicate,
            "R3": lambda: f == "E" and _matches(kids, ("A", s, "?"), ("E", "?", p))
            and kids[0].predicate == kids[1].subject,
            "R4": lambda: f == "I" and _matches(kids, ("I", s, "?"), ("A", "?", p))
            and kids[0].predicate == kids[1].subject,
            "R5": lambda: f == "I" and _matches(kids, ("A", "?", s), ("I", "?", p))
            and kids[0].subject == kids[1].subject,
            "R6": lambda: f == "O" and _matches(kids, ("I", s, "?"), ("E", "?", p))
            and kids[0].predicate == kids[1].subject,
            "R7": lambda: f == "O" and _matches(kids, ("A", "?", s), ("O", "?", p))
            and kids[0].subject == kids[1].subject,
            "R8": lambda: f == "O" and _matches(kids, ("O", s, "?"), ("A", p, "?"))
            and kids[0].predicate == kids[1].predicate,
        }
        check = shapes.get(self.rule)
        if check is None:
            raise ValueError(f"unknown rule {self.rule!r}")
        if not check():
            raise ValueError(f"rule {self.rule} does not yield {self.conclusion} from {kids}")
        return self.conclusion

    def render(self, indent: int = 0) -> str:
        pad = "  " * indent
        lines = [f"{pad}{self.conclusion}   ({self.rule})"]
        for c in self.children:
            lines.append(c.render(indent + 1))
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.render()


def _matches(kids: list[CategoricalProposition], *shapes: Triple) -> bool:
    if len(kids) != len(shapes):
        return False
    for kid, (form, s, p) in zip(kids, shapes):
        if kid.form != form:
            return False
        if s != "?" and kid.subject != s:
            return False
        if p != "?" and kid.predicate != p:
            return False
    return True


@dataclass(frozen=True)
class Theory:
    """The four starred sets plus one minimal derivation per proposition."""

    name: str
    types: tuple[str, ...]
    premisses: frozenset[CategoricalProposition]
    alpha_star: frozenset[CategoricalProposition]
    epsilon_star: frozenset[CategoricalProposition]
    iota_star: frozenset[CategoricalProposition]
    o_star: frozenset[CategoricalProposition]
    derivations: Mapping[CategoricalProposition, Derivation]

    def propositions(self) -> frozenset[CategoricalProposition]:
        return self.alpha_star | self.epsilon_star | self.iota_star | self.o_star

    def identities(self) -> frozenset[CategoricalProposition]:
        return frozenset(proposition("A", t, t) for t in self.types)

    def derived_beyond_premisses(self) -> frozenset[CategoricalProposition]:
        return self.propositions() - self.premisses - self.identities()

    def star(self, form: str) -> frozenset[CategoricalProposition]:
        return {
            "A": self.alpha_star,
            "E": self.epsilon_star,
            "I": self.iota_star,
            "O": self.o_star,
        }[form]


# --- rule instance generators ----------------------------------------------
#
# Each generator inspects the oriented triples known so far and yields
# (conclusion, rule tag, child triples).  Child order is the order the rule
# states its premisses in.

Info = dict[Triple, tuple[int, str, tuple[Triple, ...]]]


def _by_form(info: Info, form: str) -> list[Triple]:
    return sorted(t for t in info if t[0] == form)


def _r1(info: Info) -> Iterator[tuple[Triple, str, tuple[Triple, ...]]]:
    a_triples = _by_form(info, "A")
    by_subject: dict[str, list[Triple]] = {}
    for t in a_triples:
        by_subject.setdefault(t[1], []).append(t)
    for first in a_triples:
        for second in by_subject.get(first[2], ()):
            yield ("A", first[1], second[2]), "R1", (first, second)


def _symmetry(form: str) -> Callable[[Info], Iterator]:
    def gen(info: Info):
        for t in _by_form(info, form):
            yield (form, t[2], t[1]), SYMMETRY, (t,)

    return gen


def _join(
    tag: str,
    left_form: str,
    right_form: str,
    out_form: str,
    combine: Callable[[Triple, Triple], Optional[tuple[str, str]]],
) -> Callable[[Info], Iterator]:
    def gen(info: Info):
        rights = _by_form(info, right_form)
        for left in _by_form(info, left_form):
            for right in rights:
                out = combine(left, right)
                if out is not None:
                    yield (out_form, out[0], out[1]), tag, (left, right)

    return gen


_RULES_ALPHA = (_r1,)
_RULES_EPSILON = (
    _symmetry("E"),
    _join("R2", "E", "A", "E", lambda e, a: (e[1], a[1]) if e[2] == a[2] else None),
    _join("R3", "A", "E", "E", lambda a, e: (a[1], e[2]) if a[2] == e[1] else None),
)
_RULES_IOTA = (
    _symmetry("I"),
    _join("R4", "I", "A", "I", lambda i, a: (i[1], a[2]) if i[2] == a[1] else None),
    _join("R5", "A", "I", "I", lambda a, i: (a[2], i[2]) if a[1] == i[1] else None),
)
_RULES_O = (
    _join("R6", "I", "E", "O", lambda i, e: (i[1], e[2]) if i[2] == e[1] else None),
    _join("R7", "A", "O", "O", lambda a, o: (a[2], o[2]) if a[1] == o[1] else None),
    _join("R8", "O", "A", "O", lambda o, a: (o[1], a[1]) if o[2] == a[2] else None),
)


def _relax(info: Info, rules: Iterable[Callable[[Info], Iterator]]) -> None:
    """Saturate, keeping per conclusion the least (depth, rule, operands)."""
    changed = True
    while changed:
        changed = False
        for rule in rules:
            for concl, tag, children in rule(info):
                height = 1 + max(info[c][0] for c in children)
                key = (height, tag, children)
                cur = info.get(concl)
                if cur is None or key < cur:
                    info[concl] = key
                    changed = True


def _build_trees(info: Info) -> dict[Triple, Derivation]:
    trees: dict[Triple, Derivation] = {}
    for triple in sorted(info, key=lambda t: (info[t][0], t)):
        height, tag, children = info[triple]
        trees[triple] = Derivation(
            proposition(*triple), tag, tuple(trees[c] for c in children)
        )
    return trees


def close(ologism: Ologism) -> Theory:
    """Compute the least fixpoint of the deductive equipment, stratified."""
    problems = validate(ologism)
    if problems:
        raise InvalidOlogismError(problems)

    types = tuple(sorted(ologism.type_ids()))
    info: Info = {}
    for t in types:
        info[("A", t, t)] = (1, IDENTITY, ())
    for p in sorted(ologism.premisses, key=lambda p: p.sort_key()):
        triple = (p.form, p.subject, p.predicate)
        if triple not in info:
            info[triple] = (1, PREMISS, ())
    _relax(info, _RULES_ALPHA)
    _relax(info, _RULES_EPSILON)
    _relax(info, _RULES_IOTA)
    _relax(info, _RULES_O)

    trees = _build_trees(info)
    stars: dict[str, set[CategoricalProposition]] = {f: set() for f in "AEIO"}
    derivations: dict[CategoricalProposition, Derivation] = {}
    for form, s, p in info:
        prop = proposition(form, s, p).canonical()
        stars[form].add(prop)
        derivations[prop] = trees[(prop.form, prop.subject, prop.predicate)]

    return Theory(
        name=ologism.name,
        types=types,
        premisses=frozenset(ologism.premisses),
        alpha_star=frozenset(stars["A"]),
        epsilon_star=frozenset(stars["E"]),
        iota_star=frozenset(stars["I"]),
        o_star=frozenset(stars["O"]),
        derivations=derivations,
    )


def contradictions(theory: Theory) -> list[tuple[str, Derivation]]:
    """Every type X with a derivable O(X,X), with its derivation."""
    out = []
    for t in theory.types:
        marker = proposition("O", t, t)
        if marker in theory.o_star:
            out.append((t, theory.derivations[marker]))
    return out


def explain(theory: Theory, prop: CategoricalProposition) -> Optional[Derivation]:
    """The stored minimal derivation, or None when not derivable."""
    return theory.derivations.get(prop)
