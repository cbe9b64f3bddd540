"""Typicality-driven concept combination.

A knowledge base holds rigid (exception-free) inclusions and typical
inclusions, the latter weighted with a degree of belief strictly between
0.5 and 1. Treating each typical inclusion as an independent boolean
choice yields 2^n scenarios, each with a product probability. Combining a
HEAD concept with a MODIFIER concept scans equal-probability blocks of
scenarios from the most probable down, discards the inconsistent ones,
the trivial ones (those inheriting every consistently inheritable HEAD
property) and the ones preferring a MODIFIER property over a conflicting
HEAD property, and stops at the first block that still contains an
admissible scenario. The properties selected by the admissible scenarios
of that block become the typical properties of the compound concept.
"""

from __future__ import annotations

import enum
import heapq
import itertools
import json
from dataclasses import dataclass, field, replace

__all__ = [
    "Literal",
    "RigidInclusion",
    "TypicalityInclusion",
    "TypicalProperty",
    "KnowledgeBase",
    "Scenario",
    "ScenarioClass",
    "CombinedPrototype",
    "CombinationTooLargeError",
    "UnknownConceptError",
    "scenario_probability",
    "enumerate_scenarios",
    "classify_scenario",
    "combine",
    "generate_compound_prototypes",
    "parse_kb_text",
    "dump_kb_text",
    "prototype_to_document",
    "prototype_from_document",
]

DEFAULT_SCENARIO_CAP = 24
BLOCK_TOLERANCE = 1e-12


class CombinationTooLargeError(ValueError):
    """Raised when a combination would exceed the scenario cap."""


class UnknownConceptError(KeyError):
    """Raised when a concept is not present in the knowledge base."""


@dataclass(frozen=True)
class Literal:
    """A property literal: a normalized lemma with a polarity."""

    term: str
    positive: bool = True

    def __post_init__(self):
        if not self.term or self.term != self.term.lower() or any(c.isspace() for c in self.term):
            raise ValueError(f"literal term must be non-empty lowercase without whitespace: {self.term!r}")

    def conflicts_with(self, other: "Literal") -> bool:
        return self.term == other.term and self.positive != other.positive

    @property
    def negated(self) -> "Literal":
        return Literal(self.term, not self.positive)

    def __str__(self) -> str:
        return self.term if self.positive else f"!{self.term}"


@dataclass(frozen=True)
class RigidInclusion:
    subject: str
    prop: Literal


@dataclass(frozen=True)
class TypicalityInclusion:
    subject: str
    prop: Literal
    degree: float

    def __post_init__(self):
        if not 0.5 < self.degree <= 1.0:
            raise ValueError(f"degree must be in (0.5, 1]: {self.degree}")


@dataclass(frozen=True)
class TypicalProperty:
    """A typical property of a prototype: literal plus its degree."""

    prop: Literal
    degree: float


class ScenarioClass(str, enum.Enum):
    INCONSISTENT = "inconsistent"
    TRIVIAL = "trivial"
    MODIFIER_PREFERRING = "modifier_preferring"
    ADMISSIBLE = "admissible"


@dataclass(frozen=True)
class Scenario:
    """One true/false choice per typicality inclusion, HEAD bits first."""

    selection: tuple[bool, ...]
    probability: float


@dataclass(frozen=True)
class CombinedPrototype:
    concept: str
    head: str | None
    modifier: str | None
    rigid: tuple[Literal, ...]
    typical: tuple[TypicalProperty, ...]


@dataclass
class KnowledgeBase:
    """Hybrid KB: rigid inclusions, degree-weighted typical inclusions and
    downstream emotion assertions (kept for export, never used in inference)."""

    rigid: list[RigidInclusion] = field(default_factory=list)
    typical: list[TypicalityInclusion] = field(default_factory=list)
    assertions: list = field(default_factory=list)

    def _check_subject_consistency(self, subject: str, prop: Literal) -> None:
        # One subject never carries both polarities of a term; conflicts are
        # only meaningful across concepts (e.g. a HEAD against a MODIFIER).
        for existing in itertools.chain(self.rigid, self.typical):
            if existing.subject == subject and existing.prop.conflicts_with(prop):
                raise ValueError(
                    f"conflicting polarity for subject {subject!r}: {prop} vs {existing.prop}"
                )

    def add_rigid(self, subject: str, prop: Literal) -> None:
        self._check_subject_consistency(subject, prop)
        if any(i.subject == subject and i.prop == prop for i in self.rigid):
            return
        self.rigid.append(RigidInclusion(subject, prop))

    def add_typical(self, subject: str, prop: Literal, degree: float) -> None:
        if any(i.subject == subject and i.prop == prop for i in self.typical):
            raise ValueError(f"duplicate typicality inclusion: {subject} {prop}")
        self._check_subject_consistency(subject, prop)
        self.typical.append(TypicalityInclusion(subject, prop, degree))

    def subjects(self) -> set[str]:
        return {i.subject for i in self.rigid} | {i.subject for i in self.typical}

    def typical_for(self, subject: str) -> list[TypicalityInclusion]:
        return [i for i in self.typical if i.subject == subject]

    def rigid_for(self, subject: str) -> list[Literal]:
        return [i.prop for i in self.rigid if i.subject == subject]


def scenario_probability(selection: tuple[bool, ...], inclusions: list[TypicalityInclusion]) -> float:
    """Product of degree for selected inclusions, 1 - degree otherwise."""
    if len(selection) != len(inclusions):
        raise ValueError(
            f"selection length {len(selection)} does not match inclusion count {len(inclusions)}"
        )
    probability = 1.0
    for chosen, inclusion in zip(selection, inclusions):
        probability *= inclusion.degree if chosen else 1.0 - inclusion.degree
    return probability


def enumerate_scenarios(
    head: list[TypicalityInclusion],
    modifier: list[TypicalityInclusion],
    cap: int = DEFAULT_SCENARIO_CAP,
) -> list[Scenario]:
    """All 2^n scenarios over the HEAD then MODIFIER inclusions."""
    inclusions = list(head) + list(modifier)
    if len(inclusions) > cap:
        raise CombinationTooLargeError(
            f"combination too large: {len(inclusions)} typicality inclusions exceed the cap of {cap}"
        )
    return [
        Scenario(selection, scenario_probability(selection, inclusions))
        for selection in itertools.product((True, False), repeat=len(inclusions))
    ]


def _has_conflict(literals: set[Literal]) -> bool:
    return any(lit.negated in literals for lit in literals)


def classify_scenario(
    scenario: Scenario,
    head: list[TypicalityInclusion],
    modifier: list[TypicalityInclusion],
    rigid: list[Literal] | None = None,
) -> ScenarioClass:
    """Grade one scenario for the discard rules, in precedence order:
    inconsistent, then trivial, then modifier-preferring, else admissible."""
    rigid = list(rigid or [])
    inclusions = list(head) + list(modifier)
    if len(scenario.selection) != len(inclusions):
        raise ValueError("scenario selection does not cover the given inclusions")
    selected = [inc.prop for inc, chosen in zip(inclusions, scenario.selection) if chosen]

    if _has_conflict(set(selected) | set(rigid)):
        return ScenarioClass.INCONSISTENT

    # A HEAD property is consistently inheritable unless it clashes with a
    # rigid constraint of either concept.
    inheritable = [
        not any(inc.prop.conflicts_with(r) for r in rigid) for inc in head
    ]
    if all(
        chosen or not can_inherit
        for chosen, can_inherit in zip(scenario.selection[: len(head)], inheritable)
    ):
        return ScenarioClass.TRIVIAL

    inheritable_props = {inc.prop for inc, ok in zip(head, inheritable) if ok}
    selected_modifier = [
        inc.prop
        for inc, chosen in zip(modifier, scenario.selection[len(head):])
        if chosen
    ]
    if any(
        prop.conflicts_with(h) for prop in selected_modifier for h in inheritable_props
    ):
        return ScenarioClass.MODIFIER_PREFERRING

    return ScenarioClass.ADMISSIBLE


def _scenarios_by_probability(degrees: list[float]):
    """Yield (probability, selection) for every scenario, most probable
    first. Lazy best-first walk: flipping inclusion i off multiplies the
    all-selected probability by (1-d_i)/d_i <= 1, so subsets of flips are
    explored through a heap ordered on the recomputed product."""
    n = len(degrees)
    ranked = sorted(range(n), key=lambda i: (-(1.0 - degrees[i]) / degrees[i], i))

    def concrete(flip_ranks: tuple[int, ...]):
        flipped = {ranked[r] for r in flip_ranks}
        selection = tuple(i not in flipped for i in range(n))
        probability = 1.0
        for i in range(n):
            probability *= degrees[i] if selection[i] else 1.0 - degrees[i]
        return probability, selection

    start_probability, _ = concrete(())
    heap: list[tuple[float, tuple[int, ...]]] = [(-start_probability, ())]
    while heap:
        neg_probability, flips = heapq.heappop(heap)
        yield -neg_probability, concrete(flips)[1]
        # Children: extend the flip set with the next-ranked flip, or swap
        # the last flip for the next-ranked one; each subset has exactly one
        # parent, so every scenario is produced once.
        last = flips[-1] if flips else -1
        if last + 1 < n:
            extended = flips + (last + 1,)
            heapq.heappush(heap, (-concrete(extended)[0], extended))
            if flips:
                swapped = flips[:-1] + (last + 1,)
                heapq.heappush(heap, (-concrete(swapped)[0], swapped))


def _same_block(p: float, representative: float, tolerance: float) -> bool:
    return abs(p - representative) <= tolerance * max(p, representative)


def combine(
    kb: KnowledgeBase,
    head: str,
    modifier: str,
    *,
    concept: str | None = None,
    cap: int = DEFAULT_SCENARIO_CAP,
    block_tolerance: float = BLOCK_TOLERANCE,
) -> CombinedPrototype:
    """Build the compound prototype of HEAD and MODIFIER.

    Scans equal-probability scenario blocks in decreasing order and stops at
    the first block holding at least one admissible scenario; the typical
    set is the union of the properties selected by the admissible scenarios
    of that block. Properties occurring in both concepts keep the HEAD
    degree. Returns an empty-typical prototype when every scenario of every
    block is discarded.
    """
    known = kb.subjects()
    for name in (head, modifier):
        if name not in known:
            raise UnknownConceptError(name)
    head_incs = kb.typical_for(head)
    modifier_incs = kb.typical_for(modifier)
    if not head_incs or not modifier_incs:
        empty = head if not head_incs else modifier
        raise ValueError(f"concept {empty!r} has no typicality inclusions and cannot be combined")
    n = len(head_incs) + len(modifier_incs)
    if n > cap:
        raise CombinationTooLargeError(
            f"combination too large: {n} typicality inclusions exceed the cap of {cap}"
        )

    rigid_literals: list[Literal] = []
    for lit in kb.rigid_for(head) + kb.rigid_for(modifier):
        if lit not in rigid_literals:
            rigid_literals.append(lit)

    inclusions = head_incs + modifier_incs
    degrees = [inc.degree for inc in inclusions]
    n_head = len(head_incs)
    rigid_set = set(rigid_literals)
    rigid_is_consistent = not _has_conflict(rigid_set)
    inheritable = [
        all(not inc.prop.conflicts_with(r) for r in rigid_set) for inc in head_incs
    ]
    inheritable_props = {inc.prop for inc, ok in zip(head_incs, inheritable) if ok}

    def grade(selection: tuple[bool, ...]) -> ScenarioClass:
        selected = {inc.prop for inc, chosen in zip(inclusions, selection) if chosen}
        if not rigid_is_consistent or _has_conflict(selected | rigid_set):
            return ScenarioClass.INCONSISTENT
        if all(
            chosen or not ok for chosen, ok in zip(selection[:n_head], inheritable)
        ):
            return ScenarioClass.TRIVIAL
        for inc, chosen in zip(modifier_incs, selection[n_head:]):
            if chosen and any(inc.prop.conflicts_with(h) for h in inheritable_props):
                return ScenarioClass.MODIFIER_PREFERRING
        return ScenarioClass.ADMISSIBLE

    head_degree = {inc.prop: inc.degree for inc in head_incs}
    modifier_degree = {inc.prop: inc.degree for inc in modifier_incs}

    def finish(admissible_selections: list[tuple[bool, ...]]) -> CombinedPrototype:
        union: dict[Literal, float] = {}
        for selection in admissible_selections:
            for inc, chosen in zip(inclusions, selection):
                if chosen and inc.prop not in union:
                    union[inc.prop] = head_degree.get(inc.prop, modifier_degree.get(inc.prop))
        typical = tuple(
            TypicalProperty(prop, degree)
            for prop, degree in sorted(
                union.items(), key=lambda kv: (-kv[1], kv[0].term, not kv[0].positive)
            )
        )
        return CombinedPrototype(
            concept=concept or f"{head}+{modifier}",
            head=head,
            modifier=modifier,
            rigid=tuple(rigid_literals),
            typical=typical,
        )

    block_representative: float | None = None
    block_admissible: list[tuple[bool, ...]] = []
    for probability, selection in _scenarios_by_probability(degrees):
        if block_representative is not None and not _same_block(
            probability, block_representative, block_tolerance
        ):
            if block_admissible:
                return finish(block_admissible)
            block_representative = None
            block_admissible = []
        if block_representative is None:
            block_representative = probability
        if grade(selection) is ScenarioClass.ADMISSIBLE:
            block_admissible.append(selection)
    if block_admissible:
        return finish(block_admissible)
    return finish([])


def generate_compound_prototypes(
    wheel,
    basics: dict,
    head_rule: dict[str, str] | None = None,
) -> dict[str, CombinedPrototype]:
    """One combined prototype per dyad of the wheel.

    ``basics`` maps each basic emotion name to its prototype (an object with
    ``typical`` properties and ``rigid`` literals, as built by the lexicon
    ingest). By default the component with the lower sector index acts as
    HEAD; ``head_rule`` overrides that per dyad name.
    """
    head_rule = head_rule or {}
    missing = [b.name for b in wheel.basics if b.name not in basics or not basics[b.name].typical]
    if missing:
        raise ValueError(f"missing or empty basic prototype for: {', '.join(sorted(missing))}")

    kb = KnowledgeBase()
    for name, prototype in basics.items():
        for lit in prototype.rigid:
            kb.add_rigid(name, lit)
        for prop in prototype.typical:
            kb.add_typical(name, prop.prop, prop.degree)

    prototypes: dict[str, CombinedPrototype] = {}
    for dyad in wheel.dyads:
        first, second = dyad.components
        head = head_rule.get(dyad.name, first)
        if head not in dyad.components:
            raise ValueError(f"head rule for {dyad.name!r} names a non-component: {head!r}")
        modifier = second if head == first else first
        prototypes[dyad.name] = replace(
            combine(kb, head, modifier), concept=dyad.name
        )
    return prototypes


# --- text and JSON interchange -------------------------------------------

def _parse_literal(token: str) -> Literal:
    if token.startswith("!"):
        return Literal(token[1:], positive=False)
    return Literal(token)


def parse_kb_text(text: str) -> KnowledgeBase:
    """Parse the line-oriented KB format.

    ``rigid <subject> <[!]term>`` and ``typ <subject> <[!]term> <degree>``;
    ``#`` starts a comment; degrees outside (0.5, 1] are rejected.
    """
    kb = KnowledgeBase()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "rigid" and len(parts) == 3:
                kb.add_rigid(parts[1], _parse_literal(parts[2]))
            elif parts[0] == "typ" and len(parts) == 4:
                kb.add_typical(parts[1], _parse_literal(parts[2]), float(parts[3]))
            else:
                raise ValueError(f"unrecognized KB line: {line!r}")
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return kb


def dump_kb_text(kb: KnowledgeBase) -> str:
    lines = [f"rigid {i.subject} {i.prop}" for i in kb.rigid]
    lines += [f"typ {i.subject} {i.prop} {i.degree}" for i in kb.typical]
    return "\n".join(lines) + ("\n" if lines else "")


def _literal_doc(lit: Literal) -> dict:
    return {"term": lit.term, "polarity": "positive" if lit.positive else "negative"}


def _literal_from_doc(doc: dict) -> Literal:
    return Literal(doc["term"], doc["polarity"] == "positive")


def prototype_to_document(prototype: CombinedPrototype) -> dict:
    return {
        "schema": "prototype/1",
        "concept": prototype.concept,
        "head": prototype.head,
        "modifier": prototype.modifier,
        "rigid": [_literal_doc(lit) for lit in prototype.rigid],
        "typical": [
            {**_literal_doc(p.prop), "degree": p.degree} for p in prototype.typical
        ],
    }


def prototype_from_document(doc: dict) -> CombinedPrototype:
    if doc.get("schema") != "prototype/1":
        raise ValueError(f"not a prototype/1 document: schema={doc.get('schema')!r}")
    return CombinedPrototype(
        concept=doc["concept"],
        head=doc.get("head"),
        modifier=doc.get("modifier"),
        rigid=tuple(_literal_from_doc(d) for d in doc["rigid"]),
        typical=tuple(
            TypicalProperty(_literal_from_doc(d), d["degree"]) for d in doc["typical"]
        ),
    )


def prototype_to_json(prototype: CombinedPrototype) -> str:
    return json.dumps(prototype_to_document(prototype), indent=2) + "\n"
