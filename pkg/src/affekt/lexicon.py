"""Emotion-intensity lexicon ingestion.

Reads a tab-separated lexicon (``term<TAB>emotion<TAB>intensity``, one
entry per line) and distills it into one prototype per basic emotion: the
k most intense terms, with intensities rescaled into belief degrees. The
affine rescaling keeps the whole (0, 1] intensity range usable instead of
discarding everything at or below 0.5, which could leave an emotion with
no typical properties at all.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .tcl import Literal, TypicalProperty, prototype_from_document, prototype_to_document
from .wheel import BASIC_SECTORS

__all__ = [
    "DEFAULT_TOP_K",
    "LexiconEntry",
    "BasicPrototype",
    "LexiconFormatError",
    "parse_lexicon",
    "intensity_to_degree",
    "build_basic_prototypes",
    "load_basic_prototypes",
]

DEFAULT_TOP_K = 10


class LexiconFormatError(ValueError):
    """Raised when the stream does not look like an intensity lexicon."""


@dataclass(frozen=True)
class LexiconEntry:
    term: str
    emotion: str
    intensity: float


@dataclass(frozen=True)
class BasicPrototype:
    """Typical properties of one basic emotion, strongest first."""

    emotion: str
    typical: tuple[TypicalProperty, ...]
    rigid: tuple[Literal, ...] = field(default=())

    def to_document(self) -> dict:
        return {
            "schema": "prototype/1",
            "concept": self.emotion,
            "head": None,
            "modifier": None,
            "rigid": [
                {"term": lit.term, "polarity": "positive" if lit.positive else "negative"}
                for lit in self.rigid
            ],
            "typical": [
                {
                    "term": p.prop.term,
                    "polarity": "positive" if p.prop.positive else "negative",
                    "degree": p.degree,
                }
                for p in self.typical
            ],
        }

    @classmethod
    def from_document(cls, doc: dict) -> "BasicPrototype":
        proto = prototype_from_document(doc)
        return cls(emotion=proto.concept, typical=proto.typical, rigid=proto.rigid)


def parse_lexicon(stream) -> tuple[list[LexiconEntry], int]:
    """Parse lexicon lines from an iterable of strings or a whole string.

    Returns (entries, skipped). Malformed lines and unknown emotions are
    skipped and counted; a stream where more than half of the non-empty
    lines are malformed is rejected as the wrong file format.
    """
    if isinstance(stream, str):
        stream = stream.splitlines()
    entries: list[LexiconEntry] = []
    skipped = 0
    total = 0
    for raw in stream:
        line = raw.rstrip("\n")
        if not line.strip():
            continue
        total += 1
        parts = line.split("\t")
        if len(parts) != 3:
            skipped += 1
            continue
        term, emotion, raw_intensity = (p.strip() for p in parts)
        try:
            intensity = float(raw_intensity)
        except ValueError:
            skipped += 1
            continue
        if not term or emotion.lower() not in BASIC_SECTORS or not 0.0 < intensity <= 1.0:
            skipped += 1
            continue
        entries.append(LexiconEntry(term.lower(), emotion.lower(), intensity))
    if total and skipped > total / 2:
        raise LexiconFormatError(
            f"{skipped} of {total} lines malformed; this does not look like an intensity lexicon"
        )
    return entries, skipped


def intensity_to_degree(intensity: float) -> float:
    """Map a lexicon intensity in (0, 1] onto a belief degree in (0.5, 1].

    Affine: 0.5 + intensity/2. Intensities tiny enough to round the sum
    down to exactly 0.5 are clamped to the next float above it, keeping
    the strict lower bound required of degrees.
    """
    if not 0.0 < intensity <= 1.0:
        raise ValueError(f"intensity must be in (0, 1]: {intensity}")
    degree = 0.5 + intensity / 2.0
    return degree if degree > 0.5 else math.nextafter(0.5, 1.0)


def build_basic_prototypes(
    entries: list[LexiconEntry], k: int = DEFAULT_TOP_K
) -> dict[str, BasicPrototype]:
    """Top-k most intense terms per emotion, ties broken by term."""
    if k < 1:
        raise ValueError(f"k must be >= 1: {k}")
    grouped: dict[str, dict[str, float]] = {name: {} for name in BASIC_SECTORS}
    for entry in entries:
        current = grouped[entry.emotion].get(entry.term)
        if current is None or entry.intensity > current:
            grouped[entry.emotion][entry.term] = entry.intensity
    missing = sorted(name for name, terms in grouped.items() if not terms)
    if missing:
        raise ValueError(f"no lexicon entries for: {', '.join(missing)}")
    prototypes = {}
    for emotion, terms in grouped.items():
        ranked = sorted(terms.items(), key=lambda kv: (-kv[1], kv[0]))[:k]
        prototypes[emotion] = BasicPrototype(
            emotion=emotion,
            typical=tuple(
                TypicalProperty(Literal(term), intensity_to_degree(intensity))
                for term, intensity in ranked
            ),
        )
    return prototypes


def load_basic_prototypes(path, k: int = DEFAULT_TOP_K) -> dict[str, BasicPrototype]:
    """Read a lexicon file and build the eight basic prototypes."""
    with open(path, encoding="utf-8") as handle:
        entries, _skipped = parse_lexicon(handle)
    return build_basic_prototypes(entries, k)


def dump_prototypes_jsonl(prototypes: dict) -> str:
    """One prototype/1 document per line, in mapping order."""
    lines = []
    for prototype in prototypes.values():
        doc = (
            prototype.to_document()
            if isinstance(prototype, BasicPrototype)
            else prototype_to_document(prototype)
        )
        lines.append(json.dumps(doc, sort_keys=True))
    return "\n".join(lines) + ("\n" if lines else "")
