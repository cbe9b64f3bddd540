"""Plutchik emotion wheel: eight basic emotions on a circle plus the 24 dyads.

The wheel is the geometric backbone of the whole system: radial distance
between two basic emotions decides which kind of compound they form
(adjacent -> primary dyad, distance 2 -> secondary, distance 3 -> tertiary,
distance 4 -> opposites, never combined), and angular distance between any
two emotions decides whether stories linked through them count as carrying
the same, a similar, or the opposite emotion.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

__all__ = [
    "BASIC_SECTORS",
    "BasicEmotion",
    "CompoundEmotion",
    "Relation",
    "WheelCatalog",
    "build_wheel",
]

# Canonical angular positions, one 45-degree sector per basic emotion.
BASIC_SECTORS: dict[str, int] = {
    "joy": 0,
    "trust": 1,
    "fear": 2,
    "surprise": 3,
    "sadness": 4,
    "disgust": 5,
    "anger": 6,
    "anticipation": 7,
}

# Standard dyad naming, keyed by the unordered component pair.
# Primary dyads sit between adjacent petals, secondary at radial distance 2,
# tertiary at distance 3; the four opposite pairs have no dyad.
_DYAD_NAMES: dict[frozenset[str], str] = {
    frozenset({"anticipation", "joy"}): "optimism",
    frozenset({"joy", "trust"}): "love",
    frozenset({"trust", "fear"}): "submission",
    frozenset({"fear", "surprise"}): "awe",
    frozenset({"surprise", "sadness"}): "disapproval",
    frozenset({"sadness", "disgust"}): "remorse",
    frozenset({"disgust", "anger"}): "contempt",
    frozenset({"anger", "anticipation"}): "aggressiveness",
    frozenset({"anticipation", "trust"}): "hope",
    frozenset({"joy", "fear"}): "guilt",
    frozenset({"trust", "surprise"}): "curiosity",
    frozenset({"fear", "sadness"}): "despair",
    frozenset({"surprise", "disgust"}): "unbelief",
    frozenset({"sadness", "anger"}): "envy",
    frozenset({"disgust", "anticipation"}): "cynicism",
    frozenset({"anger", "joy"}): "pride",
    frozenset({"anticipation", "fear"}): "anxiety",
    frozenset({"joy", "surprise"}): "delight",
    frozenset({"trust", "sadness"}): "sentimentality",
    frozenset({"fear", "disgust"}): "shame",
    frozenset({"surprise", "anger"}): "outrage",
    frozenset({"sadness", "anticipation"}): "pessimism",
    frozenset({"disgust", "joy"}): "morbidness",
    frozenset({"anger", "trust"}): "dominance",
}

_KIND_BY_DISTANCE = {1: "primary", 2: "secondary", 3: "tertiary"}


class Relation(str, enum.Enum):
    """How two emotions relate on the wheel, for linking stories."""

    SAME = "same"
    SIMILAR = "similar"
    OPPOSITE = "opposite"
    NONE = "none"


@dataclass(frozen=True)
class BasicEmotion:
    name: str
    sector: int

    @property
    def position(self) -> float:
        return float(self.sector)


@dataclass(frozen=True)
class CompoundEmotion:
    name: str
    components: tuple[str, str]  # basic names, lower sector first
    kind: str  # primary | secondary | tertiary
    position: float  # circular midpoint, half-sector resolution


Emotion = BasicEmotion | CompoundEmotion


def _circular_distance(a: float, b: float) -> float:
    d = abs(a - b) % 8.0
    return min(d, 8.0 - d)


def _shorter_arc_midpoint(sa: int, sb: int) -> float:
    forward = (sb - sa) % 8
    if forward <= 4:
        return (sa + forward / 2.0) % 8.0
    return (sb + (8 - forward) / 2.0) % 8.0


class WheelCatalog:
    """Immutable catalog of the 8 basic emotions and their 24 dyads."""

    def __init__(self, basics: list[BasicEmotion], dyads: list[CompoundEmotion]):
        self.basics = tuple(basics)
        self.dyads = tuple(dyads)
        self._by_name: dict[str, Emotion] = {}
        for emotion in (*self.basics, *self.dyads):
            if emotion.name in self._by_name:
                raise ValueError(f"duplicate emotion name: {emotion.name}")
            self._by_name[emotion.name] = emotion
        self._dyad_by_pair = {frozenset(d.components): d for d in self.dyads}

    def __contains__(self, name: str) -> bool:
        return name.lower() in self._by_name

    def __iter__(self):
        return iter((*self.basics, *self.dyads))

    def get(self, name: str) -> Emotion:
        try:
            return self._by_name[name.lower()]
        except KeyError:
            raise KeyError(f"unknown emotion: {name!r}") from None

    def dyad_for(self, a: str, b: str) -> CompoundEmotion:
        """The dyad composed of basics a and b (order-insensitive)."""
        pair = frozenset({self.get(a).name, self.get(b).name})
        try:
            return self._dyad_by_pair[pair]
        except KeyError:
            raise KeyError(f"no dyad combines {a!r} and {b!r}") from None

    def radial_distance(self, a: str, b: str) -> int:
        ea, eb = self.get(a), self.get(b)
        if not (isinstance(ea, BasicEmotion) and isinstance(eb, BasicEmotion)):
            raise ValueError("radial distance is defined between basic emotions")
        diff = abs(ea.sector - eb.sector)
        return min(diff, 8 - diff)

    def opposite_of(self, name: str) -> Emotion:
        emotion = self.get(name)
        if isinstance(emotion, BasicEmotion):
            opposite_sector = (emotion.sector + 4) % 8
            return next(b for b in self.basics if b.sector == opposite_sector)
        a, b = emotion.components
        return self.dyad_for(self.opposite_of(a).name, self.opposite_of(b).name)

    def relation(self, a: str, b: str) -> Relation:
        ea, eb = self.get(a), self.get(b)
        if ea.name == eb.name:
            return Relation.SAME
        if self.opposite_of(ea.name).name == eb.name:
            return Relation.OPPOSITE
        if _circular_distance(ea.position, eb.position) <= 1.0:
            return Relation.SIMILAR
        return Relation.NONE

    def to_document(self) -> dict:
        """Stable wheel/1 JSON document for the UI and for export."""
        return {
            "schema": "wheel/1",
            "basics": [
                {"name": b.name, "sector": b.sector}
                for b in sorted(self.basics, key=lambda b: b.sector)
            ],
            "dyads": [
                {
                    "name": d.name,
                    "components": list(d.components),
                    "kind": d.kind,
                    "position": d.position,
                }
                for d in sorted(
                    self.dyads,
                    key=lambda d: (("primary", "secondary", "tertiary").index(d.kind), d.position),
                )
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_document(), indent=2, sort_keys=False) + "\n"


def build_wheel() -> WheelCatalog:
    """Build the fixed catalog: 8 basics plus all 24 named dyads."""
    basics = [BasicEmotion(name, sector) for name, sector in BASIC_SECTORS.items()]
    by_sector = {b.sector: b for b in basics}
    dyads = []
    for pair, name in _DYAD_NAMES.items():
        first, second = sorted(pair, key=lambda n: BASIC_SECTORS[n])
        sa, sb = BASIC_SECTORS[first], BASIC_SECTORS[second]
        distance = min(abs(sa - sb), 8 - abs(sa - sb))
        dyads.append(
            CompoundEmotion(
                name=name,
                components=(first, second),
                kind=_KIND_BY_DISTANCE[distance],
                position=_shorter_arc_midpoint(sa, sb),
            )
        )
    dyads.sort(key=lambda d: (("primary", "secondary", "tertiary").index(d.kind), d.position))
    assert len(by_sector) == 8 and len(dyads) == 24
    return WheelCatalog(basics, dyads)
