"""Emotion assignment and diversity-seeking story recommendation.

An item evokes an emotion when its profile carries all of the prototype's
rigid properties and at least a threshold share (default 30%, inclusive)
of its typical properties; negated typical properties count as matched
when their term is absent. Story profiles aggregate member-item scores by
arithmetic mean per emotion. Recommendations link stories whose emotions
stand in the requested wheel relation, ranked by the product of the two
linking scores; stories by the same creator are never suggested back to
their author.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .pipeline import ItemProfile
from .wheel import Relation, WheelCatalog

__all__ = [
    "DEFAULT_THRESHOLD",
    "EMOJI_NAMES",
    "EmotionAssignment",
    "StoryItem",
    "Story",
    "StoryValidationError",
    "UnknownItemError",
    "EmptyStoryProfileError",
    "StoryEmotionProfile",
    "RecommendationEntry",
    "Recommendation",
    "classify_item",
    "classify_story",
    "recommend",
    "export_assignments",
    "parse_story",
]

logger = logging.getLogger(__name__)

DEFAULT_THRESHOLD = 0.30
DEFAULT_STORY_BOUNDS = (1, 3)

# The fixed annotation emoji palette offered by the client.
EMOJI_NAMES = ("love", "curiosity", "delight", "joy", "fear", "sadness", "disgust")

COMMENT_KEYS = ("reminds", "think", "feel")


class StoryValidationError(ValueError):
    """A story document violates the story/1 contract."""


class UnknownItemError(LookupError):
    def __init__(self, item_id: str):
        super().__init__(f"story references unknown item {item_id!r}")
        self.item_id = item_id


class EmptyStoryProfileError(ValueError):
    def __init__(self, story_id: str):
        super().__init__(f"no emotions extracted for story {story_id!r}")
        self.story_id = story_id


@dataclass(frozen=True)
class EmotionAssignment:
    target_id: str
    emotion: str
    score: float
    matched_terms: tuple[str, ...]


@dataclass(frozen=True)
class StoryItem:
    item_id: str
    emojis: tuple[str, ...] = ()
    tags: tuple[str, ...] = ()
    comments: dict = field(default_factory=dict)

    def has_annotation(self) -> bool:
        return bool(self.emojis or self.tags or any(self.comments.values()))


@dataclass(frozen=True)
class Story:
    id: str
    title: str
    creator: str
    items: tuple[StoryItem, ...]


@dataclass(frozen=True)
class StoryEmotionProfile:
    story_id: str
    emotions: dict[str, float]


@dataclass(frozen=True)
class RecommendationEntry:
    story_id: str
    relevance: float
    source_emotion: str
    target_emotion: str


@dataclass(frozen=True)
class Recommendation:
    source_id: str
    kind: str
    entries: tuple[RecommendationEntry, ...]


def parse_story(
    document: dict,
    bounds: tuple[int, int] = DEFAULT_STORY_BOUNDS,
) -> Story:
    """Validate and decode a story/1 document."""
    if not isinstance(document, dict):
        raise StoryValidationError("story document must be a JSON object")
    for required in ("id", "creator"):
        value = document.get(required)
        if not isinstance(value, str) or not value.strip():
            raise StoryValidationError(f"story document lacks required field {required!r}")
    raw_items = document.get("items")
    if not isinstance(raw_items, list):
        raise StoryValidationError("story document lacks an items list")
    lower, upper = bounds
    if not lower <= len(raw_items) <= upper:
        raise StoryValidationError(
            f"story must contain between {lower} and {upper} items, got {len(raw_items)}"
        )
    items = []
    for raw in raw_items:
        if not isinstance(raw, dict) or not isinstance(raw.get("itemId"), str):
            raise StoryValidationError("every story item needs an itemId")
        emojis = raw.get("emojis", [])
        tags = raw.get("tags", [])
        for label, values in (("emojis", emojis), ("tags", tags)):
            if not isinstance(values, list) or not all(isinstance(v, str) for v in values):
                raise StoryValidationError(f"{label} must be a list of strings")
        unknown = [e for e in emojis if e not in EMOJI_NAMES]
        if unknown:
            raise StoryValidationError(f"unknown emoji name(s): {', '.join(unknown)}")
        comments_raw = raw.get("comments", {})
        if not isinstance(comments_raw, dict):
            raise StoryValidationError("comments must be an object")
        stray = set(comments_raw) - set(COMMENT_KEYS)
        if stray:
            raise StoryValidationError(f"unknown comment key(s): {', '.join(sorted(stray))}")
        item = StoryItem(
            item_id=raw["itemId"],
            emojis=tuple(emojis),
            tags=tuple(tags),
            comments={k: comments_raw.get(k, "") for k in COMMENT_KEYS},
        )
        if not item.has_annotation():
            raise StoryValidationError(
                f"annotation required: item {item.item_id!r} carries no emoji, tag or comment"
            )
        items.append(item)
    return Story(
        id=document["id"].strip(),
        title=document.get("title", "") or "",
        creator=document["creator"].strip(),
        items=tuple(items),
    )


def classify_item(
    profile: ItemProfile,
    prototypes: dict,
    threshold: float = DEFAULT_THRESHOLD,
    check_rigid: bool = True,
    translation: dict[str, str] | None = None,
) -> list[EmotionAssignment]:
    """All emotions whose prototype the profile satisfies, insertion order.

    ``translation`` optionally maps item lemmas into the lexicon language
    before matching.
    """
    if not 0.0 < threshold <= 1.0:
        raise ValueError(f"threshold must be in (0, 1]: {threshold}")
    lemmas = set(profile.lemma_set)
    if translation:
        lemmas = {translation.get(lemma, lemma) for lemma in lemmas}
    assignments = []
    for name, prototype in prototypes.items():
        if not prototype.typical:
            logger.warning("prototype %s has no typical properties; skipped", name)
            continue
        if check_rigid and not all(
            (lit.term in lemmas) == lit.positive for lit in prototype.rigid
        ):
            continue
        matched = [
            p.prop.term
            for p in prototype.typical
            if (p.prop.term in lemmas) == p.prop.positive
        ]
        score = len(matched) / len(prototype.typical)
        if score >= threshold:
            assignments.append(
                EmotionAssignment(
                    target_id=profile.id,
                    emotion=name,
                    score=score,
                    matched_terms=tuple(matched),
                )
            )
    return assignments


def classify_story(
    story: Story,
    item_assignments: dict[str, list[EmotionAssignment]],
) -> StoryEmotionProfile:
    """Union of member-item emotions, scored by mean over occurrences."""
    totals: dict[str, list[float]] = {}
    for item in story.items:
        if item.item_id not in item_assignments:
            raise UnknownItemError(item.item_id)
        for assignment in item_assignments[item.item_id]:
            totals.setdefault(assignment.emotion, []).append(assignment.score)
    emotions = {
        name: sum(scores) / len(scores) for name, scores in sorted(totals.items())
    }
    return StoryEmotionProfile(story_id=story.id, emotions=emotions)


def recommend(
    source_id: str,
    profiles: dict[str, StoryEmotionProfile],
    stories: dict[str, Story],
    wheel: WheelCatalog,
    kind: str,
    limit: int = 5,
) -> Recommendation:
    """Rank other creators' stories linked by the requested relation."""
    if kind not in (Relation.SAME.value, Relation.SIMILAR.value, Relation.OPPOSITE.value):
        raise ValueError(f"unknown recommendation kind: {kind!r}")
    if limit < 1:
        raise ValueError(f"limit must be positive: {limit}")
    if source_id not in profiles:
        raise KeyError(source_id)
    source_profile = profiles[source_id]
    if not source_profile.emotions:
        raise EmptyStoryProfileError(source_id)
    source_creator = stories[source_id].creator if source_id in stories else None

    entries = []
    for candidate_id, candidate in profiles.items():
        if candidate_id == source_id:
            continue
        candidate_story = stories.get(candidate_id)
        if candidate_story is not None and candidate_story.creator == source_creator:
            continue
        best: RecommendationEntry | None = None
        for e1 in sorted(source_profile.emotions):
            for e2 in sorted(candidate.emotions):
                if wheel.relation(e1, e2).value != kind:
                    continue
                relevance = source_profile.emotions[e1] * candidate.emotions[e2]
                if best is None or relevance > best.relevance:
                    best = RecommendationEntry(candidate_id, relevance, e1, e2)
        if best is not None:
            entries.append(best)
    entries.sort(key=lambda e: (-e.relevance, e.story_id))
    return Recommendation(source_id=source_id, kind=kind, entries=tuple(entries[:limit]))


def export_assignments(assignments, kind_by_id: dict[str, str] | None = None) -> str:
    """Render assignments as sorted N-Triples.

    ``kind_by_id`` labels targets as "story" (default "item") to pick the
    subject namespace.
    """
    kind_by_id = kind_by_id or {}
    lines = sorted(
        "<urn:spice:{kind}:{target}> <urn:spice:evokes> <urn:spice:emotion:{emotion}> .".format(
            kind=kind_by_id.get(a.target_id, "item"),
            target=a.target_id,
            emotion=a.emotion.capitalize(),
        )
        for a in assignments
    )
    return "\n".join(lines) + ("\n" if lines else "")
