"""Durable catalog store backed by append-only JSON-lines event logs.

One log file per entity type; every write appends a single line, flushes
and fsyncs before being acknowledged, and bumps a global revision counter
stamped into the event. Opening a store replays all logs (last write per
key wins) and tolerates a torn trailing line, so a crash mid-append can
never corrupt previously acknowledged state. Writers must be serialized
by the caller (the service runs a single writer); readers work on
snapshots returned by the accessors.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from .classify import EmotionAssignment, Story, StoryEmotionProfile, StoryItem
from .lexicon import BasicPrototype
from .pipeline import ItemProfile, ItemRecord
from .tcl import CombinedPrototype, prototype_from_document, prototype_to_document

__all__ = ["CatalogStore", "IntegrityError"]

_LOG_FILES = {
    "items": "items.jsonl",
    "profiles": "profiles.jsonl",
    "prototypes": "prototypes.jsonl",
    "stories": "stories.jsonl",
    "story_profiles": "story_profiles.jsonl",
    "assignments": "assignments.jsonl",
}


class IntegrityError(ValueError):
    """A write would break referential integrity."""


def _item_to_doc(record: ItemRecord) -> dict:
    return {
        "id": record.id,
        "title": record.title,
        "author": record.author,
        "description": record.description,
        "annotations": list(record.annotations),
    }


def _item_from_doc(doc: dict) -> ItemRecord:
    return ItemRecord(
        id=doc["id"],
        title=doc["title"],
        author=doc.get("author"),
        description=doc["description"],
        annotations=tuple(doc.get("annotations", ())),
    )


def _story_to_doc(story: Story) -> dict:
    return {
        "id": story.id,
        "title": story.title,
        "creator": story.creator,
        "items": [
            {
                "itemId": item.item_id,
                "emojis": list(item.emojis),
                "tags": list(item.tags),
                "comments": dict(item.comments),
            }
            for item in story.items
        ],
    }


def _story_from_doc(doc: dict) -> Story:
    return Story(
        id=doc["id"],
        title=doc["title"],
        creator=doc["creator"],
        items=tuple(
            StoryItem(
                item_id=i["itemId"],
                emojis=tuple(i.get("emojis", ())),
                tags=tuple(i.get("tags", ())),
                comments=dict(i.get("comments", {})),
            )
            for i in doc["items"]
        ),
    )


class CatalogStore:
    """Catalog of items, profiles, prototypes, stories and assignments."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self.revision = 0
        self.items: dict[str, ItemRecord] = {}
        self.profiles: dict[str, ItemProfile] = {}
        self.prototypes: dict[str, CombinedPrototype] = {}
        self.basic_prototypes: dict[str, BasicPrototype] = {}
        self.stories: dict[str, Story] = {}
        self.story_profiles: dict[str, StoryEmotionProfile] = {}
        self.assignments: dict[str, list[EmotionAssignment]] = {}
        self._handles = {}
        self._replay()

    # -- persistence ---------------------------------------------------------

    def _path(self, log: str) -> Path:
        return self.root / _LOG_FILES[log]

    def _replay(self) -> None:
        events = []
        for log in _LOG_FILES:
            path = self._path(log)
            if not path.exists():
                continue
            with open(path, encoding="utf-8") as handle:
                for line in handle:
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        event = json.loads(line)
                    except json.JSONDecodeError:
                        # torn trailing write from a crash; ignore
                        continue
                    events.append((event["rev"], log, event["payload"]))
        events.sort(key=lambda e: e[0])
        for rev, log, payload in events:
            self._apply(log, payload)
            self.revision = max(self.revision, rev)

    def _apply(self, log: str, payload: dict) -> None:
        if log == "items":
            record = _item_from_doc(payload)
            self.items[record.id] = record
        elif log == "profiles":
            self.profiles[payload["id"]] = ItemProfile(
                id=payload["id"], frequencies=dict(payload["frequencies"])
            )
        elif log == "prototypes":
            doc = payload["document"]
            if doc.get("head") is None:
                prototype = BasicPrototype.from_document(doc)
                self.basic_prototypes[prototype.emotion] = prototype
            else:
                prototype = prototype_from_document(doc)
                self.prototypes[prototype.concept] = prototype
        elif log == "stories":
            story = _story_from_doc(payload)
            self.stories[story.id] = story
        elif log == "story_profiles":
            self.story_profiles[payload["id"]] = StoryEmotionProfile(
                story_id=payload["id"], emotions=dict(payload["emotions"])
            )
        elif log == "assignments":
            self.assignments[payload["id"]] = [
                EmotionAssignment(
                    target_id=payload["id"],
                    emotion=a["emotion"],
                    score=a["score"],
                    matched_terms=tuple(a["matched"]),
                )
                for a in payload["assigned"]
            ]

    def _append(self, log: str, payload: dict) -> None:
        self.revision += 1
        line = json.dumps({"rev": self.revision, "payload": payload}, sort_keys=True)
        if log not in self._handles:
            self._handles[log] = self._open_for_append(self._path(log))
        handle = self._handles[log]
        handle.write(line + "\n")
        handle.flush()
        os.fsync(handle.fileno())
        self._apply(log, payload)

    @staticmethod
    def _open_for_append(path: Path):
        # A crash can leave a torn final line without a newline; appending
        # straight after it would corrupt the next acknowledged write, so
        # start on a fresh line.
        torn_tail = False
        if path.exists() and path.stat().st_size > 0:
            with open(path, "rb") as probe:
                probe.seek(-1, os.SEEK_END)
                torn_tail = probe.read(1) != b"\n"
        handle = open(path, "a", encoding="utf-8")
        if torn_tail:
            handle.write("\n")
        return handle

    def close(self) -> None:
        for handle in self._handles.values():
            handle.close()
        self._handles.clear()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    # -- writes ---------------------------------------------------------------

    def put_item(self, record: ItemRecord, profile: ItemProfile,
                 assignments: list[EmotionAssignment]) -> None:
        if profile.id != record.id:
            raise IntegrityError("profile id does not match item id")
        self._append("items", _item_to_doc(record))
        self._append("profiles", {"id": profile.id, "frequencies": profile.frequencies})
        self.put_assignments(record.id, assignments)

    def put_assignments(self, target_id: str, assignments: list[EmotionAssignment]) -> None:
        self._append(
            "assignments",
            {
                "id": target_id,
                "assigned": [
                    {"emotion": a.emotion, "score": a.score, "matched": list(a.matched_terms)}
                    for a in assignments
                ],
            },
        )

    def put_prototypes(self, basics: dict[str, BasicPrototype],
                       compounds: dict[str, CombinedPrototype]) -> None:
        for prototype in basics.values():
            self._append("prototypes", {"document": prototype.to_document()})
        for prototype in compounds.values():
            self._append("prototypes", {"document": prototype_to_document(prototype)})

    def put_story(self, story: Story, profile: StoryEmotionProfile) -> None:
        for item in story.items:
            if item.item_id not in self.items:
                raise IntegrityError(f"story references unknown item {item.item_id!r}")
        if profile.story_id != story.id:
            raise IntegrityError("profile id does not match story id")
        self._append("stories", _story_to_doc(story))
        self._append("story_profiles", {"id": story.id, "emotions": profile.emotions})

    # -- reads ------------------------------------------------------------------

    def stories_with_item(self, item_id: str) -> list[Story]:
        return [
            s for s in sorted(self.stories.values(), key=lambda s: s.id)
            if any(i.item_id == item_id for i in s.items)
        ]

    def all_assignments(self) -> list[EmotionAssignment]:
        out = []
        for target_id in sorted(self.assignments):
            out.extend(self.assignments[target_id])
        return out

    def target_kinds(self) -> dict[str, str]:
        kinds = {item_id: "item" for item_id in self.items}
        kinds.update({story_id: "story" for story_id in self.stories})
        return kinds
