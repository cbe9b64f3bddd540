"""Catalog engine and HTTP surface.

The engine binds the store, the wheel, the generated prototypes and the
classification settings into the operations the HTTP API and the CLI
share. Writes are serialized behind a lock (single writer, snapshot
readers), so concurrent requests cannot interleave log appends.
"""

from __future__ import annotations

import threading

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse

from .classify import (
    EmotionAssignment,
    EmptyStoryProfileError,
    StoryValidationError,
    UnknownItemError,
    classify_item,
    classify_story,
    export_assignments,
    parse_story,
    recommend,
)
from .config import ServiceConfig
from .lexicon import load_basic_prototypes
from .pipeline import EmptyProfileError, SchemaError, build_profile, parse_item
from .store import CatalogStore
from .tcl import generate_compound_prototypes
from .wheel import build_wheel

__all__ = ["Engine", "ConflictError", "create_app"]


class ConflictError(ValueError):
    """An existing id was posted again with a different body."""


def _assignment_docs(assignments):
    return [
        {"emotion": a.emotion, "score": a.score, "matched": list(a.matched_terms)}
        for a in assignments
    ]


def _story_doc(story):
    return {
        "id": story.id,
        "title": story.title,
        "creator": story.creator,
        "items": [
            {
                "itemId": i.item_id,
                "emojis": list(i.emojis),
                "tags": list(i.tags),
                "comments": dict(i.comments),
            }
            for i in story.items
        ],
    }


class Engine:
    def __init__(self, store: CatalogStore, config: ServiceConfig | None = None):
        self.store = store
        self.config = config or ServiceConfig()
        self.wheel = build_wheel()
        self.translation = self.config.load_translation()
        self._write_lock = threading.Lock()

    # -- prototypes -----------------------------------------------------------

    def ingest_lexicon(self, path) -> None:
        basics = load_basic_prototypes(path, self.config.top_k)
        compounds = generate_compound_prototypes(self.wheel, basics)
        with self._write_lock:
            self.store.put_prototypes(basics, compounds)

    @property
    def ready(self) -> bool:
        return bool(self.store.prototypes)

    def classification_prototypes(self) -> dict:
        prototypes = dict(self.store.prototypes)
        if self.config.include_basics:
            prototypes.update(self.store.basic_prototypes)
        return prototypes

    # -- items ------------------------------------------------------------------

    def add_item(self, document) -> tuple[dict, bool]:
        record = parse_item(document)
        with self._write_lock:
            existing = self.store.items.get(record.id)
            if existing is not None:
                if existing != record:
                    raise ConflictError(
                        f"item {record.id!r} already exists with a different body"
                    )
                return (
                    {
                        "id": record.id,
                        "emotions": _assignment_docs(self.store.assignments.get(record.id, [])),
                    },
                    False,
                )
            profile = build_profile(record, self.config.stopwords())
            assignments = classify_item(
                profile,
                self.classification_prototypes(),
                self.config.threshold,
                translation=self.translation,
            )
            self.store.put_item(record, profile, assignments)
            return ({"id": record.id, "emotions": _assignment_docs(assignments)}, True)

    def item_emotions(self, item_id: str) -> list:
        if item_id not in self.store.items:
            raise KeyError(item_id)
        return _assignment_docs(self.store.assignments.get(item_id, []))

    # -- stories ------------------------------------------------------------------

    def add_story(self, document) -> tuple[dict, bool]:
        story = parse_story(document, self.config.story_bounds)
        with self._write_lock:
            existing = self.store.stories.get(story.id)
            if existing is not None:
                if existing != story:
                    raise ConflictError(
                        f"story {story.id!r} already exists with a different body"
                    )
                profile = self.store.story_profiles[story.id]
                return ({"id": story.id, "emotions": profile.emotions}, False)
            for item in story.items:
                if item.item_id not in self.store.items:
                    raise UnknownItemError(item.item_id)
            profile = classify_story(story, self.store.assignments)
            self.store.put_story(story, profile)
            return ({"id": story.id, "emotions": profile.emotions}, True)

    def story_document(self, story_id: str) -> dict:
        if story_id not in self.store.stories:
            raise KeyError(story_id)
        doc = _story_doc(self.store.stories[story_id])
        doc["emotions"] = self.store.story_profiles[story_id].emotions
        return doc

    def stories_with_item(self, item_id: str) -> list[dict]:
        return [_story_doc(s) for s in self.store.stories_with_item(item_id)]

    def recommendations(self, story_id: str, kind: str, limit: int = 5) -> dict:
        if story_id not in self.store.stories:
            raise KeyError(story_id)
        result = recommend(
            story_id,
            self.store.story_profiles,
            self.store.stories,
            self.wheel,
            kind,
            limit,
        )
        return {
            "source": result.source_id,
            "kind": result.kind,
            "entries": [
                {
                    "storyId": e.story_id,
                    "title": self.store.stories[e.story_id].title,
                    "relevance": e.relevance,
                    "pair": [e.source_emotion, e.target_emotion],
                }
                for e in result.entries
            ],
        }

    # -- export ---------------------------------------------------------------------

    def triples(self) -> str:
        assignments = self.store.all_assignments()
        for story_id in sorted(self.store.story_profiles):
            profile = self.store.story_profiles[story_id]
            for emotion in sorted(profile.emotions):
                assignments.append(
                    EmotionAssignment(story_id, emotion, profile.emotions[emotion], ())
                )
        return export_assignments(assignments, self.store.target_kinds())


def create_app(engine: Engine) -> FastAPI:
    app = FastAPI(title="affekt", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    def error(status: int, message: str, **extra):
        return JSONResponse({"error": message, **extra}, status_code=status)

    @app.post("/items")
    async def post_item(request: Request):
        if not engine.ready:
            return error(503, "service has no prototypes yet; ingest a lexicon first")
        try:
            body = await request.json()
        except Exception:
            return error(400, "request body is not valid JSON")
        try:
            result, created = engine.add_item(body)
        except SchemaError as exc:
            return error(400, str(exc), field=exc.field_name)
        except EmptyProfileError as exc:
            return error(422, f"no lexical content: {exc}")
        except ConflictError as exc:
            return error(409, str(exc))
        return JSONResponse(result, status_code=201 if created else 200)

    @app.post("/stories")
    async def post_story(request: Request):
        try:
            body = await request.json()
        except Exception:
            return error(400, "request body is not valid JSON")
        try:
            result, created = engine.add_story(body)
        except StoryValidationError as exc:
            return error(400, str(exc))
        except UnknownItemError as exc:
            return error(422, str(exc), item=exc.item_id)
        except ConflictError as exc:
            return error(409, str(exc))
        return JSONResponse(result, status_code=201 if created else 200)

    @app.get("/stories/{story_id}/recommendations")
    async def get_recommendations(story_id: str, kind: str = "similar", limit: int = 5):
        try:
            result = engine.recommendations(story_id, kind, limit)
        except KeyError:
            return error(404, f"unknown story {story_id!r}")
        except EmptyStoryProfileError as exc:
            return error(422, str(exc))
        except ValueError as exc:
            return error(400, str(exc))
        return JSONResponse(result)

    @app.get("/stories/{story_id}")
    async def get_story(story_id: str):
        try:
            return JSONResponse(engine.story_document(story_id))
        except KeyError:
            return error(404, f"unknown story {story_id!r}")

    @app.get("/stories")
    async def get_stories(item: str | None = None):
        if item is None:
            stories = [_story_doc(s) for s in sorted(engine.store.stories.values(), key=lambda s: s.id)]
        else:
            stories = engine.stories_with_item(item)
        return JSONResponse({"stories": stories})

    @app.get("/items/{item_id}/emotions")
    async def get_item_emotions(item_id: str):
        try:
            return JSONResponse({"id": item_id, "emotions": engine.item_emotions(item_id)})
        except KeyError:
            return error(404, f"unknown item {item_id!r}")

    @app.get("/emotions")
    async def get_emotions():
        return JSONResponse(engine.wheel.to_document())

    @app.get("/triples")
    async def get_triples():
        return PlainTextResponse(engine.triples())

    return app
