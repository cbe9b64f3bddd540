"""Regenerate the end-to-end golden files from the fixture corpus.

Run from the repository root: python3 tests/golden/make_golden.py
Inspect the diff before committing: these bytes are the frozen contract
for the full ingest-classify-aggregate-recommend-export flow.
"""

import json
import tempfile
from pathlib import Path

from affekt.config import ServiceConfig
from affekt.service import Engine
from affekt.store import CatalogStore

HERE = Path(__file__).parent
FIXTURES = HERE.parent / "fixtures"


def run_pipeline(engine: Engine) -> dict:
    for path in sorted((FIXTURES / "items").glob("*.json")):
        engine.add_item(json.loads(path.read_text(encoding="utf-8")))
    for path in sorted((FIXTURES / "stories").glob("*.json")):
        engine.add_story(json.loads(path.read_text(encoding="utf-8")))

    assignments = {
        item_id: [
            {"emotion": a.emotion, "score": a.score, "matched": sorted(a.matched_terms)}
            for a in engine.store.assignments[item_id]
        ]
        for item_id in sorted(engine.store.assignments)
    }
    story_profiles = {
        story_id: engine.store.story_profiles[story_id].emotions
        for story_id in sorted(engine.store.story_profiles)
    }
    recommendations = {
        story_id: {
            kind: engine.recommendations(story_id, kind)["entries"]
            for kind in ("same", "similar", "opposite")
        }
        for story_id in sorted(engine.store.stories)
    }
    return {
        "assignments": assignments,
        "story_profiles": story_profiles,
        "recommendations": recommendations,
        "triples": engine.triples(),
    }


def main():
    with tempfile.TemporaryDirectory() as tmp:
        engine = Engine(CatalogStore(tmp), ServiceConfig())
        engine.ingest_lexicon(FIXTURES / "lexicon.tsv")
        outputs = run_pipeline(engine)
        engine.store.close()
    for name in ("assignments", "story_profiles", "recommendations"):
        path = HERE / f"{name}.json"
        path.write_text(
            json.dumps(outputs[name], indent=2, sort_keys=True, ensure_ascii=False) + "\n",
            encoding="utf-8",
        )
        print("wrote", path)
    (HERE / "triples.nt").write_text(outputs["triples"], encoding="utf-8")
    print("wrote", HERE / "triples.nt")


if __name__ == "__main__":
    main()
