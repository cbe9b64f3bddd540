import random

import pytest

from affekt.classify import EmotionAssignment, Story, StoryEmotionProfile, StoryItem
from affekt.lexicon import build_basic_prototypes, LexiconEntry
from affekt.pipeline import ItemProfile, ItemRecord
from affekt.store import CatalogStore, IntegrityError
from affekt.tcl import generate_compound_prototypes
from affekt.wheel import build_wheel


def item(item_id, description="quiet sea"):
    return ItemRecord(id=item_id, description=description)


def profile(item_id):
    return ItemProfile(id=item_id, frequencies={"quiet": 0.5, "sea": 0.5})


def assignment(item_id, emotion="love", score=0.4):
    return EmotionAssignment(item_id, emotion, score, ("quiet",))


def story(story_id, creator, *item_ids):
    return Story(
        id=story_id, title=story_id.title(), creator=creator,
        items=tuple(StoryItem(item_id=i, tags=("t",)) for i in item_ids),
    )


def test_round_trip_items_and_stories(tmp_path):
    with CatalogStore(tmp_path) as store:
        store.put_item(item("a"), profile("a"), [assignment("a")])
        store.put_story(story("s", "u1", "a"), StoryEmotionProfile("s", {"love": 0.4}))
        revision = store.revision
    reloaded = CatalogStore(tmp_path)
    assert reloaded.items["a"] == item("a")
    assert reloaded.profiles["a"] == profile("a")
    assert reloaded.assignments["a"] == [assignment("a")]
    assert reloaded.stories["s"] == story("s", "u1", "a")
    assert reloaded.story_profiles["s"].emotions == {"love": 0.4}
    assert reloaded.revision == revision
    reloaded.close()


def test_revision_strictly_increases(tmp_path):
    with CatalogStore(tmp_path) as store:
        seen = [store.revision]
        for n in range(5):
            store.put_item(item(f"i{n}"), profile(f"i{n}"), [])
            assert store.revision > seen[-1]
            seen.append(store.revision)


def test_prototypes_round_trip(tmp_path):
    entries = [
        LexiconEntry(f"{e}term{i}", e, 0.9 - i * 0.1)
        for e in ("joy", "trust", "fear", "surprise", "sadness", "disgust", "anger", "anticipation")
        for i in range(3)
    ]
    basics = build_basic_prototypes(entries, k=2)
    compounds = generate_compound_prototypes(build_wheel(), basics)
    with CatalogStore(tmp_path) as store:
        store.put_prototypes(basics, compounds)
    reloaded = CatalogStore(tmp_path)
    assert reloaded.basic_prototypes == basics
    assert reloaded.prototypes == compounds
    reloaded.close()


def test_story_requires_known_items(tmp_path):
    with CatalogStore(tmp_path) as store:
        with pytest.raises(IntegrityError, match="ghost"):
            store.put_story(story("s", "u1", "ghost"), StoryEmotionProfile("s", {}))


def test_mismatched_profile_id_rejected(tmp_path):
    with CatalogStore(tmp_path) as store:
        with pytest.raises(IntegrityError):
            store.put_item(item("a"), profile("b"), [])


def test_last_write_wins_on_replay(tmp_path):
    with CatalogStore(tmp_path) as store:
        store.put_item(item("a", "first text"), profile("a"), [])
        store.put_item(item("a", "second text"), profile("a"), [])
    reloaded = CatalogStore(tmp_path)
    assert reloaded.items["a"].description == "second text"
    reloaded.close()


def test_torn_tail_line_ignored(tmp_path):
    with CatalogStore(tmp_path) as store:
        store.put_item(item("a"), profile("a"), [assignment("a")])
    (tmp_path / "items.jsonl").open("a").write('{"rev": 99, "payl')  # simulated crash
    reloaded = CatalogStore(tmp_path)
    assert set(reloaded.items) == {"a"}
    assert reloaded.revision < 99
    reloaded.close()


def test_stories_with_item(tmp_path):
    with CatalogStore(tmp_path) as store:
        for item_id in ("a", "b"):
            store.put_item(item(item_id), profile(item_id), [])
        store.put_story(story("s2", "u", "a", "b"), StoryEmotionProfile("s2", {}))
        store.put_story(story("s1", "u", "b"), StoryEmotionProfile("s1", {}))
        assert [s.id for s in store.stories_with_item("b")] == ["s1", "s2"]
        assert [s.id for s in store.stories_with_item("a")] == ["s2"]
        assert store.stories_with_item("nope") == []


def test_kill_and_restart_preserves_acknowledged_state(tmp_path):
    """Randomized crash-consistency: every acknowledged write survives an
    abrupt reopen; unacknowledged garbage never resurrects."""
    rng = random.Random(20240817)
    acknowledged_items: dict[str, ItemRecord] = {}
    acknowledged_stories: dict[str, Story] = {}
    store = CatalogStore(tmp_path)
    for step in range(100):
        if acknowledged_items and rng.random() < 0.3:
            story_id = f"s{step}"
            member = rng.choice(sorted(acknowledged_items))
            record = story(story_id, f"u{rng.randrange(3)}", member)
            store.put_story(record, StoryEmotionProfile(story_id, {"love": rng.random()}))
            acknowledged_stories[story_id] = record
        else:
            item_id = f"i{step}"
            record = item(item_id, f"text {rng.randrange(1000)}")
            store.put_item(record, profile(item_id), [assignment(item_id)])
            acknowledged_items[item_id] = record
        if rng.random() < 0.15:
            # simulated kill: drop the handle without closing, then restart
            if rng.random() < 0.5:
                (tmp_path / "items.jsonl").open("a").write('{"rev":')
            store = CatalogStore(tmp_path)
            assert store.items == acknowledged_items
            assert store.stories == acknowledged_stories
    store = CatalogStore(tmp_path)
    assert store.items == acknowledged_items
    assert store.stories == acknowledged_stories
    store.close()
