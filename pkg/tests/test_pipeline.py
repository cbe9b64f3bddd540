import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affekt.pipeline import (
    STOPWORDS,
    EmptyProfileError,
    ItemRecord,
    SchemaError,
    build_profile,
    iter_item_documents,
    lemmatize_token,
    normalize_and_lemmatize,
    parse_item,
    profiles_to_jsonl,
    term_frequencies,
)


# --- parsing ----------------------------------------------------------------

def test_parse_item_full_record():
    record = parse_item(
        '{"id":"39138","title":"(Der) Matrose Fritz Müller","description":"a sailor"}'
    )
    assert record.id == "39138"
    assert record.title == "(Der) Matrose Fritz Müller"
    assert record.annotations == ()


def test_parse_item_defaults():
    record = parse_item({"id": "x", "description": "a"})
    assert record.annotations == ()
    assert record.title == ""
    assert record.author is None


def test_parse_item_missing_id():
    with pytest.raises(SchemaError) as err:
        parse_item({"title": "no id", "description": "d"})
    assert err.value.field_name == "id"


def test_parse_item_missing_description():
    with pytest.raises(SchemaError) as err:
        parse_item({"id": "x"})
    assert err.value.field_name == "description"


def test_parse_item_malformed_json():
    with pytest.raises(SchemaError, match="malformed"):
        parse_item("{not json")


def test_parse_item_bad_annotations():
    with pytest.raises(SchemaError):
        parse_item({"id": "x", "description": "d", "annotations": [1, 2]})


# --- normalization ----------------------------------------------------------

def test_plural_stripping_with_stopwords():
    # rule table: trailing -s drops unless the token ends in ss/us/is
    assert normalize_and_lemmatize("The Seas, the sea!", {"the"}) == ["sea", "sea"]
    assert normalize_and_lemmatize("the seas, the sea, the sea", {"the"}) == [
        "sea",
        "sea",
        "sea",
    ]


def test_empty_text():
    assert normalize_and_lemmatize("") == []


def test_digits_dropped():
    assert normalize_and_lemmatize("1874") == []
    assert normalize_and_lemmatize("It was in 1874 that T62a storms came") == [
        "storm",
        "came",
    ]


def test_short_tokens_dropped():
    assert normalize_and_lemmatize("a z ok") == ["ok"]


def test_unicode_and_case():
    assert normalize_and_lemmatize("CRESCITA però, Città!", STOPWORDS["it"]) == [
        "crescita",
        "però",
        "città",
    ]


def test_rule_table():
    assert [
        lemmatize_token(w)
        for w in ["stories", "classes", "churches", "boxes", "walking", "running", "cats"]
    ] == ["story", "class", "church", "box", "walk", "run", "cat"]
    # guards: short words and protected endings stay intact
    assert [lemmatize_token(w) for w in ["glass", "bus", "basis", "king", "is"]] == [
        "glass",
        "bus",
        "basis",
        "king",
        "is",
    ]


def test_custom_lemmatizer_injected():
    assert normalize_and_lemmatize("Gatti neri", set(), lambda t: t[:3]) == ["gat", "ner"]


# --- frequencies ------------------------------------------------------------

def test_term_frequencies_proportions():
    assert term_frequencies(["sea", "storm", "sea", "fear"]) == {
        "sea": 0.5,
        "storm": 0.25,
        "fear": 0.25,
    }


def test_term_frequencies_singleton():
    assert term_frequencies(["owl"]) == {"owl": 1.0}


def test_term_frequencies_empty():
    with pytest.raises(ValueError):
        term_frequencies([])


@given(st.lists(st.sampled_from("abcdefg"), min_size=1, max_size=200))
@settings(max_examples=80)
def test_frequencies_sum_to_one(tokens):
    assert math.fsum(term_frequencies(tokens).values()) == pytest.approx(1.0, abs=1e-9)


# --- profiles ---------------------------------------------------------------

def test_build_profile_merges_annotations():
    record = ItemRecord(
        id="i1", description="the quiet harbor", annotations=("quiet boats", "harbor")
    )
    profile = build_profile(record)
    assert profile.lemma_set == {"quiet", "harbor", "boat"}
    assert profile.frequencies["quiet"] == pytest.approx(0.4)
    assert profile.frequencies["harbor"] == pytest.approx(0.4)


def test_profile_annotations_equal_concatenation():
    with_annotations = build_profile(
        ItemRecord(id="x", description="stormy night", annotations=("dark storm",))
    )
    concatenated = build_profile(
        ItemRecord(id="x", description="stormy night dark storm")
    )
    assert with_annotations == concatenated


def test_build_profile_empty_raises_with_id():
    with pytest.raises(EmptyProfileError) as err:
        build_profile(ItemRecord(id="silent", description="1874 ... 12"))
    assert err.value.item_id == "silent"


def test_profile_deterministic():
    record = parse_item({"id": "d", "description": "waves and waves of grey water"})
    assert build_profile(record) == build_profile(record)


# --- batch ingestion --------------------------------------------------------

def test_iter_items_from_directory(tmp_path):
    (tmp_path / "b.json").write_text('{"id":"b","description":"two"}')
    (tmp_path / "a.json").write_text('{"id":"a","description":"one"}')
    docs = list(iter_item_documents(tmp_path))
    assert [d["id"] for d in docs] == ["a", "b"]


def test_iter_items_from_jsonl(tmp_path):
    lines = '{"id":"a","description":"one"}\n\n{"id":"b","description":"two"}\n'
    path = tmp_path / "items.jsonl"
    path.write_text(lines)
    assert [d["id"] for d in iter_item_documents(path)] == ["a", "b"]


def test_profiles_jsonl_round_trip():
    record = parse_item({"id": "p", "description": "quiet quiet harbor"})
    out = profiles_to_jsonl([build_profile(record)])
    doc = json.loads(out.splitlines()[0])
    assert doc["schema"] == "profile/1"
    assert doc["id"] == "p"
    assert doc["frequencies"]["quiet"] == pytest.approx(2 / 3)
