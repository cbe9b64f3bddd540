"""Item ingestion: JSON records to lemmatized frequency profiles.

An item's description and user annotations are tokenized, stopword- and
length-filtered, lemmatized and counted; the profile stores each lemma's
share of the total token count. The built-in lemmatizer is a small,
documented table of suffix rules (plural and verbal endings) applied once
per token, first match wins. It is a deterministic floor, not a full
morphological analyzer; anything smarter can be injected through the same
one-token-in, one-lemma-out contract.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable

__all__ = [
    "ItemRecord",
    "ItemProfile",
    "SchemaError",
    "EmptyProfileError",
    "STOPWORDS",
    "lemmatize_token",
    "normalize_and_lemmatize",
    "term_frequencies",
    "parse_item",
    "build_profile",
    "iter_item_documents",
    "profiles_to_jsonl",
]

FREQUENCY_SUM_TOLERANCE = 1e-9

MIN_TOKEN_LENGTH = 2

# Letter runs only: digits, punctuation and underscores all separate tokens.
_LETTER_RUN = re.compile(r"[^\W\d_]+", re.UNICODE)


class SchemaError(ValueError):
    """An item document is missing a required field or malformed."""

    def __init__(self, message: str, field_name: str | None = None):
        super().__init__(message)
        self.field_name = field_name


class EmptyProfileError(ValueError):
    """No lexical content survived normalization."""

    def __init__(self, item_id: str):
        super().__init__(f"item {item_id!r} has no lexical content after normalization")
        self.item_id = item_id


@dataclass(frozen=True)
class ItemRecord:
    id: str
    title: str = ""
    author: str | None = None
    description: str = ""
    annotations: tuple[str, ...] = ()


@dataclass(frozen=True, eq=True)
class ItemProfile:
    id: str
    frequencies: dict[str, float]

    @property
    def lemma_set(self) -> frozenset[str]:
        return frozenset(self.frequencies)


# Small built-in stopword lists; catalogs select by language tag.
_ENGLISH_STOPWORDS = frozenset(
    """a about above after again all am an and any are as at be because been
    before being below between both but by could did do does doing down
    during each few for from further had has have having he her here hers
    him his how i if in into is it its itself just me more most my myself
    no nor not of off on once only or other our ours out over own same she
    so some such than that the their theirs them then there these they
    this those through to too under until up very was we were what when
    where which while who whom why with you your yours""".split()
)

_ITALIAN_STOPWORDS = frozenset(
    """a ad agli ai al alla alle allo anche avere aveva che chi ci coi come
    con contro cui da dai dal dalla dalle dallo degli dei del della delle
    dello di dove e ed egli era erano essere fa fra gli ha hanno il in io
    la le lei li lo loro lui ma mi ne negli nei nel nella nelle nello noi
    non nostro o per piu quale quando quella quelle quelli quello questa
    queste questi questo se sei si sia sono su sua sue sui sul sulla sulle
    suo tra tu tua tue tuo un una uno voi""".split()
)

STOPWORDS: dict[str, frozenset[str]] = {
    "en": _ENGLISH_STOPWORDS,
    "it": _ITALIAN_STOPWORDS,
}

# Suffix rule table: (suffix, replacement, minimum token length).
# Applied once, first match wins.
_SUFFIX_RULES: tuple[tuple[str, str, int], ...] = (
    ("sses", "ss", 5),
    ("ies", "y", 5),
    ("shes", "sh", 5),
    ("ches", "ch", 5),
    ("xes", "x", 4),
    ("zes", "z", 4),
    ("ing", "", 6),
    ("ed", "", 5),
    ("s", "", 3),
)

_KEEP_FINAL_S = ("ss", "us", "is")


def lemmatize_token(token: str) -> str:
    """Built-in rule lemmatizer; see the module docstring for scope."""
    for suffix, replacement, min_length in _SUFFIX_RULES:
        if len(token) < min_length or not token.endswith(suffix):
            continue
        if suffix == "s" and token.endswith(_KEEP_FINAL_S):
            continue
        stem = token[: -len(suffix)] + replacement
        # collapse a doubled final consonant left by -ing/-ed stripping
        if suffix in ("ing", "ed") and len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] not in "aeiou":
            stem = stem[:-1]
        return stem
    return token


Lemmatizer = Callable[[str], str]


def normalize_and_lemmatize(
    text: str,
    stopwords: frozenset[str] | set[str] = _ENGLISH_STOPWORDS,
    lemmatizer: Lemmatizer = lemmatize_token,
) -> list[str]:
    """Lowercase, split on non-word boundaries, drop digit-bearing tokens,
    stopwords and tokens shorter than two characters, then lemmatize."""
    lemmas = []
    for token in _LETTER_RUN.findall(text.lower()):
        if len(token) < MIN_TOKEN_LENGTH or token in stopwords:
            continue
        lemma = lemmatizer(token)
        if lemma:
            lemmas.append(lemma)
    return lemmas


def term_frequencies(lemmas: Iterable[str]) -> dict[str, float]:
    """Each distinct lemma's share of the token count."""
    lemmas = list(lemmas)
    if not lemmas:
        raise ValueError("cannot compute frequencies of an empty lemma sequence")
    counts: dict[str, int] = {}
    for lemma in lemmas:
        counts[lemma] = counts.get(lemma, 0) + 1
    total = len(lemmas)
    return {lemma: count / total for lemma, count in sorted(counts.items())}


def parse_item(document: str | dict) -> ItemRecord:
    """Parse an item/1 JSON document (text or already-decoded object)."""
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"malformed item JSON: {exc}") from None
    if not isinstance(document, dict):
        raise SchemaError("item document must be a JSON object")
    for required in ("id", "description"):
        value = document.get(required)
        if not isinstance(value, str) or not value.strip():
            raise SchemaError(f"item document lacks required field {required!r}", required)
    annotations = document.get("annotations", [])
    if not isinstance(annotations, list) or not all(isinstance(a, str) for a in annotations):
        raise SchemaError("annotations must be a list of strings", "annotations")
    return ItemRecord(
        id=document["id"].strip(),
        title=document.get("title", "") or "",
        author=document.get("author"),
        description=document["description"],
        annotations=tuple(annotations),
    )


def build_profile(
    record: ItemRecord,
    stopwords: frozenset[str] | set[str] = _ENGLISH_STOPWORDS,
    lemmatizer: Lemmatizer = lemmatize_token,
) -> ItemProfile:
    """Profile the description plus all annotations of one item."""
    text = " ".join((record.description, *record.annotations))
    lemmas = normalize_and_lemmatize(text, stopwords, lemmatizer)
    if not lemmas:
        raise EmptyProfileError(record.id)
    return ItemProfile(id=record.id, frequencies=term_frequencies(lemmas))


def iter_item_documents(path: str | Path) -> Iterable[dict]:
    """Yield item documents from a directory of *.json or a JSON-lines file."""
    path = Path(path)
    if path.is_dir():
        for child in sorted(path.glob("*.json")):
            yield json.loads(child.read_text(encoding="utf-8"))
    else:
        with open(path, encoding="utf-8") as handle:
            for line in handle:
                if line.strip():
                    yield json.loads(line)


def profiles_to_jsonl(profiles: Iterable[ItemProfile]) -> str:
    """profile/1 export: one JSON document per line."""
    lines = [
        json.dumps(
            {"schema": "profile/1", "id": p.id, "frequencies": p.frequencies},
            sort_keys=True,
        )
        for p in profiles
    ]
    return "\n".join(lines) + ("\n" if lines else "")
