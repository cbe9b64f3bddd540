"""Regenerate the synthetic fixture corpus (lexicon, items, stories).

Run from the repository root: python3 tests/fixtures/make_fixtures.py
The outputs are committed; this script only exists to document how they
were produced and to rebuild them deterministically after edits.

Design constraints baked in here:
- every lexicon term is a fixed point of the built-in lemmatizer;
- the ten strongest terms of each emotion are globally unique, so every
  dyad prototype has 19 distinct typical terms (top-10 head + top-10
  modifier minus the dropped weakest head term);
- per-emotion intensity ladders are strictly descending and disjoint
  across emotions, keeping every scenario block a singleton;
- each item description contains exactly three strong terms from each
  component of one target dyad: 6 of 19 terms = 0.3158 >= 30%, while any
  other dyad sees at most 3 of 19 = 0.158.
"""

import json
from pathlib import Path

HERE = Path(__file__).parent

TERMS = {
    "joy": [
        "bliss", "euphoria", "jubilant", "cheerful", "radiant",
        "merry", "gleeful", "sunshine", "laughter", "festive",
        "paradise", "vibrant", "playful", "smile", "carefree",
        "uplift", "joyful", "lively", "bright", "warm",
        "happy", "fun", "celebration", "harmony", "grin",
    ],
    "trust": [
        "faithful", "loyal", "sincere", "honest", "reliable",
        "devout", "trustworthy", "steadfast", "dependable", "truthful",
        "integrity", "fidelity", "allegiance", "honor", "candor",
        "confidant", "assurance", "credence", "earnest", "solid",
        "safe", "secure", "bond", "pledge", "vow",
    ],
    "fear": [
        "terror", "dread", "panic", "horror", "fright",
        "menace", "peril", "phobia", "alarm", "nightmare",
        "ominous", "sinister", "afraid", "grim", "eerie",
        "creepy", "shiver", "tremble", "lurk", "haunt",
        "doom", "macabre", "spooky", "anxious", "threat",
    ],
    "surprise": [
        "astonish", "amaze", "startle", "sudden", "marvel",
        "wonder", "jolt", "uncanny", "abrupt", "bewilder",
        "dazzle", "flabbergast", "gasp", "revelation", "twist",
        "miracle", "spectacle", "magic", "mystery", "quirk",
        "odd", "strange", "shock", "stun", "whirlwind",
    ],
    "sadness": [
        "grief", "sorrow", "mourn", "gloom", "misery",
        "anguish", "weep", "melancholy", "heartbreak", "lament",
        "forlorn", "dismal", "tear", "woe", "somber",
        "regret", "funeral", "lonely", "bleak", "hollow",
        "ache", "grave", "fade", "wistful", "solemn",
    ],
    "disgust": [
        "revulsion", "loathe", "repulsive", "nausea", "vile",
        "foul", "filth", "stench", "rot", "grotesque",
        "repugnant", "abhor", "squalor", "slime", "putrid",
        "rancid", "scorn", "disdain", "sleaze", "grime",
        "decay", "mold", "wretch", "sewage", "muck",
    ],
    "anger": [
        "rage", "fury", "wrath", "hostile", "irate",
        "seethe", "fume", "livid", "vengeance", "grudge",
        "bitter", "snarl", "temper", "violent", "brutal",
        "ferocious", "spite", "scowl", "growl", "irk",
        "outburst", "venom", "cruel", "harsh", "fierce",
    ],
    "anticipation": [
        "await", "expect", "eager", "forecast", "foresee",
        "vigilant", "prospect", "horizon", "imminent", "watchful",
        "brink", "verge", "omen", "premonition", "readiness",
        "prepare", "plan", "alert", "tomorrow", "dawn",
        "threshold", "lookout", "hopeful", "suspense", "foretell",
    ],
}

# Strictly descending, disjoint intensity ladders (3 decimals).
OFFSETS = {
    "joy": 0.970, "trust": 0.961, "fear": 0.976, "surprise": 0.955,
    "sadness": 0.967, "disgust": 0.946, "anger": 0.973, "anticipation": 0.958,
}

ITEMS = [
    {
        "id": "gam-101",
        "title": "Due figure al tramonto",
        "author": "E. Bosio",
        "description": (
            "Two figures hold hands in warm light, a scene of bliss and euphoria; "
            "the cheerful pair look faithful, loyal and sincere under the arch."
        ),
        "annotations": [],
        "target": "love",
    },
    {
        "id": "gam-102",
        "title": "La promessa",
        "author": "A. Fontanesi",
        "description": (
            "A radiant bride and a merry, jubilant crowd; the painter shows an "
            "honest, reliable bond and a devout promise before the altar."
        ),
        "annotations": [],
        "target": "love",
    },
    {
        "id": "gam-103",
        "title": "Cimitero d'inverno",
        "author": "G. Pellizza",
        "description": (
            "Grief and sorrow over a winter field: mourners mourn among bare trees "
            "while revulsion rises at the vile mud; many loathe this place."
        ),
        "annotations": [],
        "target": "remorse",
    },
    {
        "id": "gam-104",
        "title": "Stanza abbandonata",
        "author": None,
        "description": (
            "Gloom fills the abandoned room; misery makes the visitor weep. "
            "A repulsive smell of nausea, the foul trace of spoiled food."
        ),
        "annotations": ["so much gloom"],
        "target": "remorse",
    },
    {
        "id": "gam-105",
        "title": "Il seminatore",
        "author": "J.-F. Millet (copia)",
        "description": (
            "A steadfast, dependable farmer with a sincere face: the villagers "
            "await the harvest, expect rain, and remain eager for spring."
        ),
        "annotations": [],
        "target": "hope",
    },
    {
        "id": "gam-106",
        "title": "Il faro",
        "author": "C. Carena",
        "description": (
            "A loyal keeper with honest hands and a faithful dog; he can forecast "
            "the storm and foresee the tide, vigilant over the strait."
        ),
        "annotations": [],
        "target": "hope",
    },
    {
        "id": "gam-107",
        "title": "La fonderia",
        "author": "Q. Baglione",
        "description": (
            "Gleeful workers in sunshine share laughter at the furnace door, yet "
            "rage, fury and wrath of molten iron roar behind them."
        ),
        "annotations": [],
        "target": "pride",
    },
    {
        "id": "gam-108",
        "title": "Il duello vinto",
        "author": None,
        "description": (
            "The winner stands in bliss, radiant and merry; his hostile rival, "
            "irate, can only seethe at the verdict of the field."
        ),
        "annotations": [],
        "target": "pride",
    },
    {
        "id": "owl-self-portrait",
        "title": "Autoritratto a forma di Gufo",
        "author": "C. Mollino",
        "description": (
            "A reliable likeness in a devout, trustworthy pose, yet the owl eyes "
            "astonish and amaze the visitor and startle the children."
        ),
        "annotations": ["those eyes amaze me"],
        "target": "curiosity",
    },
    {
        "id": "gam-110",
        "title": "Festa sul fiume",
        "author": "L. Delleani",
        "description": (
            "A cheerful regatta full of euphoria; jubilant rowers under a sudden "
            "rain that becomes a marvel and a wonder of summer light."
        ),
        "annotations": [],
        "target": "delight",
    },
    {
        "id": "gam-111",
        "title": "L'alba sui tetti",
        "author": "F. Casorati",
        "description": (
            "Merry swallows over roofs in bliss; a gleeful child at the window, "
            "people await the day and remain eager, a prospect of light."
        ),
        "annotations": [],
        "target": "optimism",
    },
    {
        "id": "gam-112",
        "title": "La vedetta",
        "author": None,
        "description": (
            "Terror on the rampart at night: dread of shadows, panic at a horn. "
            "The squad can foresee the assault, vigilant before the imminent dawn."
        ),
        "annotations": [],
        "target": "anxiety",
    },
]

STORIES = [
    {
        "id": "story-first-meeting",
        "title": "The first meeting",
        "creator": "visitor-ada",
        "items": [
            {"itemId": "gam-101", "emojis": ["love"], "tags": ["tender"],
             "comments": {"reminds": "", "think": "", "feel": "warm"}},
            {"itemId": "gam-105", "emojis": ["joy"], "tags": [],
             "comments": {"reminds": "spring mornings", "think": "", "feel": ""}},
        ],
    },
    {
        "id": "story-quiet-devotion",
        "title": "Quiet devotion",
        "creator": "visitor-bruno",
        "items": [
            {"itemId": "gam-102", "emojis": ["love", "delight"], "tags": [],
             "comments": {"reminds": "", "think": "", "feel": ""}},
        ],
    },
    {
        "id": "story-long-winter",
        "title": "The long winter",
        "creator": "visitor-carla",
        "items": [
            {"itemId": "gam-103", "emojis": ["sadness"], "tags": [],
             "comments": {"reminds": "", "think": "", "feel": ""}},
            {"itemId": "gam-104", "emojis": ["disgust"], "tags": ["cold"],
             "comments": {"reminds": "", "think": "", "feel": ""}},
        ],
    },
    {
        "id": "story-days-of-toil",
        "title": "Days of toil",
        "creator": "visitor-bruno",
        "items": [
            {"itemId": "gam-107", "emojis": ["joy"], "tags": ["work"],
             "comments": {"reminds": "", "think": "", "feel": ""}},
            {"itemId": "gam-108", "emojis": [], "tags": [],
             "comments": {"reminds": "", "think": "a fencing match", "feel": ""}},
        ],
    },
    {
        "id": "story-night-watch",
        "title": "The night watch",
        "creator": "visitor-carla",
        "items": [
            {"itemId": "owl-self-portrait", "emojis": ["curiosity"], "tags": [],
             "comments": {"reminds": "", "think": "", "feel": ""}},
            {"itemId": "gam-110", "emojis": ["delight"], "tags": [],
             "comments": {"reminds": "", "think": "", "feel": ""}},
            {"itemId": "gam-112", "emojis": ["fear"], "tags": ["night"],
             "comments": {"reminds": "", "think": "", "feel": ""}},
        ],
    },
    {
        "id": "story-new-horizons",
        "title": "New horizons",
        "creator": "visitor-ada",
        "items": [
            {"itemId": "gam-111", "emojis": ["joy"], "tags": ["morning"],
             "comments": {"reminds": "", "think": "", "feel": ""}},
            {"itemId": "gam-106", "emojis": [], "tags": ["sea"],
             "comments": {"reminds": "", "think": "", "feel": ""}},
        ],
    },
]


def write_lexicon():
    lines = []
    for emotion, terms in TERMS.items():
        assert len(terms) == 25 and len(set(terms)) == 25
        start = OFFSETS[emotion]
        for rank, term in enumerate(terms):
            if rank < 10:
                intensity = start - 0.021 * rank
            else:
                intensity = start - 0.5 - 0.013 * (rank - 10)
            lines.append(f"{term}\t{emotion}\t{intensity:.3f}")
    (HERE / "lexicon.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")
    top10 = [t for terms in TERMS.values() for t in terms[:10]]
    assert len(set(top10)) == 80, "top-10 terms must be globally unique"


def write_items():
    items_dir = HERE / "items"
    items_dir.mkdir(exist_ok=True)
    for item in ITEMS:
        doc = {k: v for k, v in item.items() if k != "target"}
        (items_dir / f"{item['id']}.json").write_text(
            json.dumps(doc, indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
        )


def write_stories():
    stories_dir = HERE / "stories"
    stories_dir.mkdir(exist_ok=True)
    for story in STORIES:
        (stories_dir / f"{story['id']}.json").write_text(
            json.dumps(story, indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
        )


if __name__ == "__main__":
    write_lexicon()
    write_items()
    write_stories()
    print("fixtures written to", HERE)
