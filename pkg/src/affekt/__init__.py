"""Affective sensemaking: compound-emotion prototypes over the Plutchik
wheel, lexicon-driven item/story classification and diversity-seeking
story recommendations."""

from .classify import (
    EmotionAssignment,
    Recommendation,
    Story,
    StoryEmotionProfile,
    classify_item,
    classify_story,
    export_assignments,
    recommend,
)
from .lexicon import BasicPrototype, build_basic_prototypes, intensity_to_degree, parse_lexicon
from .pipeline import ItemProfile, ItemRecord, build_profile, parse_item
from .store import CatalogStore
from .tcl import (
    CombinedPrototype,
    KnowledgeBase,
    Literal,
    Scenario,
    TypicalityInclusion,
    classify_scenario,
    combine,
    enumerate_scenarios,
    generate_compound_prototypes,
    scenario_probability,
)
from .wheel import Relation, WheelCatalog, build_wheel

__version__ = "0.1.0"

__all__ = [
    "BasicPrototype",
    "CatalogStore",
    "CombinedPrototype",
    "EmotionAssignment",
    "ItemProfile",
    "ItemRecord",
    "KnowledgeBase",
    "Literal",
    "Recommendation",
    "Relation",
    "Scenario",
    "Story",
    "StoryEmotionProfile",
    "TypicalityInclusion",
    "WheelCatalog",
    "build_basic_prototypes",
    "build_profile",
    "build_wheel",
    "classify_item",
    "classify_scenario",
    "classify_story",
    "combine",
    "enumerate_scenarios",
    "export_assignments",
    "generate_compound_prototypes",
    "intensity_to_degree",
    "parse_item",
    "parse_lexicon",
    "recommend",
    "scenario_probability",
]
