"""Service configuration, loadable from a JSON file and CLI flags.

The config path itself can be overridden through the AFFEKT_CONFIG
environment variable; individual CLI flags override file values. Every
field is validated up front and rejections name the offending field.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields
from pathlib import Path

from .lexicon import DEFAULT_TOP_K
from .pipeline import STOPWORDS

__all__ = ["ServiceConfig", "ConfigError", "CONFIG_ENV_VAR", "load_config"]

CONFIG_ENV_VAR = "AFFEKT_CONFIG"


class ConfigError(ValueError):
    def __init__(self, field_name: str, message: str):
        super().__init__(f"invalid configuration field {field_name!r}: {message}")
        self.field_name = field_name


@dataclass
class ServiceConfig:
    lexicon: str | None = None
    top_k: int = DEFAULT_TOP_K
    threshold: float = 0.30
    story_min_items: int = 1
    story_max_items: int = 3
    port: int = 8000
    language: str = "en"
    translation_map: str | None = None
    include_basics: bool = False

    def __post_init__(self):
        if self.top_k < 1:
            raise ConfigError("top_k", f"must be >= 1, got {self.top_k}")
        if not 0.0 < self.threshold <= 1.0:
            raise ConfigError("threshold", f"must be in (0, 1], got {self.threshold}")
        if self.story_min_items < 1:
            raise ConfigError("story_min_items", f"must be >= 1, got {self.story_min_items}")
        if self.story_max_items < self.story_min_items:
            raise ConfigError(
                "story_max_items",
                f"must be >= story_min_items, got {self.story_max_items}",
            )
        if not 0 < self.port < 65536:
            raise ConfigError("port", f"must be in 1..65535, got {self.port}")
        if self.language not in STOPWORDS:
            raise ConfigError(
                "language", f"must be one of {sorted(STOPWORDS)}, got {self.language!r}"
            )

    @property
    def story_bounds(self) -> tuple[int, int]:
        return (self.story_min_items, self.story_max_items)

    def stopwords(self):
        return STOPWORDS[self.language]

    def load_translation(self) -> dict[str, str] | None:
        if not self.translation_map:
            return None
        with open(self.translation_map, encoding="utf-8") as handle:
            mapping = json.load(handle)
        if not isinstance(mapping, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in mapping.items()
        ):
            raise ConfigError("translation_map", "must be a JSON object of string pairs")
        return mapping


def load_config(path: str | None = None, **overrides) -> ServiceConfig:
    """Build a config from an optional JSON file plus explicit overrides.

    Resolution order: defaults < file < overrides; the file path falls back
    to the AFFEKT_CONFIG environment variable.
    """
    path = path or os.environ.get(CONFIG_ENV_VAR)
    values: dict = {}
    if path:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
        if not isinstance(raw, dict):
            raise ConfigError("config", "configuration file must hold a JSON object")
        known = {f.name for f in fields(ServiceConfig)}
        unknown = set(raw) - known
        if unknown:
            raise ConfigError(sorted(unknown)[0], "unknown configuration field")
        values.update(raw)
    values.update({k: v for k, v in overrides.items() if v is not None})
    return ServiceConfig(**values)
