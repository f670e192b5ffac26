"""Run configuration, read from a YAML file given with ``--config``."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import yaml

from .presets import parse_character
from .walls import DEFAULT_ALPHA_SQ_MIN, DEFAULT_BOX_LIMIT

FORMATS = ("json", "csv", "text")


@dataclass
class Config:
    alpha_sq_min: Fraction = DEFAULT_ALPHA_SQ_MIN
    search_box_limit: int = DEFAULT_BOX_LIMIT
    output_format: str = "json"
    presets: dict = field(default_factory=dict)

    def __post_init__(self):
        self.alpha_sq_min = Fraction(str(self.alpha_sq_min))
        if self.alpha_sq_min <= 0:
            raise ValueError("alpha_sq_min must be positive")
        if int(self.search_box_limit) <= 0:
            raise ValueError("search_box_limit must be positive")
        self.search_box_limit = int(self.search_box_limit)
        if self.output_format not in FORMATS:
            raise ValueError(f"output_format must be one of {FORMATS}")

    @classmethod
    def load(cls, path) -> "Config":
        data = yaml.safe_load(Path(path).read_text()) or {}
        unknown = set(data) - {"alpha_sq_min", "search_box_limit", "output_format", "presets"}
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        presets = {name: parse_character(str(text))
                   for name, text in (data.pop("presets", None) or {}).items()}
        return cls(presets=presets, **data)
