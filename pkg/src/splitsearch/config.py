"""Runtime configuration shared by the CLI and the HTTP service."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .weighting import MODES


@dataclass
class EngineConfig:
    index_path: str = "index.json"
    mode: str = "standard"
    max_edit: int = 1
    synonyms_path: Optional[str] = None
    default_k: int = 10

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"unknown weighting mode: {self.mode!r}")
        if self.max_edit not in (1, 2):
            raise ValueError("max_edit must be 1 or 2")
        if self.default_k < 1:
            raise ValueError("default_k must be >= 1")
