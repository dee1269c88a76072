from __future__ import annotations

import os
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional

from .characters import DEFAULT_MAX_N
from .errors import InputError
from .quotient import DEFAULT_EXHAUSTIVE_CAP, DEFAULT_MATRIX_CAP, DEFAULT_PERMUTATION_CAP

CACHE_ENV = "HILBSYM_CACHE_DIR"


def default_cache_dir() -> Path:
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "hilbsym"


@dataclass
class RunConfig:
    cache_dir: Optional[Path] = None
    max_n: int = DEFAULT_MAX_N
    permutation_cap: int = DEFAULT_PERMUTATION_CAP
    matrix_cap: int = DEFAULT_MATRIX_CAP
    exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP
    output: str = "text"
    verbosity: int = 0
    seed: int = 0
    jobs: int = 1
    use_cache: bool = field(default=True)

    def __post_init__(self):
        for name in ("max_n", "permutation_cap", "matrix_cap", "exhaustive_cap", "jobs"):
            if getattr(self, name) <= 0:
                raise InputError(f"{name} must be positive")
        if self.output not in ("text", "json", "csv"):
            raise InputError(f"unknown output format {self.output!r}")

    @classmethod
    def resolve_cache_dir(cls, flag: Optional[str]) -> Path:
        """Flag beats environment beats the per-user default."""
        if flag:
            return Path(flag)
        env = os.environ.get(CACHE_ENV)
        return Path(env) if env else default_cache_dir()

    def to_json(self) -> dict:
        data = asdict(self)
        data["cache_dir"] = str(self.cache_dir) if self.cache_dir is not None else None
        return data
