"""
Runtime settings for barlens, read from the environment (and a local .env).

Env:
  - BARLENS_COLOR: auto | never | always (default auto); diagrams only
  - BARLENS_JOBS: default worker count for `verify` (default 1)
  - BARLENS_HOOK_MAX_N: largest partition size for the hook-level
    decomposition check (default 16)
  - BARLENS_PARTITION_MAX_N: largest partition size for the general
    partition checks (default 20)
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import TextIO

from dotenv import load_dotenv

load_dotenv()

COLOR_MODES = ("auto", "never", "always")


def _env_int(name: str, default: int) -> int:
    try:
        return int(os.getenv(name, str(default)).strip())
    except Exception:
        return default


@dataclass(frozen=True)
class Settings:
    color: str
    jobs: int
    hook_max_n: int
    partition_max_n: int


def get_settings() -> Settings:
    color = (os.getenv("BARLENS_COLOR") or "auto").strip().lower()
    return Settings(
        color=color if color in COLOR_MODES else "auto",
        jobs=max(1, _env_int("BARLENS_JOBS", 1)),
        hook_max_n=max(0, _env_int("BARLENS_HOOK_MAX_N", 16)),
        partition_max_n=max(0, _env_int("BARLENS_PARTITION_MAX_N", 20)),
    )


def color_enabled(stream: TextIO, settings: Settings | None = None) -> bool:
    mode = (settings or get_settings()).color
    if mode == "always":
        return True
    if mode == "never":
        return False
    return bool(getattr(stream, "isatty", lambda: False)())
