import os
from dataclasses import dataclass, field
from typing import Optional

from dotenv import load_dotenv
from typing_extensions import Literal

from utils.errors import ConfigError

# Load environment variables
load_dotenv()

GeneratorSet = Literal["parabolic", "elliptic"]
EnumerationMode = Literal["brute", "seeded"]

DEFAULT_CACHE_DIR = ".origami_cache"


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")


def env_cache_dir() -> str:
    return os.environ.get("ORIGAMI_CACHE_DIR", DEFAULT_CACHE_DIR)


def env_brute_cap() -> int:
    return _env_int("ORIGAMI_BRUTE_CAP", 10)


def env_workers() -> int:
    return _env_int("ORIGAMI_WORKERS", 1)


def env_max_word_len() -> int:
    return _env_int("ORIGAMI_MAX_WORD_LEN", 4)


def env_log_level() -> str:
    return os.environ.get("ORIGAMI_LOG_LEVEL", "INFO").upper()


def progress_enabled() -> bool:
    return os.environ.get("ORIGAMI_PROGRESS", "1").strip() not in ("0", "false", "no")


@dataclass
class RunConfig:
    """Settings for one CLI or explorer run.

    Defaults come from the environment (and a `.env` file when present);
    explicit flags override them. The command fields stay unset when the
    explorer builds a config.
    """

    cache_dir: str = field(default_factory=env_cache_dir)
    brute_cap: int = field(default_factory=env_brute_cap)
    workers: int = field(default_factory=env_workers)
    max_word_len: int = field(default_factory=env_max_word_len)
    generators: GeneratorSet = "parabolic"
    mode: EnumerationMode = "brute"
    slow: bool = False
    progress: bool = field(default_factory=progress_enabled)
    command: Optional[str] = None
    stratum: str = "H2"
    n: Optional[int] = None
    d: Optional[int] = None
    seed: Optional[str] = None
    orbit_index: int = 0
    max_n: Optional[int] = None
    out: Optional[str] = None
    dot_out: Optional[str] = None

    def __post_init__(self):
        if self.max_word_len < 1:
            raise ConfigError("max word length must be at least 1")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1")
        if self.brute_cap < 1:
            raise ConfigError("brute cap must be at least 1")
        if self.generators not in ("parabolic", "elliptic"):
            raise ConfigError(f"unknown generator set {self.generators!r}")
        if self.mode not in ("brute", "seeded"):
            raise ConfigError(f"unknown enumeration mode {self.mode!r}")
        for name in ("n", "d", "max_n"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ConfigError(f"{name} must be at least 1, got {value}")
        if self.orbit_index < 0:
            raise ConfigError("orbit index must be non-negative")


def build_config(
    cache_dir: Optional[str] = None,
    brute_cap: Optional[int] = None,
    workers: Optional[int] = None,
    max_word_len: Optional[int] = None,
    **kwargs,
) -> RunConfig:
    """Layer explicitly given values over the environment defaults."""
    overrides = {
        "cache_dir": cache_dir,
        "brute_cap": brute_cap,
        "workers": workers,
        "max_word_len": max_word_len,
    }
    overrides.update(kwargs)
    return RunConfig(**{k: v for k, v in overrides.items() if v is not None})
