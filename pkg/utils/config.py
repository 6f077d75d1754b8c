import os
from dataclasses import dataclass

from dotenv import load_dotenv

from errors import UsageError

DEFAULT_SEED = 0
DEFAULT_THREADS = 1
DEFAULT_LOG_LEVEL = "WARNING"


@dataclass(frozen=True)
class Settings:
    seed: int
    threads: int
    log_level: str


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name}={raw!r} is not an integer") from None


def load_settings() -> Settings:
    """Read defaults from the environment (and a .env file, if present)."""
    load_dotenv()

    threads = _int_env("CAYLEY_THREADS", DEFAULT_THREADS)
    if threads < 1:
        raise UsageError(f"CAYLEY_THREADS must be at least 1, got {threads}")

    return Settings(
        seed=_int_env("CAYLEY_SEED", DEFAULT_SEED),
        threads=threads,
        log_level=os.getenv("CAYLEY_LOG_LEVEL", DEFAULT_LOG_LEVEL).upper(),
    )
