"""Application configuration: search limits, parallelism, fixture location and log level."""

import os
from typing import Optional

from dotenv import load_dotenv

load_dotenv()


def _readInt(name: str, default: int, minimum: int = 1) -> int:
    """Read a positive integer from the environment, falling back to *default*."""
    raw: Optional[str] = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw.strip().replace("_", ""))
    except ValueError:
        raise RuntimeError(f"{name} must be an integer, got {raw!r}")
    if value < minimum:
        raise RuntimeError(f"{name} must be at least {minimum}, got {value}")
    return value


def getCentralizerCap() -> int:
    """Returns the largest n + k for which distance searches enumerate the whole centralizer.

    Above the cap, searches fall back to weight-ordered enumeration. Defaults to 26;
    override with ADCODES_CENTRALIZER_CAP.
    """
    return _readInt("ADCODES_CENTRALIZER_CAP", 26)


def getSearchThreads() -> int:
    """Returns the number of worker threads used by centralizer enumeration.

    Defaults to min(4, cpu count). Override with ADCODES_THREADS.
    """
    return _readInt("ADCODES_THREADS", min(4, os.cpu_count() or 1))


def getShellSearchLimit() -> int:
    """Returns the number of candidates a budget-less weight-ordered search may visit.

    Defaults to 50 million. Override with ADCODES_SHELL_LIMIT.
    """
    return _readInt("ADCODES_SHELL_LIMIT", 50_000_000)


def getErrorSetLimit() -> int:
    """Returns the largest error set that may be materialized for direct certification.

    Defaults to 5 million elements. Override with ADCODES_ERRORSET_LIMIT.
    """
    return _readInt("ADCODES_ERRORSET_LIMIT", 5_000_000)


def getFixturesDir() -> str:
    """Returns the directory holding built-in code files and table fixtures.

    Defaults to 'fixtures' next to this module. Override with ADCODES_FIXTURES_DIR.
    """
    path: Optional[str] = os.getenv("ADCODES_FIXTURES_DIR")
    return path or os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")


def getLogLevel() -> str:
    """Returns the log level name for the CLI. Defaults to WARNING; override with ADCODES_LOG_LEVEL."""
    level = (os.getenv("ADCODES_LOG_LEVEL") or "WARNING").strip().upper()
    if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
        raise RuntimeError(f"ADCODES_LOG_LEVEL must be a logging level name, got {level!r}")
    return level
