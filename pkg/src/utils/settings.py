"""
Environment-backed defaults for search guards and run configuration.
Values come from the process environment (optionally a .env file loaded by the CLI).
"""

import os
from pathlib import Path


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"Environment variable {name} must be an integer, got {raw!r}")


def closure_max_n() -> int:
    """Largest graph accepted by the exhaustive labeling searches."""
    return _env_int("MCLOSED_CLOSURE_MAX_N", 9)


def primes_max_n() -> int:
    """Largest graph accepted by minimal prime enumeration (cost 2^n)."""
    return _env_int("MCLOSED_PRIMES_MAX_N", 20)


def induced_path_max_n() -> int:
    """Largest non-tree graph accepted by the longest induced path/cycle search."""
    return _env_int("MCLOSED_INDUCED_PATH_MAX_N", 12)


def oracle_max_n() -> int:
    """Largest graph handed to the Buchberger oracle."""
    return _env_int("MCLOSED_ORACLE_MAX_N", 5)


def oracle_step_guard() -> int:
    """Maximum number of S-pair reductions in one Buchberger run."""
    return _env_int("MCLOSED_ORACLE_STEP_GUARD", 20000)


def default_seed() -> int:
    return _env_int("MCLOSED_SEED", 42)


def default_workers() -> int:
    return _env_int("MCLOSED_WORKERS", 1)


def log_level() -> str:
    return os.getenv("MCLOSED_LOG_LEVEL", "INFO")


def data_dir() -> Path:
    """Directory holding the bundled graph instances."""
    configured = os.getenv("MCLOSED_DATA_DIR")
    if configured:
        return Path(configured)
    return Path(__file__).resolve().parent.parent.parent / "data"
