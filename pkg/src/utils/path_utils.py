"""
Path handling utilities for graph inputs and report outputs.
Bundled instances can be named without a directory ("fig2" or "fig2.json").
"""

import json
from pathlib import Path
from typing import Any, Optional

from src.logger_config import mclosed_logger
from src.utils import settings


def ensure_output_directory(output_dir: str) -> Path:
    """Create the report directory (and parents) if missing; OSError propagates after logging."""
    try:
        dir_path = Path(output_dir)
        dir_path.mkdir(parents=True, exist_ok=True)
        mclosed_logger.debug(f"📁 Output directory ready: {dir_path}")
        return dir_path

    except OSError as e:
        mclosed_logger.error(f"Failed to create output directory {output_dir}: {e}")
        raise


def resolve_input_path(name: str, base_dir: Optional[Path] = None) -> Path:
    """
    Resolve a graph input path.

    Existing paths are returned as given. Otherwise the name is looked up in
    the bundled data directory, with ".json" appended when it has no suffix.
    """
    path = Path(name)
    if path.exists() or path.is_absolute():
        return path

    base = base_dir if base_dir is not None else settings.data_dir()
    candidate = base / name
    if not candidate.suffix:
        candidate = candidate.with_suffix(".json")
    if candidate.exists():
        mclosed_logger.debug(f"Resolved bundled instance: {name} -> {candidate}")
        return candidate
    return path


def write_report(report: Any, output_path: str) -> Path:
    """Write a JSON-serializable report, creating the parent directory."""
    path = Path(output_path)
    ensure_output_directory(str(path.parent))
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(report, handle, indent=2, ensure_ascii=False)
    mclosed_logger.info(f"💾 Report written: {path}")
    return path
