# utils/file_utils.py
from pathlib import Path
from typing import Optional
from slugify import slugify
import logging

logger = logging.getLogger(__name__)

EXTENSIONS = {"structured": ".json", "human": ".txt"}


def report_path(
    reports_dir: str,
    scenario: str,
    suite: str,
    seed: int,
    fmt: str = "structured",
) -> Path:
    """
    reports/{scenario-slug}/{suite}-{seed}.{json|txt}
    Same scenario, suite and seed always map to the same file.
    """
    if fmt not in EXTENSIONS:
        raise ValueError(f"unknown report format {fmt!r}")
    target_dir = Path(reports_dir) / slugify(scenario)
    target_dir.mkdir(parents=True, exist_ok=True)
    return target_dir / f"{slugify(suite)}-{seed}{EXTENSIONS[fmt]}"


def read_input_file(path: str, kind: str) -> str:
    """Text of a cochain or tuple file; a missing file is a ValueError for the CLI."""
    source = Path(path)
    if not source.is_file():
        raise ValueError(f"{kind} file not found: {source}")
    return source.read_text(encoding="utf-8")


def scenario_files(scenarios_dir: Optional[str]) -> list:
    """Scenario files in the configured directory, sorted by name."""
    if not scenarios_dir or not Path(scenarios_dir).is_dir():
        return []
    files = sorted(Path(scenarios_dir).glob("*.toml"))
    logger.debug(f"{len(files)} scenario files in {scenarios_dir}")
    return files
