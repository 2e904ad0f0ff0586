"""Embedded data tables (UTF-8, tab separated, ``#`` comments).

Set ``LS_DATA_DIR`` to a directory holding files of the same names to
override any table without reinstalling.
"""

from __future__ import annotations

import os
from importlib import resources
from pathlib import Path


def read_text(name: str) -> str:
    override = os.environ.get("LS_DATA_DIR")
    if override:
        path = Path(override) / name
        if path.is_file():
            return path.read_text(encoding="utf-8")
    return resources.files(__name__).joinpath(name).read_text(encoding="utf-8")


def read_rows(name: str) -> list[list[str]]:
    """Non-comment, non-blank lines split on tabs."""
    rows = []
    for line in read_text(name).splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        rows.append([c.strip() for c in line.split("\t")])
    return rows
