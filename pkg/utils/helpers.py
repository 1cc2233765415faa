"""
Output helpers for knotsig
"""

import sys
from pathlib import Path
from typing import Optional


def ensure_parent(filepath: str) -> Path:
    """Ensure the parent directory of a file exists"""
    p = Path(filepath)
    p.parent.mkdir(parents=True, exist_ok=True)
    return p


def write_text(text: str, filepath: Optional[str]) -> None:
    """Write text to a file, or to stdout when filepath is None or '-'"""
    if filepath is None or filepath == "-":
        sys.stdout.write(text)
        return
    path = ensure_parent(filepath)
    with open(path, "w", newline="\n") as f:
        f.write(text)
