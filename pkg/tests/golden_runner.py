"""Run the golden CLI transcripts in-process.

A ``.cmd`` file holds one ``gross ...`` invocation per line (``#`` lines are
comments).  The matching ``.out`` file is the concatenated transcript: each
command's stdout, followed by ``[exit N]`` and its stderr when it fails.
"""

from __future__ import annotations

import io
import os
import shlex
from pathlib import Path

from gross.cli import run

GOLDEN_DIR = Path(__file__).parent / "golden"


def golden_cases() -> list[Path]:
    return sorted(GOLDEN_DIR.glob("*.cmd"))


def commands(path: Path) -> list[list[str]]:
    out = []
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        argv = shlex.split(line)
        if argv[0] == "gross":
            argv = argv[1:]
        out.append(argv)
    return out


def transcript(path: Path) -> str:
    """Run every command of one case from inside the golden directory."""
    chunks = []
    cwd = os.getcwd()
    os.chdir(GOLDEN_DIR)
    try:
        for argv in commands(path):
            out, err = io.StringIO(), io.StringIO()
            code = run(argv, out, err)
            chunks.append(out.getvalue())
            if code:
                chunks.append(f"[exit {code}]\n{err.getvalue()}")
    finally:
        os.chdir(cwd)
    return "".join(chunks)


def run_all() -> dict[str, str]:
    return {p.stem: transcript(p) for p in golden_cases()}
