"""Rewrite tests/golden/ from configs/*.toml (human and machine formats)."""

from __future__ import annotations

import contextlib
import io
import sys
from pathlib import Path

from ordext.cli import main

ROOT = Path(__file__).resolve().parent.parent


def render(config: Path, fmt: str, jobs: int = 1) -> tuple[int, str]:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(["--config", str(config), "--format", fmt, "--jobs", str(jobs)])
    return code, buf.getvalue()


def golden_name(config: Path, fmt: str) -> str:
    return f"{config.stem}.{'yaml' if fmt == 'human' else 'json'}"


if __name__ == "__main__":
    out = ROOT / "tests" / "golden"
    out.mkdir(parents=True, exist_ok=True)
    for config in sorted((ROOT / "configs").glob("*.toml")):
        for fmt in ("human", "machine"):
            code, text = render(config, fmt)
            if code:
                sys.exit(f"{config.name}: exit {code}")
            (out / golden_name(config, fmt)).write_text(text, encoding="utf-8")
            print(f"wrote {golden_name(config, fmt)}")
