"""Fixture file rendering and the checksum manifest."""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from .qubitop import PauliDict, Word

GENERATOR_STAMP = "hamgen 0.1.0"


def word_tokens(word: Word) -> str:
    tokens = [f"{letter}{index}" for index, letter in enumerate(word) if letter != "I"]
    return " ".join(tokens) if tokens else "I"


def render_fixture(operator: PauliDict, n_qubits: int, metadata: dict[str, object]) -> str:
    lines = [f"# n_qubits {n_qubits}"]
    for key in sorted(metadata):
        lines.append(f"# {key} {metadata[key]}")
    for word in sorted(operator):
        lines.append(f"{operator[word].real!r} {word_tokens(word)}")
    return "\n".join(lines) + "\n"


def sha256_of(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def write_manifest(manifest_path: Path, entries: list[dict[str, object]]) -> None:
    payload = {
        "generator": GENERATOR_STAMP,
        "files": sorted(entries, key=lambda e: str(e["path"])),
    }
    manifest_path.parent.mkdir(parents=True, exist_ok=True)
    manifest_path.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n", encoding="utf-8")
