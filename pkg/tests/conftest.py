from __future__ import annotations

from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parents[1]
FIXTURES_DIR = REPO_ROOT / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    if not FIXTURES_DIR.is_dir():
        raise FileNotFoundError(
            f"committed fixtures missing at {FIXTURES_DIR}; run the generator package"
        )
    return FIXTURES_DIR


@pytest.fixture(scope="session")
def h2_dir(fixtures_dir: Path) -> Path:
    return fixtures_dir / "h2"


@pytest.fixture(scope="session")
def lih_dir(fixtures_dir: Path) -> Path:
    return fixtures_dir / "lih"


@pytest.fixture(scope="session")
def h2_equilibrium_path(h2_dir: Path) -> Path:
    path = h2_dir / "h2_sto3g_r0.74.txt"
    if not path.is_file():
        raise FileNotFoundError(f"missing {path}")
    return path
