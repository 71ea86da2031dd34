import pathlib

import pytest

from cooccur import FormalContext

REPO_ROOT = pathlib.Path(__file__).resolve().parent.parent
DATA_DIR = REPO_ROOT / "data"


@pytest.fixture
def toy_context() -> FormalContext:
    """3x3 table used throughout: s2 has everything, s1/s3 overlap on f2."""
    return FormalContext(
        ["s1", "s2", "s3"],
        ["f1", "f2", "f3"],
        [(1, 1, 0), (1, 1, 1), (0, 1, 1)],
    )


@pytest.fixture
def signature_path() -> pathlib.Path:
    return DATA_DIR / "signature_510x6.csv"


@pytest.fixture
def cells_path() -> pathlib.Path:
    return DATA_DIR / "cells_600x8.csv"


@pytest.fixture
def toy_path() -> pathlib.Path:
    return DATA_DIR / "toy_3x3.csv"
