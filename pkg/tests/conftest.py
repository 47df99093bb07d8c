from __future__ import annotations

import shutil
from pathlib import Path

import pytest

from reshoreval import DatasetBundle, load_dataset_dir

REPO_ROOT = Path(__file__).resolve().parent.parent
ABC_DIR = REPO_ROOT / "data" / "abc"
MALFORMED_DIR = Path(__file__).resolve().parent / "data" / "malformed"


@pytest.fixture(scope="session")
def abc_dir() -> Path:
    return ABC_DIR


@pytest.fixture(scope="session")
def abc_bundle() -> DatasetBundle:
    return load_dataset_dir(ABC_DIR)


@pytest.fixture
def overlay_dataset(tmp_path):
    """Copy the good dataset and replace one file with a malformed variant.

    Corpus files are named ``<nn>_<defect>__<target-filename>``; each call
    builds a fresh directory.
    """
    counter = iter(range(10_000))

    def _overlay(malformed_file: Path) -> Path:
        target_name = malformed_file.name.split("__", 1)[1]
        dest = tmp_path / f"dataset-{next(counter)}"
        shutil.copytree(ABC_DIR, dest)
        shutil.copyfile(malformed_file, dest / target_name)
        return dest

    return _overlay
