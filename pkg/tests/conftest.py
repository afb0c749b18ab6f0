from __future__ import annotations

import sys
from pathlib import Path
from typing import Callable

import pytest
from loguru import logger

from hitsvocab.corpus.io import TokenizedCorpus, write_corpus
from helpers import zipf_corpus


@pytest.fixture(autouse=True)
def _clean_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    import os

    for key in list(os.environ):
        if key.upper().startswith("HITSVOCAB_"):
            monkeypatch.delenv(key)


@pytest.fixture(autouse=True)
def _reset_logger():
    yield
    logger.remove()
    logger.add(sys.stderr, level="WARNING")


@pytest.fixture
def write_text(tmp_path: Path) -> Callable[[str, str], Path]:
    def _write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write


@pytest.fixture
def toy_corpus() -> TokenizedCorpus:
    return zipf_corpus(1000, 300, seed=7)


@pytest.fixture
def toy_corpus_path(tmp_path: Path, toy_corpus: TokenizedCorpus) -> Path:
    path = tmp_path / "toy.txt"
    write_corpus(toy_corpus, path)
    return path
