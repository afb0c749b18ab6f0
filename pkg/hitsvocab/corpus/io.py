from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from itertools import chain
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from loguru import logger

from ..errors import CorpusFormatError, TaggedCorpusError
from ..utils import read_lines, write_lines

_WHITESPACE = re.compile(r"\s")

Sentence = tuple[str, ...]


@dataclass(frozen=True)
class TokenizedCorpus:
    """Sentences of whitespace-free tokens, in input order."""

    sentences: tuple[Sentence, ...] = ()

    @classmethod
    def from_sentences(cls, sentences: Iterable[Sequence[str]]) -> "TokenizedCorpus":
        frozen: list[Sentence] = []
        for number, sentence in enumerate(sentences):
            tokens = tuple(sentence)
            if not tokens:
                raise ValueError(f"sentence {number} is empty")
            for token in tokens:
                if not isinstance(token, str) or not token or _WHITESPACE.search(token):
                    raise ValueError(f"invalid token {token!r} in sentence {number}")
            frozen.append(tokens)
        return cls(tuple(frozen))

    def __len__(self) -> int:
        return len(self.sentences)

    def __iter__(self) -> Iterator[Sentence]:
        return iter(self.sentences)

    def iter_tokens(self) -> Iterator[str]:
        return chain.from_iterable(self.sentences)


@dataclass(frozen=True)
class CorpusStats:
    sentence_count: int
    token_count: int
    type_count: int
    type_frequencies: Mapping[str, int] = field(default_factory=dict)

    def frequency(self, word: str) -> int:
        return self.type_frequencies.get(word, 0)


def read_corpus(path: Path | str, max_sentence_length: Optional[int] = None) -> TokenizedCorpus:
    if max_sentence_length is not None and max_sentence_length < 1:
        raise ValueError("max_sentence_length must be a positive integer")
    sentences: list[Sentence] = []
    dropped = 0
    for _, line in read_lines(path, CorpusFormatError):
        tokens = tuple(line.split())
        if not tokens:
            continue
        if max_sentence_length is not None and len(tokens) > max_sentence_length:
            dropped += 1
            continue
        sentences.append(tokens)
    logger.debug(
        "Read {} sentences from {} ({} over-long sentences dropped)", len(sentences), path, dropped
    )
    return TokenizedCorpus(tuple(sentences))


def write_corpus(corpus: TokenizedCorpus, path: Path | str) -> None:
    write_lines(path, (" ".join(sentence) for sentence in corpus))


def corpus_stats(corpus: TokenizedCorpus) -> CorpusStats:
    frequencies = Counter(corpus.iter_tokens())
    return CorpusStats(
        sentence_count=len(corpus),
        token_count=sum(frequencies.values()),
        type_count=len(frequencies),
        type_frequencies=dict(frequencies),
    )


def baseline_order(frequencies: Mapping[str, int]) -> list[tuple[str, int]]:
    """Words by descending frequency, ties in lexicographic order."""
    return sorted(frequencies.items(), key=lambda item: (-item[1], item[0]))


def write_frequencies(stats: CorpusStats, path: Path | str) -> None:
    write_lines(path, (f"{word}\t{count}" for word, count in baseline_order(stats.type_frequencies)))


def iter_tagged(path: Path | str) -> Iterator[tuple[str, str]]:
    """Yield ``(word, tag)`` pairs from a word<TAB>tag file.

    Blank lines separate sentences and are skipped.
    """
    for number, line in read_lines(path, TaggedCorpusError):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0] or not parts[1] or _WHITESPACE.search(parts[0]):
            raise TaggedCorpusError(
                f"expected 'word<TAB>tag', got {line!r}", path=Path(path), line=number
            )
        yield parts[0], parts[1].strip()


__all__ = [
    "CorpusStats",
    "TokenizedCorpus",
    "baseline_order",
    "corpus_stats",
    "iter_tagged",
    "read_corpus",
    "write_corpus",
    "write_frequencies",
]
