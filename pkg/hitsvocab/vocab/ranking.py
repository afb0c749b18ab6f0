from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, NamedTuple, Optional, Sequence

from loguru import logger

from ..corpus.io import CorpusStats, TokenizedCorpus, baseline_order
from ..errors import CapacityError, ConsistencyError, InputFormatError
from ..graph.hits import HitsScores
from ..graph.weighting import Scheme
from ..utils import format_score, read_lines, write_lines

UNK = "<unk>"
DEFAULT_SPECIALS: tuple[str, ...] = (UNK,)


class RankingMethod(str, Enum):
    FREQUENCY_BASELINE = "frequency"
    HITS_FREQ = "hits-freq"
    HITS_PPMI = "hits-ppmi"


class RankedWord(NamedTuple):
    word: str
    score: float
    frequency: int


@dataclass(frozen=True)
class VocabularyRanking:
    entries: tuple[RankedWord, ...]
    method: RankingMethod

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def words(self) -> list[str]:
        return [entry.word for entry in self.entries]


@dataclass(frozen=True)
class Vocabulary:
    """Selected words plus reserved tokens.

    ``ordered`` keeps the rank order of ``words`` for writing files.
    """

    words: frozenset[str]
    size_limit: int
    specials: tuple[str, ...] = DEFAULT_SPECIALS
    unk_token: str = UNK
    ordered: tuple[str, ...] = ()
    scores: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        if self.unk_token not in self.specials:
            raise ValueError(f"specials must contain the unknown token {self.unk_token!r}")
        if self.words & set(self.specials):
            raise ValueError("reserved tokens cannot be vocabulary words")
        if len(self.words) > self.size_limit:
            raise CapacityError(f"{len(self.words)} words exceed the size limit {self.size_limit}")
        if not self.ordered:
            object.__setattr__(self, "ordered", tuple(sorted(self.words)))

    def __contains__(self, token: object) -> bool:
        return token in self.words or token in self.specials

    def __len__(self) -> int:
        return len(self.words)


def _sort_key(entry: RankedWord) -> tuple[float, int, str]:
    return (-entry.score, -entry.frequency, entry.word)


def rank_by_frequency(stats: CorpusStats) -> VocabularyRanking:
    entries = tuple(RankedWord(word, float(count), count) for word, count in baseline_order(stats.type_frequencies))
    return VocabularyRanking(entries=entries, method=RankingMethod.FREQUENCY_BASELINE)


def rank_by_hits(
    scores: HitsScores, stats: CorpusStats, scheme: Optional[Scheme] = None
) -> VocabularyRanking:
    """Order words by hubness; words outside the graph follow in baseline order.

    Scores read back from a dump keep the row order of the file among equal
    (rounded) values instead of being re-tied by frequency.
    """
    scheme = Scheme(scheme or scores.scheme or Scheme.PPMI)
    method = RankingMethod.HITS_FREQ if scheme is Scheme.FREQ else RankingMethod.HITS_PPMI
    scored: list[RankedWord] = []
    for word, value in zip(scores.index.word_of, scores.hubness.tolist()):
        frequency = stats.frequency(word)
        if frequency <= 0:
            raise ConsistencyError(f"scored word {word!r} does not occur in the corpus statistics")
        scored.append(RankedWord(word, float(value), frequency))
    if scores.ranked:
        scored.sort(key=lambda entry: -entry.score)
    else:
        scored.sort(key=_sort_key)
    unscored = [
        RankedWord(word, 0.0, count)
        for word, count in baseline_order(stats.type_frequencies)
        if word not in scores.index
    ]
    logger.debug("Ranked {} scored and {} unscored words", len(scored), len(unscored))
    return VocabularyRanking(entries=tuple(scored + unscored), method=method)


def select_vocabulary(
    ranking: VocabularyRanking,
    k: int,
    specials: Sequence[str] = DEFAULT_SPECIALS,
    unk_token: str = UNK,
) -> Vocabulary:
    """Keep the specials plus the first ``k - len(specials)`` ranked words."""
    specials = tuple(specials)
    if k <= len(specials):
        raise CapacityError(f"vocabulary size {k} leaves no room after {len(specials)} reserved tokens")
    capacity = k - len(specials)
    reserved = set(specials)
    chosen: list[RankedWord] = []
    for entry in ranking.entries:
        if len(chosen) >= capacity:
            break
        if entry.word in reserved:
            continue
        chosen.append(entry)
    logger.debug("Selected {} of {} ranked words (k={})", len(chosen), len(ranking), k)
    return Vocabulary(
        words=frozenset(entry.word for entry in chosen),
        size_limit=k,
        specials=specials,
        unk_token=unk_token,
        ordered=tuple(entry.word for entry in chosen),
        scores=tuple(entry.score for entry in chosen),
    )


def apply_vocabulary(corpus: TokenizedCorpus, vocab: Vocabulary) -> TokenizedCorpus:
    unk = vocab.unk_token
    return TokenizedCorpus(
        tuple(tuple(token if token in vocab else unk for token in sentence) for sentence in corpus)
    )


def write_vocabulary(vocab: Vocabulary, path: Path | str, with_scores: bool = False) -> int:
    lines = list(vocab.specials)
    if with_scores and vocab.scores:
        lines.extend(f"{word}\t{format_score(score)}" for word, score in zip(vocab.ordered, vocab.scores))
    else:
        lines.extend(vocab.ordered)
    return write_lines(path, lines)


def read_vocabulary(
    path: Path | str,
    specials: Sequence[str] = DEFAULT_SPECIALS,
    unk_token: str = UNK,
) -> Vocabulary:
    """Read a vocabulary file; lines equal to a reserved token are not words."""
    file_path = Path(path)
    reserved = set(specials)
    ordered: list[str] = []
    seen: set[str] = set()
    for number, line in read_lines(file_path, InputFormatError):
        word = line.split("\t", 1)[0].strip()
        if not word or word in reserved:
            continue
        if word in seen:
            raise InputFormatError(f"duplicate vocabulary entry {word!r}", file_path, number)
        seen.add(word)
        ordered.append(word)
    return Vocabulary(
        words=frozenset(ordered),
        size_limit=len(ordered) + len(specials),
        specials=tuple(specials),
        unk_token=unk_token,
        ordered=tuple(ordered),
    )


def iter_words(path: Path | str) -> Iterable[str]:
    for _, line in read_lines(path, InputFormatError):
        word = line.split("\t", 1)[0].strip()
        if word:
            yield word


__all__ = [
    "DEFAULT_SPECIALS",
    "RankedWord",
    "RankingMethod",
    "UNK",
    "Vocabulary",
    "VocabularyRanking",
    "apply_vocabulary",
    "iter_words",
    "rank_by_frequency",
    "rank_by_hits",
    "select_vocabulary",
    "write_vocabulary",
    "read_vocabulary",
]
