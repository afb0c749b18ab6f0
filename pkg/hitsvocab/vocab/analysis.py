from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Optional, Sequence

from loguru import logger

from ..corpus.io import CorpusStats, TokenizedCorpus, iter_tagged
from ..utils import write_lines
from .ranking import Vocabulary

ALL_COLUMN = "ALL"


@dataclass(frozen=True)
class VocabDiff:
    only_in_a: frozenset[str]
    only_in_b: frozenset[str]
    common: frozenset[str]
    tokens_only_a: int
    tokens_only_b: int
    avg_tokens_a: float
    avg_tokens_b: float
    tokens_common: int = 0

    @property
    def replaced_types(self) -> int:
        """Types of ``b`` that take the place of words of ``a``."""
        return len(self.only_in_b)

    def swapped(self) -> "VocabDiff":
        return VocabDiff(
            only_in_a=self.only_in_b,
            only_in_b=self.only_in_a,
            common=self.common,
            tokens_only_a=self.tokens_only_b,
            tokens_only_b=self.tokens_only_a,
            avg_tokens_a=self.avg_tokens_b,
            avg_tokens_b=self.avg_tokens_a,
            tokens_common=self.tokens_common,
        )


@dataclass(frozen=True)
class CoverageReport:
    tokens: int
    replaced: int

    @property
    def rate(self) -> float:
        return self.replaced / self.tokens if self.tokens else 0.0


def _tokens(words: frozenset[str], stats: CorpusStats) -> int:
    return sum(stats.frequency(word) for word in words)


def _average(tokens: int, types: int) -> float:
    return tokens / types if types else 0.0


def diff_vocabularies(a: Vocabulary, b: Vocabulary, stats: CorpusStats) -> VocabDiff:
    # Vocabulary.words never holds reserved tokens
    only_a = frozenset(a.words - b.words)
    only_b = frozenset(b.words - a.words)
    common = frozenset(a.words & b.words)
    tokens_a = _tokens(only_a, stats)
    tokens_b = _tokens(only_b, stats)
    return VocabDiff(
        only_in_a=only_a,
        only_in_b=only_b,
        common=common,
        tokens_only_a=tokens_a,
        tokens_only_b=tokens_b,
        avg_tokens_a=_average(tokens_a, len(only_a)),
        avg_tokens_b=_average(tokens_b, len(only_b)),
        tokens_common=_tokens(common, stats),
    )


def split_common_diff(
    test_corpus: TokenizedCorpus, a: Vocabulary, b: Vocabulary
) -> tuple[TokenizedCorpus, TokenizedCorpus]:
    """Split sentences into those covered by both vocabularies and the rest."""
    shared = a.words & b.words
    common: list[tuple[str, ...]] = []
    diff: list[tuple[str, ...]] = []
    for sentence in test_corpus:
        if all(token in shared for token in sentence):
            common.append(sentence)
        else:
            diff.append(sentence)
    logger.debug("COMMON/DIFF split: {} / {} sentences", len(common), len(diff))
    return TokenizedCorpus(tuple(common)), TokenizedCorpus(tuple(diff))


def coverage(corpus: TokenizedCorpus, vocab: Vocabulary) -> CoverageReport:
    tokens = 0
    replaced = 0
    for token in corpus.iter_tokens():
        tokens += 1
        if token not in vocab:
            replaced += 1
    return CoverageReport(tokens=tokens, replaced=replaced)


def pos_table(
    tagged_path: Path | str, columns: Mapping[str, Optional[frozenset[str]]]
) -> dict[str, Counter]:
    """Tally tags of tokens per named word set in a single pass.

    A column mapped to ``None`` counts every token.
    """
    tallies: dict[str, Counter] = {name: Counter() for name in columns}
    for word, tag in iter_tagged(tagged_path):
        for name, words in columns.items():
            if words is None or word in words:
                tallies[name][tag] += 1
    return tallies


def pos_tally(tagged_path: Path | str, words: frozenset[str] | set[str]) -> dict[str, int]:
    if not words:
        return {}
    tally = pos_table(tagged_path, {"words": frozenset(words)})["words"]
    return dict(tally)


def _descending(tally: Mapping[str, int]) -> list[tuple[str, int]]:
    return sorted(tally.items(), key=lambda item: (-item[1], item[0]))


def diff_report_lines(diff: VocabDiff, label_a: str = "a", label_b: str = "b") -> list[str]:
    lines = ["set\ttypes\ttokens\tavg_tokens"]
    rows = (
        (label_a, len(diff.only_in_a), diff.tokens_only_a, diff.avg_tokens_a),
        (label_b, len(diff.only_in_b), diff.tokens_only_b, diff.avg_tokens_b),
        ("common", len(diff.common), diff.tokens_common, _average(diff.tokens_common, len(diff.common))),
    )
    lines.extend(f"{name}\t{types}\t{tokens}\t{avg:.2f}" for name, types, tokens, avg in rows)
    return lines


def write_diff_report(diff: VocabDiff, path: Path | str, label_a: str = "a", label_b: str = "b") -> None:
    write_lines(path, diff_report_lines(diff, label_a, label_b))


def pos_report_lines(tally: Mapping[str, int]) -> list[str]:
    lines = [f"{tag}\t{count}" for tag, count in _descending(tally)]
    lines.append(f"Total\t{sum(tally.values())}")
    return lines


def pos_table_lines(tallies: Mapping[str, Mapping[str, int]], order_by: Optional[str] = None) -> list[str]:
    """Tags as rows, one column per tally, ordered by ``order_by`` (last column by default)."""
    names: Sequence[str] = list(tallies)
    key = order_by or names[-1]
    tags = sorted(
        {tag for tally in tallies.values() for tag in tally},
        key=lambda tag: (-tallies[key].get(tag, 0), tag),
    )
    lines = ["POS\t" + "\t".join(names)]
    for tag in tags:
        lines.append(tag + "\t" + "\t".join(str(tallies[name].get(tag, 0)) for name in names))
    lines.append("Total\t" + "\t".join(str(sum(tallies[name].values())) for name in names))
    return lines


def write_pos_report(tally: Mapping[str, int], path: Path | str) -> None:
    write_lines(path, pos_report_lines(tally))


__all__ = [
    "ALL_COLUMN",
    "CoverageReport",
    "VocabDiff",
    "coverage",
    "diff_report_lines",
    "diff_vocabularies",
    "pos_report_lines",
    "pos_table",
    "pos_table_lines",
    "pos_tally",
    "split_common_diff",
    "write_diff_report",
    "write_pos_report",
]
