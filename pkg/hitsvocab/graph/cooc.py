from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

import numpy as np
from loguru import logger
from scipy import sparse

from ..corpus.io import TokenizedCorpus, corpus_stats
from ..utils import write_lines


@dataclass(frozen=True, eq=False)
class WordIndex:
    """Dense ids for graph nodes; ids follow lexicographic word order."""

    word_of: tuple[str, ...]
    id_of: Mapping[str, int]

    @classmethod
    def from_words(cls, words: Iterable[str]) -> "WordIndex":
        ordered = tuple(sorted(set(words)))
        return cls(word_of=ordered, id_of={word: idx for idx, word in enumerate(ordered)})

    def __len__(self) -> int:
        return len(self.word_of)

    def __contains__(self, word: object) -> bool:
        return word in self.id_of

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WordIndex):
            return NotImplemented
        return self.word_of == other.word_of


@dataclass(frozen=True, eq=False)
class CoocGraph:
    index: WordIndex
    counts: sparse.csr_matrix
    row_marginals: np.ndarray
    col_marginals: np.ndarray
    total: int
    window: int

    @property
    def size(self) -> int:
        return len(self.index)

    @property
    def nnz(self) -> int:
        return int(self.counts.count_nonzero())

    def pair_count(self, x: str, y: str) -> int:
        if x not in self.index or y not in self.index:
            return 0
        return int(self.counts[self.index.id_of[x], self.index.id_of[y]])


def _empty_counts(size: int) -> sparse.csr_matrix:
    return sparse.csr_matrix((size, size), dtype=np.int64)


def build_cooc_graph(
    corpus: TokenizedCorpus, window: int, include_diagonal: bool = True
) -> CoocGraph:
    """Count every ordered in-window position pair of non-singleton words.

    Windows stop at sentence boundaries. Words seen once in the corpus are
    left out of the index before counting, so their pairs never reach the
    totals.
    """
    if window < 1:
        raise ValueError("window must be a positive integer")
    stats = corpus_stats(corpus)
    index = WordIndex.from_words(w for w, c in stats.type_frequencies.items() if c > 1)
    size = len(index)

    lengths = np.fromiter((len(s) for s in corpus), dtype=np.int64, count=len(corpus))
    ids = np.fromiter(
        (index.id_of.get(token, -1) for token in corpus.iter_tokens()),
        dtype=np.int64,
        count=stats.token_count,
    )
    sentence_of = np.repeat(np.arange(len(corpus), dtype=np.int64), lengths)

    rows: list[np.ndarray] = []
    cols: list[np.ndarray] = []
    for offset in range(1, window + 1):
        if offset >= ids.size:
            break
        left, right = ids[:-offset], ids[offset:]
        keep = (sentence_of[:-offset] == sentence_of[offset:]) & (left >= 0) & (right >= 0)
        if not include_diagonal:
            keep &= left != right
        # each unordered position pair contributes in both directions
        rows.extend((left[keep], right[keep]))
        cols.extend((right[keep], left[keep]))

    if rows:
        row_ids = np.concatenate(rows)
        col_ids = np.concatenate(cols)
        counts = sparse.coo_matrix(
            (np.ones(row_ids.size, dtype=np.int64), (row_ids, col_ids)), shape=(size, size)
        ).tocsr()
        counts.sum_duplicates()
    else:
        counts = _empty_counts(size)

    row_marginals = np.asarray(counts.sum(axis=1), dtype=np.int64).ravel()
    col_marginals = np.asarray(counts.sum(axis=0), dtype=np.int64).ravel()
    total = int(row_marginals.sum())
    logger.debug(
        "Built co-occurrence graph: {} types ({} singletons excluded), {} nonzero cells, M={}",
        size,
        stats.type_count - size,
        counts.nnz,
        total,
    )
    return CoocGraph(
        index=index,
        counts=counts,
        row_marginals=row_marginals,
        col_marginals=col_marginals,
        total=total,
        window=window,
    )


def prune_rare_pairs(graph: CoocGraph, min_count: int) -> CoocGraph:
    """Zero cells below ``min_count``; marginals and M keep their unpruned values."""
    if min_count < 1:
        raise ValueError("min_count must be a positive integer")
    if min_count == 1:
        return graph
    counts = graph.counts.copy()
    counts.data[counts.data < min_count] = 0
    counts.eliminate_zeros()
    logger.debug(
        "Pruned {} cells below count {}", graph.counts.nnz - counts.nnz, min_count
    )
    return dataclasses.replace(graph, counts=counts)


def upper_triangle(matrix: sparse.spmatrix, index: WordIndex) -> list[tuple[str, str, float]]:
    """Nonzero cells with x <= y, in lexicographic (word_x, word_y) order."""
    upper = sparse.triu(matrix, format="coo")
    cells = [
        (index.word_of[x], index.word_of[y], value)
        for x, y, value in zip(upper.row.tolist(), upper.col.tolist(), upper.data.tolist())
        if value != 0
    ]
    cells.sort(key=lambda cell: (cell[0], cell[1]))
    return cells


def write_graph(graph: CoocGraph, path: Path | str) -> int:
    lines = [f"#M={graph.total}"]
    lines.extend(f"{x}\t{y}\t{int(count)}" for x, y, count in upper_triangle(graph.counts, graph.index))
    return write_lines(path, lines) - 1


__all__ = [
    "CoocGraph",
    "WordIndex",
    "build_cooc_graph",
    "prune_rare_pairs",
    "upper_triangle",
    "write_graph",
]
