from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Optional, Sequence

import numpy as np
from loguru import logger
from scipy import sparse

from ..errors import UndefinedPmiError
from .cooc import CoocGraph, WordIndex, upper_triangle
from ..utils import write_lines


class Scheme(str, Enum):
    FREQ = "freq"
    PPMI = "ppmi"


@dataclass(frozen=True, eq=False)
class WeightedAdjacency:
    index: WordIndex
    weights: sparse.csr_matrix
    scheme: Scheme

    @classmethod
    def from_matrix(
        cls,
        matrix,
        words: Optional[Sequence[str]] = None,
        scheme: Scheme = Scheme.FREQ,
    ) -> "WeightedAdjacency":
        """Wrap an explicit square matrix; words default to ``w0, w1, ...``."""
        weights = sparse.csr_matrix(matrix, dtype=np.float64)
        rows, cols = weights.shape
        if rows != cols:
            raise ValueError(f"adjacency must be square, got {rows}x{cols}")
        if words is None:
            width = len(str(max(rows - 1, 0)))
            words = [f"w{i:0{width}d}" for i in range(rows)]
        if len(words) != rows:
            raise ValueError("one word per matrix row is required")
        # keep the caller's row order even if it is not lexicographic
        index = WordIndex(word_of=tuple(words), id_of={w: i for i, w in enumerate(words)})
        return cls(index=index, weights=weights, scheme=scheme)

    @property
    def size(self) -> int:
        return self.weights.shape[0]


def weight_freq(graph: CoocGraph) -> WeightedAdjacency:
    weights = graph.counts.astype(np.float64)
    weights.eliminate_zeros()
    return WeightedAdjacency(index=graph.index, weights=weights, scheme=Scheme.FREQ)


def pmi(graph: CoocGraph, x: int, y: int) -> float:
    pair = int(graph.counts[x, y])
    row = int(graph.row_marginals[x])
    col = int(graph.col_marginals[y])
    if pair <= 0 or row <= 0 or col <= 0 or graph.total <= 0:
        raise UndefinedPmiError(
            f"PMI undefined for ({graph.index.word_of[x]}, {graph.index.word_of[y]}): "
            f"|x,y|={pair}, |x,*|={row}, |*,y|={col}, M={graph.total}"
        )
    return math.log2(graph.total * pair / (row * col))


def weight_ppmi(graph: CoocGraph) -> WeightedAdjacency:
    """A_xy = max(0, pmi(x, y) + log2 |x,y|) over the nonzero count cells."""
    cells = graph.counts.tocoo()
    pair = cells.data.astype(np.float64)
    rows = graph.row_marginals[cells.row].astype(np.float64)
    cols = graph.col_marginals[cells.col].astype(np.float64)
    values = np.log2(graph.total * pair / (rows * cols)) + np.log2(pair)
    np.maximum(values, 0.0, out=values)
    weights = sparse.csr_matrix((values, (cells.row, cells.col)), shape=graph.counts.shape)
    clamped = int(np.count_nonzero(values == 0.0))
    weights.eliminate_zeros()
    logger.debug("PPMI weighting kept {} cells, clamped {} to zero", weights.nnz, clamped)
    return WeightedAdjacency(index=graph.index, weights=weights, scheme=Scheme.PPMI)


def weight(graph: CoocGraph, scheme: Scheme) -> WeightedAdjacency:
    if Scheme(scheme) is Scheme.FREQ:
        return weight_freq(graph)
    return weight_ppmi(graph)


def write_adjacency(adjacency: WeightedAdjacency, path: Path | str) -> int:
    cells = upper_triangle(adjacency.weights, adjacency.index)
    return write_lines(path, (f"{x}\t{y}\t{value:.6f}" for x, y, value in cells))


__all__ = [
    "Scheme",
    "WeightedAdjacency",
    "pmi",
    "weight",
    "weight_freq",
    "weight_ppmi",
    "write_adjacency",
]
