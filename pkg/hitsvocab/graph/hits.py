from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterator, Mapping, Optional

import numpy as np
from loguru import logger
from scipy import sparse

from ..errors import DegenerateMatrixError, NumericalDegeneracyError, ScoreFileError, ShapeMismatchError
from ..utils import format_score, read_lines, write_lines
from .cooc import WordIndex
from .weighting import Scheme, WeightedAdjacency

DEFAULT_ITERATIONS = 300


class Norm(str, Enum):
    L2 = "l2"
    L1 = "l1"


@dataclass(frozen=True, eq=False)
class HitsConfig:
    """Inputs of the power iteration besides the matrix.

    ``initial_hubness`` of ``None`` means the uniform start vector.
    """

    iterations: int = DEFAULT_ITERATIONS
    initial_hubness: Optional[np.ndarray] = None
    norm: Norm = Norm.L2
    tolerance: Optional[float] = None

    def __post_init__(self) -> None:
        if self.iterations < 1:
            raise ValueError("iterations must be a positive integer")
        if self.tolerance is not None and self.tolerance < 0:
            raise ValueError("tolerance must be nonnegative")
        object.__setattr__(self, "norm", Norm(self.norm))
        if self.initial_hubness is not None:
            start = np.asarray(self.initial_hubness, dtype=np.float64)
            if start.ndim != 1 or np.any(start < 0) or not np.any(start > 0):
                raise ValueError("initial hubness must be a nonnegative, nonzero vector")
            object.__setattr__(self, "initial_hubness", start)


@dataclass(frozen=True, eq=False)
class HitsScores:
    index: WordIndex
    hubness: np.ndarray
    authority: np.ndarray
    iterations_run: int
    norm: Norm = Norm.L2
    scheme: Optional[Scheme] = None
    # index ids are already in rank order (scores read back from a dump)
    ranked: bool = False


def normalize(vector: np.ndarray, norm: Norm) -> np.ndarray:
    if norm is Norm.L1:
        length = float(np.abs(vector).sum())
    else:
        length = float(np.linalg.norm(vector))
    if not np.isfinite(length) or length == 0.0:
        raise NumericalDegeneracyError(f"cannot normalize a vector of {norm.value} norm {length}")
    return vector / length


def _start_vector(size: int, config: HitsConfig) -> np.ndarray:
    if config.initial_hubness is None:
        return normalize(np.ones(size, dtype=np.float64), config.norm)
    if config.initial_hubness.shape != (size,):
        raise ShapeMismatchError(
            f"initial hubness has length {config.initial_hubness.size}, matrix has {size} rows"
        )
    return config.initial_hubness.copy()


def _check_matrix(matrix: sparse.spmatrix) -> sparse.csr_matrix:
    matrix = sparse.csr_matrix(matrix, dtype=np.float64)
    if matrix.shape[0] != matrix.shape[1]:
        raise ShapeMismatchError(f"adjacency must be square, got {matrix.shape}")
    if matrix.nnz and matrix.data.min() < 0:
        raise ValueError("adjacency must be nonnegative")
    if matrix.count_nonzero() == 0:
        raise DegenerateMatrixError("adjacency has no nonzero entries")
    return matrix


def iterate_hits(matrix: sparse.spmatrix, config: HitsConfig) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield normalized ``(hubness, authority)`` after each iteration.

    Each step is ``p <- A^T i``, ``i <- A p`` and then both vectors are
    normalized, in that order.
    """
    matrix = _check_matrix(matrix)
    transposed = matrix.transpose().tocsr()
    hubness = _start_vector(matrix.shape[0], config)
    for _ in range(config.iterations):
        authority = transposed @ hubness
        hubness = matrix @ authority
        hubness = normalize(hubness, config.norm)
        authority = normalize(authority, config.norm)
        yield hubness, authority


def run_hits(adjacency: WeightedAdjacency, config: Optional[HitsConfig] = None) -> HitsScores:
    config = config or HitsConfig()
    hubness: Optional[np.ndarray] = None
    authority: Optional[np.ndarray] = None
    iterations_run = 0
    for hubness_next, authority_next in iterate_hits(adjacency.weights, config):
        iterations_run += 1
        converged = (
            config.tolerance is not None
            and hubness is not None
            and np.linalg.norm(hubness_next - hubness) < config.tolerance
            and np.linalg.norm(authority_next - authority) < config.tolerance
        )
        hubness, authority = hubness_next, authority_next
        if converged:
            logger.debug("HITS converged after {} iterations", iterations_run)
            break
    else:
        if config.tolerance is not None:
            logger.warning(
                "HITS did not reach tolerance {} within {} iterations",
                config.tolerance,
                config.iterations,
            )
    isolated = int(np.count_nonzero(adjacency.weights.getnnz(axis=1) == 0))
    if isolated:
        logger.debug("{} words have no edges and score zero", isolated)
    return HitsScores(
        index=adjacency.index,
        hubness=hubness,
        authority=authority,
        iterations_run=iterations_run,
        norm=config.norm,
        scheme=adjacency.scheme,
    )


def hits_residual(adjacency: WeightedAdjacency, scores: HitsScores) -> float:
    """Distance between the hubness vector and one more normalized update of it."""
    matrix = adjacency.weights
    if matrix.shape != (scores.hubness.size, scores.hubness.size):
        raise ShapeMismatchError(
            f"adjacency is {matrix.shape}, scores have {scores.hubness.size} entries"
        )
    updated = matrix @ (matrix.transpose() @ scores.hubness)
    return float(np.linalg.norm(normalize(updated, scores.norm) - scores.hubness))


def ranked_by_hubness(scores: HitsScores, frequencies: Optional[Mapping[str, int]] = None) -> list[int]:
    """Ids by descending hubness, then descending frequency, then word."""
    frequencies = frequencies or {}
    hubness = scores.hubness.tolist()
    words = scores.index.word_of
    return sorted(
        range(len(words)),
        key=lambda idx: (-hubness[idx], -frequencies.get(words[idx], 0), words[idx]),
    )


def write_scores(
    scores: HitsScores, path: Path | str, frequencies: Optional[Mapping[str, int]] = None
) -> int:
    """Dump scores in ranking order.

    Rows are ordered on the unrounded scores, so a vocabulary ranked from the
    dump keeps the order of one ranked in memory with the same ``frequencies``.
    """
    lines = [f"#iterations={scores.iterations_run}"]
    if scores.scheme is not None:
        lines.append(f"#scheme={scores.scheme.value}")
    for idx in ranked_by_hubness(scores, frequencies):
        lines.append(
            f"{scores.index.word_of[idx]}\t{format_score(scores.hubness[idx])}"
            f"\t{format_score(scores.authority[idx])}"
        )
    return write_lines(path, lines)


def read_scores(path: Path | str) -> HitsScores:
    file_path = Path(path)
    words: list[str] = []
    hubness: list[float] = []
    authority: list[float] = []
    headers: dict[str, str] = {}
    for number, line in read_lines(file_path, ScoreFileError):
        if not line:
            continue
        if line.startswith("#"):
            key, _, value = line[1:].partition("=")
            headers[key.strip()] = value.strip()
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ScoreFileError("expected 'word<TAB>hubness<TAB>authority'", file_path, number)
        try:
            hubness.append(float(parts[1]))
            authority.append(float(parts[2]))
        except ValueError as exc:
            raise ScoreFileError(f"invalid score in {line!r}", file_path, number) from exc
        words.append(parts[0])
    if len(set(words)) != len(words):
        raise ScoreFileError("duplicate words in score file", file_path)
    try:
        iterations = int(headers.get("iterations", "0"))
        scheme = Scheme(headers["scheme"]) if "scheme" in headers else None
    except ValueError as exc:
        raise ScoreFileError(f"invalid header: {exc}", file_path) from exc
    return HitsScores(
        index=WordIndex(word_of=tuple(words), id_of={w: i for i, w in enumerate(words)}),
        hubness=np.asarray(hubness, dtype=np.float64),
        authority=np.asarray(authority, dtype=np.float64),
        iterations_run=iterations,
        scheme=scheme,
        ranked=True,
    )


__all__ = [
    "DEFAULT_ITERATIONS",
    "HitsConfig",
    "HitsScores",
    "Norm",
    "hits_residual",
    "iterate_hits",
    "normalize",
    "read_scores",
    "run_hits",
    "write_scores",
]
