from __future__ import annotations

from collections import Counter

import numpy as np

from hitsvocab.corpus.io import TokenizedCorpus


def random_corpus(rng: np.random.Generator, max_sentences: int = 50, max_types: int = 20, max_length: int = 12) -> TokenizedCorpus:
    n_types = int(rng.integers(1, max_types + 1))
    words = [f"t{i}" for i in range(n_types)]
    sentences = []
    for _ in range(int(rng.integers(0, max_sentences + 1))):
        length = int(rng.integers(1, max_length + 1))
        sentences.append([words[j] for j in rng.integers(0, n_types, size=length)])
    return TokenizedCorpus.from_sentences(sentences)


def zipf_corpus(n_sentences: int, n_types: int, seed: int = 0, max_length: int = 20) -> TokenizedCorpus:
    """Sentences of Zipf-distributed words ``w0 .. w{n_types-1}``."""
    rng = np.random.default_rng(seed)
    weights = 1.0 / np.arange(1, n_types + 1)
    weights /= weights.sum()
    lengths = rng.integers(3, max_length + 1, size=n_sentences)
    ids = rng.choice(n_types, size=int(lengths.sum()), p=weights)
    words = [f"w{i}" for i in range(n_types)]
    sentences = []
    start = 0
    for length in lengths.tolist():
        sentences.append(tuple(words[j] for j in ids[start : start + length].tolist()))
        start += length
    return TokenizedCorpus(tuple(sentences))


def brute_force_counts(corpus: TokenizedCorpus, window: int, include_diagonal: bool = True) -> Counter:
    """Quadratic scan over every position pair of every sentence."""
    frequencies = Counter(corpus.iter_tokens())
    counts: Counter = Counter()
    for sentence in corpus:
        for i, left in enumerate(sentence):
            for j, right in enumerate(sentence):
                if i == j or abs(i - j) > window:
                    continue
                if frequencies[left] < 2 or frequencies[right] < 2:
                    continue
                if not include_diagonal and left == right:
                    continue
                counts[(left, right)] += 1
    return counts


def graph_cells(graph) -> dict:
    cells = graph.counts.tocoo()
    return {
        (graph.index.word_of[x], graph.index.word_of[y]): int(v)
        for x, y, v in zip(cells.row.tolist(), cells.col.tolist(), cells.data.tolist())
        if v
    }
