from __future__ import annotations

from dataclasses import dataclass

from loguru import logger

from .config import RunConfig
from .corpus.io import CorpusStats, TokenizedCorpus, corpus_stats
from .graph.cooc import CoocGraph, build_cooc_graph, prune_rare_pairs
from .graph.hits import HitsScores, run_hits
from .graph.weighting import WeightedAdjacency, weight
from .vocab.ranking import Vocabulary, VocabularyRanking, rank_by_frequency, rank_by_hits, select_vocabulary


@dataclass(frozen=True, eq=False)
class ScoredCorpus:
    stats: CorpusStats
    graph: CoocGraph
    adjacency: WeightedAdjacency
    scores: HitsScores


def count_pairs(corpus: TokenizedCorpus, config: RunConfig) -> CoocGraph:
    graph = build_cooc_graph(corpus, config.window, include_diagonal=config.include_diagonal)
    return prune_rare_pairs(graph, config.min_pair_count)


def score_corpus(corpus: TokenizedCorpus, config: RunConfig) -> ScoredCorpus:
    """Count, weight and score a corpus under one configuration."""
    stats = corpus_stats(corpus)
    graph = count_pairs(corpus, config)
    adjacency = weight(graph, config.scheme)
    logger.info(
        "Scoring {} types ({} edges, scheme={}) for {} iterations",
        adjacency.size,
        adjacency.weights.nnz,
        config.scheme.value,
        config.iterations,
    )
    scores = run_hits(adjacency, config.hits_config())
    return ScoredCorpus(stats=stats, graph=graph, adjacency=adjacency, scores=scores)


def rank_corpus(corpus: TokenizedCorpus, config: RunConfig, freq_baseline: bool = False) -> VocabularyRanking:
    if freq_baseline:
        return rank_by_frequency(corpus_stats(corpus))
    scored = score_corpus(corpus, config)
    return rank_by_hits(scored.scores, scored.stats, config.scheme)


def select_for_corpus(
    corpus: TokenizedCorpus, config: RunConfig, k: int, freq_baseline: bool = False
) -> Vocabulary:
    ranking = rank_corpus(corpus, config, freq_baseline=freq_baseline)
    return select_vocabulary(ranking, k, config.specials, config.unk_token)


__all__ = ["ScoredCorpus", "count_pairs", "rank_corpus", "score_corpus", "select_for_corpus"]
