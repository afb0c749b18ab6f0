from __future__ import annotations

import numpy as np
import pytest

from hitsvocab.config import RunConfig
from hitsvocab.corpus.io import CorpusStats, TokenizedCorpus, corpus_stats
from hitsvocab.errors import CapacityError, ConsistencyError
from hitsvocab.graph.cooc import WordIndex
from hitsvocab.graph.hits import HitsScores, read_scores, run_hits, write_scores
from hitsvocab.graph.weighting import Scheme, WeightedAdjacency
from hitsvocab.pipeline import count_pairs, score_corpus
from hitsvocab.graph.weighting import weight
from hitsvocab.vocab.ranking import (
    RankingMethod,
    Vocabulary,
    apply_vocabulary,
    rank_by_frequency,
    rank_by_hits,
    read_vocabulary,
    select_vocabulary,
    write_vocabulary,
)
from helpers import zipf_corpus


def stats_of(frequencies: dict) -> CorpusStats:
    return CorpusStats(
        sentence_count=1,
        token_count=sum(frequencies.values()),
        type_count=len(frequencies),
        type_frequencies=frequencies,
    )


def scores_of(hubness: dict) -> HitsScores:
    index = WordIndex.from_words(hubness)
    values = np.array([hubness[w] for w in index.word_of])
    return HitsScores(index=index, hubness=values, authority=values.copy(), iterations_run=1)


def test_frequency_ranking_breaks_ties_lexicographically():
    ranking = rank_by_frequency(stats_of({"c": 3, "a": 5, "b": 3}))
    assert ranking.words == ["a", "b", "c"]
    assert ranking.method is RankingMethod.FREQUENCY_BASELINE


def test_frequency_ranking_edge_cases():
    assert rank_by_frequency(stats_of({})).words == []
    assert rank_by_frequency(stats_of({"x": 1})).words == ["x"]


def test_hits_ranking_orders_by_hubness():
    ranking = rank_by_hits(scores_of({"a": 0.9, "b": 0.1}), stats_of({"a": 1, "b": 5}), Scheme.PPMI)
    assert ranking.words == ["a", "b"]
    assert ranking.method is RankingMethod.HITS_PPMI


def test_hits_ranking_ties_fall_back_to_frequency():
    ranking = rank_by_hits(scores_of({"a": 0.5, "b": 0.5}), stats_of({"a": 2, "b": 7}), Scheme.FREQ)
    assert ranking.words == ["b", "a"]
    assert ranking.method is RankingMethod.HITS_FREQ


def test_unscored_words_are_appended_in_baseline_order():
    ranking = rank_by_hits(scores_of({"a": 0.9}), stats_of({"a": 4, "z": 1, "y": 1, "m": 2}))
    assert ranking.words == ["a", "m", "y", "z"]


def test_hits_ranking_rejects_unknown_words():
    with pytest.raises(ConsistencyError):
        rank_by_hits(scores_of({"a": 0.9, "ghost": 0.2}), stats_of({"a": 3}))


def test_method_follows_score_scheme():
    corpus = zipf_corpus(200, 40, seed=1)
    config = RunConfig(scheme="freq")
    scored = score_corpus(corpus, config)
    assert rank_by_hits(scored.scores, scored.stats).method is RankingMethod.HITS_FREQ


def ranking_from(words):
    return rank_by_frequency(stats_of({w: 100 - i for i, w in enumerate(words)}))


def test_select_prefix():
    vocab = select_vocabulary(ranking_from(["a", "b", "c"]), 3, ["<unk>"])
    assert vocab.words == {"a", "b"}
    assert vocab.specials == ("<unk>",)
    assert vocab.ordered == ("a", "b")


def test_select_without_truncation():
    vocab = select_vocabulary(ranking_from(["a", "b", "c"]), 10)
    assert vocab.words == {"a", "b", "c"}


def test_select_capacity_boundary():
    with pytest.raises(CapacityError):
        select_vocabulary(ranking_from(["a", "b"]), 1, ["<unk>"])


def test_select_skips_reserved_tokens():
    vocab = select_vocabulary(ranking_from(["<unk>", "a", "b"]), 3)
    assert vocab.words == {"a", "b"}


def test_apply_replaces_unknown_words():
    corpus = TokenizedCorpus.from_sentences([["a", "b"]])
    vocab = Vocabulary(words=frozenset({"a"}), size_limit=2)
    assert apply_vocabulary(corpus, vocab).sentences == (("a", "<unk>"),)


def test_apply_full_coverage_is_identity():
    corpus = TokenizedCorpus.from_sentences([["a", "b"], ["b"]])
    vocab = Vocabulary(words=frozenset({"a", "b"}), size_limit=3)
    assert apply_vocabulary(corpus, vocab) == corpus


def test_apply_specials_only():
    corpus = TokenizedCorpus.from_sentences([["a", "b"], ["c"]])
    vocab = Vocabulary(words=frozenset(), size_limit=1)
    assert apply_vocabulary(corpus, vocab).sentences == (("<unk>", "<unk>"), ("<unk>",))


def test_apply_is_idempotent():
    corpus = zipf_corpus(300, 100, seed=2)
    vocab = select_vocabulary(rank_by_frequency(corpus_stats(corpus)), 30)
    once = apply_vocabulary(corpus, vocab)
    assert apply_vocabulary(once, vocab) == once


def test_vocabulary_requires_unknown_token():
    with pytest.raises(ValueError):
        Vocabulary(words=frozenset({"a"}), size_limit=2, specials=("<s>",))


def test_full_selection_keeps_every_word():
    corpus = zipf_corpus(300, 80, seed=3)
    stats = corpus_stats(corpus)
    scored = score_corpus(corpus, RunConfig())
    ranking = rank_by_hits(scored.scores, stats)
    vocab = select_vocabulary(ranking, stats.type_count + 1)
    assert vocab.words == set(stats.type_frequencies)


def test_scaling_scores_keeps_ranking():
    corpus = zipf_corpus(300, 80, seed=4)
    scored = score_corpus(corpus, RunConfig())
    base = rank_by_hits(scored.scores, scored.stats)
    for factor in (0.25, 4.0, 1024.0):
        scaled = HitsScores(
            index=scored.scores.index,
            hubness=scored.scores.hubness * factor,
            authority=scored.scores.authority * factor,
            iterations_run=scored.scores.iterations_run,
            scheme=scored.scores.scheme,
        )
        assert rank_by_hits(scaled, scored.stats).words == base.words


def test_scaling_adjacency_keeps_ranking():
    config = RunConfig()
    for seed in range(5):
        corpus = zipf_corpus(200, 60, seed=seed)
        stats = corpus_stats(corpus)
        adjacency = weight(count_pairs(corpus, config), config.scheme)
        base = rank_by_hits(run_hits(adjacency), stats).words
        for factor in (0.25, 8.0):
            scaled = WeightedAdjacency(adjacency.index, adjacency.weights * factor, adjacency.scheme)
            assert rank_by_hits(run_hits(scaled), stats).words == base


def test_sentence_order_does_not_change_ranking():
    rng = np.random.default_rng(6)
    config = RunConfig()
    for seed in range(5):
        corpus = zipf_corpus(200, 60, seed=seed)
        shuffled = TokenizedCorpus(tuple(corpus.sentences[i] for i in rng.permutation(len(corpus))))
        first = score_corpus(corpus, config)
        second = score_corpus(shuffled, config)
        assert rank_by_hits(first.scores, first.stats).words == rank_by_hits(second.scores, second.stats).words


def test_vocabulary_file_round_trip(tmp_path):
    vocab = select_vocabulary(ranking_from(["b", "a", "c"]), 3)
    path = tmp_path / "vocab.txt"
    assert write_vocabulary(vocab, path) == 3
    assert path.read_text(encoding="utf-8") == "<unk>\nb\na\n"
    loaded = read_vocabulary(path)
    assert loaded.ordered == ("b", "a")
    assert loaded.words == vocab.words


def test_vocabulary_file_with_scores(tmp_path):
    vocab = select_vocabulary(ranking_from(["b", "a"]), 3)
    path = tmp_path / "vocab.txt"
    write_vocabulary(vocab, path, with_scores=True)
    assert path.read_text(encoding="utf-8") == "<unk>\nb\t100\na\t99\n"
    assert read_vocabulary(path).ordered == ("b", "a")


def test_ranking_from_score_dump_matches_in_memory_ranking(tmp_path):
    corpus = zipf_corpus(20000, 5000, seed=0)
    scored = score_corpus(corpus, RunConfig())
    path = tmp_path / "scores.tsv"
    write_scores(scored.scores, path, scored.stats.type_frequencies)
    from_dump = rank_by_hits(read_scores(path), scored.stats)
    assert from_dump.words == rank_by_hits(scored.scores, scored.stats).words
    assert from_dump.method is RankingMethod.HITS_PPMI


def test_dumped_scores_keep_file_order_among_equal_values():
    index = WordIndex(word_of=("b", "a", "c"), id_of={"b": 0, "a": 1, "c": 2})
    values = np.array([0.5, 0.5, 0.7])
    scores = HitsScores(index=index, hubness=values, authority=values.copy(), iterations_run=1, ranked=True)
    ranking = rank_by_hits(scores, stats_of({"a": 10, "b": 1, "c": 1}))
    assert ranking.words == ["c", "b", "a"]
