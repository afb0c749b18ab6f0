from __future__ import annotations

import argparse

from loguru import logger

from ..config import RunConfig
from ..corpus.io import corpus_stats, read_corpus, write_corpus, write_frequencies
from ..graph.hits import hits_residual, read_scores, write_scores
from ..graph.weighting import weight, write_adjacency
from ..graph.cooc import write_graph
from ..pipeline import count_pairs, rank_corpus, score_corpus
from ..vocab.analysis import (
    ALL_COLUMN,
    coverage,
    diff_vocabularies,
    pos_table,
    pos_table_lines,
    pos_tally,
    split_common_diff,
    write_diff_report,
    write_pos_report,
)
from ..vocab.ranking import (
    apply_vocabulary,
    iter_words,
    rank_by_hits,
    read_vocabulary,
    select_vocabulary,
    write_vocabulary,
)
from ..utils import write_lines


def _read(args: argparse.Namespace, config: RunConfig):
    corpus = read_corpus(args.corpus, config.max_sentence_length)
    logger.info("Read {} sentences from {}", len(corpus), args.corpus)
    return corpus


def _vocab(path, config: RunConfig):
    return read_vocabulary(path, config.specials, config.unk_token)


def cmd_count(args: argparse.Namespace, config: RunConfig) -> int:
    corpus = _read(args, config)
    stats = corpus_stats(corpus)
    graph = count_pairs(corpus, config)
    cells = write_graph(graph, args.output)
    logger.info("Wrote {} graph cells to {}", cells, args.output)
    if args.weights:
        write_adjacency(weight(graph, config.scheme), args.weights)
        logger.info("Wrote {} adjacency to {}", config.scheme.value, args.weights)
    print(
        f"sentences={stats.sentence_count} tokens={stats.token_count} types={stats.type_count} "
        f"graph_types={graph.size} pairs={cells} M={graph.total}"
    )
    return 0


def cmd_score(args: argparse.Namespace, config: RunConfig) -> int:
    corpus = _read(args, config)
    scored = score_corpus(corpus, config)
    write_scores(scored.scores, args.output, scored.stats.type_frequencies)
    residual = hits_residual(scored.adjacency, scored.scores)
    logger.info(
        "Wrote scores for {} words to {} ({} iterations, residual {:.3e})",
        len(scored.scores.index),
        args.output,
        scored.scores.iterations_run,
        residual,
    )
    return 0


def cmd_select(args: argparse.Namespace, config: RunConfig) -> int:
    k = args.k if args.k is not None else config.vocab_size
    if k is None:
        raise ValueError("no vocabulary size given (use -k or vocab_size)")
    corpus = _read(args, config)
    if args.scores:
        ranking = rank_by_hits(read_scores(args.scores), corpus_stats(corpus))
    else:
        ranking = rank_corpus(corpus, config, freq_baseline=args.freq_baseline)
    vocab = select_vocabulary(ranking, k, config.specials, config.unk_token)
    lines = write_vocabulary(vocab, args.output, with_scores=args.with_scores)
    logger.info("Wrote {} vocabulary ({} lines) to {}", ranking.method.value, lines, args.output)
    return 0


def cmd_apply(args: argparse.Namespace, config: RunConfig) -> int:
    vocab = _vocab(args.vocab, config)
    corpus = _read(args, config)
    report = coverage(corpus, vocab)
    write_corpus(apply_vocabulary(corpus, vocab), args.output)
    print(f"tokens={report.tokens} replaced={report.replaced} rate={report.rate:.2%}")
    return 0


def cmd_diff(args: argparse.Namespace, config: RunConfig) -> int:
    vocab_a = _vocab(args.vocab_a, config)
    vocab_b = _vocab(args.vocab_b, config)
    stats = corpus_stats(_read(args, config))
    diff = diff_vocabularies(vocab_a, vocab_b, stats)
    write_diff_report(diff, args.output, args.label_a, args.label_b)
    print(f"{args.label_b} replaces {diff.replaced_types} types of {args.label_a}")
    return 0


def cmd_split(args: argparse.Namespace, config: RunConfig) -> int:
    vocab_a = _vocab(args.vocab_a, config)
    vocab_b = _vocab(args.vocab_b, config)
    common, diff = split_common_diff(_read(args, config), vocab_a, vocab_b)
    write_corpus(common, args.common)
    write_corpus(diff, args.diff)
    print(f"common={len(common)} diff={len(diff)}")
    return 0


def cmd_pos(args: argparse.Namespace, config: RunConfig) -> int:
    if args.words is not None:
        if args.vocabs:
            raise ValueError("give either --words or two vocabularies, not both")
        tally = pos_tally(args.tagged, frozenset(iter_words(args.words)))
        write_pos_report(tally, args.output)
        return 0
    if len(args.vocabs) != 2:
        raise ValueError("pos needs exactly two vocabularies or --words")
    vocab_a, vocab_b = (_vocab(path, config) for path in args.vocabs)
    columns = {
        args.label_a: frozenset(vocab_a.words - vocab_b.words),
        args.label_b: frozenset(vocab_b.words - vocab_a.words),
        ALL_COLUMN: None,
    }
    write_lines(args.output, pos_table_lines(pos_table(args.tagged, columns)))
    return 0


def cmd_stats(args: argparse.Namespace, config: RunConfig) -> int:
    stats = corpus_stats(_read(args, config))
    if args.freqs:
        write_frequencies(stats, args.freqs)
    print(f"sentences={stats.sentence_count} tokens={stats.token_count} types={stats.type_count}")
    return 0
