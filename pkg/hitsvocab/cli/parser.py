from __future__ import annotations

import argparse
from pathlib import Path

from . import commands


def _run_options() -> argparse.ArgumentParser:
    """Options shared by every subcommand; unset flags stay ``None``."""
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("run configuration")
    group.add_argument("--config", type=Path, help="key=value configuration file")
    group.add_argument("--save-config", type=Path, help="write the effective configuration here")
    group.add_argument("--window", type=int, help="co-occurrence window width N (default 2)")
    group.add_argument(
        "--min-pair-count", type=int, help="zero pairs seen fewer times than this (default 2)"
    )
    group.add_argument("--scheme", choices=["freq", "ppmi"], help="edge weighting (default ppmi)")
    group.add_argument("--iterations", type=int, help="HITS iteration number (default 300)")
    group.add_argument("--norm", choices=["l2", "l1"], help="HITS normalization (default l2)")
    group.add_argument("--tolerance", type=float, help="stop HITS early below this change")
    group.add_argument(
        "--no-diagonal",
        dest="include_diagonal",
        action="store_const",
        const=False,
        help="do not count co-occurrences of a word with itself",
    )
    group.add_argument("--max-sentence-length", type=int, help="drop longer corpus sentences")
    group.add_argument("--vocab-size", type=int, help="vocabulary size including specials")
    group.add_argument("--unk-token", help="unknown word token (default <unk>)")
    group.add_argument("--specials", help="comma separated reserved tokens")
    logging_group = parent.add_argument_group("logging")
    verbosity = logging_group.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug output on stderr")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings and errors only")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parent = _run_options()
    parser = argparse.ArgumentParser(
        prog="hitsvocab",
        description="Rank corpus words by HITS hubness and build encoder vocabularies.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    count = sub.add_parser("count", parents=[parent], help="dump the co-occurrence graph")
    count.add_argument("corpus", type=Path)
    count.add_argument("-o", "--output", type=Path, required=True, help="graph TSV dump")
    count.add_argument("--weights", type=Path, help="also dump the weighted adjacency here")
    count.set_defaults(handler=commands.cmd_count)

    score = sub.add_parser("score", parents=[parent], help="dump HITS scores")
    score.add_argument("corpus", type=Path)
    score.add_argument("-o", "--output", type=Path, required=True, help="score TSV dump")
    score.set_defaults(handler=commands.cmd_score)

    select = sub.add_parser("select", parents=[parent], help="write a vocabulary file")
    select.add_argument("corpus", type=Path)
    select.add_argument("-k", type=int, dest="k", help="vocabulary size including specials")
    select.add_argument("-o", "--output", type=Path, required=True)
    source = select.add_mutually_exclusive_group()
    source.add_argument("--scores", type=Path, help="rank from an existing score dump")
    source.add_argument(
        "--freq-baseline", action="store_true", help="rank by corpus frequency instead of HITS"
    )
    select.add_argument("--with-scores", action="store_true", help="add a score column")
    select.set_defaults(handler=commands.cmd_select)

    apply = sub.add_parser("apply", parents=[parent], help="replace out-of-vocabulary words")
    apply.add_argument("corpus", type=Path)
    apply.add_argument("vocab", type=Path)
    apply.add_argument("-o", "--output", type=Path, required=True)
    apply.set_defaults(handler=commands.cmd_apply)

    diff = sub.add_parser("diff", parents=[parent], help="compare two vocabularies")
    diff.add_argument("corpus", type=Path, help="corpus the frequencies are taken from")
    diff.add_argument("vocab_a", type=Path)
    diff.add_argument("vocab_b", type=Path)
    diff.add_argument("-o", "--output", type=Path, required=True)
    diff.add_argument("--label-a", default="a")
    diff.add_argument("--label-b", default="b")
    diff.set_defaults(handler=commands.cmd_diff)

    split = sub.add_parser("split", parents=[parent], help="COMMON/DIFF split of a test set")
    split.add_argument("corpus", type=Path)
    split.add_argument("vocab_a", type=Path)
    split.add_argument("vocab_b", type=Path)
    split.add_argument("--common", type=Path, required=True)
    split.add_argument("--diff", type=Path, required=True)
    split.set_defaults(handler=commands.cmd_split)

    pos = sub.add_parser("pos", parents=[parent], help="POS tallies of vocabulary words")
    pos.add_argument("tagged", type=Path, help="word<TAB>tag corpus")
    pos.add_argument("vocabs", type=Path, nargs="*", metavar="VOCAB", help="two vocabularies")
    pos.add_argument("--words", type=Path, help="tally a single word list instead")
    pos.add_argument("-o", "--output", type=Path, required=True)
    pos.add_argument("--label-a", default="a")
    pos.add_argument("--label-b", default="b")
    pos.set_defaults(handler=commands.cmd_pos)

    stats = sub.add_parser("stats", parents=[parent], help="corpus statistics")
    stats.add_argument("corpus", type=Path)
    stats.add_argument("--freqs", type=Path, help="write the frequency table here")
    stats.set_defaults(handler=commands.cmd_stats)
    return parser


RUN_FIELDS = (
    "window",
    "min_pair_count",
    "scheme",
    "iterations",
    "norm",
    "tolerance",
    "include_diagonal",
    "max_sentence_length",
    "vocab_size",
    "unk_token",
    "specials",
)


def run_overrides(args: argparse.Namespace) -> dict:
    return {name: getattr(args, name, None) for name in RUN_FIELDS}
