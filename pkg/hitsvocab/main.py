from __future__ import annotations

import sys
from typing import Optional, Sequence

from loguru import logger
from pydantic import ValidationError

from .cli.parser import build_parser, run_overrides
from .config import load_config
from .errors import HitsVocabError

USAGE_ERROR = 2


def configure_logging(verbose: bool = False, quiet: bool = False) -> None:
    level = "DEBUG" if verbose else "WARNING" if quiet else "INFO"
    logger.remove()
    logger.add(sys.stderr, level=level, format="<level>{level: <8}</level> {message}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose, args.quiet)
    try:
        config = load_config(args.config, **run_overrides(args))
        if args.save_config:
            config.save(args.save_config)
        return args.handler(args, config)
    except HitsVocabError as exc:
        logger.error("{}", exc)
        return exc.exit_code
    except ValidationError as exc:
        logger.error("invalid configuration: {}", exc)
        return USAGE_ERROR
    except (OSError, ValueError) as exc:
        logger.error("{}", exc)
        return USAGE_ERROR
    except KeyboardInterrupt:
        logger.info("hitsvocab terminated by user")
        return 130


if __name__ == "__main__":
    raise SystemExit(main())
