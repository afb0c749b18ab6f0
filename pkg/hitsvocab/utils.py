from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from loguru import logger

from .errors import InputFormatError


def ensure_parent(path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)


def write_lines(path: Path | str, lines: Iterable[str]) -> int:
    """Write newline-terminated UTF-8 lines, returning how many were written."""
    file_path = Path(path)
    ensure_parent(file_path)
    count = 0
    with file_path.open("w", encoding="utf-8", newline="\n") as handle:
        for line in lines:
            handle.write(line)
            handle.write("\n")
            count += 1
    logger.debug("Wrote {} lines to {}", count, file_path)
    return count


def read_lines(
    path: Path | str, error_cls: type[InputFormatError] = InputFormatError
) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, text)`` with the trailing newline removed.

    Lines are decoded one by one so that a decoding failure can be reported
    with its line number.
    """
    file_path = Path(path)
    with file_path.open("rb") as handle:
        for number, raw in enumerate(handle, start=1):
            try:
                text = raw.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise error_cls(f"invalid UTF-8 ({exc.reason})", path=file_path, line=number) from exc
            yield number, text.rstrip("\r\n")


def format_score(value: float) -> str:
    return f"{value:.8g}"
