from __future__ import annotations

import pathlib
from typing import Any, List, Optional

from dotenv import dotenv_values
from loguru import logger
from pydantic import BaseSettings, Field, root_validator, validator

from .graph.hits import HitsConfig, Norm
from .graph.weighting import Scheme
from .utils import write_lines
from .vocab.ranking import UNK


class RunConfig(BaseSettings):
    """Pipeline settings shared by every subcommand."""

    window: int = Field(2, env="HITSVOCAB_WINDOW")
    min_pair_count: int = Field(2, env="HITSVOCAB_MIN_PAIR_COUNT")
    scheme: Scheme = Field(Scheme.PPMI, env="HITSVOCAB_SCHEME")
    iterations: int = Field(300, env="HITSVOCAB_ITERATIONS")
    vocab_size: Optional[int] = Field(None, env="HITSVOCAB_VOCAB_SIZE")
    include_diagonal: bool = Field(True, env="HITSVOCAB_INCLUDE_DIAGONAL")
    norm: Norm = Field(Norm.L2, env="HITSVOCAB_NORM")
    tolerance: Optional[float] = Field(None, env="HITSVOCAB_TOLERANCE")
    max_sentence_length: Optional[int] = Field(None, env="HITSVOCAB_MAX_SENTENCE_LENGTH")
    unk_token: str = Field(UNK, env="HITSVOCAB_UNK_TOKEN")
    specials: List[str] = Field(default_factory=lambda: [UNK], env="HITSVOCAB_SPECIALS")

    class Config:
        case_sensitive = False

        @classmethod
        def parse_env_var(cls, field_name: str, raw_val: str) -> Any:
            if field_name == "specials":
                return raw_val
            return cls.json_loads(raw_val)

    @validator("window", "min_pair_count", "iterations", "vocab_size", "max_sentence_length")
    def _positive(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value < 1:
            raise ValueError("must be a positive integer")
        return value

    @validator("tolerance")
    def _nonnegative(cls, value: Optional[float]) -> Optional[float]:
        if value is not None and value < 0:
            raise ValueError("must be nonnegative")
        return value

    @validator("scheme", "norm", pre=True)
    def _lowercase(cls, value: Any) -> Any:
        if isinstance(value, str):
            return value.strip().lower()
        return value

    @validator("specials", pre=True)
    def _split_specials(cls, value: Any) -> Any:
        if isinstance(value, str):
            return [token.strip() for token in value.split(",") if token.strip()]
        return value

    @validator("vocab_size", "tolerance", "max_sentence_length", pre=True)
    def _blank_is_none(cls, value: Any) -> Any:
        if isinstance(value, str) and value.strip().lower() in ("", "none"):
            return None
        return value

    @root_validator(skip_on_failure=True)
    def _unk_in_specials(cls, values: dict) -> dict:
        specials = values["specials"]
        if values["unk_token"] not in specials:
            values["specials"] = [values["unk_token"], *specials]
        if len(set(values["specials"])) != len(values["specials"]):
            raise ValueError("specials must not repeat")
        return values

    def hits_config(self) -> HitsConfig:
        return HitsConfig(iterations=self.iterations, norm=self.norm, tolerance=self.tolerance)

    def dump(self) -> list[str]:
        lines = []
        for key, value in self.dict().items():
            if value is None:
                text = ""
            elif isinstance(value, list):
                text = ",".join(value)
            elif isinstance(value, bool):
                text = "true" if value else "false"
            elif hasattr(value, "value"):
                text = value.value
            else:
                text = str(value)
            lines.append(f"{key}={text}")
        return lines

    def save(self, path: pathlib.Path | str) -> None:
        write_lines(path, self.dump())
        logger.debug("Saved run configuration to {}", path)


def load_config(path: Optional[pathlib.Path | str] = None, **overrides: Any) -> RunConfig:
    """Build a RunConfig from a key=value file plus explicit overrides.

    Overrides that are ``None`` are ignored, so unset command line flags fall
    through to the file, then the environment, then the defaults.
    """
    values: dict[str, Any] = {}
    if path is not None:
        file_path = pathlib.Path(path).expanduser()
        if not file_path.is_file():
            raise FileNotFoundError(f"configuration file not found: {file_path}")
        for key, value in dotenv_values(file_path).items():
            values[key.strip().lower()] = value
    values.update({key: value for key, value in overrides.items() if value is not None})
    config = RunConfig(**values)
    logger.debug("Configuration loaded: {}", config.dict())
    return config


__all__ = ["RunConfig", "load_config"]
