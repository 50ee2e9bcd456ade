"""
Centralized, environment-aware configuration.

This module uses `pydantic-settings` to load and validate resource caps and
logging options from environment variables (prefix ``VQCUBE_``), an optional
``.env`` file and, for the command line, a TOML config file. This provides a
single source of truth for every limit the services enforce.

Attributes:
    BASE_DIR (Path): The absolute path to the project root directory.
    settings (Settings): A singleton instance of the validated settings class.
"""

from pathlib import Path
from typing import Annotated
from typing import Any
from typing import Self

from pydantic import Field
from pydantic import model_validator
from pydantic_settings import BaseSettings
from pydantic_settings import SettingsConfigDict
from pydantic_settings import TomlConfigSettingsSource


BASE_DIR: Path = Path(__file__).resolve().parents[2]


class Settings(BaseSettings):
    """
    Defines and validates the resource caps and logging options.

    Inherits from `pydantic_settings.BaseSettings` to automatically load values
    from the environment or the `.env` file. Keyword arguments passed to the
    constructor win over both, which is how command-line flags and config
    files are layered on top.
    """

    model_config = SettingsConfigDict(
        env_prefix="VQCUBE_",
        env_file=BASE_DIR / ".env",
        case_sensitive=False,
        extra="ignore",
    )

    SIZE_CAP: Annotated[int, Field(default=20, gt=0)]
    EXHAUSTIVE_CAP: Annotated[int, Field(default=8, gt=0)]
    CYCLE_LENGTH_CAP: Annotated[int, Field(default=8, gt=0)]
    SAMPLE_COUNT: Annotated[int, Field(default=100, gt=0)]
    SEED: Annotated[int, Field(default=0, ge=0)]
    SMALL_GRAPH_CAP: Annotated[int, Field(default=16, gt=0)]
    BASE_CASE_CAP: Annotated[int, Field(default=3, ge=1, le=3)]

    DEBUG: Annotated[bool, Field(default=False)]
    LOG_LEVEL: Annotated[str, Field(default="WARNING")]
    LOG_FILE: Annotated[Path | None, Field(default=None)]

    @model_validator(mode="after")
    def _exhaustive_within_size_cap(self) -> Self:
        if self.EXHAUSTIVE_CAP > self.SIZE_CAP:
            raise ValueError(
                f"EXHAUSTIVE_CAP ({self.EXHAUSTIVE_CAP}) must not exceed "
                f"SIZE_CAP ({self.SIZE_CAP})"
            )
        return self

    @classmethod
    def layered(
        cls, config_path: Path | None = None, **overrides: Any
    ) -> "Settings":
        """
        Builds settings with precedence flags > config file > env > defaults.

        Keys in the TOML file and in `overrides` are matched case-insensitively
        against the field names; `None` overrides are ignored.
        """
        values: dict[str, Any] = {}
        if config_path is not None:
            if not config_path.is_file():
                raise FileNotFoundError(f"config file not found: {config_path}")
            toml_source = TomlConfigSettingsSource(cls, toml_file=config_path)
            values.update({k.upper(): v for k, v in toml_source.toml_data.items()})
        values.update({k.upper(): v for k, v in overrides.items() if v is not None})
        if "SIZE_CAP" in values and "EXHAUSTIVE_CAP" not in values:
            # A lowered size cap pulls the inherited exhaustive cap down with it.
            inherited = cls().EXHAUSTIVE_CAP
            values["EXHAUSTIVE_CAP"] = min(inherited, values["SIZE_CAP"])
        return cls(**values)


settings = Settings()
