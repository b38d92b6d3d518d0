"""
Configuration module with validation.
Settings are populated from explicit CLI flags only; no environment variables are read.
"""
import logging
from typing import Optional, Tuple

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict

from subcount.schemas.output_dto import ALL_METHODS, Method

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseSettings):
    """
    Run settings for the library and CLI.
    Uses Pydantic for validation and type safety.
    """

    # Application
    APP_VERSION: str = "1.0.0"

    # Logging
    LOG_LEVEL: str = "WARNING"
    LOG_FILE: Optional[str] = None
    LOG_MAX_BYTES: int = Field(default=10485760, ge=1024)  # 10MB
    LOG_BACKUP_COUNT: int = Field(default=5, ge=0)

    # Verification sweep
    VERIFY_MAX_WORKERS: int = Field(default=4, ge=1, le=64)

    # Counting
    DEFAULT_METHODS: Tuple[Method, ...] = ALL_METHODS

    model_config = SettingsConfigDict(
        case_sensitive=True,
        extra="ignore",
        frozen=True
    )

    @classmethod
    def settings_customise_sources(
            cls,
            settings_cls: type[BaseSettings],
            init_settings: PydanticBaseSettingsSource,
            env_settings: PydanticBaseSettingsSource,
            dotenv_settings: PydanticBaseSettingsSource,
            file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        """Only explicit initialisation arguments are honoured."""
        return (init_settings,)

    @field_validator("LOG_LEVEL")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Normalise and validate the logging level name."""
        level = v.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}")
        return level

    @field_validator("DEFAULT_METHODS")
    @classmethod
    def validate_default_methods(cls, v: Tuple[Method, ...]) -> Tuple[Method, ...]:
        """Paths run by `count` when no single method is requested; the first one is reported."""
        if not v:
            raise ValueError("DEFAULT_METHODS must name at least one computation path")
        if len(set(v)) != len(v):
            raise ValueError("DEFAULT_METHODS must not repeat a computation path")
        return v


def build_settings(**overrides) -> Settings:
    """
    Build settings from CLI overrides, dropping unset (None) values.

    Args:
        overrides: Field values keyed by setting name

    Returns:
        Validated settings
    """
    values = {key: value for key, value in overrides.items() if value is not None}
    return Settings(**values)


settings = Settings()
