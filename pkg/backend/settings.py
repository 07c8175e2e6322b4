"""
Runtime settings read from QUADPRIME_* environment variables and an optional .env file.
"""
import logging
from functools import lru_cache

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)


class Settings(BaseSettings):
    """Settings for sieve allocation and logging."""

    model_config = SettingsConfigDict(
        env_prefix="QUADPRIME_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    max_memory: int = Field(default=1 << 30, gt=0, description="Cap on sieve allocation in bytes")
    log_level: str = Field(default="WARNING")
    segment_size: int = Field(default=1 << 20, gt=0, description="Numbers per sieve segment")

    @field_validator("segment_size")
    @classmethod
    def _segment_multiple_of_64(cls, value: int) -> int:
        if value % 64:
            raise ValueError("segment_size must be a multiple of 64")
        return value

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in logging.getLevelNamesMapping():
            raise ValueError(f"Unknown log level: {value}")
        return level


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Get the process-wide settings instance."""
    settings = Settings()
    logger.info(f"Loaded settings: max_memory={settings.max_memory}, segment_size={settings.segment_size}")
    return settings
