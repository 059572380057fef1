from functools import lru_cache
from typing import Literal

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    A configuration class for managing environment variables.

    Values are read from `ABELIAN_DECOMP_*` environment variables (or a `.env`
    file in the working directory) and act as the defaults for every run.
    Command-line flags override them per invocation.
    """

    model_config = SettingsConfigDict(
        env_prefix="ABELIAN_DECOMP_", env_file=".env", extra="ignore"
    )

    SEED: int = 0
    MARGIN_C: int = 3
    HSP_CAPACITY: int = 2**20
    RETRIES: int = 5
    OUTPUT_FORMAT: Literal["text", "structured"] = "text"
    CONCURRENT_BUCKET_LIMIT: int = 1
    VERIFY_ENUMERATION_LIMIT: int = 10**4
    LOG_LEVEL: str = "WARNING"


@lru_cache
def get_settings() -> Settings:
    return Settings()
