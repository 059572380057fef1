from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from .settings import Settings, get_settings


class RunConfig(BaseModel):
    """Per-run knobs for the decomposition pipeline and the CLI."""

    model_config = ConfigDict(frozen=True)

    seed: int = 0
    margin_c: int = Field(default=3, ge=0)
    capacity: int = Field(default=2**20, ge=1)
    retries: int = Field(default=5, ge=0)
    output_format: Literal["text", "structured"] = "text"
    concurrency: int = Field(default=1, ge=1)
    verify_enumeration_limit: int = Field(default=10**4, ge=0)
    # None means "bit length of the group's exponent bound"
    k: Optional[int] = Field(default=None, ge=1)

    @classmethod
    def from_settings(cls, settings: Optional[Settings] = None, **overrides):
        """Build a config from environment settings, then apply explicit overrides."""
        settings = settings or get_settings()
        values = {
            "seed": settings.SEED,
            "margin_c": settings.MARGIN_C,
            "capacity": settings.HSP_CAPACITY,
            "retries": settings.RETRIES,
            "output_format": settings.OUTPUT_FORMAT,
            "concurrency": settings.CONCURRENT_BUCKET_LIMIT,
            "verify_enumeration_limit": settings.VERIFY_ENUMERATION_LIMIT,
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)
