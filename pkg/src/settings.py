"""Runtime settings.

Values come from the environment, optionally seeded from a ``.env`` file.
"""

import os
from dataclasses import dataclass, field
from functools import lru_cache

from dotenv import load_dotenv

_ = load_dotenv()


@dataclass(frozen=True)
class Settings:
    """Get settings from environment variables."""

    WSNSIM_OUT: str = field(default_factory=lambda: os.environ.get("WSNSIM_OUT", "out"))
    WSNSIM_LOG_LEVEL: str = field(
        default_factory=lambda: os.environ.get("WSNSIM_LOG_LEVEL", "INFO")
    )


@lru_cache
def get_settings() -> Settings:
    """Cache settings instance.

    Returns:
        Settings: The settings instance.
    """
    return Settings()


CONFIG = get_settings()
