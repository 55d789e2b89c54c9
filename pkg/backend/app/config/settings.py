from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict
from typing import Optional


class Settings(BaseSettings):
    """
    Application configuration settings
    """
    model_config = SettingsConfigDict(
        env_prefix="DEBRUIJN_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
    )

    # Application
    app_name: str = Field(default="De Bruijn Cross-Join Toolkit")
    app_version: str = Field(default="1.0.0")

    # Output Configuration
    default_format: str = Field(default="text")

    # Enumeration Configuration
    enumeration_budget: int = Field(default=100_000, gt=0)  # max cycles per budgeted run
    threads: int = Field(default=1, ge=1)
    partition_depth: int = Field(default=4, ge=1)

    # Counting Configuration (str() of ints past 4300 digits is refused by default)
    count_max_digits: int = Field(default=4000, gt=0)

    # Cross-join path Configuration (None means N steps)
    crossjoin_path_max_steps: Optional[int] = Field(default=None, gt=0)

    # Logging Configuration
    log_level: str = Field(default="INFO")
    log_file: Optional[str] = Field(default=None)


# Create settings instance
settings = Settings()
