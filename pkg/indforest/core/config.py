"""Configuration settings for indforest using pydantic-settings."""
import os
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings using pydantic-settings."""

    # Environment
    APP_ENV: str = Field(
        default="development", description="Settings profile", examples=["development"]
    )
    DEBUG: bool = Field(default=True, description="Debug mode", examples=[True])

    # Logging
    LOG_LEVEL: str = Field(
        default="INFO", description="Logging level", examples=["INFO"]
    )
    LOG_FILE: Optional[str] = Field(
        default=None,
        description="Rotating log file; console only when unset",
        examples=["logs/indforest.log"],
    )

    # Solver
    SOLVER_NODE_BUDGET: int = Field(
        default=10**7,
        description="Branch-and-bound node budget per exact solve",
        examples=[10**7],
    )
    BRUTEFORCE_MAX_N: int = Field(
        default=20,
        description="Largest vertex count accepted by the subset-enumeration oracle",
        examples=[20],
    )
    BUILD_EXACT_MAX_N: int = Field(
        default=18,
        description="Forest builder solves exactly at or below this vertex count",
        examples=[18],
    )

    # Inequality checks
    INEQ1_RANGE: int = Field(
        default=200, description="Upper value of a_1, a_2", examples=[200]
    )
    INEQ1_MIN_K: int = Field(
        default=0, description="Smallest shared-vertex count k", examples=[0]
    )
    INEQ2_RANGE: int = Field(
        default=60, description="Upper value of a, a_i, b_j", examples=[60]
    )
    INEQ2_MAX_K: int = Field(default=4, description="Largest k", examples=[4])
    INEQ2_MAX_L: int = Field(default=2, description="Largest |L|", examples=[2])
    INEQ2_MAX_C: int = Field(default=10, description="Upper value of c", examples=[10])

    # Corpus generation
    RANDOM_SEED: int = Field(default=0, description="Generator seed", examples=[0])
    QUAD_MIN_N: int = Field(
        default=6,
        description="Smallest random quadrangulation size",
        examples=[6],
    )
    QUAD_MAX_N: int = Field(
        default=20,
        description="Largest random quadrangulation size",
        examples=[20],
    )

    # Harness
    WORKERS: int = Field(
        default=1, description="Worker processes for corpus runs", examples=[1]
    )
    REPORT_TIMING: bool = Field(
        default=False,
        description="Include wall-clock timing in reports",
        examples=[False],
    )

    @field_validator("LOG_LEVEL", mode="before")
    @classmethod
    def normalize_log_level(cls, v) -> str:
        """Normalize the log level name."""
        if isinstance(v, str):
            return v.strip().upper()
        return v

    @field_validator(
        "SOLVER_NODE_BUDGET",
        "BRUTEFORCE_MAX_N",
        "INEQ1_RANGE",
        "INEQ2_RANGE",
        "WORKERS",
    )
    @classmethod
    def positive(cls, v: int) -> int:
        """Reject non-positive limits."""
        if v < 1:
            raise ValueError("must be at least 1")
        return v

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", case_sensitive=True, extra="ignore"
    )


class TestingSettings(Settings):
    """Testing configuration."""

    APP_ENV: str = Field(
        default="testing", description="Settings profile", examples=["testing"]
    )
    LOG_LEVEL: str = Field(
        default="WARNING", description="Logging level", examples=["WARNING"]
    )
    SOLVER_NODE_BUDGET: int = Field(
        # keeps a runaway test from hanging the suite
        default=2 * 10**6,
        description="Branch-and-bound node budget per exact solve",
        examples=[2 * 10**6],
    )


class DevelopmentSettings(Settings):
    """Development configuration."""

    DEBUG: bool = Field(default=True, description="Debug mode", examples=[True])


class ProductionSettings(Settings):
    """Production configuration."""

    APP_ENV: str = Field(
        default="production", description="Settings profile", examples=["production"]
    )
    DEBUG: bool = Field(default=False, description="Debug mode", examples=[False])
    LOG_FILE: Optional[str] = Field(
        default="logs/indforest.log",
        description="Rotating log file; console only when unset",
        examples=["logs/indforest.log"],
    )


# Map environment to configurations
config_by_name = {
    "development": DevelopmentSettings,
    "testing": TestingSettings,
    "production": ProductionSettings,
}


def get_settings(env: Optional[str] = None) -> Settings:
    """Get settings for the named environment, or for INDFOREST_ENV."""
    env = env or os.getenv("INDFOREST_ENV", "development")
    return config_by_name.get(env, DevelopmentSettings)()
