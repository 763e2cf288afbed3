"""
Configuration module for the hypersparse semiring engine.

Centralizes all configuration values and environment variables. A `.env`
file in the working directory is honoured; command-line flags override
anything set here.
"""

import os
from typing import Optional

from dotenv import load_dotenv

# Load environment variables
load_dotenv()


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    return int(value) if value not in (None, "") else default


def _env_float(name: str, default: Optional[float]) -> Optional[float]:
    value = os.getenv(name)
    return float(value) if value not in (None, "") else default


class Config:
    """Application configuration class."""

    # Partitioning
    PARTITIONS = _env_int("HYPERSPARSE_PARTITIONS", 4)
    STRATEGY = os.getenv("HYPERSPARSE_STRATEGY", "random")
    BLOCK_SIZE = _env_int("HYPERSPARSE_BLOCK_SIZE", 2)  # row-block-cyclic run length
    SEED = _env_int("HYPERSPARSE_SEED", 1)
    TRAFFIC_MODE = os.getenv("HYPERSPARSE_MODE", "source")
    MAX_WORKERS = _env_int("HYPERSPARSE_MAX_WORKERS", 0)  # 0 = CPU count

    # Algebra
    SEMIRING = os.getenv("HYPERSPARSE_SEMIRING", "arith-nat")
    AXIOM_TRIALS = _env_int("HYPERSPARSE_AXIOM_TRIALS", 1000)
    PATH_GUARD = _env_int("HYPERSPARSE_PATH_GUARD", 10_000)
    ENUMERATION_BUDGET = _env_int("HYPERSPARSE_ENUMERATION_BUDGET", 1_000_000)

    # Streaming
    STREAM_MODE = os.getenv("HYPERSPARSE_STREAM_MODE", "fixed-m")
    WINDOW_M = _env_int("HYPERSPARSE_WINDOW_M", 64)
    WINDOW_T = _env_float("HYPERSPARSE_WINDOW_T", None)  # seconds
    SAMPLING_DT = _env_float("HYPERSPARSE_SAMPLING_DT", 1.0)  # seconds
    LEVELS = _env_int("HYPERSPARSE_LEVELS", 4)
    BUFFER_CAPACITY = _env_int("HYPERSPARSE_BUFFER_CAPACITY", 8)

    # Logging Settings
    LOG_DIR = os.getenv("HYPERSPARSE_LOG_DIR", "logs")
    LOG_MAX_BYTES = 10 * 1024 * 1024  # 10 MB
    LOG_BACKUP_COUNT = 5
    LOG_FORMAT_FILE = '%(asctime)s | %(levelname)-8s | %(funcName)-20s | %(message)s'
    LOG_FORMAT_CONSOLE = '%(levelname)-8s | %(message)s'
    LOG_DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


# Create a singleton instance
config = Config()
