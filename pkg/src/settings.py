"""
Environment-driven settings. Values are read from the process environment,
after `load_dotenv()` has merged a local .env file.
"""
import logging
import os
from dataclasses import dataclass

from dotenv import load_dotenv

VERSION = "0.1.0"

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Settings:
    workers: int = 1
    results_dir: str = "."
    log_level: str = "WARNING"


def load_settings() -> Settings:
    load_dotenv()
    log_level = os.environ.get('QDOT_LOG_LEVEL', 'WARNING').upper()
    if not isinstance(logging.getLevelName(log_level), int):
        logger.warning("unknown QDOT_LOG_LEVEL %r, using WARNING", log_level)
        log_level = 'WARNING'
    try:
        workers = max(1, int(os.environ.get('QDOT_WORKERS', '1')))
    except ValueError:
        logger.warning("QDOT_WORKERS is not an integer, using 1")
        workers = 1
    return Settings(
        workers=workers,
        results_dir=os.environ.get('QDOT_RESULTS_DIR', '.'),
        log_level=log_level,
    )
