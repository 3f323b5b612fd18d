"""
Logging utilities for notemap
"""

import logging
import sys
from pathlib import Path
from typing import Optional

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logger(log_level: str = "WARNING", log_file: Optional[str] = None) -> logging.Logger:
    """Setup main application logger"""

    # Standard output carries command results, so diagnostics go to stderr
    handlers = [logging.StreamHandler(sys.stderr)]

    if log_file:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_path))

    logger = logging.getLogger('notemap')
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    formatter = logging.Formatter(LOG_FORMAT)
    for handler in handlers:
        handler.setFormatter(formatter)
        logger.addHandler(handler)

    logger.setLevel(getattr(logging, log_level.upper()))
    logger.propagate = False
    logger.debug(f"Logger initialized with level: {log_level}")

    return logger


def get_logger(name: str) -> logging.Logger:
    """Get logger instance for a module"""
    if name.startswith('notemap'):
        return logging.getLogger(name)
    return logging.getLogger(f'notemap.{name}')
