"""
Logging configuration for knotsig
"""

import os
import sys
from pathlib import Path
from loguru import logger
from typing import Optional

_configured = False


def configure_logging(
    level: Optional[str] = None,
    log_file: Optional[str] = None,
):
    """
    Install the console (and optional file) handlers.

    Args:
        level: Logging level, defaults to KNOTSIG_LOG_LEVEL or WARNING
        log_file: Optional file path for logging

    Returns:
        The loguru logger
    """
    global _configured
    level = level or os.getenv("KNOTSIG_LOG_LEVEL", "WARNING")

    # Remove default handler
    logger.remove()
    logger.configure(extra={"name": "knotsig"})

    # stderr only: stdout carries command output and must stay deterministic
    logger.add(
        sys.stderr,
        format="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | "
               "<level>{level: <8}</level> | "
               "<cyan>{extra[name]}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> | "
               "<level>{message}</level>",
        level=level,
        colorize=True,
    )

    if log_file:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)

        logger.add(
            log_file,
            format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {extra[name]}:{function}:{line} | {message}",
            level=level,
            rotation="10 MB",
            retention="30 days",
            compression="gz",
        )

    _configured = True
    return logger


def get_logger(name: str = "knotsig"):
    """
    Get a logger bound to a module name.

    Handlers are installed on first use; call configure_logging again to
    change level or add a file sink.
    """
    if not _configured:
        configure_logging()
    return logger.bind(name=name)


log = get_logger()
