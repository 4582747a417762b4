"""Logging configuration for indforest."""
import logging
import os
import sys
from logging.handlers import RotatingFileHandler

LOGGER_NAME = "indforest"


def configure_logging(settings) -> logging.Logger:
    """
    Configure logging for the command-line application.

    Args:
        settings: Settings instance providing LOG_LEVEL and LOG_FILE

    Returns:
        The configured package logger
    """
    log_level = settings.LOG_LEVEL
    level = getattr(logging, log_level, logging.INFO)

    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(level)
    logger.propagate = False

    # Reconfiguring replaces the handlers of a previous call
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    formatter = logging.Formatter(
        "[%(asctime)s] [%(levelname)s] [%(module)s] %(message)s", "%Y-%m-%d %H:%M:%S"
    )

    # Console handler; stdout carries the JSON-lines reports
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    # File handler
    if settings.LOG_FILE:
        log_dir = os.path.dirname(settings.LOG_FILE)
        if log_dir and not os.path.exists(log_dir):
            os.makedirs(log_dir)
        file_handler = RotatingFileHandler(
            settings.LOG_FILE, maxBytes=10485760, backupCount=10  # 10MB
        )
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    logger.debug("Logging configured with level: %s", log_level)
    return logger
