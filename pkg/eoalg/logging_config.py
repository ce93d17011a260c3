"""
Logging configuration with an optional structured JSON format.

Log records go to stderr so that stdout carries only the rendered report.
"""
import json
import logging
import sys
from datetime import datetime, timezone
from typing import Optional, TextIO


class JsonFormatter(logging.Formatter):
    """JSON formatter producing one object per log record."""

    def format(self, record: logging.LogRecord) -> str:
        """Format log record as JSON."""
        log_entry = {
            "timestamp": datetime.now(timezone.utc).isoformat().replace("+00:00", "Z"),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno
        }

        if record.exc_info:
            log_entry["exception"] = self.formatException(record.exc_info)

        if hasattr(record, "extra_fields"):
            log_entry.update(record.extra_fields)

        return json.dumps(log_entry, ensure_ascii=False, default=str)


def setup_logging(level: str = "WARNING", log_format: str = "text",
                  stream: Optional[TextIO] = None) -> logging.Logger:
    """Configure the root logger and return the application logger.

    Args:
        level: Level name such as "DEBUG" or "info".
        log_format: "text" for human-readable lines, "json" for JsonFormatter.
        stream: Destination stream, stderr by default.

    Returns:
        The "eoalg" logger.
    """
    log_level = getattr(logging, level.upper(), logging.WARNING)

    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)

    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    console_handler = logging.StreamHandler(stream or sys.stderr)

    if log_format.lower() == "json":
        formatter = JsonFormatter()
    else:
        formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        )

    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)

    # sympy is chatty at DEBUG
    logging.getLogger("sympy").setLevel(logging.WARNING)

    app_logger = logging.getLogger("eoalg")
    app_logger.setLevel(log_level)

    return app_logger


def get_logger(name: str) -> logging.Logger:
    """Get a logger under the eoalg namespace."""
    return logging.getLogger(f"eoalg.{name}")


def log_with_extra(logger: logging.Logger, level: int, message: str, **extra_fields):
    """Log a message with extra fields for structured logging."""
    if not logger.isEnabledFor(level):
        return
    record = logger.makeRecord(
        logger.name, level, "", 0, message, (), None
    )
    record.extra_fields = extra_fields
    logger.handle(record)
