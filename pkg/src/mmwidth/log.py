from __future__ import annotations

import logging
import logging.config
from functools import cached_property

__all__ = ["Loggable", "set_verbosity"]

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import MutableMapping
    from typing import Any, ClassVar

PACKAGE_LOGGER = "mmwidth"

if TYPE_CHECKING:
    _LoggerAdapter = logging.LoggerAdapter[logging.Logger]
else:
    _LoggerAdapter = logging.LoggerAdapter


class GlobalFormatter(logging.Formatter):
    """Formatter shared by every ``mmwidth`` handler.

    Produces ``[time][LEVEL][Class -> name]: message``. The bracketed
    object context only appears for records emitted through a
    :class:`Loggable`; INFO records are printed without source location,
    everything else gets a ``(file:line)`` suffix.
    """

    _head: ClassVar[str] = "[%(asctime)s][%(levelname)s]"

    def __init__(self, datefmt: str) -> None:
        super().__init__(datefmt=datefmt)

    @staticmethod
    def _context(record: logging.LogRecord) -> str:
        clsname = getattr(record, "clsname", None)
        if not clsname:
            return ""
        if getattr(record, "uid", None):
            return "[%(clsname)s -> %(uid)s]"
        return "[%(clsname)s]"

    def format(self, record: logging.LogRecord) -> str:
        """Render the record with its optional object context."""
        record.message = record.getMessage()
        record.asctime = self.formatTime(record, self.datefmt)
        fmt = self._head + self._context(record) + ": %(message)s"
        if record.levelno != logging.INFO:
            fmt += " (%(filename)s:%(lineno)d)"
        return fmt % record.__dict__


class ContextualAdapter(_LoggerAdapter):
    """Adapter that tags records with the emitting object's class and name.

    Parameters
    ----------
    logger: logging.Logger
        Logger instance to wrap.
    obj: Any
        The solver or pipeline emitting the records; its ``name``
        attribute, if any, becomes the record ``uid``.
    """

    logger: logging.Logger

    def __init__(self, logger: logging.Logger, obj: Any) -> None:
        super().__init__(logger, {"obj": obj})
        self.obj = obj

    def process(
        self, msg: str, kwargs: MutableMapping[str, Any]
    ) -> tuple[str, MutableMapping[str, Any]]:
        """Attach ``clsname`` and ``uid`` to the record extras."""
        extra: dict[str, Any] = dict(kwargs.get("extra") or {})
        extra.setdefault("clsname", type(self.obj).__name__)
        extra.setdefault("uid", getattr(self.obj, "name", None))
        kwargs["extra"] = extra
        return msg, kwargs


class LevelBand(logging.Filter):
    """Pass records either below INFO or at INFO and above.

    Parameters
    ----------
    verbose: bool
        ``True`` keeps only DEBUG-and-lower records, ``False`` keeps the rest.
    """

    def __init__(self, verbose: bool) -> None:
        super().__init__()
        self.verbose = verbose

    def filter(self, record: logging.LogRecord) -> bool:
        """Return whether the record falls in this band."""
        return (record.levelno < logging.INFO) is self.verbose


def _stderr_handler(level: str, verbose: bool) -> dict[str, Any]:
    return {
        "class": "logging.StreamHandler",
        "level": level,
        "formatter": "default",
        # stdout carries the JSON reports
        "stream": "ext://sys.stderr",
        "filters": ["debug_band" if verbose else "info_band"],
    }


logging.config.dictConfig(
    {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "default": {"()": lambda: GlobalFormatter(datefmt="%d-%m-%y|%H:%M:%S")}
        },
        "filters": {
            "info_band": {"()": LevelBand, "verbose": False},
            "debug_band": {"()": LevelBand, "verbose": True},
        },
        "handlers": {
            "info": _stderr_handler("INFO", verbose=False),
            "debug": _stderr_handler("DEBUG", verbose=True),
        },
        "loggers": {
            PACKAGE_LOGGER: {
                "level": "INFO",
                "propagate": True,
                "handlers": ["info", "debug"],
            }
        },
    }
)


def set_verbosity(level: int) -> None:
    """Set the level of the package logger (``-v`` / ``-q`` on the CLI)."""
    logging.getLogger(PACKAGE_LOGGER).setLevel(level)


class Loggable:
    """Mixin giving instances a ``logger`` that tags records with their identity."""

    @cached_property
    def logger(self) -> logging.LoggerAdapter[logging.Logger]:
        """Package logger wrapped in a :class:`ContextualAdapter` for ``self``."""
        return ContextualAdapter(logging.getLogger(PACKAGE_LOGGER), self)
