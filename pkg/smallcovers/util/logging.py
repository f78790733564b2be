"""Package logger plumbing: the `LoggingClass` mixin and the CLI handler setup."""
import logging
import typing


ROOT_LOGGER = "smallcovers"
LOG_FORMAT = "%(asctime)-15s | %(levelname)-8s | %(name)s | %(message)s"


class LoggingClass:
    """Mixin giving each instance a lazily created logger under the package namespace."""

    _log: logging.Logger

    @property
    def log(self) -> logging.Logger:
        """
        Get the logger named after this class.

        Returns:
            `logging.Logger`: A child of the package logger named after the class.
        """
        if not hasattr(self, "_log"):
            self._log = logging.getLogger(f"{ROOT_LOGGER}.{self.__class__.__name__}")

        return self._log


def configure(verbosity: int = 0, stream: typing.Optional[typing.TextIO] = None) -> logging.Logger:
    """
    Install a single stream handler on the package logger.

    Args:
        verbosity (int, optional): 0 for warnings only, 1 for info and 2 or more for debug output.
        stream (file, optional): Where records are written, defaults to stderr.

    Returns:
        `logging.Logger`: The configured package logger.
    """
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logger = logging.getLogger(ROOT_LOGGER)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)

    handler = logging.StreamHandler(stream)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(handler)
    logger.setLevel(level)
    return logger


__all__ = ["ROOT_LOGGER", "LOG_FORMAT", "LoggingClass", "configure"]
