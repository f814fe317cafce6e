"""
Console helpers: colored user messages and the logger factory used by every module.

Stdout carries reports only, so both the colored messages and the log records go to stderr.
"""

import logging
import sys

from colorama import Fore, Style, init

from src.constants import LOG_LEVEL

# Initialize colorama
init()

LEVEL_COLORS: dict[int, str] = {
    logging.DEBUG: Fore.BLUE,
    logging.INFO: Fore.CYAN,
    logging.WARNING: Fore.YELLOW,
    logging.ERROR: Fore.RED,
    logging.CRITICAL: Fore.MAGENTA,
}


class ColorFormatter(logging.Formatter):
    """
    Formatter painting the level name with its colorama color
    """

    def format(self, record: logging.LogRecord) -> str:
        color = LEVEL_COLORS.get(record.levelno, "")
        message = super().format(record)
        return f"{color}{message}{Style.RESET_ALL}"


def print_error(message: str) -> None:
    """
    Prints error message in red color.

    Parameters:
        message (str): Error message to display
    """
    print(f"{Fore.RED}{message}{Style.RESET_ALL}", file=sys.stderr)


def print_warning(message: str) -> None:
    """
    Prints warning message in yellow color.

    Parameters:
        message (str): Warning message to display
    """
    print(f"{Fore.YELLOW}{message}{Style.RESET_ALL}", file=sys.stderr)


def print_success(message: str) -> None:
    """
    Prints success message in green color.

    Parameters:
        message (str): Success message to display
    """
    print(f"{Fore.GREEN}{message}{Style.RESET_ALL}", file=sys.stderr)


def get_logger(name: str) -> logging.Logger:
    """
    Returns the module logger, attaching the shared colored stderr handler to the package root
    the first time it is requested.

    :param name: Logger name, usually __name__
    :return: Configured logger
    """
    root = logging.getLogger("src")
    if not root.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(ColorFormatter("%(levelname)s %(name)s: %(message)s"))
        root.addHandler(handler)
        root.setLevel(LOG_LEVEL)
        root.propagate = False
    return logging.getLogger(name)


def set_log_level(level: str) -> None:
    """
    Overrides the package log level (used by the --log-level flag)
    """
    get_logger("src").setLevel(level.upper())
