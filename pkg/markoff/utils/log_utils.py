"""
Status lines on standard error, so that standard output carries only data.
"""

import sys

RED = "\033[31m"
YELLOW = "\033[33m"
RESET = "\033[0m"

_quiet = False


def set_quiet(quiet: bool) -> None:
    global _quiet
    _quiet = bool(quiet)


def is_quiet() -> bool:
    return _quiet


def info(message: str) -> None:
    if not _quiet:
        print(message, file=sys.stderr)


def warn(message: str) -> None:
    if not _quiet:
        print(f"{YELLOW}Warning: {message}{RESET}", file=sys.stderr)


def error(message: str) -> None:
    # errors are printed even when quiet
    print(f"{RED}Error: {message}{RESET}", file=sys.stderr)
