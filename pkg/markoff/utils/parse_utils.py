"""
Utility functions for parsing command-line values.
"""

import re
from typing import List, Tuple

from markoff.errors import InputError

_POWER = re.compile(r"^\s*(\d+)\s*(?:\^|\*\*)\s*(\d+)\s*$")
_SCIENTIFIC = re.compile(r"^\s*(\d+)[eE](\d+)\s*$")
_DIGITS = re.compile(r"^\s*(\d+)\s*$")

MAX_EXPONENT = 100_000


def parse_bound(text: str) -> int:
    """
    Parse a bound written as ``1e100``, ``10^100``, ``10**100`` or plain digits.

    Args:
        text (str): The bound.

    Returns:
        int: The exact integer, at least 1.
    """

    text = str(text)
    match = _POWER.match(text)
    if match:
        base, exponent = int(match.group(1)), int(match.group(2))
        if exponent > MAX_EXPONENT:
            raise InputError(f"exponent {exponent} is too large")
        value = base**exponent
    elif _SCIENTIFIC.match(text):
        match = _SCIENTIFIC.match(text)
        exponent = int(match.group(2))
        if exponent > MAX_EXPONENT:
            raise InputError(f"exponent {exponent} is too large")
        value = int(match.group(1)) * 10**exponent
    elif _DIGITS.match(text):
        value = int(text)
    else:
        raise InputError(f"cannot read {text!r} as a bound")
    if value < 1:
        raise InputError(f"the bound must be >= 1, got {text!r}")
    return value


def power_of_ten(value: int) -> int:
    """k with value = 10^k, or an InputError."""
    digits = str(value)
    if digits[0] != "1" or set(digits[1:]) - {"0"}:
        raise InputError(f"{value} is not a power of ten")
    return len(digits) - 1


def parse_ints(text: str, sep: str = ",") -> List[int]:
    """Comma-separated integers; brackets and blanks are ignored."""
    cleaned = str(text).strip().strip("[]()")
    if not cleaned:
        return []
    try:
        return [int(x) for x in cleaned.split(sep)]
    except ValueError as exc:
        raise InputError(f"cannot read {text!r} as a list of integers") from exc


def parse_triple(text: str) -> Tuple[int, int, int]:
    values = parse_ints(text)
    if len(values) != 3:
        raise InputError(f"expected three integers e,g,f, got {text!r}")
    return values[0], values[1], values[2]


def parse_pair(text: str) -> Tuple[int, int]:
    values = parse_ints(text)
    if len(values) != 2:
        raise InputError(f"expected two integers, got {text!r}")
    return values[0], values[1]
