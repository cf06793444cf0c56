"""Safety bounds for the enumerative cliffs, overridable via environment.

The practical limits are the Lyndon-word enumeration (counts grow like
k^m / m) and the partition-complex nerve (explodes past n = 8).  Bounds
are read from the environment on each call so tests and callers can
raise them deliberately.
"""

import os

from .errors import BoundError

_ENV_PREFIX = "TOWERCALC_"

DEFAULT_MAX_WORD_LENGTH = 12
DEFAULT_MAX_GENERATORS = 4
DEFAULT_MAX_PARTITION_N = 8
DEFAULT_MAX_BETTI_N = 7
DEFAULT_MAX_FILTRATION_N = 20


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(_ENV_PREFIX + name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise BoundError(f"environment override {_ENV_PREFIX}{name}={raw!r} is not an integer")


def max_word_length() -> int:
    return _env_int("MAX_WORD_LENGTH", DEFAULT_MAX_WORD_LENGTH)


def max_generators() -> int:
    return _env_int("MAX_GENERATORS", DEFAULT_MAX_GENERATORS)


def max_partition_n() -> int:
    return _env_int("MAX_PARTITION_N", DEFAULT_MAX_PARTITION_N)


def max_betti_n() -> int:
    return _env_int("MAX_BETTI_N", DEFAULT_MAX_BETTI_N)


def max_filtration_n() -> int:
    return _env_int("MAX_FILTRATION_N", DEFAULT_MAX_FILTRATION_N)


def check_bound(value: int, bound: int, what: str) -> None:
    if value > bound:
        raise BoundError(f"{what} = {value} exceeds the safety bound {bound}")
