"""Enumeration caps and the errors raised when they are exceeded.

The objects handled by this package grow combinatorially (codewords, subspaces,
index subsets), so every enumeration checks its size against a cap first and
fails loudly instead of hanging.  Caps live in a context variable so the CLI,
tests and worker threads can override them locally.
"""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass, replace
from typing import Iterator


class EnumerationTooLarge(RuntimeError):
    """Raised when a requested enumeration exceeds the configured cap."""

    def __init__(self, what: str, size: int, cap: int) -> None:
        super().__init__(f"enumeration too large: {what} has {size} items (cap {cap})")
        self.what = what
        self.size = size
        self.cap = cap


@dataclass(frozen=True)
class Limits:
    codewords: int = 2**16
    subspaces: int = 2**20
    subsets: int = 2**20
    field_order: int = 2**20


_current: contextvars.ContextVar[Limits] = contextvars.ContextVar("bsymbol_limits", default=Limits())


def current() -> Limits:
    return _current.get()


@contextlib.contextmanager
def use_limits(**overrides: int) -> Iterator[Limits]:
    """Temporarily override caps, e.g. ``with use_limits(codewords=2**20): ...``."""
    token = _current.set(replace(_current.get(), **overrides))
    try:
        yield _current.get()
    finally:
        _current.reset(token)


def check(what: str, size: int, cap_name: str) -> None:
    cap = getattr(current(), cap_name)
    if size > cap:
        raise EnumerationTooLarge(what, size, cap)
