"""Resource guards and run configuration."""

from __future__ import annotations

import contextlib
import json
import os
import dataclasses
from dataclasses import dataclass, replace
from pathlib import Path

CONFIG_ENV = "THOMPSON_ORE_CONFIG"


@dataclass(frozen=True)
class Limits:
    max_index: int = 2**16
    max_degree: int = 2**16
    max_terms: int = 10**6
    max_matrix_entries: int = 5 * 10**7
    max_enumeration: int = 10**6


_limits = Limits()


def get_limits() -> Limits:
    return _limits


def set_limits(limits: Limits) -> None:
    global _limits
    _limits = limits


@contextlib.contextmanager
def limits(**changes):
    """Temporarily override resource guards."""
    old = _limits
    set_limits(replace(old, **changes))
    try:
        yield _limits
    finally:
        set_limits(old)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Config:
    field: str = "q"
    prime: int = 2**31 - 1
    output: str = "json"
    identity_in_a: bool = False
    # default bounds for `search chain`; they cover the m = 2 lifted solution
    search_max_degree: int = 5
    search_max_index: int = 7
    limits: Limits = dataclasses.field(default_factory=Limits)

    def __post_init__(self):
        if self.field not in ("q", "fp"):
            raise ValueError(f"unknown field {self.field!r}")
        if self.field == "fp" and not (_is_prime(self.prime) and self.prime < 2**31):
            raise ValueError(f"prime must be a prime below 2^31, got {self.prime}")
        if self.output not in ("json", "text"):
            raise ValueError(f"unknown output mode {self.output!r}")
        if self.search_max_degree < 0 or self.search_max_index < 0:
            raise ValueError("search bounds must be nonnegative")
        for name in ("max_index", "max_degree", "max_terms", "max_matrix_entries", "max_enumeration"):
            if getattr(self.limits, name) <= 0:
                raise ValueError(f"{name} must be positive")

    @classmethod
    def load(cls, path: str | os.PathLike | None = None) -> "Config":
        """Read a JSON config file; falls back to $THOMPSON_ORE_CONFIG, then defaults."""
        path = path or os.environ.get(CONFIG_ENV)
        if not path:
            return cls()
        data = json.loads(Path(path).read_text())
        lim = Limits(**data.pop("limits", {}))
        return cls(limits=lim, **data)

    def make_field(self):
        from .field import QQ, GF

        return QQ if self.field == "q" else GF(self.prime)
