"""Common types and helpers shared across models."""

import time
from collections.abc import Iterable
from dataclasses import dataclass
from typing import TypeAlias

Clique: TypeAlias = tuple[int, ...]


def make_clique(vertices: Iterable[int]) -> Clique:
    """Canonical clique form: sorted ascending, duplicates dropped."""
    return tuple(sorted(set(vertices)))


@dataclass(frozen=True)
class Deadline:
    """A stop signal on the monotonic clock. ``at=None`` never fires."""

    at: float | None = None

    @classmethod
    def never(cls) -> "Deadline":
        return cls(None)

    def expired(self) -> bool:
        return self.at is not None and time.monotonic() >= self.at
