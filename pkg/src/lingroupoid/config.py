"""Size guards shared by every module.

Each expensive operation checks its input against a :class:`Limits` instance
and raises :class:`GuardError` instead of running for hours.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


class GuardError(ValueError):
    """An input exceeds a configured size guard."""


class ParseError(ValueError):
    """Malformed bracketing, permutation, identity or table text."""


class DomainError(ValueError):
    """Arguments are well-formed but outside an operation's domain."""


@dataclass(frozen=True)
class Limits:
    max_catalan_n: int = 20
    hedron_max_nodes: int = 5000
    bfs_max_states: int = 10**7
    bitmap_max_states: int = 10**7
    max_degree: int = 512
    enumerate_max_n: int = 5
    census_max_n: int = 8
    search_max_order: int = 6
    group_method_max_m: int = 6
    bfs_method_max_m: int = 7

    def unsafe(self) -> "Limits":
        """Same limits with every guard lifted (the bitmap threshold is kept)."""
        big = 10**18
        return replace(
            self,
            max_catalan_n=10**4,
            hedron_max_nodes=big,
            bfs_max_states=big,
            max_degree=big,
            enumerate_max_n=big,
            census_max_n=big,
            search_max_order=big,
            group_method_max_m=big,
            bfs_method_max_m=big,
        )


DEFAULT_LIMITS = Limits()
