"""Identity-hedrons and implication between linear identities.

``H(phi, m)`` has one node per bracketing of length ``m`` and one arrow per
single application of ``phi`` to the linear term of that shape, labelled by
the induced permutation of leaf positions. A journey composes arrow labels
left to right; ``phi`` implies ``psi = <m|i|j|g>`` exactly when a journey
leads from state ``(i, id)`` to state ``(j, g)``.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from functools import cached_property

from .config import DEFAULT_LIMITS, GuardError, Limits
from .identities import LinearIdentity, canonicalize
from .permgroup import Permutation, mul
from .terms import (
    all_bracketings,
    all_rewrites,
    canonical_term,
    catalan,
    encode_bracketing,
    format_bracketing,
    shape,
)


@dataclass(frozen=True)
class Arrow:
    src: int
    dst: int
    perm: Permutation

    def key(self) -> tuple:
        return (self.src, self.dst, self.perm.one_line())

    def inverse(self) -> "Arrow":
        return Arrow(self.dst, self.src, self.perm.inverse())


@dataclass(frozen=True)
class Hedron:
    m: int
    arrows: tuple[Arrow, ...]

    @property
    def nodes(self) -> range:
        return range(catalan(self.m, Limits().unsafe()))

    @cached_property
    def adjacency(self) -> list[list[tuple[int, tuple]]]:
        adj: list[list[tuple[int, tuple]]] = [[] for _ in self.nodes]
        for a in self.arrows:
            adj[a.src].append((a.dst, a.perm.images))
        return adj

    def arrows_between(self, src: int, dst: int) -> list[Arrow]:
        return [a for a in self.arrows if a.src == src and a.dst == dst]

    def arrow_pairs(self) -> list[Arrow]:
        """One arrow from each mutually inverse pair (``src <= dst`` side).

        For loops the pair is ``{(i,i,p), (i,i,p^-1)}`` and the member with
        the smaller one-line image is kept.
        """
        out = []
        for a in self.arrows:
            b = a.inverse()
            if a.src < a.dst or (a.src == a.dst and a.key() <= b.key()):
                out.append(a)
        return out

    def to_records(self) -> list[dict]:
        return [{"src": a.src, "dst": a.dst, "perm": str(a.perm)} for a in self.arrows]

    def to_json(self) -> str:
        return json.dumps({"m": self.m, "arrows": self.to_records()}, indent=2)


def _check_nodes(m: int, limits: Limits) -> int:
    if m < 1:
        raise GuardError(f"term length {m} must be positive")
    c = catalan(m, limits)
    if c > limits.hedron_max_nodes:
        raise GuardError(f"hedron for m={m} has {c} nodes, limit {limits.hedron_max_nodes}")
    return c


def build_hedron(phi: LinearIdentity, m: int, limits: Limits = DEFAULT_LIMITS) -> Hedron:
    _check_nodes(m, limits)
    found: dict[tuple, Arrow] = {}
    for i, t in enumerate(all_bracketings(m, limits)):
        for step, v in all_rewrites(canonical_term(t), phi):
            a = Arrow(i, encode_bracketing(shape(v)), step.perm)
            for arrow in (a, a.inverse()):
                found.setdefault(arrow.key(), arrow)
    return Hedron(m, tuple(found[k] for k in sorted(found)))


def to_dot(h: Hedron, name: str = "hedron") -> str:
    lines = [f"digraph {name} {{"]
    for i in h.nodes:
        label = format_bracketing(all_bracketings(h.m, Limits().unsafe())[i])
        lines.append(f'  n{i} [label="{i}: {label}"];')
    for a in h.arrows:
        lines.append(f'  n{a.src} -> n{a.dst} [label="{a.perm}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- journeys -----------------------------------------------------------------

class _Visited:
    """Visited-state set: a flat bitmap when small enough, else a hash set."""

    def __init__(self, nodes: int, m: int, limits: Limits):
        self.fact = math.factorial(m)
        total = nodes * self.fact
        if total > limits.bfs_max_states:
            raise GuardError(f"journey state space {total} exceeds {limits.bfs_max_states}")
        if total <= limits.bitmap_max_states:
            self.rank = {p: r for r, p in enumerate(itertools.permutations(range(m)))}
            self.bits = bytearray(total)
            self.set = None
        else:
            self.set = set()

    def add(self, b: int, g: tuple) -> bool:
        """Mark the state; return False if it was already present."""
        if self.set is not None:
            if (b, g) in self.set:
                return False
            self.set.add((b, g))
            return True
        idx = b * self.fact + self.rank[g]
        if self.bits[idx]:
            return False
        self.bits[idx] = 1
        return True


def journeys(h: Hedron, start: int, limits: Limits = DEFAULT_LIMITS,
             target: tuple[int, tuple] | None = None):
    """Breadth-first states ``(bracketing, raw permutation)`` reachable from ``(start, id)``.

    Yields each state once; stops early after yielding ``target``.
    """
    ident = tuple(range(h.m))
    seen = _Visited(len(h.nodes), h.m, limits)
    seen.add(start, ident)
    frontier = [(start, ident)]
    adj = h.adjacency
    yield start, ident
    if target == (start, ident):
        return
    while frontier:
        nxt = []
        for b, g in frontier:
            for dst, p in adj[b]:
                g2 = mul(g, p)
                if seen.add(dst, g2):
                    yield dst, g2
                    if target == (dst, g2):
                        return
                    nxt.append((dst, g2))
        frontier = nxt


def implies(phi: LinearIdentity, psi: LinearIdentity, limits: Limits = DEFAULT_LIMITS,
            hedron: Hedron | None = None) -> bool:
    """Decide whether every groupoid satisfying ``phi`` satisfies ``psi``."""
    if psi.is_trivial:
        return True
    h = hedron if hedron is not None else build_hedron(phi, psi.n, limits)
    target = (psi.rhs, psi.f.images)
    return any(state == target for state in journeys(h, psi.lhs, limits, target))


def implied_set(phi: LinearIdentity, m: int, limits: Limits = DEFAULT_LIMITS,
                hedron: Hedron | None = None) -> set[LinearIdentity]:
    """Canonical nontrivial identities of length ``2m`` implied by ``phi``."""
    h = hedron if hedron is not None else build_hedron(phi, m, limits)
    out = set()
    for src in h.nodes:
        for dst, g in journeys(h, src, limits):
            ident = LinearIdentity(m, src, dst, Permutation(g))
            if not ident.is_trivial:
                out.add(canonicalize(ident))
    return out


def implied_names(phi: LinearIdentity, m: int, limits: Limits = DEFAULT_LIMITS,
                  hedron: Hedron | None = None) -> set[LinearIdentity]:
    """Like :func:`implied_set` but ``<i|j|f>`` and ``<j|i|f^-1>`` both count.

    Each canonical identity with ``i != j`` or ``f != f^-1`` contributes two
    names here.
    """
    out = set()
    for ident in implied_set(phi, m, limits, hedron):
        out.add(ident)
        out.add(ident.swap())
    return out


def reachable_permutations(h: Hedron, x: int, limits: Limits = DEFAULT_LIMITS
                           ) -> tuple[set[int], set[tuple]]:
    """Bracketings reachable from ``x`` and permutations of journeys ``x -> x``."""
    orbit: set[int] = set()
    loops: set[tuple] = set()
    for b, g in journeys(h, x, limits):
        orbit.add(b)
        if b == x:
            loops.add(g)
    return orbit, loops


def walk(h: Hedron, path: list[int]) -> Permutation:
    """Compose the labels along ``path`` when each step has a unique arrow."""
    g = Permutation.identity(h.m)
    for a, b in zip(path, path[1:]):
        arrows = h.arrows_between(a, b)
        if len(arrows) != 1:
            raise ValueError(f"{len(arrows)} arrows from {a} to {b}")
        g = g * arrows[0].perm
    return g
