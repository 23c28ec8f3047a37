"""Small permutation-group engine.

Permutations act on the right and compose from left to right: ``(f * g)(p)``
is ``g(f(p))``. Points are 1-based at every public interface; the image tuple
stored inside a :class:`Permutation` is 0-based.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence, TypeVar

from .config import DEFAULT_LIMITS, DomainError, GuardError, Limits, ParseError

Raw = tuple  # 0-based image tuple


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images!r}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_one_line(cls, one_line: Sequence[int]) -> "Permutation":
        """Build from 1-based images ``(f(1), ..., f(n))``."""
        return cls(tuple(p - 1 for p in one_line))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        img = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for p in cyc:
                if not 1 <= p <= degree:
                    raise ValueError(f"point {p} outside 1..{degree}")
                if p in seen:
                    raise ValueError(f"point {p} repeated in cycles")
                seen.add(p)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b - 1
        return cls(tuple(img))

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "Permutation":
        """Parse cycle notation such as ``(1,3)(2,4)``; ``()`` is the identity.

        Commas are optional between single-digit points, so ``(13)(24)`` also
        parses. Without ``degree`` the largest point mentioned is used.
        """
        cycles = parse_cycles(text)
        top = max((p for c in cycles for p in c), default=0)
        if degree is None:
            degree = top
        elif top > degree:
            raise ParseError(f"point {top} exceeds degree {degree} in {text!r}")
        try:
            return cls.from_cycles(cycles, degree)
        except ValueError as exc:
            raise ParseError(f"{exc} in {text!r}") from None

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise DomainError(f"degree mismatch: {self.degree} vs {other.degree}")
        return Permutation(mul(self.images, other.images))

    def __pow__(self, k: int) -> "Permutation":
        return Permutation(power(self.images, k))

    def inverse(self) -> "Permutation":
        return Permutation(inv(self.images))

    def is_identity(self) -> bool:
        return all(i == p for i, p in enumerate(self.images))

    def one_line(self) -> tuple[int, ...]:
        return tuple(p + 1 for p in self.images)

    def order(self) -> int:
        return order(self.images)

    def cycles(self) -> list[tuple[int, ...]]:
        return [tuple(p + 1 for p in c) for c in cycles(self.images)]

    def __str__(self) -> str:
        cs = self.cycles()
        if not cs:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cs)

    def __repr__(self) -> str:
        return f"Permutation({self}, degree={self.degree})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[tuple[int, ...]]:
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty permutation text")
    pos = 0
    cycles = []
    while pos < len(s):
        m = _CYCLE_RE.match(s, pos)
        if m is None:
            raise ParseError(f"unexpected {s[pos]!r} at offset {pos} in {text!r}")
        body = m.group(1)
        if body:
            if "," in body:
                parts = body.split(",")
            else:
                parts = list(body)
            if not all(p.isdigit() for p in parts):
                raise ParseError(f"bad cycle {m.group(0)!r} in {text!r}")
            cyc = tuple(int(p) for p in parts)
            if len(cyc) > 1:
                cycles.append(cyc)
        pos = m.end()
    return cycles


# --- raw tuple arithmetic (hot paths) -------------------------------------

def mul(a: Raw, b: Raw) -> Raw:
    return tuple([b[x] for x in a])


def inv(a: Raw) -> Raw:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def power(a: Raw, k: int) -> Raw:
    if k < 0:
        a, k = inv(a), -k
    result = tuple(range(len(a)))
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        base = mul(base, base)
        k >>= 1
    return result


def cycles(a: Raw) -> list[tuple[int, ...]]:
    seen = [False] * len(a)
    out = []
    for i in range(len(a)):
        if seen[i] or a[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = a[i]
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = a[j]
        out.append(tuple(cyc))
    return out


def order(a: Raw) -> int:
    return math.lcm(1, *(len(c) for c in cycles(a)))


def _raw(gens: Iterable[Permutation]) -> tuple[list[Raw], int | None]:
    gens = list(gens)
    degrees = {g.degree for g in gens}
    if len(degrees) > 1:
        raise DomainError(f"generators of mixed degree {sorted(degrees)}")
    return [g.images for g in gens], (degrees.pop() if degrees else None)


# --- orbits -----------------------------------------------------------------

T = TypeVar("T")
P = TypeVar("P", bound=Hashable)


def orbit_transversal(
    gens: Sequence[T],
    x: P,
    act: Callable[[P, T], P],
    compose: Callable[[T, T], T],
    identity: T,
) -> dict[P, T]:
    """Breadth-first orbit of ``x`` under a generic right action.

    Returns a dict (in discovery order) sending each orbit point ``y`` to a
    group element mapping ``x`` to ``y``.
    """
    trans = {x: identity}
    frontier = [x]
    while frontier:
        nxt = []
        for y in frontier:
            ty = trans[y]
            for g in gens:
                z = act(y, g)
                if z not in trans:
                    trans[z] = compose(ty, g)
                    nxt.append(z)
        frontier = nxt
    return trans


def orbit_with_transversal(
    gens: Sequence[Permutation], x: int, degree: int | None = None
) -> tuple[set[int], dict[int, Permutation]]:
    raw, deg = _raw(gens)
    deg = deg if deg is not None else degree
    if deg is None:
        raise DomainError("degree required when there are no generators")
    if not 1 <= x <= deg:
        raise DomainError(f"point {x} outside 1..{deg}")
    t = orbit_transversal(raw, x - 1, lambda y, g: g[y], mul, tuple(range(deg)))
    trans = {y + 1: Permutation(p) for y, p in t.items()}
    return set(trans), trans


def schreier_generators(
    gens: Sequence[Permutation], x: int, degree: int | None = None
) -> list[Permutation]:
    """Schreier generators ``t_y * s * t_{y s}^-1`` of the stabilizer of ``x``.

    Identity elements and duplicates are dropped, so the list may be empty.
    """
    _, trans = orbit_with_transversal(gens, x, degree)
    out: dict[Raw, None] = {}
    for y, ty in trans.items():
        for s in gens:
            h = mul(mul(ty.images, s.images), inv(trans[s(y)].images))
            if any(i != p for i, p in enumerate(h)):
                out[h] = None
    return [Permutation(h) for h in out]


# --- Schreier-Sims ------------------------------------------------------------

class StabilizerChain:
    """Base and strong generating set built by deterministic Schreier-Sims."""

    def __init__(self, degree: int):
        self.degree = degree
        self.base: list[int] = []
        self.gens: list[list[Raw]] = []
        self.trans: list[dict[int, Raw]] = []
        self.trans_inv: list[dict[int, Raw]] = []
        self._ident = tuple(range(degree))

    @property
    def order(self) -> int:
        return math.prod(len(t) for t in self.trans)

    def orbit_lengths(self) -> list[int]:
        return [len(t) for t in self.trans]

    def strong_generators(self) -> list[Permutation]:
        seen: dict[Raw, None] = {}
        for level in self.gens:
            for g in level:
                seen[g] = None
        return [Permutation(g) for g in seen]

    def sift(self, g: Raw, start: int = 0) -> tuple[Raw, int]:
        """Strip ``g`` through levels ``start..``; return residue and drop level."""
        for lvl in range(start, len(self.base)):
            y = g[self.base[lvl]]
            ui = self.trans_inv[lvl].get(y)
            if ui is None:
                return g, lvl
            g = mul(g, ui)
        return g, len(self.base)

    def __contains__(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        residue, lvl = self.sift(g.images)
        return lvl == len(self.base) and residue == self._ident

    # construction

    def _add_level(self, point: int) -> None:
        self.base.append(point)
        self.gens.append([])
        self.trans.append({point: self._ident})
        self.trans_inv.append({point: self._ident})

    def _extend_orbit(self, lvl: int) -> None:
        trans, tinv, gens = self.trans[lvl], self.trans_inv[lvl], self.gens[lvl]
        frontier = list(trans)
        while frontier:
            nxt = []
            for y in frontier:
                ty = trans[y]
                for g in gens:
                    z = g[y]
                    if z not in trans:
                        u = mul(ty, g)
                        trans[z] = u
                        tinv[z] = inv(u)
                        nxt.append(z)
            frontier = nxt

    def _moved_point(self, g: Raw) -> int:
        for i, x in enumerate(g):
            if x != i and i not in self.base:
                return i
        raise AssertionError("residue fixes every non-base point")

    def build(self, gens: Sequence[Raw]) -> None:
        ident = self._ident
        gens = [g for g in dict.fromkeys(gens) if g != ident]
        if not gens:
            return
        for g in gens:
            if all(g[b] == b for b in self.base):
                self._add_level(self._moved_point(g))
        for lvl in range(len(self.base)):
            b_fixed = self.base[:lvl]
            self.gens[lvl] = [g for g in gens if all(g[b] == b for b in b_fixed)]
            self._extend_orbit(lvl)

        checked: list[set[tuple[int, int]]] = [set() for _ in self.base]
        i = len(self.base) - 1
        while i >= 0:
            restart = None
            trans, gens_i = self.trans[i], self.gens[i]
            for y, ty in list(trans.items()):
                for si, s in enumerate(gens_i):
                    key = (y, si)
                    if key in checked[i]:
                        continue
                    checked[i].add(key)
                    h = mul(mul(ty, s), self.trans_inv[i][s[y]])
                    if h == ident:
                        continue
                    residue, drop = self.sift(h, i + 1)
                    if drop == len(self.base) and residue == ident:
                        continue
                    if drop == len(self.base):
                        self._add_level(self._moved_point(residue))
                        checked.append(set())
                    for lvl in range(i + 1, drop + 1):
                        self.gens[lvl].append(residue)
                        self._extend_orbit(lvl)
                    restart = drop
                    break
                if restart is not None:
                    break
            if restart is not None:
                i = restart
            else:
                i -= 1


def schreier_sims(
    gens: Sequence[Permutation],
    degree: int | None = None,
    limits: Limits = DEFAULT_LIMITS,
) -> StabilizerChain:
    raw, deg = _raw(gens)
    deg = deg if deg is not None else degree
    if deg is None:
        raise DomainError("degree required when there are no generators")
    if deg > limits.max_degree:
        raise GuardError(f"degree {deg} exceeds limit {limits.max_degree}")
    chain = StabilizerChain(deg)
    chain.build(raw)
    return chain


def group_order(gens: Sequence[Permutation], degree: int | None = None,
                limits: Limits = DEFAULT_LIMITS) -> int:
    return schreier_sims(gens, degree, limits).order


def is_full_symmetric(gens: Sequence[Permutation], m: int,
                      limits: Limits = DEFAULT_LIMITS) -> bool:
    """True iff the generators produce all of S_m."""
    if any(g.degree != m for g in gens):
        raise DomainError(f"generators must have degree {m}")
    return group_order(gens, m, limits) == math.factorial(m)


def small_generating_set(elements: Iterable[Permutation], degree: int,
                         limits: Limits = DEFAULT_LIMITS) -> list[Permutation]:
    """Greedy generating set: keep an element only if it enlarges the group."""
    kept: list[Permutation] = []
    chain = schreier_sims([], degree, limits)
    for g in elements:
        if g.is_identity() or g in chain:
            continue
        kept.append(g)
        chain = schreier_sims(kept, degree, limits)
    return kept


def closure(gens: Sequence[Permutation], degree: int) -> set[Raw]:
    """All group elements by breadth-first closure; only for small groups."""
    ident = tuple(range(degree))
    raw = [g.images for g in gens]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in raw:
                b = mul(a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return seen
