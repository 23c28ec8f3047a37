"""The subgroup W(phi, m) of S_m wr S_{C_m} generated by hedron arrows.

Elements are pairs ``((a_x), a)`` with ``a`` permuting bracketing labels and
``a_x`` permuting the ``m`` factor positions. Multiplication (left to right):

    ((a_x), a) * ((b_x), b) = ((a_x * b_{x a}), a * b)

All groupoids satisfying ``phi`` are mAC-nice iff the orbit of a bracketing
``x`` is every bracketing and the stabilizer of ``x``, projected to its
``x``-th component, is all of S_m.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .config import DEFAULT_LIMITS, GuardError, Limits
from .hedron import Hedron, build_hedron, reachable_permutations
from .identities import LinearIdentity, enumerate_identities
from .permgroup import (
    Permutation,
    orbit_transversal,
    schreier_sims,
    small_generating_set,
)
from .terms import catalan


@dataclass(frozen=True)
class WreathElement:
    top: Permutation  # on bracketing labels 0..C_m-1 (stored 0-based)
    comps: tuple[Permutation, ...]

    @classmethod
    def identity(cls, m: int, nodes: int) -> "WreathElement":
        e = Permutation.identity(m)
        return cls(Permutation.identity(nodes), (e,) * nodes)

    @property
    def m(self) -> int:
        return self.comps[0].degree

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        a = self.top.images
        comps = tuple(self.comps[x] * other.comps[a[x]] for x in range(len(a)))
        return WreathElement(self.top * other.top, comps)

    def inverse(self) -> "WreathElement":
        ainv = self.top.inverse()
        # component at y is (a_{y a^-1})^-1
        comps = tuple(self.comps[ainv.images[y]].inverse() for y in range(len(self.comps)))
        return WreathElement(ainv, comps)

    def act(self, x: int) -> int:
        return self.top.images[x]

    def point_permutation(self) -> Permutation:
        """Imprimitive action on pairs ``(x, p)`` numbered ``x*m + p``."""
        m = self.m
        img = []
        for x, c in enumerate(self.comps):
            base = self.top.images[x] * m
            img.extend(base + q for q in c.images)
        return Permutation(tuple(img))

    def is_identity(self) -> bool:
        return self.top.is_identity() and all(c.is_identity() for c in self.comps)


@dataclass(frozen=True)
class GeneratorSet:
    elements: tuple[WreathElement, ...]
    loop_generators: int  # how many came from loop arrows
    directed_arrows: int


def _guard_hedron(m: int, limits: Limits) -> int:
    c = catalan(m, limits)
    if c > limits.hedron_max_nodes:
        raise GuardError(f"hedron for m={m} has {c} nodes, limit {limits.hedron_max_nodes}")
    return c


def wreath_generator_set(phi: LinearIdentity, m: int, limits: Limits = DEFAULT_LIMITS,
                         hedron: Hedron | None = None) -> GeneratorSet:
    c = _guard_hedron(m, limits)
    h = hedron if hedron is not None else build_hedron(phi, m, limits)
    ident = Permutation.identity(m)
    out = []
    loops = 0
    for a in h.arrow_pairs():
        comps = [ident] * c
        if a.src != a.dst:
            top = [*range(c)]
            top[a.src], top[a.dst] = a.dst, a.src
            comps[a.src] = a.perm
            comps[a.dst] = a.perm.inverse()
            out.append(WreathElement(Permutation(tuple(top)), tuple(comps)))
            continue
        loops += 1
        comps[a.src] = a.perm
        out.append(WreathElement(Permutation.identity(c), tuple(comps)))
        if a.perm.order() > 2:
            comps = list(comps)
            comps[a.src] = a.perm.inverse()
            out.append(WreathElement(Permutation.identity(c), tuple(comps)))
    return GeneratorSet(tuple(out), loops, len(h.arrows))


def wreath_generators(phi: LinearIdentity, m: int,
                      limits: Limits = DEFAULT_LIMITS) -> list[WreathElement]:
    return list(wreath_generator_set(phi, m, limits).elements)


def full_wreath_order(m: int) -> int:
    c = catalan(m, Limits().unsafe())
    return math.factorial(m) ** c * math.factorial(c)


def wreath_group_order(phi: LinearIdentity, m: int, limits: Limits = DEFAULT_LIMITS) -> int:
    c = _guard_hedron(m, limits)
    if c * m > limits.max_degree:
        raise GuardError(f"imprimitive degree {c * m} exceeds {limits.max_degree}")
    gens = [g.point_permutation() for g in wreath_generators(phi, m, limits)]
    return schreier_sims(gens, c * m, limits).order


# --- niceness -----------------------------------------------------------------

@dataclass
class NicenessReport:
    m: int
    identity: LinearIdentity
    x: int
    orbit: tuple[int, ...]
    stabilizer_generators: list[Permutation]
    projection_order: int
    nodes: int
    method: str
    loop_generators: int = 0

    @property
    def orbit_full(self) -> bool:
        return len(self.orbit) == self.nodes

    @property
    def projection_full(self) -> bool:
        return self.projection_order == math.factorial(self.m)

    @property
    def nice(self) -> bool:
        return self.orbit_full and self.projection_full

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "identity": self.identity.name(),
            "x": self.x,
            "method": self.method,
            "orbit": list(self.orbit),
            "orbit_full": self.orbit_full,
            "projection_generators": [str(g) for g in self.stabilizer_generators],
            "projection_order": self.projection_order,
            "projection_full": self.projection_full,
            "loop_generators": self.loop_generators,
            "nice": self.nice,
        }

    def to_text(self) -> str:
        gens = ", ".join(str(g) for g in self.stabilizer_generators) or "()"
        return "\n".join([
            f"identity      {self.identity.name()}  ({self.identity.surface()})",
            f"m             {self.m}",
            f"method        {self.method}",
            f"bracketing    {self.x}",
            f"orbit         {len(self.orbit)}/{self.nodes}",
            f"P_x           <{gens}>  order {self.projection_order} of {math.factorial(self.m)}",
            f"nice          {str(self.nice).lower()}",
        ])


def _nice_group(phi, m, x, limits):
    c = catalan(m, limits)
    gs = wreath_generator_set(phi, m, limits)
    gens = list(gs.elements)
    ident = WreathElement.identity(m, c)
    trans = orbit_transversal(gens, x, lambda y, g: g.act(y), lambda a, b: a * b, ident)
    # Schreier generators of the block stabilizer, projected to component x
    proj: dict[tuple, None] = {}
    tinv = {y: t.inverse() for y, t in trans.items()}
    for y, ty in trans.items():
        for s in gens:
            h = ty * s * tinv[s.act(y)]
            p = h.comps[x].images
            if p != tuple(range(m)):
                proj[p] = None
    p_gens = small_generating_set((Permutation(p) for p in proj), m, limits)
    order = schreier_sims(p_gens, m, limits).order
    return NicenessReport(m, phi, x, tuple(sorted(trans)), p_gens, order, c, "group",
                          gs.loop_generators)


def _nice_bfs(phi, m, x, limits):
    c = catalan(m, limits)
    h = build_hedron(phi, m, limits)
    orbit, loops = reachable_permutations(h, x, limits)
    p_gens = small_generating_set((Permutation(p) for p in sorted(loops)), m, limits)
    return NicenessReport(m, phi, x, tuple(sorted(orbit)), p_gens, len(loops), c, "bfs")


def is_nice(m: int, phi: LinearIdentity, method: str = "group", x: int = 0,
            limits: Limits = DEFAULT_LIMITS) -> NicenessReport:
    """Decide whether every groupoid satisfying ``phi`` is mAC-nice."""
    if method == "group":
        if m > limits.group_method_max_m:
            raise GuardError(f"group method allows m <= {limits.group_method_max_m}")
        return _nice_group(phi, m, x, limits)
    if method == "bfs":
        if m > limits.bfs_method_max_m:
            raise GuardError(f"bfs method allows m <= {limits.bfs_method_max_m}")
        return _nice_bfs(phi, m, x, limits)
    raise ValueError(f"unknown method {method!r}")


def _screen_cell(args):
    phi, m, methods, limits = args
    return [is_nice(m, phi, meth, limits=limits) for meth in methods]


@dataclass
class ScreenRow:
    identity: LinearIdentity
    m: int
    reports: list[NicenessReport]

    @property
    def nice(self) -> bool:
        return self.reports[0].nice

    @property
    def methods_agree(self) -> bool:
        return len({(r.nice, r.orbit, r.projection_order) for r in self.reports}) == 1

    def as_dict(self) -> dict:
        return {
            "identity": self.identity.name(),
            "surface": self.identity.surface(),
            "m": self.m,
            "nice": self.nice,
            "methods": {r.method: r.nice for r in self.reports},
            "agree": self.methods_agree,
        }


def niceness_screen(n: int, m_values, methods=("group",), jobs: int = 1,
                    limits: Limits = DEFAULT_LIMITS) -> list[ScreenRow]:
    """mAC-niceness of every nontrivial canonical identity of length ``2n``.

    Rows are ordered by (identity, m) whatever the value of ``jobs``.
    """
    cells = [(phi, m) for phi in enumerate_identities(n, True, limits) for m in m_values]
    tasks = [(phi, m, tuple(methods), limits) for phi, m in cells]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_screen_cell, tasks))
    else:
        results = [_screen_cell(t) for t in tasks]
    return [ScreenRow(phi, m, reps) for (phi, m), reps in zip(cells, results)]


def screen_json(rows: list[ScreenRow]) -> str:
    return json.dumps([r.as_dict() for r in rows], indent=2)
