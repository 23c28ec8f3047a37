"""Finite groupoids given by multiplication tables.

Text format: the first non-comment line is the order ``k``, then ``k`` lines
of ``k`` space-separated entries in ``0..k-1``; ``#`` starts a comment. Row
``a``, column ``b`` holds ``a*b``.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .config import DEFAULT_LIMITS, GuardError, Limits, ParseError
from .identities import LinearIdentity, variable_names
from .terms import Term


@dataclass(frozen=True)
class GroupoidTable:
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        k = len(self.table)
        if k == 0:
            raise ValueError("empty table")
        for r, row in enumerate(self.table):
            if len(row) != k:
                raise ValueError(f"row {r} has {len(row)} entries, expected {k}")
            for c, v in enumerate(row):
                if not 0 <= v < k:
                    raise ValueError(f"entry ({r},{c})={v} outside 0..{k - 1}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "GroupoidTable":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @property
    def order(self) -> int:
        return len(self.table)

    @cached_property
    def array(self) -> np.ndarray:
        dtype = np.uint8 if self.order <= 256 else np.int64
        return np.array(self.table, dtype=dtype)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def evaluate(self, term: Term, assignment: Sequence[int]) -> int:
        """Value of ``term`` with variable ``v`` set to ``assignment[v-1]``."""
        if isinstance(term, tuple):
            return self.table[self.evaluate(term[0], assignment)][self.evaluate(term[1], assignment)]
        return assignment[term - 1]


def parse_table(text: str) -> GroupoidTable:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ParseError("table text is empty")
    try:
        k = int(lines[0])
        rows = [[int(v) for v in line.split()] for line in lines[1:]]
    except ValueError as exc:
        raise ParseError(f"non-integer token in table: {exc}") from None
    if len(rows) != k:
        raise ParseError(f"order {k} but {len(rows)} rows")
    try:
        return GroupoidTable.from_rows(rows)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_inline_table(text: str) -> GroupoidTable:
    """Rows separated by ``;`` or ``/``, e.g. ``"0 1 0; 0 1 2; 1 1 1"``."""
    rows = [r.split() for r in text.replace("/", ";").split(";") if r.strip()]
    return parse_table("\n".join([str(len(rows))] + [" ".join(r) for r in rows]))


def load_table(source: str) -> GroupoidTable:
    """Read a table from a file path, or parse ``source`` itself inline."""
    if os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            return parse_table(fh.read())
    if "\n" in source:
        return parse_table(source)
    return parse_inline_table(source)


def format_table(t: GroupoidTable) -> str:
    width = len(str(t.order - 1))
    rows = [" ".join(str(v).rjust(width) for v in row) for row in t.table]
    return "\n".join([str(t.order), *rows]) + "\n"


# --- verification -------------------------------------------------------------

def _eval_grid(term: Term, arr: np.ndarray, grids: list[np.ndarray]) -> np.ndarray:
    if isinstance(term, tuple):
        return arr[_eval_grid(term[0], arr, grids), _eval_grid(term[1], arr, grids)]
    return grids[term - 1]


def counterexample(t: GroupoidTable, ident: LinearIdentity,
                   chunk: int = 1 << 20) -> dict[str, int] | None:
    """First violating assignment in lexicographic order, or None.

    Assignments are evaluated in vectorized blocks along the first variable
    so a violated identity usually stops after the first block.
    """
    n, k = ident.n, t.order
    arr = t.array
    lhs, rhs = ident.lhs_term(), ident.rhs_term()
    rest = k ** (n - 1)
    step = max(1, chunk // rest)
    names = variable_names(n)
    shape = [1] * n
    grids = []
    for v in range(n):
        s = list(shape)
        s[v] = k
        grids.append(np.arange(k).reshape(s))
    for lo in range(0, k, step):
        hi = min(k, lo + step)
        s = list(shape)
        s[0] = hi - lo
        grids[0] = np.arange(lo, hi).reshape(s)
        left = np.broadcast_to(_eval_grid(lhs, arr, grids), [hi - lo] + [k] * (n - 1))
        right = np.broadcast_to(_eval_grid(rhs, arr, grids), [hi - lo] + [k] * (n - 1))
        bad = np.argwhere(left != right)
        if len(bad):
            idx = [int(i) for i in bad[0]]
            idx[0] += lo
            return dict(zip(names, idx))
    return None


def satisfies(t: GroupoidTable, ident: LinearIdentity) -> bool:
    return counterexample(t, ident) is None


def verdicts(t: GroupoidTable, idents: Sequence[LinearIdentity]) -> list[bool]:
    return [satisfies(t, i) for i in idents]


def direct_product(t1: GroupoidTable, t2: GroupoidTable) -> GroupoidTable:
    """Componentwise product; the pair ``(a, b)`` is element ``a*k2 + b``."""
    k2 = t2.order
    a1 = t1.array.astype(np.int64)
    a2 = t2.array.astype(np.int64)
    prod = a1[:, None, :, None] * k2 + a2[None, :, None, :]
    k = t1.order * k2
    return GroupoidTable.from_rows(prod.reshape(k, k).tolist())


# --- model search -------------------------------------------------------------

@dataclass
class SearchResult:
    model: GroupoidTable | None
    exhausted: list[int] = field(default_factory=list)  # orders proved empty
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.model is not None


def _partial_eval(term: Term, a: tuple, tab: list[int], k: int) -> int:
    """Value, or ``-1 - cell`` for the first unassigned cell encountered."""
    if not isinstance(term, tuple):
        return a[term - 1]
    x = _partial_eval(term[0], a, tab, k)
    if x < 0:
        return x
    y = _partial_eval(term[1], a, tab, k)
    if y < 0:
        return y
    cell = x * k + y
    v = tab[cell]
    return v if v >= 0 else -1 - cell


def _status(inst, tab, k) -> int:
    """1 if the instance holds, 0 if violated, else ``-1 - blocking cell``."""
    lhs, rhs, a = inst
    x = _partial_eval(lhs, a, tab, k)
    if x < 0:
        return x
    y = _partial_eval(rhs, a, tab, k)
    if y < 0:
        return y
    return 1 if x == y else 0


def _search_order(k: int, satisfy: Sequence[LinearIdentity],
                  violate: Sequence[LinearIdentity]) -> tuple[GroupoidTable | None, int]:
    ncells = k * k
    tab = [-1] * ncells
    watch: list[list] = [[] for _ in range(ncells)]
    for ident in satisfy:
        lhs, rhs = ident.lhs_term(), ident.rhs_term()
        for a in itertools.product(range(k), repeat=ident.n):
            inst = (lhs, rhs, a)
            st = _status(inst, tab, k)
            if st == 0:
                return None, 0
            if st < 0:
                watch[-1 - st].append(inst)
    nodes = 0

    def complete_ok() -> GroupoidTable | None:
        t = GroupoidTable(tuple(tuple(tab[r * k:(r + 1) * k]) for r in range(k)))
        for ident in violate:
            if satisfies(t, ident):
                return None
        return t

    def dfs(c: int) -> GroupoidTable | None:
        nonlocal nodes
        if c == ncells:
            return complete_ok()
        for val in range(k):
            nodes += 1
            tab[c] = val
            moved = []
            ok = True
            for inst in watch[c]:
                st = _status(inst, tab, k)
                if st == 0:
                    ok = False
                    break
                if st < 0:
                    d = -1 - st
                    watch[d].append(inst)
                    moved.append(d)
            found = dfs(c + 1) if ok else None
            for d in reversed(moved):
                watch[d].pop()
            if found is not None:
                return found
        tab[c] = -1
        return None

    return dfs(0), nodes


def search_model(satisfy: Sequence[LinearIdentity], violate: Sequence[LinearIdentity] = (),
                 max_order: int = 4, limits: Limits = DEFAULT_LIMITS) -> SearchResult:
    """Smallest table satisfying every ``satisfy`` identity and violating every ``violate`` one.

    Cells are filled in row-major order with values tried in increasing
    order; a satisfy-instance is rechecked only when the cell it is waiting
    on gets a value. Violations are checked on complete tables only.
    """
    if max_order > limits.search_max_order:
        raise GuardError(f"search order {max_order} exceeds limit {limits.search_max_order}")
    result = SearchResult(None)
    for k in range(1, max_order + 1):
        model, nodes = _search_order(k, satisfy, violate)
        result.nodes += nodes
        if model is not None:
            result.model = model
            return result
        result.exhausted.append(k)
    return result
