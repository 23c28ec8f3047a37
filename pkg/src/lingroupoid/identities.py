"""Linear identities, their systematic names, enumeration and counting.

An identity ``u = v`` of length ``2n`` is named ``<n|i|j|f>``: ``i`` and ``j``
are the bracketing labels of ``u`` and ``v``, and ``f`` is the permutation
that sends the left-to-right position ``p`` of a variable in ``u`` to its
position ``f(p)`` in ``v``. For example ``(xy)z=y(zx)`` is ``<3|0|1|(1,3,2)>``
(x moves from position 1 to 3, z from 3 to 2, y from 2 to 1).
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass

from .config import DEFAULT_LIMITS, GuardError, Limits, ParseError
from .permgroup import Permutation, order
from .terms import (
    Term,
    canonical_term,
    catalan,
    decode_bracketing,
    encode_bracketing,
    format_term,
    leaves,
    parse_juxtaposition,
    relabel,
    shape,
    _catalan,
)

LETTERS = "xyzuvw"
_UNLIMITED = Limits().unsafe()


def variable_names(n: int) -> list[str]:
    return [LETTERS[k] if k < len(LETTERS) else f"x{k + 1}" for k in range(n)]


@dataclass(frozen=True, order=False)
class LinearIdentity:
    n: int
    lhs: int
    rhs: int
    f: Permutation

    def __post_init__(self):
        if self.f.degree != self.n:
            raise ValueError(f"permutation degree {self.f.degree} != n={self.n}")
        c = _catalan(self.n)
        for label in (self.lhs, self.rhs):
            if not 0 <= label < c:
                raise ValueError(f"bracketing label {label} outside 0..{c - 1}")

    @property
    def is_trivial(self) -> bool:
        return self.lhs == self.rhs and self.f.is_identity()

    def swap(self) -> "LinearIdentity":
        return LinearIdentity(self.n, self.rhs, self.lhs, self.f.inverse())

    def lhs_term(self) -> Term:
        return canonical_term(_decode(self.n, self.lhs))

    def rhs_term(self) -> Term:
        # position q on the right holds the variable that f sends to q
        finv = self.f.inverse()
        return relabel(_decode(self.n, self.rhs), [finv(q) for q in range(1, self.n + 1)])

    def sort_key(self) -> tuple:
        return (self.n, self.lhs, self.rhs, self.f.one_line())

    def name(self, with_n: bool = True) -> str:
        head = f"{self.n}|" if with_n else ""
        return f"<{head}{self.lhs}|{self.rhs}|{self.f}>"

    def surface(self) -> str:
        names = dict(zip(range(1, self.n + 1), variable_names(self.n)))
        return f"{format_term(self.lhs_term(), names)}={format_term(self.rhs_term(), names)}"

    def __str__(self) -> str:
        return self.name()


def _decode(n: int, label: int) -> Term:
    return decode_bracketing(n, label, _UNLIMITED)


def identity_from_terms(u: Term, v: Term) -> LinearIdentity:
    """Name of ``u = v`` where both are linear in the same variables."""
    lu, lv = leaves(u), leaves(v)
    if len(set(lu)) != len(lu) or len(set(lv)) != len(lv):
        raise ParseError("identity is not linear: a variable repeats on one side")
    if set(lu) != set(lv):
        raise ParseError(f"sides use different variables: {sorted(set(lu) ^ set(lv))}")
    where = {x: q for q, x in enumerate(lv, start=1)}
    f = Permutation.from_one_line([where[x] for x in lu])
    return LinearIdentity(len(lu), encode_bracketing(shape(u)), encode_bracketing(shape(v)), f)


_NAME_RE = re.compile(r"^[<⟨]\s*(?:(\d+)\s*\|)?\s*(\d+)\s*\|\s*(\d+)\s*\|(.*)[>⟩]$")
_VAR_RE = re.compile(r"[A-Za-z](?:_?\d+)?")


def parse_identity(text: str, n: int | None = None) -> LinearIdentity:
    """Parse either a name ``<n|i|j|f>`` or an equation such as ``(xy)z=y(zx)``.

    In equations variables are single letters optionally followed by digits;
    unparenthesized juxtaposition associates to the left. Variables are
    numbered by first appearance on the left-hand side. ``n`` supplies the
    length for the short name form ``<i|j|f>``.
    """
    s = text.strip()
    m = _NAME_RE.match(s)
    if m:
        size = int(m.group(1)) if m.group(1) else n
        if size is None:
            raise ParseError(f"name {text!r} lacks the length n")
        f = Permutation.parse(m.group(4).strip() or "()", size)
        try:
            return LinearIdentity(size, int(m.group(2)), int(m.group(3)), f)
        except ValueError as exc:
            raise ParseError(f"{exc} in {text!r}") from None
    if s.count("=") != 1:
        raise ParseError(f"expected exactly one '=' in {text!r}")
    left, right = s.split("=")
    index: dict[str, int] = {}

    def atom(src, pos):
        mv = _VAR_RE.match(src, pos)
        if mv is None:
            return None
        return mv.group(0), mv.end()

    u = parse_juxtaposition(left, atom)
    v = parse_juxtaposition(right, atom)
    for name in leaves(u):
        if name in index:
            raise ParseError(f"variable {name!r} occurs twice on the left of {text!r}")
        index[name] = len(index) + 1
    seen = set()
    for name in leaves(v):
        if name not in index:
            raise ParseError(f"variable {name!r} on the right does not occur on the left of {text!r}")
        if name in seen:
            raise ParseError(f"variable {name!r} occurs twice on the right of {text!r}")
        seen.add(name)
    if len(seen) != len(index):
        missing = sorted(set(index) - seen)
        raise ParseError(f"variable {missing[0]!r} missing from the right of {text!r}")
    return identity_from_terms(relabel(u, [index[x] for x in leaves(u)]),
                               relabel(v, [index[x] for x in leaves(v)]))


def canonicalize(ident: LinearIdentity) -> LinearIdentity:
    """Pick one name of the pair ``<i|j|f>``, ``<j|i|f^-1>``.

    Lower left label wins; on equal labels the permutation with the smaller
    one-line image sequence wins.
    """
    other = ident.swap()
    if ident.lhs != ident.rhs:
        return ident if ident.lhs < ident.rhs else other
    return ident if ident.f.one_line() <= other.f.one_line() else other


def is_canonical(ident: LinearIdentity) -> bool:
    return canonicalize(ident) == ident


def enumerate_identities(n: int, nontrivial_only: bool = False,
                         limits: Limits = DEFAULT_LIMITS) -> list[LinearIdentity]:
    """Every canonical identity of length ``2n``, sorted by (i, j, one-line f)."""
    if not 1 <= n <= limits.enumerate_max_n:
        raise GuardError(f"enumeration length {n} outside 1..{limits.enumerate_max_n}")
    c = catalan(n, limits)
    perms = [Permutation(p) for p in itertools.permutations(range(n))]
    out = []
    for i in range(c):
        for j in range(i, c):
            for f in perms:
                ident = LinearIdentity(n, i, j, f)
                if i == j and f.one_line() > f.inverse().one_line():
                    continue
                if nontrivial_only and ident.is_trivial:
                    continue
                out.append(ident)
    return out


def identity_count(n: int, s2: int | None = None) -> int:
    """Linear identities of length ``2n``; ``s2`` is the number of involutions in S_n."""
    s2 = involution_formula(n) if s2 is None else s2
    c = _catalan(n)
    return c * (c * math.factorial(n) + 1 + s2) // 2


def nontrivial_identity_count(n: int, s2: int | None = None) -> int:
    s2 = involution_formula(n) if s2 is None else s2
    c = _catalan(n)
    return c * (c * math.factorial(n) - 1 + s2) // 2


def involution_formula(n: int) -> int:
    """Number of order-2 elements of S_n by choosing disjoint pairs."""
    return sum(math.comb(n, 2 * m) * math.prod(range(1, 2 * m, 2))
               for m in range(1, n // 2 + 1))


def euler_phi(m: int) -> int:
    return sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)


@dataclass(frozen=True)
class VarietyCensus:
    n: int
    catalan: int
    s: dict[int, int]  # element order -> count in S_n
    phi: dict[int, int]
    identities: int
    nontrivial: int
    varieties: int

    @property
    def L(self) -> int:
        return self.varieties

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "C": self.catalan,
            "s": {str(k): v for k, v in self.s.items()},
            "phi": {str(k): v for k, v in self.phi.items()},
            "identities": self.identities,
            "nontrivial": self.nontrivial,
            "L": self.varieties,
        }


def census(n: int, limits: Limits = DEFAULT_LIMITS) -> VarietyCensus:
    """Counts of identities and single-identity varieties of length ``2n``.

    Element orders in S_n are tallied by iterating over all of S_n.
    """
    if not 1 <= n <= limits.census_max_n:
        raise GuardError(f"census length {n} outside 1..{limits.census_max_n}")
    s: dict[int, int] = {}
    for p in itertools.permutations(range(n)):
        k = order(p)
        s[k] = s.get(k, 0) + 1
    s = dict(sorted(s.items()))
    phi = {k: euler_phi(k) for k in s}
    c = catalan(n, limits)
    s2 = s.get(2, 0)
    cyclic = sum(s[k] // phi[k] for k in s if k >= 2)
    varieties = 1 + math.comb(c, 2) * math.factorial(n) + c * cyclic
    return VarietyCensus(
        n=n,
        catalan=c,
        s=s,
        phi=phi,
        identities=identity_count(n, s2),
        nontrivial=nontrivial_identity_count(n, s2),
        varieties=varieties,
    )
