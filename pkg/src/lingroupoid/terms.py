"""Bracketings, their Catalan labels, and one-step rewriting of terms.

A term is either a leaf (an ``int``) or a pair ``(left, right)``. In a
bracketing every leaf is ``0``; in a linear term of length ``n`` the leaves
carry the variable indices ``1..n``, each once.

Bracketings of length ``n`` are labelled by ``0 <= b < C_n``. A product
``t = l r`` with ``len(r) == m`` gets::

    b(t) = sum(C_i * C_{n-i} for i in 1..m-1) + b(r) * C_{n-m} + b(l)

so bracketings are grouped by the length of their right factor, shortest
first. This is not the lexicographic order of the printed strings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Protocol, Union

from .config import DEFAULT_LIMITS, GuardError, Limits, ParseError
from .permgroup import Permutation

Term = Union[int, tuple]
LEAF = 0


@lru_cache(maxsize=None)
def _catalan(n: int) -> int:
    if n <= 2:
        return 1
    return sum(_catalan(i) * _catalan(n - i) for i in range(1, n))


def catalan(n: int, limits: Limits = DEFAULT_LIMITS) -> int:
    """Number of bracketings of ``n`` factors (``C_1 = C_2 = 1``)."""
    if not 1 <= n <= limits.max_catalan_n:
        raise GuardError(f"catalan index {n} outside 1..{limits.max_catalan_n}")
    return _catalan(n)


def catalan_closed_form(n: int) -> int:
    # C_{n} = binom(2(n-1), n-1) / n with the shifted indexing used here
    k = n - 1
    return comb(2 * k, k) // (k + 1)


def length(t: Term) -> int:
    if isinstance(t, tuple):
        return length(t[0]) + length(t[1])
    return 1


def shape(t: Term) -> Term:
    if isinstance(t, tuple):
        return (shape(t[0]), shape(t[1]))
    return LEAF


def leaves(t: Term) -> list[int]:
    out: list[int] = []
    stack = [t]
    while stack:
        s = stack.pop()
        if isinstance(s, tuple):
            stack.append(s[1])
            stack.append(s[0])
        else:
            out.append(s)
    return out


def relabel(t: Term, labels) -> Term:
    """Replace leaves left to right by ``labels``."""
    it = iter(labels)

    def go(s):
        if isinstance(s, tuple):
            left = go(s[0])
            return (left, go(s[1]))
        return next(it)

    return go(t)


def canonical_term(t: Term) -> Term:
    """The linear term of shape ``t`` with leaves ``1..n`` in order."""
    return relabel(t, range(1, length(t) + 1))


def is_linear(t: Term) -> bool:
    ls = leaves(t)
    return sorted(ls) == list(range(1, len(ls) + 1))


def _prefix(n: int, m: int) -> int:
    return sum(_catalan(i) * _catalan(n - i) for i in range(1, m))


def encode_bracketing(t: Term) -> int:
    if not isinstance(t, tuple):
        return 0
    left, right = t
    n_left, m = length(left), length(right)
    n = n_left + m
    return _prefix(n, m) + encode_bracketing(right) * _catalan(n - m) + encode_bracketing(left)


def decode_bracketing(n: int, label: int, limits: Limits = DEFAULT_LIMITS) -> Term:
    total = catalan(n, limits)
    if not 0 <= label < total:
        raise GuardError(f"label {label} outside 0..{total - 1} for length {n}")
    return _decode(n, label)


def _decode(n: int, label: int) -> Term:
    if n == 1:
        return LEAF
    m = 1
    while m + 1 <= n - 1 and _prefix(n, m + 1) <= label:
        m += 1
    d = label - _prefix(n, m)
    c = _catalan(n - m)
    return (_decode(n - m, d % c), _decode(m, d // c))


def all_bracketings(n: int, limits: Limits = DEFAULT_LIMITS) -> list[Term]:
    """Bracketings of length ``n`` indexed by label."""
    return [_decode(n, b) for b in range(catalan(n, limits))]


def generate_bracketings(n: int) -> Iterator[Term]:
    """Plain recursive generation, independent of the labelling."""
    if n == 1:
        yield LEAF
        return
    for k in range(1, n):
        for left in generate_bracketings(k):
            for right in generate_bracketings(n - k):
                yield (left, right)


# --- text ---------------------------------------------------------------------

PLACEHOLDERS = "*◦∘o"


def format_term(t: Term, names=None, placeholder: str = "*") -> str:
    """Juxtaposition with parentheses around every compound factor.

    ``names`` maps a leaf value to its printed name; bracketing leaves print
    as ``placeholder``.
    """
    def leaf(x):
        if names is None:
            return placeholder if x == LEAF else str(x)
        return names[x]

    def go(s, top):
        if not isinstance(s, tuple):
            return leaf(s)
        body = go(s[0], False) + go(s[1], False)
        return body if top else "(" + body + ")"

    return go(t, True)


def format_bracketing(t: Term, placeholder: str = "*") -> str:
    return format_term(shape(t), placeholder=placeholder)


def parse_juxtaposition(text: str, atom) -> Term:
    """Parse juxtaposed factors and parenthesized groups, left-associated.

    ``atom(text, pos)`` returns ``(leaf_value, new_pos)`` or ``None`` when no
    atom starts at ``pos``.
    """
    s = "".join(text.split())
    pos = 0

    def factors():
        nonlocal pos
        acc = None
        while pos < len(s) and s[pos] != ")":
            if s[pos] == "(":
                pos += 1
                inner = factors()
                if pos >= len(s) or s[pos] != ")":
                    raise ParseError(f"missing ')' in {text!r}")
                pos += 1
                item = inner
            else:
                got = atom(s, pos)
                if got is None:
                    raise ParseError(f"unexpected token {s[pos]!r} at offset {pos} in {text!r}")
                item, pos = got
            acc = item if acc is None else (acc, item)
        if acc is None:
            raise ParseError(f"empty factor at offset {pos} in {text!r}")
        return acc

    result = factors()
    if pos != len(s):
        raise ParseError(f"unbalanced ')' at offset {pos} in {text!r}")
    return result


def parse_bracketing(text: str) -> Term:
    def atom(s, pos):
        if s[pos] in PLACEHOLDERS:
            return LEAF, pos + 1
        return None

    return parse_juxtaposition(text, atom)


# --- rewriting ----------------------------------------------------------------

class _HasSides(Protocol):
    def lhs_term(self) -> Term: ...
    def rhs_term(self) -> Term: ...


@dataclass(frozen=True)
class RewriteStep:
    """One application of an identity inside a term.

    ``position`` is the path from the root (0 = left, 1 = right). ``perm``
    sends the position of each leaf of the source term to its position in the
    result.
    """

    position: tuple[int, ...]
    direction: str  # "lhs->rhs" or "rhs->lhs"
    perm: Permutation


def _match(pattern: Term, t: Term, binding: dict[int, Term]) -> bool:
    if isinstance(pattern, tuple):
        if not isinstance(t, tuple):
            return False
        return _match(pattern[0], t[0], binding) and _match(pattern[1], t[1], binding)
    binding[pattern] = t
    return True


def _substitute(t: Term, binding: dict[int, Term]) -> Term:
    if isinstance(t, tuple):
        return (_substitute(t[0], binding), _substitute(t[1], binding))
    return binding[t]


def _var_offsets(pattern: Term, binding: dict[int, Term]) -> dict[int, int]:
    """Leaf offset at which each pattern variable's subtree starts."""
    out = {}
    pos = 0
    for v in leaves(pattern):
        out[v] = pos
        pos += length(binding[v])
    return out


def _replace(t: Term, path: tuple[int, ...], new: Term) -> Term:
    if not path:
        return new
    if path[0] == 0:
        return (_replace(t[0], path[1:], new), t[1])
    return (t[0], _replace(t[1], path[1:], new))


def _nodes(t: Term, path=(), offset=0):
    yield path, offset, t
    if isinstance(t, tuple):
        yield from _nodes(t[0], path + (0,), offset)
        yield from _nodes(t[1], path + (1,), offset + length(t[0]))


def all_rewrites(u: Term, identity: _HasSides) -> list[tuple[RewriteStep, Term]]:
    """Every term obtained from ``u`` by one application of ``identity``.

    Pattern variables bind whole subtrees, so the identity applies inside
    terms longer than itself. Nodes are visited in preorder and, at each
    node, the lhs->rhs direction is tried before rhs->lhs.
    """
    sides = (("lhs->rhs", identity.lhs_term(), identity.rhs_term()),
             ("rhs->lhs", identity.rhs_term(), identity.lhs_term()))
    n = length(u)
    out = []
    for path, offset, sub in _nodes(u):
        for direction, src, dst in sides:
            binding: dict[int, Term] = {}
            if not _match(src, sub, binding):
                continue
            new_sub = _substitute(dst, binding)
            old_off = _var_offsets(src, binding)
            new_off = _var_offsets(dst, binding)
            img = list(range(n))
            for v, sub_v in binding.items():
                for k in range(length(sub_v)):
                    img[offset + old_off[v] + k] = offset + new_off[v] + k
            step = RewriteStep(path, direction, Permutation(tuple(img)))
            out.append((step, _replace(u, path, new_sub)))
    return out
