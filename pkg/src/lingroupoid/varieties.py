"""Implication and equality of single-identity varieties of equal length.

For nontrivial ``<i|j|f>`` and ``<r|s|g>`` of the same length ``2n`` with
``n >= 3``, the first implies the second iff they are the same identity, or
``i = j = r = s`` and ``g`` is a power of ``f``. Identities of different
lengths never define the same variety.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .config import DEFAULT_LIMITS, DomainError, Limits
from .identities import LinearIdentity, canonicalize, enumerate_identities
from .permgroup import Permutation


def _powers(f: Permutation) -> frozenset[tuple]:
    out = set()
    p = f.images
    cur = p
    while cur not in out:
        out.add(cur)
        cur = tuple(p[x] for x in cur)
    return frozenset(out)


def implies_fast(phi: LinearIdentity, psi: LinearIdentity) -> bool:
    if phi.n != psi.n:
        raise DomainError(f"lengths differ ({2 * phi.n} vs {2 * psi.n}); use hedron.implies")
    if phi.is_trivial or psi.is_trivial:
        raise DomainError("trivial identity: implication is immediate, not covered here")
    if phi.n == 2:
        # commutativity is the only nontrivial identity of length 4
        return True
    if canonicalize(phi) == canonicalize(psi):
        return True
    if not (phi.lhs == phi.rhs == psi.lhs == psi.rhs):
        return False
    return psi.f.images in _powers(phi.f)


def same_variety(phi: LinearIdentity, psi: LinearIdentity) -> bool:
    if phi.is_trivial or psi.is_trivial:
        raise DomainError("trivial identity defines the variety of all groupoids")
    if phi.n != psi.n:
        return False
    return implies_fast(phi, psi) and implies_fast(psi, phi)


def implies_any(phi: LinearIdentity, psi: LinearIdentity, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Fast path when it applies, otherwise a journey search in the hedron."""
    if phi.n == psi.n and not phi.is_trivial and not psi.is_trivial:
        return implies_fast(phi, psi)
    from .hedron import implies

    return implies(phi, psi, limits)


# remarks attached to named length-6 varieties
ANNOTATIONS = {
    "<3|0|0|(1,3)>": "right modular groupoids",
    "<3|0|0|(2,3)>": "right permutable groupoids",
    "<3|0|1|()>": "semigroups",
    "<3|0|1|(1,3,2)>": "ultimately AC-nice",
    "<3|1|1|(1,3)>": "left modular groupoids",
    "<3|1|1|(2,3)>": "left permutable groupoids",
}


@dataclass
class VarietyClass:
    representative: LinearIdentity
    members: list[LinearIdentity]
    annotation: str | None = None
    equivalent_names: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "identity": self.representative.surface(),
            "name": self.representative.name(),
            "equivalent": self.equivalent_names,
            "annotation": self.annotation,
            "members": [m.name() for m in self.members],
        }


def display_key(ident: LinearIdentity) -> tuple:
    """Order used for printed tables: labels, then permutation order, then cycles."""
    return (ident.n, ident.lhs, ident.rhs, ident.f.order(), ident.f.cycles())


def _class_key(ident: LinearIdentity):
    if ident.lhs == ident.rhs:
        return (ident.lhs, _powers(ident.f))
    return ident


def classify(n: int, limits: Limits = DEFAULT_LIMITS) -> list[VarietyClass]:
    """Partition the nontrivial canonical identities of length ``2n`` into varieties.

    Two identities share a class iff each implies the other; for ``i = j``
    that means their permutations generate the same cyclic group.
    """
    groups: dict[object, list[LinearIdentity]] = {}
    for ident in enumerate_identities(n, True, limits):
        groups.setdefault(_class_key(ident), []).append(ident)
    out = []
    for members in groups.values():
        members.sort(key=LinearIdentity.sort_key)
        rep = members[0]
        names = []
        for m in members:
            for alias in (m, m.swap()):
                if alias != rep and alias.name(False) not in names:
                    names.append(alias.name(False))
        out.append(VarietyClass(rep, members, ANNOTATIONS.get(rep.name()),
                                names))
    out.sort(key=lambda c: display_key(c.representative))
    return out


def classify_table(classes: list[VarietyClass]) -> str:
    rows = [("identity", "systematic name", "is equivalent to", "remark")]
    for c in classes:
        rows.append((c.representative.surface(), c.representative.name(False),
                     ", ".join(c.equivalent_names), c.annotation or ""))
    widths = [max(len(r[k]) for r in rows) for k in range(4)]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip()
                     for r in rows) + "\n"


def classify_json(classes: list[VarietyClass]) -> str:
    return json.dumps([c.as_dict() for c in classes], indent=2)
