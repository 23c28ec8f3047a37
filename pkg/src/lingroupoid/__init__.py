"""Linear groupoid identities: names, implication, varieties, niceness and finite models."""

from .config import DEFAULT_LIMITS, DomainError, GuardError, Limits, ParseError
from .hedron import Hedron, build_hedron, implied_names, implied_set, implies, to_dot
from .identities import (
    LinearIdentity,
    canonicalize,
    census,
    enumerate_identities,
    parse_identity,
)
from .models import (
    GroupoidTable,
    counterexample,
    direct_product,
    load_table,
    parse_table,
    satisfies,
    search_model,
)
from .permgroup import Permutation, schreier_sims
from .terms import catalan, decode_bracketing, encode_bracketing
from .varieties import classify, implies_fast, same_variety
from .wreath import WreathElement, full_wreath_order, is_nice, niceness_screen, wreath_group_order

__all__ = [
    "DEFAULT_LIMITS", "DomainError", "GuardError", "Limits", "ParseError",
    "Hedron", "build_hedron", "implied_names", "implied_set", "implies", "to_dot",
    "LinearIdentity", "canonicalize", "census", "enumerate_identities", "parse_identity",
    "GroupoidTable", "counterexample", "direct_product", "load_table", "parse_table",
    "satisfies", "search_model",
    "Permutation", "schreier_sims",
    "catalan", "decode_bracketing", "encode_bracketing",
    "classify", "implies_fast", "same_variety",
    "WreathElement", "full_wreath_order", "is_nice", "niceness_screen", "wreath_group_order",
]
