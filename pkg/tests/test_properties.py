import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import first_violation

from lingroupoid.hedron import implies
from lingroupoid.identities import LinearIdentity, canonicalize, enumerate_identities, parse_identity
from lingroupoid.models import GroupoidTable, counterexample, direct_product, satisfies
from lingroupoid.permgroup import Permutation, closure, orbit_with_transversal, schreier_generators, schreier_sims
from lingroupoid.terms import catalan, decode_bracketing, encode_bracketing, length
from lingroupoid.varieties import implies_fast
from lingroupoid.wreath import WreathElement

LENGTH6 = enumerate_identities(3, nontrivial_only=True)


def perms(n):
    return st.permutations(range(n)).map(lambda p: Permutation(tuple(p)))


def trees(max_leaves=8):
    return st.recursive(st.just(0), lambda kids: st.tuples(kids, kids), max_leaves=max_leaves)


def wreath(m, c):
    return st.builds(lambda top, comps: WreathElement(top, tuple(comps)),
                     perms(c), st.lists(perms(m), min_size=c, max_size=c))


@st.composite
def identities(draw, n_max=5):
    n = draw(st.integers(2, n_max))
    c = catalan(n)
    return LinearIdentity(n, draw(st.integers(0, c - 1)), draw(st.integers(0, c - 1)), draw(perms(n)))


@st.composite
def tables(draw, k_max=3):
    k = draw(st.integers(1, k_max))
    rows = draw(st.lists(st.lists(st.integers(0, k - 1), min_size=k, max_size=k), min_size=k, max_size=k))
    return GroupoidTable.from_rows(rows)


@st.composite
def subgroups(draw, n=6):
    return draw(st.lists(perms(n), min_size=1, max_size=3))


# --- bracketings ----------------------------------------------------------------

@given(st.integers(1, 8).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, catalan(n) - 1))))
def test_decode_then_encode(args):
    n, label = args
    t = decode_bracketing(n, label)
    assert length(t) == n
    assert encode_bracketing(t) == label


@given(trees())
def test_encode_then_decode(t):
    assert decode_bracketing(length(t), encode_bracketing(t)) == t


@given(trees())
def test_labels_in_range(t):
    assert 0 <= encode_bracketing(t) < catalan(length(t))


# --- permutations and wreath elements -------------------------------------------

@given(perms(6), perms(6), perms(6))
def test_permutation_group_axioms(a, b, c):
    e = Permutation.identity(6)
    assert (a * b) * c == a * (b * c)
    assert a * e == a == e * a
    assert a * a.inverse() == e
    assert (a * b)(1) == b(a(1))


@settings(max_examples=1000)
@given(wreath(3, 5), wreath(3, 5), wreath(3, 5))
def test_wreath_group_axioms(a, b, c):
    e = WreathElement.identity(3, 5)
    assert (a * b) * c == a * (b * c)
    assert a * e == a == e * a
    assert (a * a.inverse()).is_identity() and (a.inverse() * a).is_identity()
    assert (a * b).point_permutation() == a.point_permutation() * b.point_permutation()


@settings(max_examples=60, deadline=None)
@given(subgroups(), st.integers(1, 6))
def test_orbit_stabilizer(gens, x):
    orbit, _ = orbit_with_transversal(gens, x)
    stab = schreier_generators(gens, x)
    g_order = len(closure(gens, 6))
    stab_order = len(closure(stab, 6)) if stab else 1
    assert g_order == len(orbit) * stab_order
    assert schreier_sims(gens).order == g_order


# --- identities -------------------------------------------------------------------

@given(identities())
def test_name_and_surface_round_trip(ident):
    assert parse_identity(ident.name()) == ident
    assert parse_identity(ident.surface()) == ident


@given(identities())
def test_canonical_form(ident):
    c = canonicalize(ident)
    assert canonicalize(c) == c
    assert c in (ident, ident.swap())
    assert ident.swap().swap() == ident


@given(st.sampled_from(LENGTH6), st.sampled_from(LENGTH6))
def test_journeys_agree_with_fast_path(phi, psi):
    assert implies(phi, psi) == implies_fast(phi, psi)


@settings(max_examples=50, deadline=None)
@given(identities(n_max=4), identities(n_max=4))
def test_implication_reflexive_and_swap_invariant(phi, psi):
    assert implies(phi, phi)
    assert implies(phi, psi) == implies(phi.swap(), psi) == implies(phi, psi.swap())


# --- models -----------------------------------------------------------------------

@given(tables(), identities(n_max=4))
def test_counterexample_matches_oracle(t, ident):
    ref = first_violation(t.table, ident)
    got = counterexample(t, ident)
    if ref is None:
        assert got is None
    else:
        assert tuple(got.values()) == ref


@given(tables(), st.data())
def test_satisfaction_invariant_under_relabelling(t, data):
    k = t.order
    sigma = data.draw(st.permutations(range(k)))
    inv = [0] * k
    for a, b in enumerate(sigma):
        inv[b] = a
    # sigma is an isomorphism onto the relabelled table
    u = GroupoidTable.from_rows([[sigma[t.mul(inv[a], inv[b])] for b in range(k)] for a in range(k)])
    for ident in LENGTH6:
        assert satisfies(t, ident) == satisfies(u, ident)


@given(tables(), st.sampled_from(LENGTH6), st.sampled_from(LENGTH6))
def test_implication_sound_on_random_tables(t, phi, psi):
    if implies(phi, psi) and satisfies(t, phi):
        assert satisfies(t, psi)


@given(tables(k_max=2), tables(k_max=2))
def test_product_satisfies_common_identities(a, b):
    ab = direct_product(a, b)
    for ident in LENGTH6:
        assert satisfies(ab, ident) == (satisfies(a, ident) and satisfies(b, ident))


def test_all_assignments_small():
    # exhaustive sanity check alongside the random ones
    t = GroupoidTable.from_rows([[0, 1], [1, 0]])
    for ident in LENGTH6:
        ref = all(t.evaluate(ident.lhs_term(), a) == t.evaluate(ident.rhs_term(), a)
                  for a in itertools.product(range(2), repeat=3))
        assert satisfies(t, ident) == ref
