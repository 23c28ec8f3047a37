import math

import pytest

from lingroupoid.config import GuardError
from lingroupoid.identities import parse_identity
from lingroupoid.permgroup import Permutation, closure, group_order
from lingroupoid.wreath import (
    WreathElement,
    full_wreath_order,
    is_nice,
    niceness_screen,
    screen_json,
    wreath_generator_set,
    wreath_group_order,
)

P = Permutation.parse
ORDER_M5 = 5596490888974887121059840000000000000000


def elem(top, *comps):
    return WreathElement(Permutation(top), tuple(c if isinstance(c, Permutation) else Permutation(c)
                                                 for c in comps))


def test_multiplication_rule():
    # ((a_x), a) * ((b_x), b) = ((a_x b_{x a}), a b)
    a = elem((1, 0), (1, 0, 2), (0, 2, 1))
    b = elem((0, 1), (2, 1, 0), (0, 1, 2))
    ab = a * b
    assert ab.top.images == (1, 0)
    assert ab.comps[0] == a.comps[0] * b.comps[1]
    assert ab.comps[1] == a.comps[1] * b.comps[0]


def test_inverse_and_identity():
    a = elem((2, 0, 1), (1, 0), (0, 1), (1, 0))
    e = WreathElement.identity(2, 3)
    assert (a * a.inverse()).is_identity()
    assert (a.inverse() * a).is_identity()
    assert a * e == a == e * a


def test_point_permutation_is_a_homomorphism():
    a = elem((2, 0, 1), (1, 0), (0, 1), (1, 0))
    b = elem((1, 0, 2), (0, 1), (1, 0), (1, 0))
    assert (a * b).point_permutation() == a.point_permutation() * b.point_permutation()


def test_generator_counts_m5(ac_nice):
    gs = wreath_generator_set(ac_nice, 5)
    assert gs.directed_arrows == 42
    assert len(gs.elements) == 21
    assert gs.loop_generators == 0


def test_full_wreath_order():
    assert full_wreath_order(3) == math.factorial(3) ** 2 * 2
    assert full_wreath_order(5) == math.factorial(5) ** 14 * math.factorial(14)


def test_wreath_order_m3_against_closure(ac_nice):
    gens = [g.point_permutation() for g in wreath_generator_set(ac_nice, 3).elements]
    assert wreath_group_order(ac_nice, 3) == len(closure(gens, 6))


def test_wreath_order_m4_against_sympy(ac_nice):
    comb = pytest.importorskip("sympy.combinatorics")
    gens = [g.point_permutation() for g in wreath_generator_set(ac_nice, 4).elements]
    ref = comb.PermutationGroup([comb.Permutation(list(g.images)) for g in gens]).order()
    assert wreath_group_order(ac_nice, 4) == ref


def test_wreath_order_m5(ac_nice):
    order = wreath_group_order(ac_nice, 5)
    assert order == ORDER_M5
    assert full_wreath_order(5) // order == 2
    assert full_wreath_order(5) % order == 0


@pytest.mark.parametrize("method", ["group", "bfs"])
def test_ac_nice_niceness(ac_nice, method):
    r3 = is_nice(3, ac_nice, method)
    assert not r3.nice and r3.projection_order == 1
    r4 = is_nice(4, ac_nice, method)
    assert r4.orbit_full and not r4.projection_full and not r4.nice
    assert r4.stabilizer_generators == [P("(1,3)(2,4)")]
    assert r4.projection_order == 2
    assert is_nice(5, ac_nice, method).nice


@pytest.mark.parametrize("method", ["group", "bfs"])
def test_left_modular_not_nice(method):
    assert not is_nice(5, parse_identity("x(yz)=z(yx)"), method).nice


def test_any_base_bracketing(ac_nice):
    for x in range(5):
        r = is_nice(4, ac_nice, x=x)
        assert r.projection_order == 2 and not r.nice


def test_screen_length6_m5():
    rows = niceness_screen(3, [5], ("group", "bfs"))
    assert len(rows) == 14
    assert all(r.methods_agree for r in rows)
    assert [r.identity.surface() for r in rows if r.nice] == ["(xy)z=y(zx)"]
    assert '"agree": true' in screen_json(rows)


def test_screen_independent_of_jobs():
    one = niceness_screen(3, [4], ("group",), jobs=1)
    two = niceness_screen(3, [4], ("group",), jobs=2)
    assert [r.as_dict() for r in one] == [r.as_dict() for r in two]


def test_commutativity_projection():
    # commutative groupoids need not be associative, so not 3AC-nice
    comm = parse_identity("xy=yx")
    for method in ("group", "bfs"):
        r = is_nice(3, comm, method)
        assert r.orbit_full and r.projection_order == 2 and not r.nice
    assert is_nice(3, comm).loop_generators == 2


def test_report_text(ac_nice):
    text = is_nice(4, ac_nice).to_text()
    assert "P_x           <(1,3)(2,4)>  order 2 of 24" in text
    assert "nice          false" in text


def test_guards(ac_nice):
    with pytest.raises(GuardError):
        is_nice(7, ac_nice, "group")
    with pytest.raises(GuardError):
        is_nice(8, ac_nice, "bfs")
    with pytest.raises(ValueError):
        is_nice(4, ac_nice, "magic")


def test_group_order_of_loop_only_generators():
    comm = parse_identity("xy=yx")
    gens = [g.point_permutation() for g in wreath_generator_set(comm, 3).elements]
    # each bracketing of xyz has commuting swaps at two nodes: degree-6 action
    assert group_order(gens, 6) == len(closure(gens, 6))
