import numpy as np
import pytest

from oracles import first_violation, satisfaction_matrix

from lingroupoid.config import GuardError, ParseError
from lingroupoid.corpus import DISTINGUISHING, POWER_WITNESS, PRODUCT_A, PRODUCT_B, corpus_names, corpus_text
from lingroupoid.identities import parse_identity, variable_names
from lingroupoid.models import (
    GroupoidTable,
    counterexample,
    direct_product,
    format_table,
    load_table,
    parse_inline_table,
    parse_table,
    satisfies,
    search_model,
    verdicts,
)

ONE = GroupoidTable.from_rows([[0]])


def test_parse_and_format_round_trip():
    text = "# comment\n3\n0 1 0\n0 1 2  # trailing\n1 1 1\n"
    t = parse_table(text)
    assert t.table == ((0, 1, 0), (0, 1, 2), (1, 1, 1))
    assert parse_table(format_table(t)) == t
    assert parse_inline_table("0 1 0; 0 1 2; 1 1 1") == t
    assert parse_inline_table("0 1 0/0 1 2/1 1 1") == t


@pytest.mark.parametrize("bad", ["", "2\n0 1\n", "2\n0 1\n1 2\n", "2\n0 x\n1 0\n", "2\n0 1 1\n1 0\n"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_table(bad)


def test_load_table_from_path(tmp_path):
    p = tmp_path / "t.txt"
    p.write_text(POWER_WITNESS)
    assert load_table(str(p)) == parse_table(POWER_WITNESS)
    assert load_table("0 1;1 0").order == 2


def test_labelled_table_satisfies_its_identity():
    t = parse_table(DISTINGUISHING["<3|1|1|(1,2)>"])
    assert satisfies(t, parse_identity("x(yz)=y(xz)"))
    assert not satisfies(t, parse_identity("(xy)z=y(zx)"))


def test_order_one_satisfies_everything(length6, length8):
    assert all(verdicts(ONE, length6)) and all(verdicts(ONE, length8))


def test_counterexample_is_first_violation(length6):
    for name in DISTINGUISHING:
        t = parse_table(DISTINGUISHING[name])
        for ident in length6:
            got = counterexample(t, ident)
            ref = first_violation(t.table, ident)
            assert (got is None) == (ref is None)
            if ref is not None:
                assert got == dict(zip(variable_names(3), ref))
                # chunking does not change the answer
                assert counterexample(t, ident, chunk=1) == got


def test_corpus_verdict_matrix(length6):
    for name, text in DISTINGUISHING.items():
        t = parse_table(text)
        assert [i.name() for i in length6 if satisfies(t, i)] == [name]


def test_power_witness():
    t = parse_table(POWER_WITNESS)
    assert satisfies(t, parse_identity("<4|3|3|(1,3)(2,4)>"))
    assert counterexample(t, parse_identity("<4|3|3|(1,2,3,4)>")) == {"x": 0, "y": 0, "z": 0, "u": 1}


def test_product_with_trivial_table():
    t = parse_table(DISTINGUISHING["<3|0|0|(1,3)>"])
    assert direct_product(t, ONE) == t
    assert direct_product(ONE, t) == t


def test_product_indexing():
    a = parse_inline_table("0 1;1 0")
    b = parse_inline_table("0 0 1;2 1 0;1 1 1")
    p = direct_product(a, b)
    assert p.order == 6
    for x1 in range(2):
        for y1 in range(3):
            for x2 in range(2):
                for y2 in range(3):
                    assert p.mul(x1 * 3 + y1, x2 * 3 + y2) == a.mul(x1, x2) * 3 + b.mul(y1, y2)


def test_product_preserves_identities(length6):
    for name in ["<3|0|0|(1,3)>", "<3|0|1|()>"]:
        t = parse_table(DISTINGUISHING[name])
        ident = parse_identity(name)
        assert satisfies(direct_product(t, t), ident)


def test_ab_product_satisfies_ac_nice(ac_nice):
    a, b = parse_table(PRODUCT_A), parse_table(PRODUCT_B)
    assert (a.order, b.order) == (9, 8)
    assert satisfies(a, ac_nice) and satisfies(b, ac_nice)
    ab = direct_product(a, b)
    assert ab.order == 72 and satisfies(ab, ac_nice)


def test_corpus_lookup():
    assert len(corpus_names()) == 17
    assert corpus_text("A") == PRODUCT_A
    with pytest.raises(KeyError):
        corpus_text("nope")


def test_table_validation():
    with pytest.raises(ValueError):
        GroupoidTable.from_rows([[0, 2], [1, 0]])
    with pytest.raises(ValueError):
        GroupoidTable.from_rows([[0, 1]])
    assert GroupoidTable.from_rows([[1, 0], [0, 1]]).array.dtype == np.uint8


# --- search -------------------------------------------------------------------

def test_search_commutative_order_one():
    r = search_model([parse_identity("xy=yx")], [], max_order=1)
    assert r.found and r.model.order == 1


def test_search_guard():
    with pytest.raises(GuardError):
        search_model([parse_identity("xy=yx")], [], max_order=7)


def test_search_violate_only():
    r = search_model([], [parse_identity("xy=yx")], max_order=3)
    assert r.model.table == ((0, 0), (1, 0)) and r.exhausted == [1]


@pytest.fixture(scope="module")
def brute(length6):
    return {k: satisfaction_matrix(k, length6) for k in (1, 2, 3)}


# number of order-k tables satisfying exactly the given identity among the 14
# nontrivial length-6 ones, from the brute-force enumeration in oracles.py
DISTINGUISHING_COUNTS = {
    2: {"<3|0|0|(2,3)>": 2, "<3|1|1|(1,2)>": 2},
    3: {"<3|0|0|(2,3)>": 342, "<3|0|0|(1,2)>": 162, "<3|0|1|()>": 6, "<3|0|1|(2,3)>": 6,
        "<3|0|1|(1,2)>": 6, "<3|1|1|(2,3)>": 162, "<3|1|1|(1,2)>": 342},
}


def test_brute_force_distinguishing_counts(brute, length6):
    for k, expected in DISTINGUISHING_COUNTS.items():
        _, sat = brute[k]
        only = sat & (sat.sum(1) == 1)[:, None]
        got = {i.name(): int(only[:, j].sum()) for j, i in enumerate(length6) if only[:, j].any()}
        assert got == expected
    _, sat1 = brute[1]
    assert sat1.all()


def test_search_matches_brute_force(brute, length6):
    """The search returns the lexicographically first smallest model, or proves none exist."""
    for j, phi in enumerate(length6):
        r = search_model([phi], [i for i in length6 if i != phi], max_order=3)
        expected = None
        for k in (1, 2, 3):
            tables, sat = brute[k]
            hits = np.flatnonzero(sat[:, j] & (sat.sum(1) == 1))
            if len(hits):
                expected = tables[hits[0]]
                break
        if expected is None:
            assert not r.found and r.exhausted == [1, 2, 3]
        else:
            assert r.model.table == tuple(map(tuple, expected.tolist()))
            assert r.exhausted == list(range(1, r.model.order))


def test_search_mixed_constraints_match_brute_force(brute, length6):
    names = [i.name() for i in length6]
    sat_idx = [names.index("<3|0|0|(1,2)>"), names.index("<3|1|1|(2,3)>")]
    vio_idx = names.index("<3|0|1|()>")
    r = search_model([length6[j] for j in sat_idx], [length6[vio_idx]], max_order=3)
    expected = None
    for k in (1, 2, 3):
        tables, sat = brute[k]
        hits = np.flatnonzero(sat[:, sat_idx].all(1) & ~sat[:, vio_idx])
        if len(hits):
            expected = tables[hits[0]]
            break
    assert expected is not None
    assert r.model.table == tuple(map(tuple, expected.tolist()))
