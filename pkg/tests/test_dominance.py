import pytest

import oracles
from maxplus import fixtures as F
from maxplus.automaton import Automaton
from maxplus.covering import decompose_unambiguous
from maxplus.dominance import analyze_sccs, product, satisfies_dominance, victorious
from maxplus.exceptions import CapExceeded, PreconditionError
from maxplus.semiring import BOTTOM


def test_victorious():
    assert victorious((1, 0)) == {0}
    assert victorious((1, 1)) == {0, 1}
    assert victorious((0, 1, 1)) == {1, 2}


def test_single_member():
    A = F.fig5_evenblocks()
    P = product([A])
    assert len(P.states) == 4
    assert all(len(x) == 1 for _, _, x, _ in P.transitions)
    assert satisfies_dominance(P)[0]


def test_fig3_pair():
    P = product([F.count_a(), F.count_b()])
    assert len(P.states) == 1
    assert sorted((a, x) for _, a, x, _ in P.transitions) == [("a", (1, 0)), ("b", (0, 1))]
    R = analyze_sccs(P)
    assert R.victorious == (frozenset(),)
    assert R.circuit_count() == 2
    ok, w = satisfies_dominance(P, R)
    assert not ok and w.states == (0,) and w.replay(P, R)


def test_all_ones_with_count_a():
    P = product([F.all_ones(), F.count_a()])
    assert sorted((a, x) for _, a, x, _ in P.transitions) == [("a", (1, 1)), ("b", (1, 0))]
    assert analyze_sccs(P).victorious == (frozenset({0}),)
    assert satisfies_dominance(P) == (True, None)


def test_acyclic_product_is_all_victorious():
    A = Automaton("a", "pq", {"p": 0}, {"q": 0}, [("p", "a", 1, "q")])
    B = Automaton("a", "st", {"s": 0}, {"t": 0}, [("s", "a", 2, "t")])
    R = analyze_sccs(product([A, B]))
    assert all(v == {0, 1} for v in R.victorious)


def test_identical_members_dominate():
    A = F.fig5_evenblocks()
    assert satisfies_dominance(product([A, A, A]))[0]


def test_product_runs_coordinatewise():
    leaves = decompose_unambiguous(F.fig6b())
    P = product(leaves)
    for w in oracles.words("abc", 4):
        got = P.run(w)
        want = tuple(oracles.value(L, w) for L in leaves)
        assert tuple(None if x is BOTTOM else x for x in got) == want


@pytest.mark.parametrize("name,expected", [
    ("fig2_parity", True), ("fig3_maxcount", False), ("fig6b", False),
    ("fig7_double", False), ("twin_branch", True), ("schutz_example", True),
])
def test_dominance_on_decompositions(name, expected):
    P = product(decompose_unambiguous(F.get(name)))
    R = analyze_sccs(P)
    ok, w = satisfies_dominance(P, R)
    assert ok == expected
    if not ok:
        assert w.replay(P, R)
        assert not frozenset.intersection(*w.victorious_sets)


def test_guards():
    with pytest.raises(PreconditionError):
        product([F.fig3_maxcount()])
    with pytest.raises(PreconditionError):
        product([F.count_a(), F.fig2_parity()], guard=3)
    half = Automaton("ab", "s", {"s": 0}, {"s": 0}, [("s", "a", 0, "s")])
    with pytest.raises(PreconditionError) as e:
        product([F.count_a(), half])
    assert e.value.witness == ("b",)


def test_circuit_cap():
    with pytest.raises(CapExceeded):
        analyze_sccs(product([F.all_ones(), F.count_a()]), cap=1)
