from fractions import Fraction

import pytest

import oracles
from maxplus import fixtures as F
from maxplus.automaton import Automaton, evaluate, is_sequential, shift_weights
from maxplus.ambiguity import equivalent_up_to
from maxplus.exceptions import CapExceeded
from maxplus.sequential import decide, determinize_weighted, lipschitz_scan, prefix_distance, twin_property


def brute_lipschitz(A, bound):
    sup = [(w, oracles.value(A, w)) for w in oracles.words(A.alphabet, bound)]
    sup = [(w, x) for w, x in sup if x is not None]
    best = Fraction(0)
    for i, (u, x) in enumerate(sup):
        for v, y in sup[i + 1:]:
            k = 0
            while k < min(len(u), len(v)) and u[k] == v[k]:
                k += 1
            best = max(best, Fraction(abs(x - y), len(u) + len(v) - 2 * k))
    return best


def test_prefix_distance():
    assert prefix_distance("abc", "abd") == 2
    assert prefix_distance("abba", "abba") == 0
    assert prefix_distance("a", "bbb") == 4
    assert prefix_distance("", "ab") == 2


@pytest.mark.parametrize("name", ["fig2_parity", "fig3_maxcount", "fig5_evenblocks", "constant_zero"])
def test_lipschitz_scan_matches_brute_force(name):
    A = F.get(name)
    assert lipschitz_scan(A, 4).constant == brute_lipschitz(A, 4)


def test_lipschitz_samples():
    assert lipschitz_scan(F.constant_zero(), 5).constant == 0
    assert lipschitz_scan(F.fig3_maxcount(), 4).constant == 1
    assert lipschitz_scan(F.fig2_parity(), 6).constant >= 5


def test_twin_witnesses():
    t = twin_property(F.fig3_maxcount())
    assert (t.p, t.q, t.u1, t.u2, t.x2, t.y2) == ("1", "2", (), ("a",), 1, 0)
    t = twin_property(F.fig5_evenblocks())
    assert (t.u2, t.x2, t.y2) == (("a", "a"), 0, 2)
    t = twin_property(F.fig4b())
    assert (t.p, t.q, t.u1, t.u2, t.x2, t.y2) == ("A", "B", ("a",), ("b",), 0, 1)
    for A in (F.fig3_maxcount(), F.fig5_evenblocks(), F.fig4b(), F.fig_na_nfus2()):
        assert twin_property(A).replay(A)


def test_twins_hold():
    for name in ["twin_branch", "count_a", "schutz_example", "constant_zero"]:
        assert twin_property(F.get(name)).verdict


@pytest.mark.parametrize("name", list(F.FIXTURES))
@pytest.mark.parametrize("c", [Fraction(-3), Fraction(7, 2)])
def test_twins_shift_invariant(name, c):
    A = F.get(name)
    assert twin_property(A).verdict == twin_property(shift_weights(A, c)).verdict


def test_twin_failure_means_growing_lipschitz():
    # unambiguous and not twins: the sampled constant keeps growing
    for name in ["fig2_parity", "fig5_evenblocks", "fig_na_nfus2"]:
        A = F.get(name)
        c = [lipschitz_scan(A, L).constant for L in (4, 6, 8)]
        assert c[0] < c[1] < c[2], name


def test_determinize():
    for name in ["twin_branch", "count_a", "schutz_example"]:
        A = F.get(name)
        D = determinize_weighted(A)
        assert is_sequential(D)
        for w in oracles.words(A.alphabet, 5):
            v = evaluate(D, w)
            assert (None if str(v) == "-inf" else v) == oracles.value(A, w)


def test_determinize_sequential_input_is_equivalent():
    D = determinize_weighted(F.count_a())
    assert len(D.states) == 1 and equivalent_up_to(F.count_a(), D, 6)


def test_determinize_diverges_without_twins():
    with pytest.raises(CapExceeded):
        determinize_weighted(F.fig5_evenblocks(), cap=50)


@pytest.mark.parametrize("name,unamb,seq", [
    ("fig2_parity", True, False),
    ("fig3_maxcount", False, False),
    ("fig4b", True, False),
    ("fig5_evenblocks", True, False),
    ("fig6b", False, False),
    ("fig7_double", False, False),
    ("twin_branch", True, True),
    ("schutz_example", True, True),
    ("fig8_infamb", None, None),
    ("fig1_heap", None, None),
])
def test_decide(name, unamb, seq):
    A = F.get(name)
    r = decide(A)
    assert (r.unambiguous, r.sequential) == (unamb, seq)
    assert r.consistent()
    d = r.to_dict()
    assert d["unambiguous"] == unamb and d["sequential"] == seq
    if seq:
        assert is_sequential(r.sequential_automaton)
        assert equivalent_up_to(A, r.sequential_automaton, 6)
    if unamb is None:
        assert d["note"].startswith("undecided")


def test_decide_empty_series():
    A = Automaton("a", "p", {"p": 0}, {}, [])
    r = decide(A)
    assert r.sequential and r.consistent()
