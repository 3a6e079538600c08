import pytest

import oracles
from maxplus import fixtures as F
from maxplus.ambiguity import (
    degree_up_to, equivalent_up_to, find_counterexample, infinite_ambiguity_witness,
    is_infinitely_ambiguous,
)
from maxplus.automaton import Automaton


@pytest.mark.parametrize("name,expected", [
    ("fig8_infamb", True),
    ("fig1_heap", True),
    ("fig6a_heap", True),
    ("fig2_parity", False),
    ("fig3_maxcount", False),
    ("fig5_evenblocks", False),
    ("fig7_double", False),
    ("schutz_example", False),
])
def test_infinite_ambiguity(name, expected):
    A = F.get(name)
    w = infinite_ambiguity_witness(A)
    assert (w is not None) == expected
    if w is not None:
        assert w.replay(A)
    else:
        # finitely ambiguous: the degree stops growing
        assert degree_up_to(A, 6) == degree_up_to(A, 4)


def test_fig8_witness():
    w = infinite_ambiguity_witness(F.fig8_infamb())
    assert (w.p, w.q, w.word) == ("A", "B", ("c",))


def test_witness_replay_rejects_tampering():
    A = F.fig8_infamb()
    w = infinite_ambiguity_witness(A)
    bad = type(w)(w.q, w.p, w.word, w.loop_p, w.path_pq, w.loop_q)
    assert not bad.replay(A)


def test_degree_matches_path_count_oracle():
    for name in ["fig3_maxcount", "fig7_double", "schutz_example", "fig8_infamb"]:
        A = F.get(name)
        brute = max(oracles.count(A, w) for w in oracles.words(A.alphabet, 4))
        assert degree_up_to(A, 4) == brute


def test_degrees():
    assert degree_up_to(F.fig3_maxcount(), 6) == 2
    assert degree_up_to(F.fig5_evenblocks(), 6) == 1
    assert degree_up_to(F.fig8_infamb(), 3) == 2 ** 3 * 2


def test_dead_branches_do_not_count():
    # the p-loop reaches a state that is never final
    A = Automaton("a", "pqd", {"p": 0}, {"p": 0}, [
        ("p", "a", 0, "p"), ("p", "a", 0, "q"), ("q", "a", 0, "q"), ("q", "a", 0, "d"),
    ])
    assert not is_infinitely_ambiguous(A)


def test_counterexample():
    assert find_counterexample(F.count_a(), F.count_b(), 3) == ("a",)
    assert equivalent_up_to(F.fig3_maxcount(), F.fig3_maxcount(), 5)
    with pytest.raises(ValueError):
        find_counterexample(F.count_a(), F.fig2_parity(), 2)
