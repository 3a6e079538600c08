import pytest

import oracles
from maxplus import fixtures as F
from maxplus.ambiguity import degree_up_to
from maxplus.automaton import evaluate, is_sequential
from maxplus.covering import (
    check_decomposable, competing_sets, decompose_unambiguous, determinize_boolean,
    schutzenberger_covering,
)
from maxplus.exceptions import PreconditionError
from maxplus.semiring import BOTTOM

FINITE = ["fig2_parity", "fig3_maxcount", "fig4b", "fig_na_nfus2", "fig5_evenblocks",
          "fig6b", "fig7_double", "schutz_example", "twin_branch", "all_ones"]


def test_worked_example_subsets():
    D = determinize_boolean(F.schutz_example())
    assert set(D.automaton.states) == {"{p,q}", "{q,r}", "{p,r}", "{r}", "{q}", "{p}"}
    assert is_sequential(D.automaton)


def test_worked_example_covering():
    S = schutzenberger_covering(F.schutz_example())
    assert len(S.automaton.states) == 9
    sets = competing_sets(S)
    assert [X.kind for X in sets] == ["transition", "final"]
    assert {t.dst for t in sets[0].members} == {"(r,{r})"}
    assert set(sets[1].members) == {"(p,{p,r})", "(r,{p,r})"}
    assert check_decomposable(S)
    assert len(decompose_unambiguous(F.schutz_example())) == 4


def test_fig3_covering():
    S = schutzenberger_covering(F.fig3_maxcount())
    assert set(S.automaton.states) == {"(1,{1,2})", "(2,{1,2})"}
    assert len(S.columns()) == 1
    sets = competing_sets(S)
    assert len(sets) == 1 and sets[0].kind == "final"
    leaves = decompose_unambiguous(F.fig3_maxcount())
    values = sorted(tuple(evaluate(L, w) for w in ["aab", "abb"]) for L in leaves)
    assert values == [(1, 2), (2, 1)]


def test_deterministic_input():
    A = F.count_a()
    S = schutzenberger_covering(A)
    assert len(S.automaton.states) == 1
    assert competing_sets(S) == []
    assert check_decomposable(S)
    assert len(decompose_unambiguous(A)) == 1


def test_fig8_not_decomposable():
    assert not check_decomposable(schutzenberger_covering(F.fig8_infamb()))
    with pytest.raises(PreconditionError) as e:
        decompose_unambiguous(F.fig8_infamb())
    assert e.value.witness is not None


@pytest.mark.parametrize("name", FINITE)
def test_covering_preserves_paths(name):
    A = F.get(name)
    S = schutzenberger_covering(A)
    for q, (p, P) in S.pairs.items():
        assert p in P and S.psi_state(q) == p
    for t in S.automaton.transitions:
        assert S.psi(t) in A.transitions
    for w in oracles.words(A.alphabet, 5):
        assert oracles.count(S.automaton, w) == oracles.count(A, w)
        assert evaluate(S.automaton, w) == evaluate(A, w)


@pytest.mark.parametrize("name", FINITE)
def test_decomposition(name):
    A = F.get(name)
    leaves = decompose_unambiguous(A, check_bound=None)
    for L in leaves:
        assert degree_up_to(L, 6) <= 1
    for w in oracles.words(A.alphabet, 5):
        src = oracles.value(A, w)
        got = [oracles.value(L, w) for L in leaves]
        assert all((g is None) == (src is None) for g in got)
        if src is not None:
            assert max(got) == src


def test_columns_share_past():
    S = schutzenberger_covering(F.schutz_example())
    aut = S.automaton
    for P, qs in S.columns().items():
        pasts = []
        for q in qs:
            tmp = aut.replace(final={q: 0})
            pasts.append({w for w in oracles.words("ab", 4) if evaluate(tmp, w) is not BOTTOM})
        assert all(p == pasts[0] for p in pasts)
