import pytest

import oracles
from maxplus import fixtures as F
from maxplus.ambiguity import degree_up_to
from maxplus.automaton import evaluate
from maxplus.covering import decompose_unambiguous
from maxplus.dominance import product
from maxplus.exceptions import CapExceeded, PreconditionError
from maxplus.semiring import BOTTOM
from maxplus.unambiguizer import build_unambiguous, constants_NM, construct_unambiguous


def brute_max(family, w):
    vals = [oracles.value(B, w) for B in family]
    return None if None in vals else max(vals)


def test_constants():
    fam = [F.count_a(), F.count_b()]
    c = constants_NM(fam, product(fam))
    assert (c.N, c.M) == (1, 1)
    fam = [F.all_ones(), F.count_a()]
    assert constants_NM(fam, product(fam)).M == 1
    assert constants_NM([F.constant_zero()], product([F.constant_zero()])).M == 0


@pytest.mark.parametrize("family", [
    [F.all_ones(), F.count_a()],
    [F.constant_zero(), F.count_a()],
    [F.fig5_evenblocks()],
    [F.fig2_parity()],
])
def test_realizes_the_max(family):
    U = build_unambiguous(product(family))
    assert degree_up_to(U, 6) <= 1
    for w in oracles.words(family[0].alphabet, 6):
        v = evaluate(U, w)
        assert (None if v is BOTTOM else v) == brute_max(family, w)


@pytest.mark.parametrize("name", ["twin_branch", "schutz_example", "fig2_parity", "fig4b"])
def test_configurations_are_normalized(name):
    P = product(decompose_unambiguous(F.get(name)))
    c = construct_unambiguous(P)
    for z, _ in c.configurations:
        assert min(x for x in z if x is not BOTTOM) == 0
    start = max(max(a) - min(a) for a in P.initial.values())
    assert 0 <= c.max_spread <= c.constants.N * c.constants.M + start
    log = c.log()
    assert log["configurations"] == len(c.configurations)


def test_requires_dominance():
    with pytest.raises(PreconditionError):
        build_unambiguous(product([F.count_a(), F.count_b()]))


def test_cap():
    with pytest.raises(CapExceeded):
        construct_unambiguous(product(decompose_unambiguous(F.twin_branch())), cap=2)
