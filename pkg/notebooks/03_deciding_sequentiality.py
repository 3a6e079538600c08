"""
Deciding sequentiality
======================

For a finitely ambiguous automaton the pipeline decomposes it, checks the
dominance property on the product of the pieces, builds an unambiguous
automaton, and finally tests the twin property.
"""

from maxplus import (
    construct_unambiguous,
    decide,
    determinize_weighted,
    fixtures,
    product,
    satisfies_dominance,
    twin_property,
)

# |u| dominates |u|_a on every circuit, so their max is unambiguous
family = [fixtures.get("all_ones"), fixtures.get("count_a")]
P = product(family)
print("dominance:", satisfies_dominance(P)[0])
c = construct_unambiguous(P)
print("configurations:", c.log())

# |u|_a against |u|_b: each wins on a different loop, so no coordinate survives
print("dominance:", satisfies_dominance(product([fixtures.get("count_a"), fixtures.get("count_b")]))[0])

# Twin property and weighted determinization
t = twin_property(fixtures.get("fig5_evenblocks"))
print("twins:", t.to_dict())
S = determinize_weighted(fixtures.get("twin_branch"))
print("sequential version:", len(S.states), "states")

# Classification of every built-in example
print(f"{'fixture':<16} {'famb':>5} {'namb':>5} {'seq':>5}")
for name in fixtures.FIXTURES:
    r = decide(fixtures.get(name))
    print(f"{name:<16} {str(r.finitely_ambiguous):>5} {str(r.unambiguous):>5} {str(r.sequential):>5}")
