"""
From finitely ambiguous to unambiguous pieces
=============================================

The covering of an automaton pairs each state with the set of states
reachable by the same word.  Competing transitions and final states in it
are split apart until every piece is unambiguous.
"""

from maxplus import (
    competing_sets,
    decompose_unambiguous,
    degree_up_to,
    determinize_boolean,
    evaluate,
    fixtures,
    schutzenberger_covering,
)

A = fixtures.get("schutz_example")
D = determinize_boolean(A)
print("subset states:", D.automaton.states)

S = schutzenberger_covering(A)
print("covering states:", S.automaton.states)
for X in competing_sets(S):
    print(X.kind, [str(m) for m in X.members])

leaves = decompose_unambiguous(A)
print(len(leaves), "unambiguous pieces, degrees", [degree_up_to(L, 6) for L in leaves])

# The same split on a weighted example: max(|u|_a, |u|_b) becomes |u|_a and |u|_b
pieces = decompose_unambiguous(fixtures.get("fig3_maxcount"))
for w in ["aab", "abb"]:
    print(w, [str(evaluate(L, w)) for L in pieces])
