"""
Max-plus series and heaps of pieces
===================================

A max-plus automaton reads a word and returns the best weight over its
successful paths.  Two small examples show the kind of series involved.
"""

from maxplus import evaluate, fixtures, lipschitz_scan
from maxplus.automaton import count_successful_paths

# a^n -> n when n is even, 0 otherwise: two disjoint loops compete
parity = fixtures.get("fig2_parity")
print([str(evaluate(parity, "a" * n)) for n in range(9)])

# Dropping pieces on two independent slots: the height is max(|u|_a, |u|_b)
heap = fixtures.get("fig3_maxcount")
for w in ["", "a", "ab", "aab", "abbb"]:
    print(repr(w), evaluate(heap, w), "paths:", count_successful_paths(heap, w))

# Lipschitz behaviour sampled on short words.  The heap series changes by at
# most one per letter; the parity series jumps by n between a^n and a^(n-1).
print("heap   :", lipschitz_scan(heap, 4).constant)
for L in (4, 6, 8):
    print("parity :", L, lipschitz_scan(parity, L).constant)
