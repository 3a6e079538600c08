"""Reference computations written independently of the library internals."""

import itertools

NEG_INF = float("-inf")


def words(alphabet, bound):
    for n in range(bound + 1):
        for w in itertools.product(alphabet, repeat=n):
            yield "".join(w)


def path_weights(A, w):
    """Weights of every successful path on ``w``, by explicit depth-first enumeration."""
    out = []

    def walk(state, pos, acc):
        if pos == len(w):
            if state in A.final:
                out.append(acc + A.final[state])
            return
        for t in A.transitions:
            if t.src == state and t.label == w[pos]:
                walk(t.dst, pos + 1, acc + t.weight)

    for q, x in A.initial.items():
        walk(q, 0, x)
    return out


def value(A, w):
    ws = path_weights(A, w)
    return max(ws) if ws else None


def count(A, w):
    return len(path_weights(A, w))


def heap_height(pieces, finals, w):
    """Drop the pieces of ``w`` on an empty board; highest final slot."""
    h = {}
    for a in w:
        top = max(h.get(s, 0) for s in pieces[a]) + 1
        for s in pieces[a]:
            h[s] = top
    return max(h.get(s, 0) for s in finals)
