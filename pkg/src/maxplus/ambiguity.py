"""Structural ambiguity: the infinite-ambiguity criterion and bounded checks."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .automaton import Automaton, trim, walk_words

__all__ = [
    "AmbiguityWitness",
    "degree_up_to",
    "equivalent_up_to",
    "find_counterexample",
    "infinite_ambiguity_witness",
    "is_infinitely_ambiguous",
]


@dataclass(frozen=True)
class AmbiguityWitness:
    """States ``p != q`` and a word ``v`` with loops on ``p`` and ``q`` and a ``p -> q`` path."""

    p: str
    q: str
    word: tuple
    loop_p: tuple
    path_pq: tuple
    loop_q: tuple

    def replay(self, A: Automaton) -> bool:
        """Check the three paths against ``A``."""
        trans = set(A.transitions)

        def ok(path, start, end):
            if tuple(t.label for t in path) != self.word:
                return False
            cur = start
            for t in path:
                if t not in trans or t.src != cur:
                    return False
                cur = t.dst
            return cur == end

        return (
            self.p != self.q
            and len(self.word) > 0
            and ok(self.loop_p, self.p, self.p)
            and ok(self.path_pq, self.p, self.q)
            and ok(self.loop_q, self.q, self.q)
        )


def infinite_ambiguity_witness(A: Automaton):
    """Return an :class:`AmbiguityWitness` if ``A`` is infinitely ambiguous, else ``None``.

    Works on the trim part of ``A``: a breadth-first search in the graph of
    state triples moved by a common letter, from ``(p, p, q)`` to ``(p, q, q)``.
    The first pair in state order wins and its word is a shortest one.
    """
    A = trim(A)
    n = len(A.states)
    lookup = {(t.src, t.label, t.dst): t for t in A.transitions}

    def moves(triple):
        r, s, t = triple
        for a in A.alphabet:
            for r2, _ in A.successors(r, a):
                for s2, _ in A.successors(s, a):
                    for t2, _ in A.successors(t, a):
                        yield a, (r2, s2, t2)

    for p in range(n):
        for q in range(n):
            if p == q:
                continue
            start, goal = (p, p, q), (p, q, q)
            pred = {start: None}
            todo = deque([start])
            found = False
            while todo and not found:
                cur = todo.popleft()
                for a, nxt in moves(cur):
                    if nxt in pred:
                        continue
                    pred[nxt] = (cur, a)
                    if nxt == goal:
                        found = True
                        break
                    todo.append(nxt)
            if not found:
                continue
            steps = []
            cur = goal
            while pred[cur] is not None:
                prev, a = pred[cur]
                steps.append((prev, a, cur))
                cur = prev
            steps.reverse()
            name = A.states
            paths = ([], [], [])
            for prev, a, nxt in steps:
                for k in range(3):
                    paths[k].append(lookup[(name[prev[k]], a, name[nxt[k]])])
            return AmbiguityWitness(
                p=name[p],
                q=name[q],
                word=tuple(a for _, a, _ in steps),
                loop_p=tuple(paths[0]),
                path_pq=tuple(paths[1]),
                loop_q=tuple(paths[2]),
            )
    return None


def is_infinitely_ambiguous(A: Automaton) -> bool:
    return infinite_ambiguity_witness(A) is not None


def degree_up_to(A: Automaton, bound: int) -> int:
    """Largest number of successful paths over words of length ``<= bound``."""
    return max(n for _, n in walk_words(A, bound, counting=True))


def find_counterexample(A: Automaton, B: Automaton, bound: int):
    """Shortest word (shortlex) of length ``<= bound`` on which the series differ, or ``None``."""
    if set(A.alphabet) != set(B.alphabet):
        raise ValueError("automata over different alphabets")
    for (w, x), (_, y) in zip(
        walk_words(A, bound), walk_words(B, bound, alphabet=A.alphabet)
    ):
        if x != y:
            return w
    return None


def equivalent_up_to(A: Automaton, B: Automaton, bound: int) -> bool:
    return find_counterexample(A, B, bound) is None
