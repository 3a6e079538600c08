"""Schützenberger covering and the split of a finitely ambiguous automaton
into a finite union of unambiguous automata with the same support.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

import networkx as nx

from .ambiguity import degree_up_to, infinite_ambiguity_witness
from .automaton import Automaton, Transition, _tensor, trim, walk_words, word_str
from .exceptions import PreconditionError
from .semiring import BOTTOM, ONE, w_plus

__all__ = [
    "CompetingSet",
    "Covering",
    "SubsetAutomaton",
    "check_decomposable",
    "competing_sets",
    "decompose_unambiguous",
    "determinize_boolean",
    "schutzenberger_covering",
]


@dataclass(frozen=True)
class SubsetAutomaton:
    """Accessible subset construction; every weight is the semiring one."""

    automaton: Automaton
    subsets: Mapping[str, frozenset]


def _subset_name(A: Automaton, members) -> str:
    return "{" + ",".join(sorted(members, key=A.index)) + "}"


def determinize_boolean(A: Automaton) -> SubsetAutomaton:
    start = frozenset(A.initial)
    if not start:
        return SubsetAutomaton(Automaton(A.alphabet, [], {}, {}, []), MappingProxyType({}))
    names = {start: _subset_name(A, start)}
    order = [start]
    trans = []
    todo = deque([start])
    while todo:
        P = todo.popleft()
        idx = [A.index(p) for p in P]
        for a in A.alphabet:
            nxt = frozenset(A.states[j] for i in idx for j, _ in A.successors(i, a))
            if not nxt:
                continue
            if nxt not in names:
                names[nxt] = _subset_name(A, nxt)
                order.append(nxt)
                todo.append(nxt)
            trans.append((names[P], a, ONE, names[nxt]))
    final = {names[P]: ONE for P in order if any(p in A.final for p in P)}
    aut = Automaton(A.alphabet, [names[P] for P in order], {names[start]: ONE}, final, trans)
    return SubsetAutomaton(aut, MappingProxyType({names[P]: P for P in order}))


@dataclass(frozen=True)
class Covering:
    """Trim product of an automaton with its subset automaton.

    ``pairs`` maps each covering state to its ``(p, P)`` pair.  Weights are
    inherited from the source, so the covering realizes the same series.
    """

    automaton: Automaton
    source: Automaton
    determinized: SubsetAutomaton
    pairs: Mapping[str, tuple]

    def column(self, state: str) -> frozenset:
        return self.pairs[state][1]

    def columns(self) -> dict:
        cols = {}
        for q in self.automaton.states:
            cols.setdefault(self.pairs[q][1], []).append(q)
        return {P: tuple(qs) for P, qs in cols.items()}

    def psi(self, t: Transition) -> Transition:
        """Source transition under the canonical projection."""
        return Transition(self.pairs[t.src][0], t.label, t.weight, self.pairs[t.dst][0])

    def psi_state(self, state: str) -> str:
        return self.pairs[state][0]


def schutzenberger_covering(A: Automaton) -> Covering:
    A = trim(A)
    D = determinize_boolean(A)
    if not D.automaton.states:
        return Covering(Automaton(A.alphabet, [], {}, {}, []), A, D, MappingProxyType({}))
    product, parts = _tensor([A, D.automaton])
    S = trim(product)
    pairs = {}
    for q in S.states:
        p, P = parts[q]
        members = D.subsets[P]
        assert p in members, f"covering state {q} has p outside P"
        pairs[q] = (p, members)
    return Covering(S, A, D, MappingProxyType(pairs))


@dataclass(frozen=True)
class CompetingSet:
    """Maximal set of competing transitions (``kind == "transition"``) or
    competing final states (``kind == "final"``), in canonical order."""

    kind: str
    members: tuple

    def __len__(self):
        return len(self.members)


def _competing(aut: Automaton, pairs: Mapping[str, tuple]) -> list:
    groups = {}
    for t in aut.transitions:
        groups.setdefault((t.label, t.dst, pairs[t.src][1]), []).append(t)
    finals = {}
    for q in aut.final:
        finals.setdefault(pairs[q][1], []).append(q)
    out = []
    for key in sorted(groups, key=lambda k: (k[0], k[1])):
        members = groups[key]
        if len(members) > 1:
            out.append(CompetingSet("transition", tuple(sorted(members, key=_transition_key))))
    for P in sorted(finals, key=lambda P: sorted(P)):
        members = finals[P]
        if len(members) > 1:
            out.append(CompetingSet("final", tuple(sorted(members))))
    return out


def _transition_key(t: Transition):
    return (t.src, t.label, t.dst)


def competing_sets(S: Covering) -> list:
    return _competing(S.automaton, S.pairs)


def _reachability(aut: Automaton):
    """Map each state index to the set of indices it reaches (itself included)."""
    n = len(aut.states)
    adj = [set() for _ in range(n)]
    for i, _, _, j in aut.edges():
        adj[i].add(j)
    reach = []
    for s in range(n):
        seen = {s}
        todo = [s]
        while todo:
            i = todo.pop()
            for j in adj[i]:
                if j not in seen:
                    seen.add(j)
                    todo.append(j)
        reach.append(seen)
    return reach


def check_decomposable(S: Covering) -> bool:
    """True iff no competing transition lies on a circuit of the covering."""
    aut = S.automaton
    reach = _reachability(aut)
    for X in competing_sets(S):
        if X.kind != "transition":
            continue
        for t in X.members:
            if aut.index(t.src) in reach[aut.index(t.dst)]:
                return False
    return True


def _maximal(aut: Automaton, sets: list) -> list:
    """Competing sets from which no other competing set can be reached.

    Competing final states may sit on circuits, so "reaches" is only a
    preorder in general; the sets of its terminal classes are returned.
    """
    reach = _reachability(aut)

    def entry(x):
        return aut.index(x.src if isinstance(x, Transition) else x)

    def exit_(x):
        return aut.index(x.dst if isinstance(x, Transition) else x)

    G = nx.DiGraph()
    G.add_nodes_from(range(len(sets)))
    for k, X in enumerate(sets):
        for m, Y in enumerate(sets):
            if m != k and any(
                entry(y) in reach[exit_(x)] for x in X.members for y in Y.members
            ):
                G.add_edge(k, m)
    C = nx.condensation(G)
    sinks = [c for c in C.nodes if C.out_degree(c) == 0]
    chosen = sorted(k for c in sinks for k in C.nodes[c]["members"])
    return [sets[k] for k in chosen]


def _apply(aut: Automaton, drop_transitions, unfinal) -> Automaton:
    drop_transitions = set(drop_transitions)
    unfinal = set(unfinal)
    return trim(
        aut.replace(
            transitions=[t for t in aut.transitions if t not in drop_transitions],
            final={q: w for q, w in aut.final.items() if q not in unfinal},
        )
    )


def _split(aut: Automaton, pairs, leaves: list):
    sets = _competing(aut, pairs)
    if not sets:
        leaves.append(aut)
        return
    chosen = _maximal(aut, sets)
    if not chosen:
        raise RuntimeError("competing sets form a cycle; the source cannot be finitely ambiguous")
    keep_drop_t, keep_drop_f = [], []
    other_drop_t, other_drop_f = [], []
    for X in chosen:
        x, rest = X.members[0], X.members[1:]
        if X.kind == "transition":
            keep_drop_t.extend(rest)
            other_drop_t.append(x)
        else:
            keep_drop_f.extend(rest)
            other_drop_f.append(x)
    _split(_apply(aut, keep_drop_t, keep_drop_f), pairs, leaves)
    _split(_apply(aut, other_drop_t, other_drop_f), pairs, leaves)


def decompose_unambiguous(A: Automaton, check_bound: int | None = 6) -> list:
    """Split a finitely ambiguous automaton into unambiguous automata.

    Every returned automaton has the support of ``A`` and their pointwise
    max is the series of ``A``.  With ``check_bound`` set, both facts and
    the unambiguity of each piece are re-verified on all words up to that
    length; a failure raises ``RuntimeError``.
    """
    A = trim(A)
    witness = infinite_ambiguity_witness(A)
    if witness is not None:
        raise PreconditionError(
            f"automaton is infinitely ambiguous: states {witness.p}, {witness.q} "
            f"with word {word_str(witness.word)!r}",
            witness=witness,
        )
    S = schutzenberger_covering(A)
    if not check_decomposable(S):
        raise RuntimeError("competing transition on a circuit of a finitely ambiguous automaton")
    leaves = []
    _split(S.automaton, S.pairs, leaves)
    if check_bound is not None:
        _post_check(A, leaves, check_bound)
    return leaves


def _post_check(A: Automaton, leaves: list, bound: int):
    source = list(walk_words(A, bound))
    best = [BOTTOM] * len(source)
    for k, leaf in enumerate(leaves):
        if degree_up_to(leaf, bound) > 1:
            raise RuntimeError(f"leaf {k} is ambiguous on words of length <= {bound}")
        for n, ((w, x), (_, y)) in enumerate(
            zip(source, walk_words(leaf, bound, alphabet=A.alphabet))
        ):
            if (x is BOTTOM) != (y is BOTTOM):
                raise RuntimeError(f"leaf {k} changes the support at {word_str(w)!r}")
            best[n] = w_plus(best[n], y)
    for (w, x), y in zip(source, best):
        if x != y:
            raise RuntimeError(f"leaves do not realize the source series at {word_str(w)!r}")
