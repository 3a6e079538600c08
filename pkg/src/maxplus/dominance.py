"""Product of a same-support family of unambiguous automata, victorious
coordinates, and the dominance property (P).

Coordinates are 0-based indices into the family.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

import networkx as nx

from .ambiguity import degree_up_to
from .automaton import tuple_name, trim, walk_words, word_str
from .exceptions import CapExceeded, PreconditionError
from .semiring import BOTTOM

__all__ = [
    "DominanceWitness",
    "ProductAutomaton",
    "SccReport",
    "analyze_sccs",
    "product",
    "satisfies_dominance",
    "victorious",
]


@dataclass(frozen=True)
class ProductAutomaton:
    """Tuple-state automaton whose weights are tuples, one coordinate per member.

    ``transitions`` holds ``(src, label, weights, dst)`` with state indices.
    """

    family: tuple
    alphabet: tuple
    states: tuple
    initial: dict
    final: dict
    transitions: tuple

    @property
    def size(self) -> int:
        return len(self.family)

    def name(self, k: int) -> str:
        return tuple_name(self.states[k])

    def out(self, k: int) -> list:
        return [t for t in self.transitions if t[0] == k]

    def run(self, w) -> tuple:
        """Coordinate-wise weight of ``w``; all-bottom if no successful path."""
        best = None
        vec = {k: x for k, x in self.initial.items()}
        for a in w:
            nxt = {}
            for src, label, x, dst in self.transitions:
                if label == a and src in vec:
                    y = tuple(u + v for u, v in zip(vec[src], x))
                    nxt[dst] = y if dst not in nxt else tuple(map(max, nxt[dst], y))
            vec = nxt
        for k, z in vec.items():
            if k in self.final:
                y = tuple(u + v for u, v in zip(z, self.final[k]))
                best = y if best is None else tuple(map(max, best, y))
        return best if best is not None else (BOTTOM,) * self.size


def product(family, guard: int | None = 6) -> ProductAutomaton:
    """Trim product of ``family``.

    With ``guard`` set, each member must be unambiguous and all members
    must share their support on words of length ``<= guard``.
    """
    family = tuple(family)
    if not family:
        raise ValueError("empty family")
    alphabet = family[0].alphabet
    for B in family[1:]:
        if set(B.alphabet) != set(alphabet):
            raise PreconditionError("family members use different alphabets")
    if guard is not None:
        _guard(family, guard)
    family = tuple(trim(B) for B in family)

    def moves(c):
        idx = [B.index(p) for B, p in zip(family, c)]
        for a in alphabet:
            for pick in itertools.product(*(B.successors(i, a) for B, i in zip(family, idx))):
                yield a, tuple(B.states[j] for B, (j, _) in zip(family, pick)), tuple(w for _, w in pick)

    starts = list(itertools.product(*(B.initial for B in family)))
    seen = {c: k for k, c in enumerate(starts)}
    order = list(starts)
    raw = []
    todo = deque(starts)
    while todo:
        c = todo.popleft()
        for a, d, x in moves(c):
            if d not in seen:
                seen[d] = len(order)
                order.append(d)
                todo.append(d)
            raw.append((seen[c], a, x, seen[d]))
    finals = {
        k for k, c in enumerate(order) if all(p in B.final for B, p in zip(family, c))
    }
    # co-accessible part
    back = {}
    for s, _, _, d in raw:
        back.setdefault(d, set()).add(s)
    live = set(finals)
    todo = deque(finals)
    while todo:
        k = todo.popleft()
        for s in back.get(k, ()):
            if s not in live:
                live.add(s)
                todo.append(s)
    keep = [k for k in range(len(order)) if k in live]
    new = {k: n for n, k in enumerate(keep)}
    states = tuple(order[k] for k in keep)
    initial = {
        new[seen[c]]: tuple(B.initial[p] for B, p in zip(family, c))
        for c in starts
        if seen[c] in new
    }
    final = {
        new[k]: tuple(B.final[p] for B, p in zip(family, order[k]))
        for k in sorted(finals)
        if k in new
    }
    trans = tuple(
        (new[s], a, x, new[d]) for s, a, x, d in raw if s in new and d in new
    )
    return ProductAutomaton(family, alphabet, states, initial, final, trans)


def _guard(family, bound):
    for k, B in enumerate(family):
        if B.states and degree_up_to(B, bound) > 1:
            raise PreconditionError(f"member {k} is ambiguous on words of length <= {bound}")
    ref = family[0]
    walks = [walk_words(B, bound, alphabet=ref.alphabet) for B in family]
    for row in zip(*walks):
        w = row[0][0]
        if len({x is BOTTOM for _, x in row}) > 1:
            raise PreconditionError(
                f"members have different supports at {word_str(w)!r}", witness=w
            )


def victorious(x) -> frozenset:
    """Coordinates where the tuple ``x`` reaches its maximum."""
    top = max(x)
    return frozenset(i for i, c in enumerate(x) if c == top)


@dataclass(frozen=True)
class SccReport:
    """Condensation of the product with simple circuits and victorious sets.

    ``component[k]`` is the SCC of state ``k``; ``members``, ``circuits``
    and ``victorious`` are indexed by SCC.  A circuit is a pair
    ``(transitions, total)``.
    """

    dag: nx.DiGraph
    component: tuple
    members: tuple
    circuits: tuple
    victorious: tuple

    def circuit_count(self) -> int:
        return sum(len(c) for c in self.circuits)


def _graph(P: ProductAutomaton) -> nx.DiGraph:
    G = nx.DiGraph()
    G.add_nodes_from(range(len(P.states)))
    for t in P.transitions:
        s, _, _, d = t
        if G.has_edge(s, d):
            G[s][d]["arcs"].append(t)
        else:
            G.add_edge(s, d, arcs=[t])
    return G


def analyze_sccs(P: ProductAutomaton, cap: int = 10**6) -> SccReport:
    G = _graph(P)
    C = nx.condensation(G)
    order = list(nx.topological_sort(C))
    relabel = {c: n for n, c in enumerate(order)}
    dag = nx.relabel_nodes(C, relabel)
    component = [0] * len(P.states)
    members = []
    for n, c in enumerate(order):
        ms = tuple(sorted(C.nodes[c]["members"]))
        members.append(ms)
        for k in ms:
            component[k] = n
    everyone = frozenset(range(P.size))
    circuits, wins = [], []
    total = 0
    for ms in members:
        found = []
        win = everyone
        for cycle in nx.simple_cycles(G.subgraph(ms)):
            hops = list(zip(cycle, cycle[1:] + cycle[:1]))
            for arcs in itertools.product(*(G[u][v]["arcs"] for u, v in hops)):
                weight = tuple(sum(c) for c in zip(*(t[2] for t in arcs)))
                found.append((arcs, weight))
                win = win & victorious(weight)
                total += 1
                if total > cap:
                    raise CapExceeded(f"more than {cap} simple circuits in the product")
        circuits.append(tuple(found))
        wins.append(win)
    return SccReport(dag, tuple(component), tuple(members), tuple(circuits), tuple(wins))


@dataclass(frozen=True)
class DominanceWitness:
    """A successful path of the product whose touched SCCs share no victorious coordinate."""

    states: tuple
    word: tuple
    victorious_sets: tuple = field(default=())

    def replay(self, P: ProductAutomaton, report: SccReport) -> bool:
        if not self.states or self.states[0] not in P.initial or self.states[-1] not in P.final:
            return False
        arcs = {(s, a, d) for s, a, _, d in P.transitions}
        for (s, d), a in zip(zip(self.states, self.states[1:]), self.word):
            if (s, a, d) not in arcs:
                return False
        if len(self.word) != len(self.states) - 1:
            return False
        sets = [report.victorious[report.component[k]] for k in self.states]
        return not frozenset.intersection(*sets)


def satisfies_dominance(P: ProductAutomaton, report: SccReport | None = None):
    """Return ``(verdict, witness)``; ``witness`` is a :class:`DominanceWitness` or ``None``.

    A path's victorious set is the intersection over every SCC holding one of
    its states.  Achievable intersections are propagated along the
    condensation in topological order.
    """
    if report is None:
        report = analyze_sccs(P)
    if not P.states:
        return True, None
    dag = report.dag
    reach = {n: {} for n in dag.nodes}  # scc -> {subset: predecessor (scc, subset) or None}
    for k in P.initial:
        n = report.component[k]
        reach[n].setdefault(report.victorious[n], None)
    for n in sorted(dag.nodes):
        for S in list(reach[n]):
            if not S:
                chain = [(n, S)]
                while reach[chain[-1][0]][chain[-1][1]] is not None:
                    chain.append(reach[chain[-1][0]][chain[-1][1]])
                chain.reverse()
                return False, _realize(P, report, [c for c, _ in chain])
            for m in dag.successors(n):
                T = S & report.victorious[m]
                reach[m].setdefault(T, (n, S))
    return True, None


def _realize(P: ProductAutomaton, report: SccReport, chain) -> DominanceWitness:
    """A concrete successful path through the SCCs of ``chain`` in order."""
    adj = {}
    for s, a, _, d in P.transitions:
        adj.setdefault(s, []).append((a, d))

    def bfs(sources, allowed, goal):
        pred = {s: None for s in sources}
        todo = deque(sources)
        while todo:
            u = todo.popleft()
            if goal(u):
                path = [u]
                word = []
                while pred[path[-1]] is not None:
                    v, a = pred[path[-1]]
                    word.append(a)
                    path.append(v)
                return path[::-1], word[::-1]
            for a, v in sorted(adj.get(u, ())):
                if v not in pred and allowed(v):
                    pred[v] = (u, a)
                    todo.append(v)
        raise AssertionError("condensation chain is not realizable")

    comp = report.component
    first = [k for k in sorted(P.initial) if comp[k] == chain[0]]
    states, word = [], []
    current = first
    for n, m in zip(chain, chain[1:]):
        allowed = lambda v, n=n, m=m: comp[v] in (n, m)
        path, w = bfs(current, allowed, lambda v, m=m: comp[v] == m)
        states += path if not states else path[1:]
        word += w
        current = [path[-1]]
    path, w = bfs(current, lambda v: True, lambda v: v in P.final)
    states += path if not states else path[1:]
    word += w
    sets = tuple(report.victorious[comp[k]] for k in states)
    return DominanceWitness(tuple(states), tuple(word), sets)
