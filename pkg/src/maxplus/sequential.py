"""Twin property, weighted determinization, Lipschitz sampling and the
decision pipeline for sequentiality."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx

from .ambiguity import AmbiguityWitness, degree_up_to, find_counterexample, infinite_ambiguity_witness
from .automaton import Automaton, as_word, is_sequential, trim, walk_words, word_str
from .covering import decompose_unambiguous
from .dominance import DominanceWitness, analyze_sccs, product, satisfies_dominance
from .exceptions import CapExceeded
from .semiring import BOTTOM, format_weight, w_times
from .unambiguizer import construct_unambiguous

__all__ = [
    "LipschitzScan",
    "PipelineReport",
    "TwinReport",
    "decide",
    "determinize_weighted",
    "lipschitz_scan",
    "prefix_distance",
    "twin_property",
]


def prefix_distance(u, v) -> int:
    u, v = as_word(u), as_word(v)
    k = 0
    for x, y in zip(u, v):
        if x != y:
            break
        k += 1
    return len(u) + len(v) - 2 * k


@dataclass(frozen=True)
class LipschitzScan:
    """Largest ratio ``|S(u) - S(v)| / d(u, v)`` over support words of length ``<= bound``."""

    bound: int
    constant: Fraction
    pair: tuple | None


def lipschitz_scan(A: Automaton, bound: int) -> LipschitzScan:
    support = [(w, x) for w, x in walk_words(A, bound) if x is not BOTTOM]
    best, pair = Fraction(0), None
    for (u, x), (v, y) in itertools.combinations(support, 2):
        r = Fraction(abs(x - y), prefix_distance(u, v))
        if r > best:
            best, pair = r, (u, v)
    return LipschitzScan(bound, best, pair)


# -- twins ---------------------------------------------------------------------

@dataclass(frozen=True)
class TwinReport:
    """Verdict of the twin property.

    On failure, ``u1`` leads from initial states to ``p`` and ``q`` along
    ``access_p`` / ``access_q`` and ``u2`` labels the circuits ``cycle_p`` and
    ``cycle_q`` of weights ``x2 != y2``.
    """

    verdict: bool
    p: str | None = None
    q: str | None = None
    u1: tuple = ()
    u2: tuple = ()
    x2: Fraction | None = None
    y2: Fraction | None = None
    access_p: tuple = ()
    access_q: tuple = ()
    cycle_p: tuple = ()
    cycle_q: tuple = ()

    def replay(self, A: Automaton) -> bool:
        if self.verdict:
            return True
        trans = set(A.transitions)

        def check(path, start, end, word):
            if tuple(t.label for t in path) != tuple(word):
                return False
            cur = start
            for t in path:
                if t not in trans or (cur is not None and t.src != cur):
                    return False
                cur = t.dst
            return cur == end if path else start == end

        ip = self.access_p[0].src if self.access_p else self.p
        iq = self.access_q[0].src if self.access_q else self.q
        return (
            ip in A.initial
            and iq in A.initial
            and check(self.access_p, ip, self.p, self.u1)
            and check(self.access_q, iq, self.q, self.u1)
            and check(self.cycle_p, self.p, self.p, self.u2)
            and check(self.cycle_q, self.q, self.q, self.u2)
            and len(self.u2) > 0
            and sum(t.weight for t in self.cycle_p) == self.x2
            and sum(t.weight for t in self.cycle_q) == self.y2
            and self.x2 != self.y2
        )

    def to_dict(self) -> dict:
        d = {"twins": self.verdict}
        if not self.verdict:
            d.update(
                p=self.p,
                q=self.q,
                u1=word_str(self.u1),
                u2=word_str(self.u2),
                x2=format_weight(self.x2),
                y2=format_weight(self.y2),
            )
        return d


def _pair_graph(A: Automaton):
    """Pairs reachable from initial pairs; edges carry both transitions."""
    starts = sorted(
        (A.index(p), A.index(q)) for p in A.initial for q in A.initial
    )
    out = {}
    for t in A.transitions:
        out.setdefault(A.index(t.src), []).append(t)
    letter = {a: k for k, a in enumerate(A.alphabet)}
    for ts in out.values():
        ts.sort(key=lambda t: (letter[t.label], A.index(t.dst)))
    G = nx.MultiDiGraph()
    pred = {s: None for s in starts}
    order = list(starts)
    todo = deque(starts)
    G.add_nodes_from(starts)
    while todo:
        u = todo.popleft()
        for s in out.get(u[0], ()):
            for t in out.get(u[1], ()):
                if s.label != t.label:
                    continue
                v = (A.index(s.dst), A.index(t.dst))
                G.add_edge(u, v, pair=(s, t), delta=s.weight - t.weight)
                if v not in pred:
                    pred[v] = (u, (s, t))
                    order.append(v)
                    todo.append(v)
    return G, pred, order


def _tree(G, root, allowed):
    """BFS tree inside ``allowed``: potential and arc list from ``root``."""
    pot = {root: Fraction(0)}
    path = {root: ()}
    todo = deque([root])
    while todo:
        u = todo.popleft()
        for _, v, data in G.out_edges(u, data=True):
            if v in allowed and v not in pot:
                pot[v] = pot[u] + data["delta"]
                path[v] = path[u] + (data["pair"],)
                todo.append(v)
    return pot, path


def twin_property(A: Automaton) -> TwinReport:
    """Decide the twin property on the pair graph by potentials per SCC."""
    A = trim(A)
    G, pred, order = _pair_graph(A)
    rank = {u: k for k, u in enumerate(order)}
    failing = []
    for comp in nx.strongly_connected_components(G):
        comp = set(comp)
        root = min(comp, key=rank.get)
        pot, _ = _tree(G, root, comp)
        for u, v, data in G.edges(comp, data=True):
            if v in comp and pot[u] + data["delta"] != pot[v]:
                failing.append(comp)
                break
    if not failing:
        return TwinReport(True)

    # shortest circuit made of a tree path and one closing arc
    best = None
    for comp in failing:
        for r in sorted(comp, key=rank.get):
            pot, path = _tree(G, r, comp)
            for u, _, data in G.in_edges(r, data=True):
                if u in comp and pot[u] + data["delta"] != 0:
                    cyc = path[u] + (data["pair"],)
                    key = (len(cyc), rank[r])
                    if best is None or key < best[0]:
                        best = (key, r, cyc)
    if best is None:
        comp = failing[0]
        r = min(comp, key=rank.get)
        pot, path = _tree(G, r, comp)
        for u, v, data in G.edges(comp, data=True):
            if v in comp and pot[u] + data["delta"] != pot[v]:
                # closed walks r->u->v->r and r->v->r differ in weight
                ret = _walk_back(G, v, r, comp)
                c1 = path[u] + (data["pair"],) + ret
                c2 = path[v] + ret
                cyc = c1 if sum(s.weight - t.weight for s, t in c1) != 0 else c2
                best = ((len(cyc), rank[r]), r, cyc)
                break
    _, r, cyc = best
    access = []
    node = r
    while pred[node] is not None:
        node, arc = pred[node]
        access.append(arc)
    access.reverse()
    p, q = A.states[r[0]], A.states[r[1]]
    return TwinReport(
        False,
        p=p,
        q=q,
        u1=tuple(s.label for s, _ in access),
        u2=tuple(s.label for s, _ in cyc),
        x2=sum((s.weight for s, _ in cyc), Fraction(0)),
        y2=sum((t.weight for _, t in cyc), Fraction(0)),
        access_p=tuple(s for s, _ in access),
        access_q=tuple(t for _, t in access),
        cycle_p=tuple(s for s, _ in cyc),
        cycle_q=tuple(t for _, t in cyc),
    )


def _walk_back(G, src, dst, allowed):
    pred = {src: None}
    todo = deque([src])
    while todo:
        u = todo.popleft()
        if u == dst:
            break
        for _, v, data in G.out_edges(u, data=True):
            if v in allowed and v not in pred:
                pred[v] = (u, data["pair"])
                todo.append(v)
    arcs = []
    node = dst
    while pred[node] is not None:
        node, arc = pred[node]
        arcs.append(arc)
    return tuple(reversed(arcs))


# -- determinization -----------------------------------------------------------

def _subset_label(A: Automaton, subset) -> str:
    return "{" + ",".join(f"{A.states[i]}:{format_weight(r)}" for i, r in subset) + "}"


def determinize_weighted(A: Automaton, cap: int = 10**4) -> Automaton:
    """Weighted subset construction; residuals are shifted so their maximum is 0."""
    A = trim(A)
    if not A.initial:
        return Automaton(A.alphabet, [], {}, {}, [])

    def normalize(vec):
        top = max(vec.values())
        return tuple(sorted((i, r - top) for i, r in vec.items())), top

    start, lam0 = normalize({A.index(q): w for q, w in A.initial.items()})
    names = {start: _subset_label(A, start)}
    order = [start]
    trans, final = [], {}
    todo = deque([start])
    while todo:
        S = todo.popleft()
        out = [w_times(r, A.final.get(A.states[i], BOTTOM)) for i, r in S]
        top = max(out)
        if top is not BOTTOM:
            final[names[S]] = top
        for a in A.alphabet:
            vec = {}
            for i, r in S:
                for j, w in A.successors(i, a):
                    c = r + w
                    if j not in vec or c > vec[j]:
                        vec[j] = c
            if not vec:
                continue
            T, lam = normalize(vec)
            if T not in names:
                if len(order) >= cap:
                    raise CapExceeded("determinization diverged (twin property violated?)")
                names[T] = _subset_label(A, T)
                order.append(T)
                todo.append(T)
            trans.append((names[S], a, lam, names[T]))
    return Automaton(A.alphabet, [names[S] for S in order], {names[start]: lam0}, final, trans)


# -- pipeline ------------------------------------------------------------------

@dataclass
class PipelineReport:
    """Classification of the series of an automaton, with the automata built on the way.

    ``None`` means undecided (infinitely ambiguous input) or not reached.
    """

    states: int
    infinitely_ambiguous: bool
    ambiguity_witness: AmbiguityWitness | None = None
    leaves: list = field(default_factory=list)
    dominance: bool | None = None
    dominance_witness: DominanceWitness | None = None
    unambiguous: bool | None = None
    twins: TwinReport | None = None
    sequential: bool | None = None
    unambiguous_automaton: Automaton | None = None
    sequential_automaton: Automaton | None = None
    construction_log: dict | None = None
    product_names: list | None = None
    bound: int = 6

    @property
    def finitely_ambiguous(self) -> bool:
        return not self.infinitely_ambiguous

    def consistent(self) -> bool:
        """Sequential implies unambiguous implies finitely ambiguous."""
        if self.sequential and not self.unambiguous:
            return False
        if self.unambiguous and not self.finitely_ambiguous:
            return False
        return True

    def to_dict(self) -> dict:
        d = {
            "states": self.states,
            "finitely_ambiguous": self.finitely_ambiguous,
            "leaves": len(self.leaves),
            "dominance": self.dominance,
            "unambiguous": self.unambiguous,
            "twins": None if self.twins is None else self.twins.verdict,
            "sequential": self.sequential,
            "bound": self.bound,
        }
        if self.infinitely_ambiguous:
            w = self.ambiguity_witness
            d["note"] = "undecided: automaton infinitely ambiguous"
            d["ambiguity_witness"] = {"p": w.p, "q": w.q, "word": word_str(w.word)}
        if self.dominance_witness is not None:
            d["dominance_witness"] = {
                "word": word_str(self.dominance_witness.word),
                "path": [
                    self.product_names[k] if self.product_names else k
                    for k in self.dominance_witness.states
                ],
            }
        if self.twins is not None and not self.twins.verdict:
            d["twin_witness"] = self.twins.to_dict()
        if self.construction_log is not None:
            d["construction"] = self.construction_log
        if self.sequential_automaton is not None:
            d["sequential_states"] = len(self.sequential_automaton.states)
        return d


def _verify(A: Automaton, B: Automaton, bound: int, what: str):
    w = find_counterexample(A, B, bound)
    if w is not None:
        raise RuntimeError(f"{what} differs from the input at {word_str(w)!r}")


def decide(A: Automaton, L: int = 6, cap: int = 10**5) -> PipelineReport:
    A = trim(A)
    witness = infinite_ambiguity_witness(A)
    report = PipelineReport(len(A.states), witness is not None, witness, bound=L)
    if witness is not None:
        return report
    if not A.states:
        report.dominance = report.unambiguous = report.sequential = True
        report.twins = TwinReport(True)
        report.unambiguous_automaton = report.sequential_automaton = A
        return report
    leaves = decompose_unambiguous(A, check_bound=L)
    report.leaves = leaves
    P = product(leaves, guard=L)
    scc = analyze_sccs(P)
    ok, dwit = satisfies_dominance(P, scc)
    report.dominance = ok
    report.dominance_witness = dwit
    report.product_names = [P.name(k) for k in range(len(P.states))]
    if not ok:
        report.unambiguous = report.sequential = False
        return report
    construction = construct_unambiguous(P, scc, cap=cap)
    U = construction.automaton
    report.construction_log = construction.log()
    if degree_up_to(U, L) > 1:
        raise RuntimeError("constructed automaton is ambiguous")
    _verify(A, U, L, "unambiguous automaton")
    report.unambiguous = True
    report.unambiguous_automaton = U
    report.twins = twin_property(U)
    if not report.twins.verdict:
        report.sequential = False
        return report
    D = determinize_weighted(U, cap=cap)
    if not is_sequential(D):
        raise RuntimeError("determinization produced a non-sequential automaton")
    _verify(A, D, L, "sequential automaton")
    report.sequential = True
    report.sequential_automaton = D
    return report
