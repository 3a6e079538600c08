"""The finite unambiguous automaton realizing the max of a family that
satisfies the dominance property."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .automaton import Automaton
from .dominance import ProductAutomaton, SccReport, analyze_sccs, satisfies_dominance
from .exceptions import CapExceeded, PreconditionError
from .semiring import BOTTOM, format_weight, vmin, vnorm, w_sum, w_times

__all__ = ["Construction", "PipelineConstants", "build_unambiguous", "constants_NM", "construct_unambiguous"]


@dataclass(frozen=True)
class PipelineConstants:
    N: int
    M: object

    @property
    def cut(self):
        return self.N * self.M


def constants_NM(family, P: ProductAutomaton) -> PipelineConstants:
    """``N`` is the product's state count, ``M`` the spread of transition and final weights."""
    ws = []
    for B in family:
        ws.extend(t.weight for t in B.transitions)
        ws.extend(B.final.values())
    if not ws:
        raise ValueError("family carries no finite transition or final weight")
    return PipelineConstants(max(len(P.states), 1), max(ws) - min(ws))


@dataclass(frozen=True)
class Construction:
    """``automaton`` plus the configurations it was built from and their largest finite spread."""

    automaton: Automaton
    configurations: tuple
    constants: PipelineConstants
    max_spread: object

    def log(self) -> dict:
        return {
            "configurations": len(self.configurations),
            "max_spread": format_weight(self.max_spread),
            "N": self.constants.N,
            "M": format_weight(self.constants.M),
        }


def _config_name(P: ProductAutomaton, z, q) -> str:
    return P.name(q) + "[" + ",".join(format_weight(c) for c in z) + "]"


def _add(z, x):
    return tuple(w_times(a, b) for a, b in zip(z, x))


def construct_unambiguous(
    P: ProductAutomaton, report: SccReport | None = None, cap: int = 10**5
) -> Construction:
    if report is None:
        report = analyze_sccs(P)
    ok, witness = satisfies_dominance(P, report)
    if not ok:
        raise PreconditionError(
            "the product does not satisfy the dominance property; the max series is not unambiguous",
            witness=witness,
        )
    consts = constants_NM(P.family, P)
    cut = consts.cut
    out = {}
    for s, a, x, d in P.transitions:
        out.setdefault(s, []).append((a, x, d))
    letter = {a: k for k, a in enumerate(P.alphabet)}
    for arcs in out.values():
        arcs.sort(key=lambda t: letter[t[0]])

    names = {}
    order = []
    initial, final, trans = {}, {}, []
    todo = deque()

    def visit(z, q):
        key = (z, q)
        if key not in names:
            if len(order) >= cap:
                raise CapExceeded(f"more than {cap} configurations")
            names[key] = _config_name(P, z, q)
            order.append(key)
            todo.append(key)
        return names[key]

    for q in sorted(P.initial):
        alpha = P.initial[q]
        initial[visit(vnorm(alpha), q)] = vmin(alpha)
    while todo:
        z, p = todo.popleft()
        src = names[(z, p)]
        if p in P.final:
            final[src] = w_sum(_add(z, P.final[p]))
        for a, x, q in out.get(p, ()):
            t = _add(z, x)
            V = report.victorious[report.component[q]]
            live = [i for i in sorted(V) if t[i] is not BOTTOM]
            if not live:
                raise RuntimeError("no finite victorious coordinate; dominance should have failed")
            j = min(live, key=lambda i: (t[i], i))
            floor = t[j] - cut
            y = tuple(BOTTOM if c is BOTTOM or c < floor else c for c in t)
            trans.append((src, a, vmin(y), visit(vnorm(y), q)))

    spread = max(
        (max(c for c in z if c is not BOTTOM) for z, _ in order), default=0
    )
    A = Automaton(P.alphabet, [names[k] for k in order], initial, final, trans)
    return Construction(A, tuple(order), consts, spread)


def build_unambiguous(P: ProductAutomaton, report: SccReport | None = None, cap: int = 10**5) -> Automaton:
    return construct_unambiguous(P, report, cap).automaton
