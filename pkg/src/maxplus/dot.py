"""Graphviz export."""

from .automaton import Automaton
from .semiring import format_weight


def _quote(s) -> str:
    return '"{}"'.format(str(s).replace("\\", "\\\\").replace('"', r"\""))


def export_dot(A: Automaton, name: str = "automaton") -> str:
    """DOT text with one node per state and invisible anchors for ingoing and outgoing arcs."""
    lines = [f"digraph {_quote(name)} {{", "  rankdir=LR;"]
    for k, q in enumerate(A.states):
        lines.append(f"  n{k} [label={_quote(q)}, shape=circle];")
    for k, q in enumerate(A.states):
        if q in A.initial:
            lines.append(f"  in{k} [shape=point, style=invis];")
            lines.append(f"  in{k} -> n{k} [label={_quote(format_weight(A.initial[q]))}];")
        if q in A.final:
            lines.append(f"  out{k} [shape=point, style=invis];")
            lines.append(f"  n{k} -> out{k} [label={_quote(format_weight(A.final[q]))}];")
    for t in sorted(A.transitions, key=lambda t: (A.index(t.src), t.label, A.index(t.dst))):
        label = f"{t.label}|{format_weight(t.weight)}"
        lines.append(f"  n{A.index(t.src)} -> n{A.index(t.dst)} [label={_quote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def condensation_dot(report, names) -> str:
    """DOT text for the condensation of a product, each SCC labelled with its victorious set."""
    lines = ["digraph condensation {", "  rankdir=LR;"]
    for n, ms in enumerate(report.members):
        win = "{" + ",".join(str(i) for i in sorted(report.victorious[n])) + "}"
        label = ", ".join(names[k] for k in ms) + " / V=" + win
        lines.append(f"  c{n} [label={_quote(label)}, shape=box];")
    for u, v in sorted(report.dag.edges):
        lines.append(f"  c{u} -> c{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
