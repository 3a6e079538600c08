"""JSON documents for automata.

A document holds ``alphabet``, ``states``, ``initial`` and ``final`` (state
to weight string) and ``transitions`` (records with ``from``, ``label``,
``weight``, ``to``).  Weights are integers, decimals, ``p/q`` or ``-inf``.
"""

from __future__ import annotations

import json

from .automaton import Automaton
from .exceptions import DocumentError
from .semiring import BOTTOM, format_weight, parse_weight

__all__ = ["dumps", "loads", "load", "dump", "to_document", "from_document"]

_KEYS = ("alphabet", "states", "initial", "final", "transitions")


def to_document(A: Automaton) -> dict:
    return {
        "alphabet": list(A.alphabet),
        "states": list(A.states),
        "initial": {q: format_weight(A.initial[q]) for q in A.states if q in A.initial},
        "final": {q: format_weight(A.final[q]) for q in A.states if q in A.final},
        "transitions": [
            {"from": t.src, "label": t.label, "weight": format_weight(t.weight), "to": t.dst}
            for t in A.transitions
        ],
    }


def _weight(text, where):
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise DocumentError("weight must be a string or an integer", field=where)
    try:
        return parse_weight(str(text))
    except ValueError as e:
        raise DocumentError(f"bad weight {text!r}: {e}", field=where) from None


def _strings(value, where):
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise DocumentError("expected a list of strings", field=where)
    return value


def from_document(doc) -> Automaton:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    for key in _KEYS:
        if key not in doc:
            raise DocumentError("missing key", field=key)
    extra = set(doc) - set(_KEYS)
    if extra:
        raise DocumentError("unknown key", field=sorted(extra)[0])
    alphabet = _strings(doc["alphabet"], "alphabet")
    states = _strings(doc["states"], "states")
    ends = {}
    for key in ("initial", "final"):
        if not isinstance(doc[key], dict):
            raise DocumentError("expected an object", field=key)
        ends[key] = {}
        for q, w in doc[key].items():
            if q not in states:
                raise DocumentError(f"unknown state {q!r}", field=f"{key}.{q}")
            ends[key][q] = _weight(w, f"{key}.{q}")
    if not isinstance(doc["transitions"], list):
        raise DocumentError("expected a list", field="transitions")
    trans = []
    for k, rec in enumerate(doc["transitions"]):
        where = f"transitions[{k}]"
        if not isinstance(rec, dict) or set(rec) != {"from", "label", "weight", "to"}:
            raise DocumentError("expected keys from, label, weight, to", field=where)
        w = _weight(rec["weight"], where + ".weight")
        if w is BOTTOM:
            raise DocumentError("transition weight -inf is not allowed", field=where + ".weight")
        trans.append((rec["from"], rec["label"], w, rec["to"]))
    try:
        return Automaton(alphabet, states, ends["initial"], ends["final"], trans)
    except ValueError as e:
        raise DocumentError(str(e)) from None


def loads(text: str) -> Automaton:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(e.msg, line=e.lineno) from None
    return from_document(doc)


def dumps(A: Automaton) -> str:
    return json.dumps(to_document(A), indent=2, ensure_ascii=False) + "\n"


def load(path) -> Automaton:
    with open(path, encoding="utf-8") as f:
        return loads(f.read())


def dump(A: Automaton, path):
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps(A))
