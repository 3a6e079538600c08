import json

import pytest

from maxplus import fixtures as F
from maxplus.document import dumps, from_document, loads, to_document
from maxplus.exceptions import DocumentError


@pytest.mark.parametrize("name", list(F.FIXTURES))
def test_round_trip(name):
    A = F.get(name)
    text = dumps(A)
    B = loads(text)
    assert B == A
    assert dumps(B) == text


def test_weight_forms():
    doc = {
        "alphabet": ["a"], "states": ["p", "q"],
        "initial": {"p": "0.5", "q": "-inf"}, "final": {"q": "-3/6"},
        "transitions": [{"from": "p", "label": "a", "weight": 2, "to": "q"}],
    }
    A = from_document(doc)
    assert dict(A.initial) == {"p": 0.5}
    assert to_document(A)["final"] == {"q": "-1/2"}


def _broken(**changes):
    doc = to_document(F.fig2_parity())
    doc.update(changes)
    return doc


@pytest.mark.parametrize("doc,field", [
    (_broken(transitions=[{"from": "A", "label": "a", "weight": "-inf", "to": "B"}]), "transitions[0].weight"),
    (_broken(transitions=[{"from": "A", "label": "a", "weight": "x", "to": "B"}]), "transitions[0].weight"),
    (_broken(transitions=[{"from": "A", "label": "a"}]), "transitions[0]"),
    (_broken(initial={"Z": "0"}), "initial.Z"),
    (_broken(states="ABCD"), "states"),
    (_broken(extra=1), "extra"),
])
def test_malformed_fields(doc, field):
    with pytest.raises(DocumentError) as e:
        from_document(doc)
    assert e.value.field == field


def test_missing_key_and_syntax_error():
    doc = to_document(F.fig2_parity())
    del doc["final"]
    with pytest.raises(DocumentError) as e:
        from_document(doc)
    assert e.value.field == "final"
    text = json.dumps(to_document(F.fig2_parity()), indent=2)
    with pytest.raises(DocumentError) as e:
        loads(text.replace('"alphabet"', "alphabet", 1))
    assert e.value.line == 2


def test_semantic_errors_surface_as_document_errors():
    doc = _broken(transitions=[{"from": "A", "label": "z", "weight": "1", "to": "B"}])
    with pytest.raises(DocumentError):
        from_document(doc)
