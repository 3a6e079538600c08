"""Command-line interface.

Exit status is 0 on success, 2 on a violated precondition or a malformed
document, 3 when a size cap is exceeded.  ``--input`` takes a JSON file or
``fixture:NAME``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import fixtures
from .ambiguity import degree_up_to, infinite_ambiguity_witness
from .automaton import count_successful_paths, evaluate, trim, word_str
from .covering import decompose_unambiguous
from .document import dump, dumps, load
from .dominance import analyze_sccs, product, satisfies_dominance
from .dot import condensation_dot, export_dot
from .exceptions import CapExceeded, DocumentError, PreconditionError
from .semiring import format_weight
from .sequential import decide, determinize_weighted, twin_property
from .unambiguizer import construct_unambiguous


def _read(source: str):
    if source.startswith("fixture:"):
        try:
            return fixtures.get(source[len("fixture:"):])
        except KeyError as e:
            raise DocumentError(str(e.args[0]), field="--input") from None
    try:
        return load(source)
    except OSError as e:
        raise DocumentError(f"cannot read {source}: {e.strerror}", field="--input") from None


def _one(args):
    if not args.input:
        raise DocumentError("an --input is required", field="--input")
    if len(args.input) > 1:
        raise DocumentError("this command takes a single --input", field="--input")
    return _read(args.input[0])


def _family(args):
    """Explicit family from several inputs, or the decomposition of a single one."""
    if not args.input:
        raise DocumentError("an --input is required", field="--input")
    autos = [_read(s) for s in args.input]
    if len(autos) == 1:
        return decompose_unambiguous(autos[0], check_bound=args.bound)
    return autos


def _word(args):
    if args.word is None:
        raise DocumentError("a --word is required", field="--word")
    return args.word


def _emit(obj):
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def _write_dot(args, text):
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as f:
            f.write(text)


def _outdir(args):
    if args.output:
        os.makedirs(args.output, exist_ok=True)
    return args.output


def cmd_evaluate(args):
    print(format_weight(evaluate(_one(args), _word(args))))


def cmd_paths(args):
    print(count_successful_paths(_one(args), _word(args)))


def cmd_ambiguity(args):
    A = trim(_one(args))
    w = infinite_ambiguity_witness(A)
    out = {"infinitely_ambiguous": w is not None, "degree_up_to": degree_up_to(A, args.bound) if A.states else 0, "bound": args.bound}
    if w is not None:
        out["witness"] = {"p": w.p, "q": w.q, "word": word_str(w.word)}
    _emit(out)


def cmd_decompose(args):
    leaves = decompose_unambiguous(_one(args), check_bound=args.bound)
    manifest = {"leaves": len(leaves), "files": [], "states": [len(L.states) for L in leaves]}
    out = _outdir(args)
    for k, L in enumerate(leaves):
        if out:
            name = f"leaf_{k}.json"
            dump(L, os.path.join(out, name))
            manifest["files"].append(name)
    if out:
        with open(os.path.join(out, "manifest.json"), "w", encoding="utf-8") as f:
            json.dump(manifest, f, indent=2)
            f.write("\n")
    _emit(manifest)


def cmd_dominance(args):
    P = product(_family(args), guard=args.bound)
    report = analyze_sccs(P)
    ok, wit = satisfies_dominance(P, report)
    names = [P.name(k) for k in range(len(P.states))]
    out = {
        "dominance": ok,
        "members": P.size,
        "states": len(P.states),
        "sccs": [
            {
                "states": [names[k] for k in ms],
                "circuits": len(report.circuits[n]),
                "victorious": sorted(report.victorious[n]),
            }
            for n, ms in enumerate(report.members)
        ],
    }
    if wit is not None:
        out["witness"] = {"path": [names[k] for k in wit.states], "word": word_str(wit.word)}
    _write_dot(args, condensation_dot(report, names))
    _emit(out)


def cmd_unambiguize(args):
    P = product(_family(args), guard=args.bound)
    c = construct_unambiguous(P)
    out = _outdir(args)
    if out:
        dump(c.automaton, os.path.join(out, "unambiguous.json"))
        with open(os.path.join(out, "construction.json"), "w", encoding="utf-8") as f:
            json.dump(c.log(), f, indent=2)
            f.write("\n")
        _emit(c.log())
    else:
        sys.stdout.write(dumps(c.automaton))
    _write_dot(args, export_dot(c.automaton))


def cmd_twins(args):
    _emit(twin_property(_one(args)).to_dict())


def cmd_sequentialize(args):
    A = _one(args)
    if degree_up_to(trim(A), args.bound) > 1:
        raise PreconditionError("input is ambiguous; run unambiguize first")
    t = twin_property(A)
    if not t.verdict:
        raise PreconditionError(
            f"twin property fails at {t.p}, {t.q}: u1={word_str(t.u1)!r}, "
            f"u2={word_str(t.u2)!r}, weights {format_weight(t.x2)} vs {format_weight(t.y2)}",
            witness=t,
        )
    D = determinize_weighted(A)
    out = _outdir(args)
    if out:
        dump(D, os.path.join(out, "sequential.json"))
    else:
        sys.stdout.write(dumps(D))
    _write_dot(args, export_dot(D))


def cmd_decide(args):
    r = decide(_one(args), L=args.bound)
    out = _outdir(args)
    if out:
        for k, L in enumerate(r.leaves):
            dump(L, os.path.join(out, f"leaf_{k}.json"))
        if r.unambiguous_automaton is not None:
            dump(r.unambiguous_automaton, os.path.join(out, "unambiguous.json"))
        if r.sequential_automaton is not None:
            dump(r.sequential_automaton, os.path.join(out, "sequential.json"))
    _emit(r.to_dict())


def cmd_export_dot(args):
    sys.stdout.write(export_dot(_one(args)))


def cmd_fixture(args):
    if args.action == "list":
        for name in fixtures.FIXTURES:
            print(name)
        return
    if not args.name:
        raise DocumentError("fixture get needs a name", field="name")
    try:
        A = fixtures.get(args.name)
    except KeyError as e:
        raise DocumentError(str(e.args[0]), field="name") from None
    sys.stdout.write(dumps(A))


COMMANDS = {
    "evaluate": (cmd_evaluate, "coefficient of a word"),
    "paths": (cmd_paths, "number of successful paths of a word"),
    "ambiguity": (cmd_ambiguity, "infinite-ambiguity test and bounded degree"),
    "decompose": (cmd_decompose, "split into unambiguous automata"),
    "dominance": (cmd_dominance, "decide the dominance property of a family"),
    "unambiguize": (cmd_unambiguize, "build the unambiguous automaton of a family"),
    "twins": (cmd_twins, "decide the twin property"),
    "sequentialize": (cmd_sequentialize, "weighted determinization"),
    "decide": (cmd_decide, "classify the series"),
    "export-dot": (cmd_export_dot, "Graphviz rendering"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="maxplus", description="Max-plus automata toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, text) in COMMANDS.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("--input", action="append", default=[], help="JSON file or fixture:NAME (repeatable)")
        p.add_argument("--word", help="input word, one character per letter")
        p.add_argument("--bound", type=int, default=6, help="verification length (default 6)")
        p.add_argument("--output", help="directory for produced automata")
        p.add_argument("--dot", help="also write a DOT rendering to this file")
    p = sub.add_parser("fixture", help="built-in example automata")
    p.add_argument("action", choices=["list", "get"])
    p.add_argument("name", nargs="?")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = cmd_fixture if args.command == "fixture" else COMMANDS[args.command][0]
    try:
        handler(args)
    except CapExceeded as e:
        print(f"error: cap exceeded: {e}", file=sys.stderr)
        return 3
    except (PreconditionError, DocumentError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return 0
