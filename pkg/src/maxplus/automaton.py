"""Max-plus automata: representation, evaluation and basic algebra."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .exceptions import PreconditionError
from .semiring import (
    BOTTOM,
    ONE,
    Weight,
    WeightMatrix,
    as_weight,
    format_weight,
    w_plus,
    w_times,
)

__all__ = [
    "Automaton",
    "SeriesSample",
    "Transition",
    "as_word",
    "count_successful_paths",
    "evaluate",
    "heap_automaton",
    "is_sequential",
    "sample_series",
    "shift_weights",
    "tensor",
    "trim",
    "union",
    "word_str",
    "words_up_to",
]


class Transition(NamedTuple):
    src: str
    label: str
    weight: Fraction
    dst: str

    def __str__(self):
        return f"{self.src} -{self.label}|{format_weight(self.weight)}-> {self.dst}"


def as_word(w) -> tuple:
    """Normalize a word to a tuple of labels.  Strings split into characters."""
    if isinstance(w, tuple):
        return w
    if isinstance(w, str):
        return tuple(w)
    return tuple(w)


def word_str(w) -> str:
    w = as_word(w)
    if all(len(a) == 1 for a in w):
        return "".join(w)
    return " ".join(w)


def tuple_name(parts: Sequence[str]) -> str:
    return "(" + ",".join(parts) + ")"


class Automaton:
    """A max-plus automaton ``(alpha, mu, beta)`` with named states.

    Instances are immutable.  ``initial`` and ``final`` map state names to
    finite weights; states absent from them carry the semiring zero.
    """

    def __init__(
        self,
        alphabet: Iterable[str],
        states: Iterable[str],
        initial: Mapping[str, object],
        final: Mapping[str, object],
        transitions: Iterable,
    ):
        self.alphabet = tuple(alphabet)
        self.states = tuple(states)
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("duplicate label in alphabet")
        if len(set(self.states)) != len(self.states):
            raise ValueError("duplicate state name")
        self._index = {q: i for i, q in enumerate(self.states)}
        self._label_index = {a: i for i, a in enumerate(self.alphabet)}

        def _weights(mapping, what):
            out = {}
            for q, w in mapping.items():
                if q not in self._index:
                    raise ValueError(f"{what} weight on unknown state {q!r}")
                w = as_weight(w)
                if w is not BOTTOM:
                    out[q] = w
            return out

        self._initial = _weights(initial, "initial")
        self._final = _weights(final, "final")

        seen = set()
        trans = []
        for t in transitions:
            src, label, weight, dst = t
            if src not in self._index or dst not in self._index:
                raise ValueError(f"transition {t!r} references an unknown state")
            if label not in self._label_index:
                raise ValueError(f"transition {t!r} uses a label outside the alphabet")
            weight = as_weight(weight)
            if weight is BOTTOM:
                raise ValueError(f"transition {src}-{label}->{dst} has weight -inf")
            key = (src, label, dst)
            if key in seen:
                raise ValueError(f"duplicate transition {src} -{label}-> {dst}")
            seen.add(key)
            trans.append(Transition(src, label, weight, dst))
        self.transitions = tuple(trans)

        # delta[i][label] -> list of (j, weight)
        delta = [dict() for _ in self.states]
        for t in self.transitions:
            delta[self._index[t.src]].setdefault(t.label, []).append(
                (self._index[t.dst], t.weight)
            )
        self._delta = delta

    # -- accessors ---------------------------------------------------------

    @property
    def initial(self) -> Mapping[str, Fraction]:
        return MappingProxyType(self._initial)

    @property
    def final(self) -> Mapping[str, Fraction]:
        return MappingProxyType(self._final)

    def __len__(self):
        return len(self.states)

    def index(self, state: str) -> int:
        return self._index[state]

    def out(self, state: str) -> list:
        return [t for t in self.transitions if t.src == state]

    def successors(self, i: int, label: str) -> list:
        """``(j, weight)`` pairs for the ``label``-transitions leaving state index ``i``."""
        return self._delta[i].get(label, ())

    def edges(self) -> Iterator[tuple]:
        """Index-level view: ``(i, label, weight, j)``."""
        for t in self.transitions:
            yield self._index[t.src], t.label, t.weight, self._index[t.dst]

    def matrix(self, label: str) -> WeightMatrix:
        n = len(self.states)
        rows = [[BOTTOM] * n for _ in range(n)]
        for i in range(n):
            for j, w in self.successors(i, label):
                rows[i][j] = w
        return WeightMatrix(rows) if n else None

    def alpha(self) -> tuple:
        return tuple(self._initial.get(q, BOTTOM) for q in self.states)

    def beta(self) -> tuple:
        return tuple(self._final.get(q, BOTTOM) for q in self.states)

    def replace(self, *, states=None, initial=None, final=None, transitions=None):
        """Copy with some components replaced.  Unknown leftovers are filtered out."""
        states = self.states if states is None else tuple(states)
        keep = set(states)
        initial = self._initial if initial is None else initial
        final = self._final if final is None else final
        transitions = self.transitions if transitions is None else transitions
        return Automaton(
            self.alphabet,
            states,
            {q: w for q, w in initial.items() if q in keep},
            {q: w for q, w in final.items() if q in keep},
            [t for t in transitions if t[0] in keep and t[3] in keep],
        )

    @classmethod
    def from_matrices(cls, alphabet, states, alpha, mu, beta) -> "Automaton":
        """Build from an initial row, a ``label -> WeightMatrix`` map and a final column."""
        states = tuple(states)
        trans = []
        for a in alphabet:
            m = mu[a]
            for i, p in enumerate(states):
                for j, q in enumerate(states):
                    if m[i, j] is not BOTTOM:
                        trans.append((p, a, m[i, j], q))
        return cls(
            alphabet,
            states,
            dict(zip(states, alpha)),
            dict(zip(states, beta)),
            trans,
        )

    # -- comparisons -------------------------------------------------------

    def _key(self):
        return (
            self.alphabet,
            self.states,
            tuple(sorted(self._initial.items())),
            tuple(sorted(self._final.items())),
            tuple(sorted(self.transitions)),
        )

    def __eq__(self, other):
        if not isinstance(other, Automaton):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (
            f"<Automaton |Q|={len(self.states)} |Σ|={len(self.alphabet)} "
            f"transitions={len(self.transitions)} initial={len(self._initial)} "
            f"final={len(self._final)}>"
        )


def _check_word(A: Automaton, w) -> tuple:
    w = as_word(w)
    for a in w:
        if a not in A._label_index:
            raise PreconditionError(f"label {a!r} is not in the alphabet {A.alphabet}", witness=w)
    return w


def _step(A: Automaton, vec: dict, a: str) -> dict:
    new = {}
    for i, x in vec.items():
        for j, w in A.successors(i, a):
            y = x + w
            old = new.get(j)
            if old is None or y > old:
                new[j] = y
    return new


def _close(A: Automaton, vec: dict) -> Weight:
    out = BOTTOM
    final = A._final
    for i, x in vec.items():
        f = final.get(A.states[i])
        if f is not None:
            out = w_plus(out, x + f)
    return out


def _initial_vector(A: Automaton) -> dict:
    return {A.index(q): w for q, w in A.initial.items()}


def evaluate(A: Automaton, w) -> Weight:
    """Coefficient of the word ``w`` in the series realized by ``A``."""
    w = _check_word(A, w)
    vec = _initial_vector(A)
    for a in w:
        if not vec:
            return BOTTOM
        vec = _step(A, vec, a)
    return _close(A, vec)


def _count_step(A: Automaton, vec: dict, a: str) -> dict:
    new = {}
    for i, n in vec.items():
        for j, _ in A.successors(i, a):
            new[j] = new.get(j, 0) + n
    return new


def _count_close(A: Automaton, vec: dict) -> int:
    return sum(n for i, n in vec.items() if A.states[i] in A._final)


def count_successful_paths(A: Automaton, w) -> int:
    """Number of successful paths labelled ``w`` (counting semiring)."""
    w = _check_word(A, w)
    vec = {A.index(q): 1 for q in A.initial}
    for a in w:
        vec = _count_step(A, vec, a)
    return _count_close(A, vec)


def words_up_to(alphabet: Sequence[str], bound: int) -> Iterator[tuple]:
    """All words of length at most ``bound`` in shortlex order."""
    for n in range(bound + 1):
        yield from itertools.product(alphabet, repeat=n)


def walk_words(A: Automaton, bound: int, counting: bool = False, alphabet=None) -> Iterator[tuple]:
    """Yield ``(word, value)`` for every word of length ``<= bound``, shortlex.

    ``value`` is the coefficient, or the number of successful paths when
    ``counting`` is set.  Prefix vectors are shared level by level.
    ``alphabet`` overrides the letter order (it must be a permutation of
    ``A.alphabet``).
    """
    letters = A.alphabet if alphabet is None else tuple(alphabet)
    if counting:
        start, step, close = {A.index(q): 1 for q in A.initial}, _count_step, _count_close
    else:
        start, step, close = _initial_vector(A), _step, _close
    level = [((), start)]
    for n in range(bound + 1):
        for w, vec in level:
            yield w, close(A, vec)
        if n == bound:
            break
        level = [(w + (a,), step(A, vec, a)) for w, vec in level for a in letters]


@dataclass(frozen=True)
class SeriesSample:
    """Coefficients of a series on every word of length at most ``bound``."""

    alphabet: tuple
    bound: int
    values: Mapping[tuple, Weight]

    def __getitem__(self, w):
        return self.values[as_word(w)]

    def support(self) -> list:
        return [w for w, x in self.values.items() if x is not BOTTOM]


def sample_series(A: Automaton, bound: int) -> SeriesSample:
    return SeriesSample(A.alphabet, bound, MappingProxyType(dict(walk_words(A, bound))))


def trim(A: Automaton) -> Automaton:
    """Keep the states lying on at least one successful path."""
    n = len(A.states)
    fwd = [set() for _ in range(n)]
    bwd = [set() for _ in range(n)]
    for i, _, _, j in A.edges():
        fwd[i].add(j)
        bwd[j].add(i)

    def closure(seeds, adj):
        seen = set(seeds)
        todo = deque(seeds)
        while todo:
            i = todo.popleft()
            for j in adj[i]:
                if j not in seen:
                    seen.add(j)
                    todo.append(j)
        return seen

    acc = closure([A.index(q) for q in A.initial], fwd)
    coacc = closure([A.index(q) for q in A.final], bwd)
    keep = [q for i, q in enumerate(A.states) if i in acc and i in coacc]
    if len(keep) == n:
        return A
    return A.replace(states=keep)


def _tensor(family: Sequence[Automaton]):
    if not family:
        raise ValueError("tensor of an empty family")
    alphabet = family[0].alphabet
    for B in family[1:]:
        if set(B.alphabet) != set(alphabet):
            raise PreconditionError("tensor product requires a common alphabet")
    combos = list(itertools.product(*(B.states for B in family)))
    names = {c: tuple_name(c) for c in combos}
    initial, final, trans = {}, {}, []
    for c in combos:
        a_w = ONE
        b_w = ONE
        for B, p in zip(family, c):
            a_w = w_times(a_w, B.initial.get(p, BOTTOM))
            b_w = w_times(b_w, B.final.get(p, BOTTOM))
        if a_w is not BOTTOM:
            initial[names[c]] = a_w
        if b_w is not BOTTOM:
            final[names[c]] = b_w
        idx = [B.index(p) for B, p in zip(family, c)]
        for a in alphabet:
            choices = [B.successors(i, a) for B, i in zip(family, idx)]
            for pick in itertools.product(*choices):
                dst = tuple(B.states[j] for B, (j, _) in zip(family, pick))
                weight = sum((w for _, w in pick), ONE)
                trans.append((names[c], a, weight, names[dst]))
    aut = Automaton(alphabet, [names[c] for c in combos], initial, final, trans)
    return aut, {names[c]: c for c in combos}


def tensor(family: Sequence[Automaton]) -> Automaton:
    """Tensor product: states are tuples, every weight is the sum of the members'."""
    return _tensor(list(family))[0]


def union(A: Automaton, B: Automaton) -> Automaton:
    """Disjoint union; realizes the pointwise max of the two series."""
    if set(A.alphabet) != set(B.alphabet):
        raise PreconditionError("union requires a common alphabet")
    if set(A.states) & set(B.states):
        ra = {q: f"1.{q}" for q in A.states}
        rb = {q: f"2.{q}" for q in B.states}
    else:
        ra = {q: q for q in A.states}
        rb = {q: q for q in B.states}
    states = [ra[q] for q in A.states] + [rb[q] for q in B.states]
    initial = {ra[q]: w for q, w in A.initial.items()}
    initial.update({rb[q]: w for q, w in B.initial.items()})
    final = {ra[q]: w for q, w in A.final.items()}
    final.update({rb[q]: w for q, w in B.final.items()})
    trans = [(ra[t.src], t.label, t.weight, ra[t.dst]) for t in A.transitions]
    trans += [(rb[t.src], t.label, t.weight, rb[t.dst]) for t in B.transitions]
    return Automaton(A.alphabet, states, initial, final, trans)


def heap_automaton(slots, pieces: Mapping[str, Iterable], finals) -> Automaton:
    """Heap (Tetris) automaton: the value of ``u`` is the max height over ``finals``.

    ``pieces`` maps each label to the slots it occupies.  Every slot is
    initial with weight 0 and every slot in ``finals`` has final weight 0.
    """
    slots = [str(s) for s in slots]
    if len(set(slots)) != len(slots):
        raise ValueError("duplicate slot")
    finals = {str(s) for s in finals}
    if not finals <= set(slots):
        raise ValueError("final slots must be slots")
    mu = {}
    for a, occupied in pieces.items():
        occupied = {str(s) for s in occupied}
        if not occupied:
            raise ValueError(f"piece {a!r} occupies no slot")
        if not occupied <= set(slots):
            raise ValueError(f"piece {a!r} occupies unknown slots {sorted(occupied - set(slots))}")
        rows = []
        for i in slots:
            row = []
            for j in slots:
                if i in occupied and j in occupied:
                    row.append(Fraction(1))
                elif i == j:
                    row.append(ONE)
                else:
                    row.append(BOTTOM)
            rows.append(row)
        mu[a] = WeightMatrix(rows)
    alpha = [ONE] * len(slots)
    beta = [ONE if s in finals else BOTTOM for s in slots]
    return Automaton.from_matrices(list(pieces), slots, alpha, mu, beta)


def is_sequential(A: Automaton) -> bool:
    """Unique initial state and at most one transition per state and label."""
    if len(A.initial) != 1:
        return False
    seen = set()
    for t in A.transitions:
        key = (t.src, t.label)
        if key in seen:
            return False
        seen.add(key)
    return True


def shift_weights(A: Automaton, c) -> Automaton:
    """Add the constant ``c`` to every transition weight."""
    c = as_weight(c)
    return A.replace(transitions=[t._replace(weight=t.weight + c) for t in A.transitions])
