"""Named example automata.

Heap automata are built from their Tetris description; the others are
transcribed state by state.  ``FIXTURES`` maps each name to its
constructor.
"""

from .automaton import Automaton, heap_automaton

AB = ("a", "b")
ABC = ("a", "b", "c")


def fig1_heap():
    # slots 1..3, a covers {1,2}, b covers {2,3}, height observed on slot 2
    return heap_automaton([1, 2, 3], {"a": [1, 2], "b": [2, 3]}, finals=[2])


def fig2_parity():
    """a^n -> n for even n, 0 for odd n."""
    return Automaton(
        ("a",),
        "ABCD",
        {"A": 0, "C": 0},
        {"B": 0, "C": 0},
        [
            ("A", "a", 0, "B"),
            ("B", "a", 0, "A"),
            ("C", "a", 1, "D"),
            ("D", "a", 1, "C"),
        ],
    )


def fig3_maxcount():
    """max(|u|_a, |u|_b): two independent slots."""
    return heap_automaton([1, 2], {"a": [1], "b": [2]}, finals=[1, 2])


def fig4a_heap():
    return heap_automaton([1, 2], {"a": [1, 2], "b": [2]}, finals=[1])


def fig4b():
    return Automaton(
        AB,
        "AB",
        {"B": 0},
        {"A": 0},
        [
            ("A", "b", 0, "A"),
            ("B", "a", 1, "B"),
            ("B", "b", 1, "B"),
            ("B", "a", 1, "A"),
        ],
    )


def fig_na_nfus2():
    """The series of ``fig4b`` minus the word length."""
    return Automaton(
        AB,
        "AB",
        {"A": 0},
        {"B": 0},
        [
            ("A", "a", 0, "B"),
            ("A", "a", 0, "A"),
            ("A", "b", 0, "A"),
            ("B", "b", -1, "B"),
        ],
    )


def fig5_evenblocks():
    """Sum of the lengths of the even a-blocks."""
    return Automaton(
        AB,
        "ABCD",
        {"A": 0, "C": 0},
        {"B": 0, "C": 0},
        [
            ("A", "a", 0, "B"),
            ("B", "a", 0, "A"),
            ("C", "a", 1, "D"),
            ("D", "a", 1, "C"),
            ("B", "b", 0, "A"),
            ("B", "b", 0, "C"),
            ("C", "b", 0, "A"),
            ("C", "b", 0, "C"),
        ],
    )


def fig6a_heap():
    return heap_automaton([1, 2, 3], {"a": [3], "b": [1, 2], "c": [2]}, finals=[1, 3])


def fig6b():
    return Automaton(
        ABC,
        "ABC",
        {"A": 0, "B": 0, "C": 0},
        {"A": 0, "C": 0},
        [
            ("A", "a", 0, "A"),
            ("A", "c", 0, "A"),
            ("B", "a", 0, "B"),
            ("B", "b", 1, "B"),
            ("B", "c", 1, "B"),
            ("B", "b", 1, "A"),
            ("C", "a", 1, "C"),
            ("C", "b", 0, "C"),
            ("C", "c", 0, "C"),
        ],
    )


def fig7_double():
    """``fig5_evenblocks`` side by side with its a/b mirror image."""
    left = fig5_evenblocks()
    swap = {"a": "b", "b": "a"}
    trans = [(t.src, t.label, t.weight, t.dst) for t in left.transitions]
    trans += [(t.src + "1", swap[t.label], t.weight, t.dst + "1") for t in left.transitions]
    states = list(left.states) + [q + "1" for q in left.states]
    initial = dict(left.initial)
    initial.update({q + "1": w for q, w in left.initial.items()})
    final = dict(left.final)
    final.update({q + "1": w for q, w in left.final.items()})
    return Automaton(AB, states, initial, final, trans)


def fig8_infamb():
    return Automaton(
        ABC,
        "AB",
        {"A": 0, "B": 0},
        {"A": 0, "B": 0},
        [
            ("A", "c", 1, "B"),
            ("B", "c", 1, "A"),
            ("A", "a", 1, "A"),
            ("A", "b", 0, "A"),
            ("A", "c", 1, "A"),
            ("B", "a", 0, "B"),
            ("B", "b", 1, "B"),
            ("B", "c", 1, "B"),
        ],
    )


def schutz_example():
    """Three-state Boolean automaton used to illustrate the covering (all weights 0)."""
    return Automaton(
        AB,
        "pqr",
        {"p": 0, "q": 0},
        {"p": 0, "r": 0},
        [
            ("p", "a", 0, "q"),
            ("p", "b", 0, "r"),
            ("q", "a", 0, "r"),
            ("q", "b", 0, "p"),
            ("r", "b", 0, "r"),
        ],
    )


def twin_branch():
    """Two a-branches with equal a-loops; twins, so determinizable."""
    return Automaton(
        ABC,
        "spq",
        {"s": 0},
        {"p": 0, "q": 0},
        [
            ("s", "a", 0, "p"),
            ("s", "a", 1, "q"),
            ("p", "a", 1, "p"),
            ("q", "a", 1, "q"),
            ("p", "b", 0, "p"),
            ("q", "c", 0, "q"),
        ],
    )


def all_ones():
    """One state, every letter weighs 1: the word length."""
    return Automaton(AB, ["s"], {"s": 0}, {"s": 0}, [("s", "a", 1, "s"), ("s", "b", 1, "s")])


def count_a():
    """One state: the number of a's."""
    return Automaton(AB, ["s"], {"s": 0}, {"s": 0}, [("s", "a", 1, "s"), ("s", "b", 0, "s")])


def count_b():
    return Automaton(AB, ["s"], {"s": 0}, {"s": 0}, [("s", "a", 0, "s"), ("s", "b", 1, "s")])


def constant_zero():
    return Automaton(AB, ["s"], {"s": 0}, {"s": 0}, [("s", "a", 0, "s"), ("s", "b", 0, "s")])


FIXTURES = {
    "fig1_heap": fig1_heap,
    "fig2_parity": fig2_parity,
    "fig3_maxcount": fig3_maxcount,
    "fig4a_heap": fig4a_heap,
    "fig4b": fig4b,
    "fig_na_nfus2": fig_na_nfus2,
    "fig5_evenblocks": fig5_evenblocks,
    "fig6a_heap": fig6a_heap,
    "fig6b": fig6b,
    "fig7_double": fig7_double,
    "fig8_infamb": fig8_infamb,
    "schutz_example": schutz_example,
    "twin_branch": twin_branch,
    "all_ones": all_ones,
    "count_a": count_a,
    "count_b": count_b,
    "constant_zero": constant_zero,
}


def get(name: str) -> Automaton:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None
