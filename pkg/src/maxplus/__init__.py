"""Max-plus automata: ambiguity, unambiguization and sequentiality."""

from .ambiguity import (
    AmbiguityWitness,
    degree_up_to,
    equivalent_up_to,
    find_counterexample,
    infinite_ambiguity_witness,
    is_infinitely_ambiguous,
)
from .automaton import (
    Automaton,
    Transition,
    count_successful_paths,
    evaluate,
    heap_automaton,
    is_sequential,
    sample_series,
    shift_weights,
    tensor,
    trim,
    union,
)
from .covering import (
    check_decomposable,
    competing_sets,
    decompose_unambiguous,
    determinize_boolean,
    schutzenberger_covering,
)
from .document import dumps, loads
from .dominance import analyze_sccs, product, satisfies_dominance, victorious
from .dot import export_dot
from .exceptions import CapExceeded, DocumentError, PreconditionError
from .semiring import BOTTOM, ONE, WeightMatrix, as_weight, format_weight, parse_weight
from .sequential import (
    decide,
    determinize_weighted,
    lipschitz_scan,
    prefix_distance,
    twin_property,
)
from .unambiguizer import build_unambiguous, constants_NM, construct_unambiguous

__version__ = "0.1.0"
