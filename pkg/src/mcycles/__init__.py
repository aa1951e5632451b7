"""Universal cycles for t-multisets and t-subsets of [n].

Three independent constructions (transition-graph eulerian circuits, an
inductive step of three symbols for t=3, and subset-to-multiset cycle
conversion), a ground-truth verifier, and an exhaustive searcher for
small parameters.
"""

from .convert import (
    build_permutation,
    convert2,
    convert3,
    cyclic_adjacent_pairs,
    double_first_instances,
    missing_pairs,
)
from .core import (
    KINDS,
    MULTISET,
    SUBSET,
    DifferenceClass,
    Form,
    Multiset,
    Pattern,
    class_of,
    enumerate_classes,
    expected_length,
    form_of,
    has_bad_pattern,
    is_cyclic_equivalent,
    necessary_condition,
    pattern_of,
    shift_down,
    shift_up,
)
from .errors import (
    BadPattern,
    BudgetExceeded,
    Infeasible,
    McycleError,
    NotAUcycle,
    NotCoprimeShift,
    NotEulerian,
)
from .induction import (
    InductionState,
    base_case,
    classify_multiset,
    construct3,
    extend_step,
    mixed_sweep,
    promote_top_band,
    upper_gadget,
)
from .search import SearchConfig, backtrack, branch_prefixes, canonicalize, count_distinct
from .transition import (
    FormRep,
    TransitionGraph,
    build_graph,
    choose_representative,
    construct_cycle,
    emit_cycle,
    eulerian_circuit,
    forms_of_class,
    is_eulerian,
    render_dot,
    representative_candidates,
    shift_graph_down,
)
from .verify import (
    CyclicSequence,
    VerificationReport,
    verify_cycle,
    verify_sequence,
    window_keys,
    windows,
)

__version__ = "0.1.0"
