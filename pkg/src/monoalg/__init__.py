"""Exact combinatorics of monomial algebras.

Word periodicity, regular words with their standard Lie bracketings, growth
automata with exact Hilbert series, and machine-checked certificates for free
Lie subalgebras and free subgroups of truncated unit groups.
"""

from .automaton import (
    GrowthReport,
    LabeledGraph,
    Presentation,
    UfnAutomaton,
    build_automaton,
    check_factor_closed,
    classify_growth,
    count_words,
    determinize_graph,
    expand_series,
    family_A,
    hilbert_series,
    normalize_presentation,
    total_dims,
)
from .errors import (
    AlphabetMismatch,
    CapExceeded,
    CyclicInput,
    EquationDoesNotHold,
    EquivalentInputs,
    InvalidCertificate,
    MonoalgError,
    NotRegular,
    NotSubwordClosed,
    PolynomialGrowth,
    RecurrenceNotStabilized,
    RelationFails,
    TruncationTooSmall,
    WordVanishes,
    ZeroPolynomial,
)
from .finder import (
    FreePairCertificate,
    check_well_based,
    find_cycle_pair,
    find_regular_pair,
    validate_certificate,
)
from .poly import (
    NcPoly,
    expand_bracket,
    leading_monomial,
    lie_bracket,
    lowest_monomial,
    multiply,
    reduce_mod_ideal,
    truncate,
)
from .regular import (
    BracketTree,
    Leaf,
    Node,
    Regularity,
    RegularityClass,
    UfnOutcome,
    classify_regularity,
    enumerate_regular,
    is_regular,
    is_semi_regular,
    power_product,
    regular_rotation,
    standard_bracketing,
    substitute,
    ufn_compare,
)
from .verify import (
    FreeSubgroupReport,
    GroupRelationsReport,
    HallRow,
    LieFreenessReport,
    PATTERN_ALPHABET,
    TruncatedUnit,
    left_normalized_commutator,
    unit_inverse,
    verify_free_subgroup,
    verify_group_relations,
    verify_lie_freeness,
)
from .words import (
    Alphabet,
    LexOutcome,
    Word,
    check_overlap,
    factor_positions,
    has_period,
    is_cyclically_conjugate,
    is_primitive,
    lex_compare,
    occurrences_in_power,
    primitive_root,
    shift_equation_decompose,
)

__version__ = "0.1.0"
