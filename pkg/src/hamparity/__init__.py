"""Exact counting and parity verification for Hamiltonian paths in
tournaments and mixed graphs."""

from .count import (
    Decomposition,
    PermClass,
    RequiredPairs,
    brute_force_count,
    closed_form_count,
    count_all_of,
    count_all_of_brute,
    count_class,
    count_class_brute,
    count_constrained,
    count_constrained_brute,
    count_exactly_brute,
    decompose,
    hamilton_count,
    hamilton_count_brute,
)
from .construct import (
    PathSystem,
    WExtension,
    enumerate_path_systems,
    gadget_equivalence_check,
    gadget_from_mixed,
    materialize,
    random_w_extension,
    redei_via_dirac_check,
    replace_along,
)
from .graph import (
    MixedGraph,
    PairKind,
    all_mixed_graphs,
    all_tournaments,
    complement,
    graph_digest,
    parse,
    random_mixed,
    random_tournament,
    reverse_pair,
    serialize,
    transitive_tournament,
)
from .perm import (
    NeighborProfile,
    Permutation,
    ProfileStep,
    StepClass,
    enumerate_permutations,
    is_hamilton_path,
    profile,
    select,
)
from .theorems import (
    ParityReport,
    find_parity_witnesses,
    verify_berge_dirac,
    verify_berge_stronger,
    verify_dirac_corollary1,
    verify_dirac_corollary2,
    verify_dirac_corollary3,
    verify_dirac_stronger,
    verify_redei,
    verify_redei_stronger,
)

__version__ = "0.1.0"
