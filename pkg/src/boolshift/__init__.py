"""boolshift: Walsh-Hadamard analysis of Boolean functions and simulation
of measurement-based hidden-shift recovery.
"""

from .boolfn import (
    BooleanFunction,
    hamming_weight,
    make_delta,
    make_function,
    make_inner_product,
    parse_function,
    format_function,
    parse_function_spec,
    random_function,
    shift,
    substream,
)
from .bounds import (
    distinguishing_index_set,
    distinguishing_sweep,
    grover_upper_bound,
    search_lower_bound,
)
from .dtree import (
    DecisionTree,
    example_tree,
    parse_tree,
    read_tree_file,
    sparsity_bound,
    tree_height,
    tree_to_function,
)
from .fourier import (
    Spectrum,
    autocorrelation,
    convolve,
    inverse_wht,
    spectrum_from_rationals,
    tfold_spectrum,
    wht,
)
from .pgm import (
    INCONCLUSIVE,
    OutcomeDistribution,
    PhiState,
    build_phi_state,
    delta_closed_form,
    outcome_distribution,
    outcome_distribution_statevector,
    sample_measurement,
    success_probability,
)
from .randstat import (
    MomentReport,
    brute_force_moments,
    cantelli_chain,
    expected_success_mc,
    pairing_indicator,
    random1_bound,
    random2_bound,
    walk_expectation,
)
from .shifts import (
    ExactOneQueryWitness,
    ShiftStructure,
    coset_confinement_check,
    exact_one_query_feasible,
    find_b_shifts,
    is_bent,
)
from .spectral import (
    QrsParams,
    SupportSet,
    minimal_full_support_t,
    qrs_params,
    support,
    support_from_members,
    sumset,
)

__version__ = "0.1.0"

__all__ = [
    "BooleanFunction",
    "DecisionTree",
    "ExactOneQueryWitness",
    "INCONCLUSIVE",
    "MomentReport",
    "OutcomeDistribution",
    "PhiState",
    "QrsParams",
    "ShiftStructure",
    "Spectrum",
    "SupportSet",
    "autocorrelation",
    "brute_force_moments",
    "build_phi_state",
    "cantelli_chain",
    "convolve",
    "coset_confinement_check",
    "delta_closed_form",
    "distinguishing_index_set",
    "distinguishing_sweep",
    "exact_one_query_feasible",
    "example_tree",
    "expected_success_mc",
    "find_b_shifts",
    "format_function",
    "grover_upper_bound",
    "hamming_weight",
    "inverse_wht",
    "is_bent",
    "make_delta",
    "make_function",
    "make_inner_product",
    "minimal_full_support_t",
    "outcome_distribution",
    "outcome_distribution_statevector",
    "pairing_indicator",
    "parse_function",
    "parse_function_spec",
    "parse_tree",
    "qrs_params",
    "random1_bound",
    "random2_bound",
    "random_function",
    "read_tree_file",
    "sample_measurement",
    "search_lower_bound",
    "shift",
    "sparsity_bound",
    "spectrum_from_rationals",
    "substream",
    "success_probability",
    "sumset",
    "support",
    "support_from_members",
    "tfold_spectrum",
    "tree_height",
    "tree_to_function",
    "walk_expectation",
    "wht",
]
