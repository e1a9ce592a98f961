"""Full subgraphs, discrepancy, and majority bootstrap percolation.

Exact-arithmetic tools for finding induced subgraphs whose minimum
degree meets the density threshold p(m-1), measuring how far a graph
strays from its expected edge counts, and connecting both to the fixed
points of majority bootstrap percolation.
"""

from .discrepancy import (
    EXACT_CAP_DEFAULT,
    DiscWitness,
    JumblednessBoundReport,
    JumbledReport,
    discrepancy_exact,
    discrepancy_local_search,
    edge_surplus,
    jumbledness_exact,
    verify_jumbledness_bound,
)
from .finders import (
    FullSubgraphResult,
    GValue,
    QFullOutcome,
    RelativelyFullResult,
    ceil_sqrt_frac,
    full_two_thirds,
    greedy_full,
    half_full,
    is_full,
    is_relatively_full,
    largest_full_or_cofull,
    one_over_r_full,
    oracle_largest_full,
    qfull_partition,
    small_p_full,
    small_p_size_floor,
    two_thirds_size_floor,
)
from .generate import (
    FAMILIES,
    GenSpec,
    adversary_planted_size,
    clique_part_size,
    gen_clique_plus_isolated,
    gen_glued,
    gen_gnp,
    gen_greedy_adversary,
    gen_multipartite_planted,
    generate,
)
from .graph import (
    EdgeListError,
    Graph,
    PreconditionError,
    VerificationError,
    complement,
    density,
    from_mask,
    induced_subgraph,
    iter_bits,
    lex_less,
    read_edge_list,
    to_mask,
    write_edge_list,
)
from .percolation import (
    THETA_CAP_DEFAULT,
    InfectionEstimate,
    PercolationState,
    bootstrap_percolate,
    full_infection_probability,
    full_infection_probability_exact,
    is_relatively_half_full_mask,
    sample_initial_mask,
    surviving_half_full,
)
from .sweep import (
    CSV_COLUMNS,
    SWEEP_ALGORITHMS,
    ExperimentRow,
    SweepConfig,
    read_csv,
    rows_to_csv,
    run_sweep,
    summarize,
    write_csv,
)

__version__ = "0.1.0"
