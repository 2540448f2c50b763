"""tlab: exact-arithmetic workbench for degree-sequence independence bounds,
local Turan stability, and the inequality machinery behind them."""

from .basecliques import (
    BaseCliqueContext,
    base_clique_context,
    base_cliques,
    eval_averaging_inequality,
    eval_single_lost_color,
    f_K_weights,
)
from .bounds import (
    HypothesisReport,
    LpBound,
    cap_weights,
    caro_wei,
    caro_wei_weights,
    critical_sigma,
    degree_sum_bound,
    inverse_degree_weights,
    lp_max_weight,
    parse_weights,
    format_weights,
    sigma_bound,
    uniform_weights,
    validate_weight_fn,
    verify_main_theorem,
    verify_sigma_theorem,
)
from .cliques import (
    CliqueSet,
    clique_number,
    max_weight_clique,
    maximal_cliques,
    simplicial_clique_condition,
    simplicial_vertices,
)
from .conjecture import (
    ALPHA_OK,
    BLOWUP_ESCAPE,
    CLIQUE_ESCAPE,
    BlowupWitness,
    ConjectureVerdict,
    conjecture_verdict,
    find_heavy_blowup,
    validate_blowup_witness,
    write_counterexample_certificate,
)
from .corpus import enumerate_labeled_graphs, graph_from_mask, run_suite
from .graphs import (
    DegreeStats,
    Graph,
    Graph6Error,
    bipartite_minus_matching,
    build_graph,
    c5_blowup,
    c7_blowup,
    clique_chain,
    complement,
    complete,
    cycle,
    degree_stats,
    encode_graph6,
    generate,
    induced_subgraph,
    parse_edge_list,
    format_edge_list,
    parse_graph6,
    turan,
)
from .independence import (
    AlphaResult,
    alpha_exact,
    chromatic_number_exact,
    enumerate_independent_sets,
)
from .inequalities import (
    GridReport,
    bruteforce_bucket_max,
    bucket_term,
    claim_a3_odd_margin,
    e_turan,
    lemma52_bound,
    q_avg,
    q_sink,
    switching_margin,
    switching_margin_closed_form,
    verify_appendixA_grid,
    verify_bucket_oracle_grid,
    verify_claims_grid,
    verify_finishing_blow_grid,
)
from .records import VerificationRecord, fmt_rational, parse_rational
from .stability import (
    StabilityWitness,
    complete_count,
    corollary_edge_bound,
    edge_threshold,
    find_stability_witness,
    peel_coloring,
    verify_corollary,
    verify_stability_theorem,
)
