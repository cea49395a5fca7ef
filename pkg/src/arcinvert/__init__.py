"""arcinvert: make directed graphs k-arc-strong by inversions.

An inversion reverses every arc inside a chosen vertex set.  The
package decides when a digraph can be made k-arc-strong with inversions
of bounded or fixed size, builds witnessing families, approximates the
minimum number of inversions with a proven guarantee, provides exact
and brute-force oracles for small instances, and generates the gadget
digraphs used in hardness reductions.
"""

from .approx import (
    ApproxTrace,
    approx_kp,
    eta,
    greedy_k2_inversion_set,
    min_k2_inversion_set,
    minimally_k_arc_strong,
    pack_independent_pairs,
    pairs_independent,
    ramsey_bound_descriptor,
)
from .core import (
    INFINITY,
    Cut,
    FramePartition,
    InversionFamily,
    MultiDigraph,
    Multigraph,
    apply_inversions,
    dicut,
    edge_connectivity,
    emit_mdg,
    frames,
    is_k_arc_strong,
    max_flow,
    min_cut,
    parse_mdg,
    push,
    read_mdg,
    reverse,
    underlying,
    violating_dicut,
    write_mdg,
)
from .errors import (
    ArcinvertError,
    InvalidArgumentError,
    ParseError,
    PreconditionViolatedError,
    UnsupportedError,
)
from .feasibility import (
    FeasibilityVerdict,
    construct_witness,
    is_kp_invertible,
    threshold,
)
from .obstruction import (
    ObstructionCertificate,
    certificate_from_text,
    certificate_to_text,
    doubled_clique_obstruction,
    exhaustive_obstruction_search,
    is_k_obstruction,
    star_matching_obstruction,
    verify_certificate,
)
from .oracles import (
    Hypergraph,
    exact_inv_kp,
    exists_k_arc_strong_orientation,
    gf2_reachable,
    max_hypergraph_matching,
    max_p3_packing,
)
from .reductions import (
    ReductionInstance,
    gen_do_m22inv,
    gen_hm,
    gen_npsi_22,
    gen_p3p,
    gen_psi_ksi,
    gen_push_n1,
    minimal_pattern_source,
    random_pattern_source,
    rotative_tournament,
)
from .simulation import (
    SimulationPlan,
    simulate_pair,
    simulate_quintuple,
    simulate_triple,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITY",
    "ApproxTrace",
    "Cut",
    "FeasibilityVerdict",
    "FramePartition",
    "Hypergraph",
    "InversionFamily",
    "MultiDigraph",
    "Multigraph",
    "ObstructionCertificate",
    "ReductionInstance",
    "SimulationPlan",
    "ArcinvertError",
    "InvalidArgumentError",
    "ParseError",
    "PreconditionViolatedError",
    "UnsupportedError",
    "apply_inversions",
    "approx_kp",
    "certificate_from_text",
    "certificate_to_text",
    "construct_witness",
    "dicut",
    "doubled_clique_obstruction",
    "edge_connectivity",
    "emit_mdg",
    "eta",
    "exact_inv_kp",
    "exhaustive_obstruction_search",
    "exists_k_arc_strong_orientation",
    "frames",
    "gen_do_m22inv",
    "gen_hm",
    "gen_npsi_22",
    "gen_p3p",
    "gen_psi_ksi",
    "gen_push_n1",
    "gf2_reachable",
    "greedy_k2_inversion_set",
    "is_k_arc_strong",
    "is_k_obstruction",
    "is_kp_invertible",
    "max_flow",
    "max_hypergraph_matching",
    "max_p3_packing",
    "min_cut",
    "min_k2_inversion_set",
    "minimal_pattern_source",
    "minimally_k_arc_strong",
    "pack_independent_pairs",
    "pairs_independent",
    "parse_mdg",
    "push",
    "ramsey_bound_descriptor",
    "random_pattern_source",
    "read_mdg",
    "reverse",
    "rotative_tournament",
    "simulate_pair",
    "simulate_quintuple",
    "simulate_triple",
    "star_matching_obstruction",
    "threshold",
    "underlying",
    "verify_certificate",
    "violating_dicut",
    "write_mdg",
    "__version__",
]
