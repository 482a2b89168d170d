"""v-numbers of powers of monomial ideals."""

from .decomposition import (
    AssociatedPrimes,
    IrreducibleComponent,
    PrimeIdeal,
    associated_primes,
    associated_primes_oracle,
    c_invariant,
    irreducible_decomposition,
    minimal_primes,
    symbolic_power_squarefree,
)
from .errors import ParseError, PreconditionError, ResourceLimitError, RingMismatchError, VPowersError
from .graphs import (
    Graph,
    StabBound,
    WeightedOrientedGraph,
    cover_ideal,
    edge_ideal,
    edge_power_colon,
    edge_product,
    even_connected_pairs,
    graph_profile,
    minimal_vertex_covers,
    path_ideal,
    v_stab_upper_bound,
    weighted_oriented_edge_ideal,
)
from .monomial import (
    Monomial,
    MonomialIdeal,
    Ring,
    colon_by_ideal,
    colon_by_monomial,
    generator_limit,
    ideal_profile,
    intersect,
    minimalize,
    power,
    product,
)
from .parsing import emit_graph, emit_ideal, parse_graph, parse_ideal, parse_monomial
from .structure import (
    LinearQuotients,
    check_linear_quotient_order,
    find_unsupported_witness,
    has_linear_quotients,
    has_strong_persistence_upto,
    is_ntf_upto,
    is_vertex_splittable,
    polarize,
    replay_split_tree,
)
from .vnumber import (
    ConjectureVerdict,
    PowerRow,
    StabilityEstimate,
    VReport,
    VWitness,
    check_conjecture,
    check_lower_bound,
    local_v_number,
    local_v_numbers,
    stability_estimate,
    v_function,
    v_number,
    v_oracle,
    v_witnesses,
)

__version__ = "0.1.0"
