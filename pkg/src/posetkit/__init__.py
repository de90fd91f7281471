"""Exact finite order theory: posets, incidence structures, Galois lattices,
order dimension in three flavors, distributive spectra, and batch verification
suites that replay the package's structural identities on many instances.

Everything is deterministic; randomized helpers require an explicit seed.
Work beyond the configured size limits raises SizeLimitExceeded instead of
running without bounds.
"""

from .core import (
    EmbeddingMap,
    Graph,
    LinearOrder,
    Poset,
    WidthResult,
    all_linear_extensions,
    antichain_of,
    chain_of,
    direct_product,
    disjoint_sum,
    dual,
    find_embedding,
    from_relation,
    incomparability_graph,
    induced,
    lex_product,
    ordinal_product_2,
    transitive_orientation,
    width,
)
from .dimension import (
    FerrersCover,
    Realizer,
    chain_product_embedding,
    chain_product_host,
    critical_pairs,
    dm_dimension,
    dm_dimension_oracle,
    ferrers_dimension,
    ferrers_dimension_oracle,
    interval_dimension,
    minimal_ferrers_cover_oracle,
)
from .errors import (
    CycleDetected,
    DuplicateElement,
    InternalInconsistency,
    InvalidRealizer,
    NotALattice,
    NotAnExtension,
    NotDistributive,
    NotNonSeparating,
    ParseError,
    PosetKitError,
    PreconditionViolated,
    SizeLimitExceeded,
    UnknownElement,
    UnknownSuite,
)
from .extensions import (
    Orientation,
    SeparationWitness,
    conjugate,
    dim2_test,
    enumerate_nonseparating,
    find_nonseparating_extension,
    is_comparability_graph,
    is_separating,
    lemma24_check,
    linear_extensions,
    t2_cover_check,
)
from .generators import (
    all_posets,
    binary_tree,
    obstruction_catalog,
    omega_eta,
    rado,
    random_incidence,
    random_poset,
    spider_a,
    three_irreducible_b,
)
from .incidence import (
    Coding,
    FerrersWitness,
    IncidenceStructure,
    LabeledLattice,
    SubsetFamily,
    bipartite,
    canonical_coding,
    complement,
    down_family,
    galois_lattice,
    initial_segments,
    is_coding,
    is_ferrers,
    is_interval_order,
    lattice_order_structure,
    lower,
    macneille,
    moore_closure,
    open_split,
    order_structure,
    split,
    structure_dual,
    two_plus_two,
    upper,
)
from .io import (
    IncidenceDocument,
    PosetDocument,
    emit_incidence,
    emit_poset,
    export_hasse,
    heights,
    incidence_document,
    parse_document,
    parse_incidence,
    parse_poset,
    poset_document,
    to_json,
)
from .lattice import (
    PrimeIdeal,
    Spectrum,
    chain_factorization,
    dilworth_check,
    embeds_in_chains,
    interval_spectrum_check,
    is_distributive,
    is_lattice,
    is_lattice_embedding,
    join_irreducibles,
    spectrum,
)
from .verify import SUITES, Failure, VerifyReport, replay, verify_suite
from . import limits

__version__ = "0.1.0"

__all__ = [
    "Coding",
    "CycleDetected",
    "DuplicateElement",
    "EmbeddingMap",
    "Failure",
    "FerrersCover",
    "FerrersWitness",
    "Graph",
    "IncidenceDocument",
    "IncidenceStructure",
    "InternalInconsistency",
    "InvalidRealizer",
    "LabeledLattice",
    "LinearOrder",
    "NotALattice",
    "NotAnExtension",
    "NotDistributive",
    "NotNonSeparating",
    "Orientation",
    "ParseError",
    "Poset",
    "PosetDocument",
    "PosetKitError",
    "PreconditionViolated",
    "PrimeIdeal",
    "Realizer",
    "SUITES",
    "SeparationWitness",
    "SizeLimitExceeded",
    "Spectrum",
    "SubsetFamily",
    "UnknownElement",
    "UnknownSuite",
    "VerifyReport",
    "WidthResult",
    "all_linear_extensions",
    "all_posets",
    "antichain_of",
    "binary_tree",
    "bipartite",
    "canonical_coding",
    "chain_factorization",
    "chain_of",
    "chain_product_embedding",
    "chain_product_host",
    "complement",
    "conjugate",
    "critical_pairs",
    "dilworth_check",
    "dim2_test",
    "direct_product",
    "disjoint_sum",
    "dm_dimension",
    "dm_dimension_oracle",
    "down_family",
    "dual",
    "embeds_in_chains",
    "emit_incidence",
    "emit_poset",
    "enumerate_nonseparating",
    "export_hasse",
    "ferrers_dimension",
    "ferrers_dimension_oracle",
    "find_embedding",
    "find_nonseparating_extension",
    "from_relation",
    "galois_lattice",
    "heights",
    "incidence_document",
    "incomparability_graph",
    "induced",
    "initial_segments",
    "interval_dimension",
    "interval_spectrum_check",
    "is_coding",
    "is_comparability_graph",
    "is_distributive",
    "is_ferrers",
    "is_interval_order",
    "is_lattice",
    "is_lattice_embedding",
    "is_separating",
    "join_irreducibles",
    "lattice_order_structure",
    "lemma24_check",
    "lex_product",
    "limits",
    "linear_extensions",
    "lower",
    "macneille",
    "minimal_ferrers_cover_oracle",
    "moore_closure",
    "obstruction_catalog",
    "omega_eta",
    "open_split",
    "order_structure",
    "ordinal_product_2",
    "parse_document",
    "parse_incidence",
    "parse_poset",
    "poset_document",
    "rado",
    "random_incidence",
    "random_poset",
    "replay",
    "spectrum",
    "spider_a",
    "split",
    "structure_dual",
    "t2_cover_check",
    "three_irreducible_b",
    "to_json",
    "transitive_orientation",
    "two_plus_two",
    "upper",
    "verify_suite",
    "width",
]
