"""Cayley, Cayley sum and mirror di-Cayley graph spectra over finite
groups and finite commutative rings, with executable verification of
the product-decomposition, parity and isospectrality results."""

from .algebra import (
    AbelianCharacter,
    FiniteGroup,
    GroupError,
    GroupSubset,
    boolean_algebra_member,
    character_sum,
    characters,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    gcd_class,
    is_union_of_gcd_classes,
    make_group,
    ramanujan_sum,
    subset,
    subset_predicates,
    symmetric,
)
from .finring import (
    FiniteRing,
    LocalRing,
    RingError,
    additive_group,
    artin_product,
    field_quotient,
    galois_ring,
    gf,
    gp_integrality,
    hamming_gp_parameters,
    local_ring,
    parse_ring,
    power_residues,
    semiprimitive_check,
    units,
    zpk,
)
from .graphs import (
    Graph,
    GraphError,
    cayley,
    disjoint_union,
    mirror_dicayley,
    small_isomorphic,
    structure_report,
    with_loops,
)
from .products import NepsBasis, named_product, neps, path2
from .spectra import (
    Spectrum,
    SpectrumClass,
    SpectrumError,
    classify,
    gcd_graph_spectrum,
    hamming_spectrum,
    isospectral,
    jacobi_eigenvalues,
    local_ring_unitary_spectrum,
    looped_spectrum,
    mdcg_local_ring_spectrum,
    mdcg_spectrum_formula,
    moment_check,
    moments,
    product_spectrum_formula,
    semiprimitive_gp_spectrum,
    spectrum_dense_symmetric,
    spectrum_exact_abelian,
)
from .theorems import (
    VerificationReport,
    build_even_odd_pair,
    check_cayley_structure,
    check_crossed_nonisospectrality,
    check_gen_isosp,
    check_integrality_criteria,
    check_isosp_transfer,
    check_parity_and_symmetry,
    check_product_decompositions,
    check_spectrum_formulas,
    iterated_pairs,
    run_suite,
)

__version__ = "0.1.0"
