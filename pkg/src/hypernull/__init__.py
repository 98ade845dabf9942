"""Exact zero-eigenvalue multiplicities of loose hyperpaths.

Three connected computations, all in exact integer arithmetic:

* the irreducible components of the variety of zero eigenvectors of the
  3-uniform loose hyperpath, with a brute-force cross-check;
* the geometric multiplicity gm(0) those components determine, both by direct
  enumeration and through linear recurrences on counting polynomials;
* the algebraic multiplicity (nullity) of zero for k-uniform hyperpaths, by a
  rational-function recurrence and by a closed form, letting gm(0) <= am(0)
  be verified exactly at scale.
"""

from .algmult import (
    RationalFn,
    asymptotic_ratio,
    factor_multiplicity,
    lambda_power_minus,
    make_rational,
    mobius_iterate,
    nullity_bases,
    nullity_closed_form,
    nullity_lower_bound_holds,
    nullity_recursive,
    product_zero_multiplicity,
    product_zero_multiplicity_by_factors,
    zero_multiplicity,
)
from .genfunc import (
    CountSequences,
    GmSeries,
    SequencePoly,
    codim_counts_by_enumeration,
    count_sequences,
    dimension_transform,
    fibonacci_bound_check,
    gm_series,
)
from .hyperpath import AuxGraph, Hyperpath, aux_graph, build_hyperpath
from .nullvariety import (
    Component,
    FibonacciSubset,
    Generator,
    GeneratorSet,
    admissible_sets,
    codim,
    component_dimension_counts,
    component_multiplicity,
    components,
    components_from_payload,
    components_payload,
    enumerate_fibonacci_subsets,
    gm_zero,
    is_maximal,
    render_ideal,
)
from .oracle import (
    CandidateIdeal,
    brute_force_components,
    candidate_from_component,
    enumerate_candidates,
    variety_contains,
)

__version__ = "0.1.0"
