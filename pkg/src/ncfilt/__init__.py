"""Koszul flags, Koszul and rate filtrations, and exact Hilbert series for
finitely presented graded associative algebras."""

from .fields import FieldSpec, QQ, prime_field
from .freealg import GenOrder, NcPoly, Word, apply_linear_change, \
    leading_monomial, poly_mul, word_compare
from .series import Polynomial, RationalFunction, TruncatedSeries, \
    poly_arith, ratfunc_expand, series_match
from .quotient import Presentation, QuotientAlgebra, froberg_check, \
    hilbert_function, monomial_hilbert_ratfunc, normal_words, presentation, \
    quadratic_dual, semi_tensor_check, tensor_product
from .groebner import GroebnerBasis, complete, overlap_graph, overlaps, \
    pbw_certificate, reduce, restricted_processing_check
from .ideals import GradedIdeal, colon_ideal, components_equal, \
    ideal_from_generators, maximal_ideal, membership, min_generators, \
    opposite_transform, zero_ideal
from .homology import ChainSet, KoszulResult, TorTable, \
    anick_chains_quadratic_monomial, koszul_certificate, rate_bound_check, \
    rate_estimate, tor_table
from .filtration import FiltrationEntry, FiltrationTable, \
    VerificationReport, hilbert_from_filtration, initially_koszul_criterion, \
    initially_koszul_search, monomial_dual_flag_check, \
    monomial_rate_filtration, monomial_subset_filtration, \
    single_relation_normalize, verify_filtration
from .generic import GenericExperimentReport, golod_shafarevich_series, \
    h1_obstruction_series, large_r_experiment, random_quadratic_presentation, \
    small_r_experiment
from .presfile import load_presentation, parse_poly, parse_presentation, \
    render_presentation

__version__ = "0.1.0"
