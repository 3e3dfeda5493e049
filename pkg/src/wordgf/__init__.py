"""Exact multivariate generating functions for words avoiding forbidden factors."""

from .algebra import Polynomial, RationalFunction, SeriesPrefix, ratfun_eq, series_in_t
from .corpus import CharModel, ingest_word_list, model_to_problem
from .gj import ClusterEngine, cluster_weights, generating_function
from .language import Alphabet, ForbiddenSet, chop, count_occurrences, overlaps, validate_or_reduce
from .oracle import OracleRequest, brute_force_series
from .problem import MarkPolicy, Problem, Variant
from .recursive import RecursiveEngine, build_state_graph, recursive_gf, state_weights

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "CharModel",
    "ClusterEngine",
    "ForbiddenSet",
    "MarkPolicy",
    "OracleRequest",
    "Polynomial",
    "Problem",
    "RationalFunction",
    "RecursiveEngine",
    "SeriesPrefix",
    "Variant",
    "brute_force_series",
    "build_state_graph",
    "chop",
    "cluster_weights",
    "count_occurrences",
    "generating_function",
    "ingest_word_list",
    "model_to_problem",
    "overlaps",
    "ratfun_eq",
    "recursive_gf",
    "series_in_t",
    "state_weights",
    "validate_or_reduce",
]
