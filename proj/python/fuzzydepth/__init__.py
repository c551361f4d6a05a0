"""Simplicial depth functions for fuzzy-number data."""

from ._core import (  # noqa: F401
    DepthReport,
    DepthRow,
    DepthTriple,
    Direction,
    DiscreteFuzzyRV,
    FuzzyDepthError,
    FuzzyNumber,
    Interval,
    Metric,
    PairRule,
    PairScheme,
    PopulationDepths,
    Sample,
    Trapezoid,
    add,
    between,
    containment_probability,
    convex_combination,
    convex_hull_member,
    distance,
    empirical_depths,
    f_symmetric,
    load_csv,
    mc_containment,
    median_trapezoid,
    pair_measure,
    population_depths,
    rank_queries,
    rank_sample,
    rr_leq,
    sc_contains,
    scale,
    sf_contains,
    simulate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
