from ._core import (
    Collection,
    CostModel,
    Graph,
    SvmModel,
    ValidationError,
    compute_bounds,
    constant_cost_model,
    exact_ged,
    generate_trees,
    letter_cost_model,
    load_collection,
    parse_collection,
    parse_cost_model,
    solve_lsape,
    upper_bound,
)

__all__ = [
    "Collection",
    "CostModel",
    "Graph",
    "SvmModel",
    "ValidationError",
    "compute_bounds",
    "constant_cost_model",
    "exact_ged",
    "generate_trees",
    "letter_cost_model",
    "load_collection",
    "parse_collection",
    "parse_cost_model",
    "solve_lsape",
    "upper_bound",
]
