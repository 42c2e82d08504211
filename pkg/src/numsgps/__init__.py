"""Numerical semigroups: invariants, ideal extensions, chains, genealogy."""
from .complexity import (
    Classification,
    IChain,
    ThetaMap,
    chain,
    classify,
    complexity,
    mu,
    theta_apply,
    validate_chain,
)
from .errors import (
    FrobeniusTooLarge,
    GcdNotOne,
    GenusTooLarge,
    LevelTooLarge,
    NotAMember,
    NotASemigroup,
    SemigroupError,
    TypeTooLarge,
    WholeMonoid,
)
from .extensions import (
    PertinentSet,
    ideal_extensions,
    is_ideal_extension,
    is_pertinent,
    pertinent_sets,
)
from .genealogy import (
    TreeLevel,
    child_edges,
    children,
    count,
    enumerate_semigroups,
    export_dot,
    level,
    removal_candidates,
    root,
    shift_embed,
)
from .oracle import (
    CHECKS,
    GenusCatalog,
    enumerate_by_genus,
    extensions_bruteforce,
    min_ichain_bfs,
    pf_bruteforce,
    pf_gap_search,
)
from .semigroup import (
    WHOLE,
    AperySet,
    NumericalSemigroup,
    from_gaps,
    from_generators,
    type_of,
)

__all__ = [
    "AperySet",
    "CHECKS",
    "Classification",
    "FrobeniusTooLarge",
    "GcdNotOne",
    "GenusCatalog",
    "GenusTooLarge",
    "IChain",
    "LevelTooLarge",
    "NotAMember",
    "NotASemigroup",
    "NumericalSemigroup",
    "PertinentSet",
    "SemigroupError",
    "ThetaMap",
    "TreeLevel",
    "TypeTooLarge",
    "WHOLE",
    "WholeMonoid",
    "chain",
    "child_edges",
    "children",
    "classify",
    "complexity",
    "count",
    "enumerate_by_genus",
    "enumerate_semigroups",
    "export_dot",
    "extensions_bruteforce",
    "from_gaps",
    "from_generators",
    "ideal_extensions",
    "is_ideal_extension",
    "is_pertinent",
    "level",
    "min_ichain_bfs",
    "mu",
    "pertinent_sets",
    "pf_bruteforce",
    "pf_gap_search",
    "removal_candidates",
    "root",
    "shift_embed",
    "theta_apply",
    "type_of",
    "validate_chain",
]

__version__ = "0.1.0"
