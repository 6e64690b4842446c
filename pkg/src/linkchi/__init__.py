"""Exact-arithmetic engine for Euler characteristics of string-link
spaces: generating functions over sparse truncated multivariate series,
cycle index sums for the associated graph complexes and modular
envelopes, and a brute-force hairy-graph oracle cross-checking them."""

from .genfun import (
    EulerTable,
    LinkConfig,
    euler_table,
    f_homology,
    f_homotopy_direct,
    f_homotopy_graded,
    f_homotopy_via_pleth,
    genus0_closed,
    genus0_dims,
    genus1_closed,
    genus1_dims,
)
from .cycleindex import (
    feynman_regrade,
    mod_envelope_supercharacter,
    specialize_colors,
    z_colors,
    z_com,
    z_graph_supercharacter,
    z_hedgehog_homology,
    z_lie_cyclic,
    z_tree_homology,
)
from .graphs import EnumerationBudget, enumerate_classes, euler_char_oracle
from .rationals import QQ, bernoulli, binomial, mobius, totient
from .series import (
    OutOfBoundsError,
    SeriesError,
    TruncatedSeries,
    TruncationSpec,
    VariableSet,
)
from .special import (
    e_poly,
    f_poly,
    gamma_series,
    plethystic_exp,
    plethystic_log,
    s_poly,
)

__version__ = "0.1.0"

__all__ = [
    "EnumerationBudget",
    "EulerTable",
    "LinkConfig",
    "OutOfBoundsError",
    "QQ",
    "SeriesError",
    "TruncatedSeries",
    "TruncationSpec",
    "VariableSet",
    "bernoulli",
    "binomial",
    "e_poly",
    "enumerate_classes",
    "euler_char_oracle",
    "euler_table",
    "f_homology",
    "f_homotopy_direct",
    "f_homotopy_graded",
    "f_homotopy_via_pleth",
    "f_poly",
    "feynman_regrade",
    "gamma_series",
    "genus0_closed",
    "genus0_dims",
    "genus1_closed",
    "genus1_dims",
    "mobius",
    "mod_envelope_supercharacter",
    "plethystic_exp",
    "plethystic_log",
    "s_poly",
    "specialize_colors",
    "totient",
    "z_colors",
    "z_com",
    "z_graph_supercharacter",
    "z_hedgehog_homology",
    "z_lie_cyclic",
    "z_tree_homology",
]
