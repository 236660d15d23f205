"""Primitive subspaces, linear coverings and subspace partitions over finite fields."""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .linspace import (  # noqa: F401
    QQ,
    Subspace,
    contains,
    enumerate_subspaces,
    full_space,
    gaussian_binomial,
    intersect,
    span,
    sum_spaces,
    zero_space,
)
from .fieldcore import (  # noqa: F401
    FqField,
    Tower,
    build_tower,
    element_degree,
    frobenius_q,
    is_irreducible,
    prime_field,
    subfield_basis,
)
from .avoidance import AvoidanceProblem, find_avoiding_vector, max_zero_intersection_subspace  # noqa: F401
from .extension import (  # noqa: F401
    construct_primitive_subspace,
    is_primitive_subspace,
    phi_oracle,
    phi_upper_bound,
    profile,
    verify_identity,
)
from .covering import construct_covering, lc_value, min_covering_exhaustive, verify_covering  # noqa: F401
from .partition import PartitionSpec, build_partition, default_maps, verify_partition  # noqa: F401
