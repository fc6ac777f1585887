"""Exact moment-cumulant calculus for the four independences of
noncommutative probability: commutative, free, Boolean and monotone.

Everything is computed over `fractions.Fraction`; each transform has at
least two independent computational routes that must agree exactly.
"""

__version__ = "0.1.0"

from .algebra import (
    Polynomial,
    SeriesKind,
    TruncatedSeries,
    lagrange_interpolate,
    poly_coefficient,
    series_compose,
    series_reciprocal,
)
from .convolution import (
    convolve,
    dilate,
    dot_power,
    fractional_dot,
    monotone_convolve,
    monotone_convolve_via_transform,
)
from .cumulants import (
    CumulantSequence,
    MomentFlow,
    MomentSequence,
    constant_cumulants,
    cumulants_from_moments,
    flow_semigroup_check,
    moment_flow,
    moments_from_monotone_cumulants,
    moments_from_ordered_partition_sum,
    moments_from_partition_sum,
    monotone_cumulants_from_moments,
    monotone_cumulants_via_interpolation,
    point_mass_moments,
)
from .errors import (
    InputFormatError,
    InvalidKindError,
    PreconditionError,
    QCumulantsError,
    SelfCheckError,
    SizeBoundError,
    TruncationError,
)
from .limits import (
    ConvergenceTable,
    arcsine_moments,
    clt_convergence_table,
    clt_step,
    monotone_poisson_moments,
    poisson_base,
    poisson_convergence_table,
)
from .partitions import (
    IndependenceKind,
    OrderedSetPartition,
    SetPartition,
    enumerate_monotone,
    enumerate_ordered,
    enumerate_ordered_partitions,
    enumerate_partitions,
    is_interval,
    is_monotone_order,
    is_noncrossing,
    partition_text,
    partition_weight,
)

__all__ = [name for name in dir() if not name.startswith("_")]
