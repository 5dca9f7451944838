"""Mod-2 cohomology of connected sums of real projective spaces and
zero-divisor cup-length bounds for higher topological complexity."""

__version__ = "0.1.0"

from tcsum.algebra import (  # noqa: E402
    ClassVector,
    RingError,
    RingTable,
    StructureSpec,
    connected_sum,
    iterated_sum,
    ring_from_table,
    ring_new,
)
from tcsum.product import ProductRing, power  # noqa: E402
from tcsum.zerodiv import cup_map, is_zero_divisor, kernel_basis  # noqa: E402
from tcsum.zcl import (  # noqa: E402
    Certificate,
    FactorList,
    ParameterError,
    expand,
    tc_bounds,
    verify_steps_s3,
    verify_theorem,
    witness_factors,
    zcl_search,
)

__all__ = [
    "Certificate",
    "ClassVector",
    "FactorList",
    "ParameterError",
    "ProductRing",
    "RingError",
    "RingTable",
    "StructureSpec",
    "connected_sum",
    "cup_map",
    "expand",
    "is_zero_divisor",
    "iterated_sum",
    "kernel_basis",
    "power",
    "ring_from_table",
    "ring_new",
    "tc_bounds",
    "verify_steps_s3",
    "verify_theorem",
    "witness_factors",
    "zcl_search",
]
