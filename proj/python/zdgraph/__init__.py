"""Zero-divisor graph of F_p[u]/(u^3) backed by the zdg C++ library."""

import json

from . import _core
from ._core import (
    CapacityError,
    ConsistencyGateError,
    classify,
    code_parameters,
    edges,
    graph_dot,
    incidence_matrix,
    is_prime,
    numeric_adjacency_spectrum,
    ring_mul,
    zero_divisors,
)

__all__ = [
    "CapacityError",
    "ConsistencyGateError",
    "adjacency_spectrum",
    "classify",
    "code_parameters",
    "edges",
    "graph",
    "graph_dot",
    "incidence_matrix",
    "indices",
    "invariants",
    "is_prime",
    "laplacian_spectrum",
    "numeric_adjacency_spectrum",
    "ring_mul",
    "spectral_summary",
    "verify",
    "zero_divisors",
]


def graph(p: int) -> dict:
    return json.loads(_core.graph_json(p))


def invariants(p: int) -> dict:
    return json.loads(_core.invariants_json(p))


def indices(p: int) -> dict:
    return json.loads(_core.indices_json(p))


def adjacency_spectrum(p: int) -> list:
    return json.loads(_core.adjacency_spectrum_json(p))


def laplacian_spectrum(p: int) -> list:
    return json.loads(_core.laplacian_spectrum_json(p))


def spectral_summary(p: int) -> dict:
    return json.loads(_core.spectral_summary_json(p))


def verify(primes) -> dict:
    """Claims report for the given odd primes (each at most 13)."""
    return json.loads(_core.verify_json(list(primes)))
