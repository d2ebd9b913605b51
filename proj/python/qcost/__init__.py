"""Quantum cost minimization for classical reversible and quantum circuits.

The heavy lifting lives in the compiled extension; this package re-exports
its functions. Circuits are passed around as RevLib-style file text.
"""

from qcost._core import (
    bench,
    check_equivalent,
    circuit_permutation,
    cost_report,
    linear_cost,
    optimize,
    quantum_cost,
)

__all__ = [
    "bench",
    "check_equivalent",
    "circuit_permutation",
    "cost_report",
    "linear_cost",
    "optimize",
    "quantum_cost",
]
