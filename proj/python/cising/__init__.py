"""Ising metastability on two-cluster graphs.

Exact lumped chains on (p1, p2, a) classes, closed-form landscape
predictions, Metropolis sampling, and brute-force certification of the
predictions on small instances.
"""

from ._core import (
    LumpedChain,
    analyze,
    class_energy,
    class_size,
    classify,
    communication_height,
    enumerate_classes,
    exact_hitting_moments,
    hamiltonian,
    mixing_time,
    sample_hitting_times,
    spectral_gap,
    verify_gate,
)

__version__ = "0.1.0"

__all__ = [
    "LumpedChain",
    "analyze",
    "class_energy",
    "class_size",
    "classify",
    "communication_height",
    "enumerate_classes",
    "exact_hitting_moments",
    "hamiltonian",
    "mixing_time",
    "sample_hitting_times",
    "spectral_gap",
    "verify_gate",
]
