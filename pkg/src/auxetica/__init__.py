"""Decide whether a regular 3-periodic framework admits strictly auxetic deformations."""
from .cubic import TernaryCubic, aronhold_S, aronhold_T, discriminant, hesse_parameter, invariants, modulus_J
from .decision import DecideOptions, DecisionReport, Verdict, classify_definiteness, decide, simulate_path
from .deformation import build_system, check_independence, parametrize
from .framework import EdgeOrbit, PeriodicFramework, SymmetricMatrix3, edge_length_sq, edge_vector, validate
from .lab import family_framework, family_ground_truth, sampling_oracle

__all__ = [
    "DecideOptions", "DecisionReport", "EdgeOrbit", "PeriodicFramework", "SymmetricMatrix3",
    "TernaryCubic", "Verdict", "aronhold_S", "aronhold_T", "build_system", "check_independence",
    "classify_definiteness", "decide", "discriminant", "edge_length_sq", "edge_vector",
    "family_framework", "family_ground_truth", "hesse_parameter", "invariants", "modulus_J",
    "parametrize", "sampling_oracle", "simulate_path", "validate",
]
