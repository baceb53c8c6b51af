"""Independent verification routes: quadrature oracles and the proof-chain check."""

from .chain import DEFAULT_CHAIN_TOL, STAGES, ProofChainReport, prove_chain
from .integrals import euler_integral_3f2, kernel_integral
from .quadrature import QuadratureConfig, QuadResult, beta_closed_form, beta_integral

__all__ = [
    "DEFAULT_CHAIN_TOL",
    "STAGES",
    "ProofChainReport",
    "QuadResult",
    "QuadratureConfig",
    "beta_closed_form",
    "beta_integral",
    "euler_integral_3f2",
    "kernel_integral",
    "prove_chain",
]
