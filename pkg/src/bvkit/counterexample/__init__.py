"""The alpha-structure family: provable structures whose proofs must start deep."""

from bvkit.counterexample._alpha import (
    AlphaParams,
    AlphaStructure,
    Index,
    alpha,
    alpha_zero_depths,
    atom_count,
    check_flat,
    s_n,
)
from bvkit.counterexample._checks import DualPair, check_no_dual_pars, hexagon_relations
from bvkit.counterexample._derive import alpha_derivation, proof_of_sn

__all__ = [
    "AlphaParams",
    "AlphaStructure",
    "DualPair",
    "Index",
    "alpha",
    "alpha_derivation",
    "alpha_zero_depths",
    "atom_count",
    "check_flat",
    "check_no_dual_pars",
    "hexagon_relations",
    "proof_of_sn",
    "s_n",
]
