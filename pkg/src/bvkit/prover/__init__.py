"""Proof search, derivation checking and derivation transformations for BV."""

from bvkit.prover._analysis import FirstRedex, first_redex_analysis, min_provable_depth
from bvkit.prover._check import CheckReport, System, check, is_instance_shape
from bvkit.prover._derivation import Derivation, Step, axiom
from bvkit.prover._io import (
    derivation_from_dict,
    derivation_to_dict,
    dump_derivation,
    load_derivation,
)
from bvkit.prover._locate import locate_step
from bvkit.prover._rules import BV_RULES, SBV_RULES, RuleInstance, RuleName, expand
from bvkit.prover._search import (
    DEFAULT_BUDGET,
    ProofResult,
    ProofSearch,
    ProofStatus,
    is_provable,
    prove,
)
from bvkit.prover._transform import delete_atom_pair, erase_atoms, lift

__all__ = [
    "BV_RULES",
    "CheckReport",
    "DEFAULT_BUDGET",
    "Derivation",
    "FirstRedex",
    "ProofResult",
    "ProofSearch",
    "ProofStatus",
    "RuleInstance",
    "RuleName",
    "SBV_RULES",
    "Step",
    "System",
    "axiom",
    "check",
    "delete_atom_pair",
    "derivation_from_dict",
    "derivation_to_dict",
    "dump_derivation",
    "erase_atoms",
    "expand",
    "first_redex_analysis",
    "is_instance_shape",
    "is_provable",
    "lift",
    "load_derivation",
    "locate_step",
    "min_provable_depth",
    "prove",
]
