"""Structure schemes, shallow rules and their depth."""

from bvkit.shallow._order import PrecViolation, allowed, prec_order, prec_violations
from bvkit.shallow._preservation import DeepWitness, check_deep_preservation
from bvkit.shallow._rules import (
    CATALOG,
    RuleScheme,
    ShallowSystem,
    ShallowVerdict,
    instantiate,
    is_interaction,
    system_depth,
    validate_shallow_rule,
)

__all__ = [
    "CATALOG",
    "DeepWitness",
    "PrecViolation",
    "RuleScheme",
    "ShallowSystem",
    "ShallowVerdict",
    "allowed",
    "check_deep_preservation",
    "instantiate",
    "is_interaction",
    "prec_order",
    "prec_violations",
    "system_depth",
    "validate_shallow_rule",
]
