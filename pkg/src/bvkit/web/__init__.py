"""Relation webs of structures and their characterization."""

from bvkit.web._configs import FORBIDDEN_PATTERNS, ForbiddenConfig, forbidden_configs
from bvkit.web._diff import RelationChange, match_by_label, relation_diff, same_web
from bvkit.web._io import dump_web, load_web, web_from_dict, web_to_dict, web_to_dot
from bvkit.web._properties import (
    PropertyReport,
    Violation,
    WebProperty,
    check_inverse_square,
    verify_web_properties,
)
from bvkit.web._reconstruct import Reconstruction, reconstruct
from bvkit.web._relations import Relation, RelationWeb, WebCandidate, web_of

__all__ = [
    "FORBIDDEN_PATTERNS",
    "ForbiddenConfig",
    "PropertyReport",
    "Reconstruction",
    "Relation",
    "RelationChange",
    "RelationWeb",
    "Violation",
    "WebCandidate",
    "WebProperty",
    "check_inverse_square",
    "dump_web",
    "forbidden_configs",
    "load_web",
    "match_by_label",
    "reconstruct",
    "relation_diff",
    "same_web",
    "verify_web_properties",
    "web_from_dict",
    "web_of",
    "web_to_dict",
    "web_to_dot",
]
