"""Deductive geometry prover: constructions, diagrams, saturation, proofs."""

from .diagram import Diagram, detect_properties, realize
from .engine import NotProved, SaturationLimits, prove, saturate
from .errors import (
    AlgebraError,
    CatalogError,
    ConstructionError,
    DegenerateError,
    FactError,
    GddxError,
    LimitError,
    ParseError,
    ProofExtractionError,
    RuleError,
    UnsupportedGoalError,
)
from .factdb import FactDb, Justification
from .gcs import parse_gcs, serialize_gcs
from .ggb import import_ggb_subset
from .i18n import Catalog, CatalogChain, CatalogEntry, lint, load_catalog
from .model import Construction, ConstructionStep, Fact, Goal, canonical_fact, parse_fact_text
from .proofgraph import ProofDag, ProofNode, export_dot, extract, render_tree
from .rules import Rule, RuleBase, load_rules
from .wu import NdgCondition, TriangularSet, WuResult, translate, triangularize, wu_prove

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "Catalog",
    "CatalogChain",
    "CatalogEntry",
    "CatalogError",
    "Construction",
    "ConstructionError",
    "ConstructionStep",
    "DegenerateError",
    "Diagram",
    "Fact",
    "FactDb",
    "FactError",
    "GddxError",
    "Goal",
    "Justification",
    "LimitError",
    "NdgCondition",
    "NotProved",
    "ParseError",
    "ProofDag",
    "ProofExtractionError",
    "ProofNode",
    "Rule",
    "RuleBase",
    "RuleError",
    "SaturationLimits",
    "TriangularSet",
    "UnsupportedGoalError",
    "WuResult",
    "canonical_fact",
    "detect_properties",
    "export_dot",
    "extract",
    "import_ggb_subset",
    "lint",
    "load_catalog",
    "load_rules",
    "parse_fact_text",
    "parse_gcs",
    "prove",
    "realize",
    "render_tree",
    "saturate",
    "serialize_gcs",
    "translate",
    "triangularize",
    "wu_prove",
    "__version__",
]
