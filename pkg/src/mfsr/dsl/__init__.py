"""ASCII expression language for symplectic representations."""

from mfsr.dsl.builder import ResolvedFactor, build_rep, rep_from_text, resolve_ctor
from mfsr.dsl.parser import (
    Classical,
    ComponentExpr,
    DslError,
    DslSemanticError,
    DslSyntaxError,
    Exceptional,
    FactorRep,
    HighestWeight,
    Power,
    RepExpr,
    Span,
    Spin,
    parse_dsl,
    print_ctor,
    print_dsl,
    tokenize,
)

__all__ = [
    "Classical",
    "ComponentExpr",
    "DslError",
    "DslSemanticError",
    "DslSyntaxError",
    "Exceptional",
    "FactorRep",
    "HighestWeight",
    "Power",
    "RepExpr",
    "ResolvedFactor",
    "Span",
    "Spin",
    "build_rep",
    "parse_dsl",
    "print_ctor",
    "print_dsl",
    "rep_from_text",
    "resolve_ctor",
    "tokenize",
]
