"""Symplectic representations: components, saturation, sl₂ links."""

from mfsr.repspec.errors import LinkError, RealizabilityError, RepError
from mfsr.repspec.links import glue_links, link_pair_list, replace_sl2_by_torus
from mfsr.repspec.realize import (
    Realization,
    assemble_saturated,
    component_weights,
    module_summands,
    realize,
)
from mfsr.repspec.rep import (
    Component,
    ComponentKind,
    SymplecticRep,
    algebra_dimension,
    algebra_rank,
    canonical,
    canonical_component,
    decompose_components,
    dim,
    product,
    trivial_factors,
)
from mfsr.repspec.saturation import SaturationReport, check_saturated
from mfsr.repspec.summands import (
    DualityClass,
    IrreducibleSummand,
    dual_summand,
    duality_class,
    summand_dimension,
    summand_weights,
)

__all__ = [
    "Component",
    "ComponentKind",
    "DualityClass",
    "IrreducibleSummand",
    "LinkError",
    "RealizabilityError",
    "Realization",
    "RepError",
    "SaturationReport",
    "SymplecticRep",
    "algebra_dimension",
    "algebra_rank",
    "assemble_saturated",
    "canonical",
    "canonical_component",
    "check_saturated",
    "component_weights",
    "decompose_components",
    "dim",
    "dual_summand",
    "duality_class",
    "glue_links",
    "link_pair_list",
    "module_summands",
    "product",
    "realize",
    "replace_sl2_by_torus",
    "summand_dimension",
    "summand_weights",
    "trivial_factors",
]
