"""Diagonal identification of sl₂ factors, and the sl₂ → t¹ replacement."""

from __future__ import annotations

import logging
from collections.abc import Iterable

from mfsr.lattice import AlgebraShape, SimpleFactor
from mfsr.repspec.errors import LinkError, RepError
from mfsr.repspec.rep import (
    Component,
    ComponentKind,
    LinkPair,
    SymplecticRep,
    check_link_pairs,
    normalize_links,
)
from mfsr.repspec.summands import IrreducibleSummand

logger = logging.getLogger(__name__)

_A1 = SimpleFactor("A", 1)


def glue_links(rep: SymplecticRep, pairs: Iterable[Iterable[int]] | None = None) -> SymplecticRep:
    """Merge each pair of sl₂ factors into one acting diagonally.

    ``pairs`` defaults to the rep's own pending links; explicit pairs are added to them.
    The lower index of each pair survives and the weight coordinate of the removed factor
    is added onto it. The result carries no pending links.

    Raises:
        LinkError: a non-A1 factor, overlapping pairs, or a pair acting on a common component.
    """
    todo = set(rep.links)
    if pairs is not None:
        todo |= normalize_links(pairs)
    if not todo:
        return SymplecticRep(rep.shape, rep.components)
    all_pairs = frozenset(todo)
    check_link_pairs(rep.shape, all_pairs)
    for u, v in sorted(all_pairs):
        on_u, on_v = set(rep.components_on(u)), set(rep.components_on(v))
        if not on_u or not on_v:
            raise LinkError(f"linked factor {u if not on_u else v} acts trivially on every component")
        common = on_u & on_v
        if common:
            raise LinkError(
                f"factors {u} and {v} both act on component {min(common)}; "
                "two sl(2)'s of one component cannot be identified"
            )

    removed = {v: u for u, v in all_pairs}
    kept = [i for i in range(len(rep.shape.factors)) if i not in removed]
    shape = AlgebraShape(tuple(rep.shape.factors[i] for i in kept), rep.shape.torus_dim)

    comps: list[Component] = []
    for comp in rep.components:
        blocks = list(comp.summand.highest_weights)
        for v, u in removed.items():
            blocks[u] = tuple(x + y for x, y in zip(blocks[u], blocks[v], strict=True))
        summand = IrreducibleSummand(
            tuple(blocks[i] for i in kept), comp.summand.torus_character, comp.summand.tag
        )
        comps.append(Component(comp.kind, summand, comp.torus_index))
    logger.debug("glued pairs=%s shape=%s", sorted(all_pairs), shape.label())
    return SymplecticRep(shape, tuple(comps))


def replace_sl2_by_torus(rep: SymplecticRep, factor_index: int) -> SymplecticRep:
    """Replace an sl₂ acting by ℂ² on one type 1 component ℂ²⊗U by its Cartan subalgebra.

    The component becomes T(U) with a new dedicated torus coordinate appended to the shape.

    Raises:
        RepError: the factor is not an sl₂ acting by its defining module on exactly one
            type 1 component, or the rep has pending links.
    """
    if rep.links:
        raise RepError("apply pending links before replacing an sl(2) factor")
    if not 0 <= factor_index < len(rep.shape.factors) or rep.shape.factors[factor_index] != _A1:
        raise RepError(f"factor {factor_index} is not an sl(2) factor")
    on = rep.components_on(factor_index)
    if len(on) != 1:
        raise RepError(f"sl(2) factor {factor_index} acts on {len(on)} components, expected 1")
    target = rep.components[on[0]]
    if target.kind is not ComponentKind.TYPE1 or target.summand.highest_weights[factor_index] != (1,):
        raise RepError(f"sl(2) factor {factor_index} does not act by C^2 on a type 1 component")

    new_index = rep.shape.torus_dim
    shape = AlgebraShape(
        tuple(f for i, f in enumerate(rep.shape.factors) if i != factor_index),
        rep.shape.torus_dim + 1,
    )

    def drop(summand: IrreducibleSummand) -> IrreducibleSummand:
        blocks = tuple(b for i, b in enumerate(summand.highest_weights) if i != factor_index)
        return IrreducibleSummand(blocks, summand.torus_character + (0,), summand.tag)

    comps = []
    for pos, comp in enumerate(rep.components):
        if pos == on[0]:
            comps.append(Component(ComponentKind.TYPE2, drop(comp.summand), new_index))
        else:
            comps.append(Component(comp.kind, drop(comp.summand), comp.torus_index))
    return SymplecticRep(shape, tuple(comps))


def link_pair_list(pairs: Iterable[LinkPair]) -> list[list[int]]:
    """Return pairs as sorted JSON-friendly lists."""
    return [list(p) for p in sorted(pairs)]
