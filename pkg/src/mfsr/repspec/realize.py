"""Weights of a symplectic representation, and the module ↔ saturated-rep correspondence."""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Iterable
from typing import NamedTuple

from mfsr.lattice import (
    AlgebraShape,
    RootSystem,
    WeightMultiset,
    build_root_system,
    dual_weights,
)
from mfsr.repspec.errors import RealizabilityError, RepError
from mfsr.repspec.links import glue_links
from mfsr.repspec.rep import Component, ComponentKind, SymplecticRep
from mfsr.repspec.summands import (
    DualityClass,
    IrreducibleSummand,
    dual_summand,
    duality_class,
    summand_weights,
)

logger = logging.getLogger(__name__)


class Realization(NamedTuple):
    """Δ and Φ of a representation, with the link-quotiented rep they were computed from."""

    system: RootSystem
    weights: WeightMultiset
    rep: SymplecticRep


def _shift(weights: WeightMultiset, coordinate: int) -> WeightMultiset:
    out: dict[tuple[int, ...], int] = {}
    for w, m in weights.items():
        shifted = list(w)
        shifted[coordinate] += 1
        out[tuple(shifted)] = m
    return WeightMultiset(out)


def component_weights(shape: AlgebraShape, comp: Component) -> WeightMultiset:
    """Φ of one component; type 2 adds the dedicated character +1 on U and −1 on U*."""
    phi = summand_weights(shape, comp.summand)
    if comp.kind is ComponentKind.TYPE1:
        return phi
    if comp.torus_index is not None:
        phi = _shift(phi, shape.semisimple_rank + comp.torus_index)
    return phi + dual_weights(phi)


def realize(rep: SymplecticRep) -> Realization:
    """Return (Δ, Φ) of ``rep`` after applying its pending links."""
    glued = glue_links(rep) if rep.links else rep
    shape = glued.shape
    phi = WeightMultiset()
    for comp in glued.components:
        phi = phi + component_weights(shape, comp)
    system = build_root_system(shape)
    logger.debug("realized shape=%s roots=%d weights=%d", shape.label(), len(system), phi.total)
    return Realization(system, phi, glued)


def module_summands(rep: SymplecticRep) -> tuple[AlgebraShape, tuple[IrreducibleSummand, ...]]:
    """Return the underlying g′-module: type 1 gives U, type 2 gives U and U*.

    Torus characters are dropped; the shape returned is the semisimple part of g.
    """
    glued = glue_links(rep) if rep.links else rep
    semisimple = AlgebraShape(glued.shape.factors, 0)
    out: list[IrreducibleSummand] = []
    for comp in glued.components:
        base = IrreducibleSummand(comp.summand.highest_weights, (), comp.summand.tag)
        out.append(base)
        if comp.kind is ComponentKind.TYPE2:
            out.append(dual_summand(semisimple, base))
    return semisimple, tuple(sorted(out))


def assemble_saturated(shape: AlgebraShape, summands: Iterable[IrreducibleSummand]) -> SymplecticRep:
    """Build the unique saturated representation whose g′-module is ``summands``.

    Symplectic summands of odd multiplicity give one type 1 component; everything else is
    paired off into T(U) components, each with a fresh torus coordinate.

    Raises:
        RepError: ``shape`` has a torus or a summand has a torus character.
        RealizabilityError: an orthogonal summand has odd multiplicity, or a summand and its
            dual occur with different multiplicities.
    """
    if shape.torus_dim:
        raise RepError(f"assemble_saturated expects a semisimple shape, got {shape.label()}")
    counts: Counter[IrreducibleSummand] = Counter()
    for s in summands:
        s.check(shape)
        if any(s.torus_character):
            raise RepError(f"summand {s.highest_weights} carries a torus character")
        counts[IrreducibleSummand(s.highest_weights, (), s.tag)] += 1

    type1: list[IrreducibleSummand] = []
    type2: list[IrreducibleSummand] = []
    done: set[IrreducibleSummand] = set()
    for s in sorted(counts):
        if s in done:
            continue
        k = counts[s]
        kind = duality_class(shape, s)
        if kind is DualityClass.SYMPLECTIC:
            if k % 2:
                type1.append(s)
            type2.extend([s] * (k // 2))
        elif kind is DualityClass.ORTHOGONAL:
            if k % 2:
                raise RealizabilityError(
                    f"orthogonal summand {s.highest_weights} has odd multiplicity {k}; "
                    "not symplectically realizable"
                )
            type2.extend([s] * (k // 2))
        else:
            dual = dual_summand(shape, s)
            if counts.get(dual, 0) != k:
                raise RealizabilityError(
                    f"summand {s.highest_weights} occurs {k} times but its dual "
                    f"{dual.highest_weights} occurs {counts.get(dual, 0)} times; "
                    "not symplectically realizable"
                )
            done.add(dual)
            type2.extend([min(s, dual)] * k)
        done.add(s)

    n = len(type2)
    out_shape = AlgebraShape(shape.factors, n)
    comps = [Component(ComponentKind.TYPE1, s.with_character((0,) * n)) for s in type1]
    comps.extend(
        Component(ComponentKind.TYPE2, s.with_character((0,) * n), j) for j, s in enumerate(type2)
    )
    return SymplecticRep(out_shape, tuple(comps))
