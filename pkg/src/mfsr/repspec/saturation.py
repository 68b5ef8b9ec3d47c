"""Saturation check: type 1 components distinct, one dedicated torus coordinate per type 2."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from mfsr.repspec.links import glue_links
from mfsr.repspec.rep import ComponentKind, SymplecticRep, canonical_component
from mfsr.repspec.summands import DualityClass, duality_class


@dataclass(frozen=True)
class SaturationReport:
    """Verdict plus the violated clauses; remarks are observations that do not break saturation."""

    saturated: bool
    violations: tuple[str, ...] = ()
    remarks: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.saturated


def check_saturated(rep: SymplecticRep) -> SaturationReport:
    """Decide whether ρ(g) is its own normalizer in sp(V), combinatorially.

    Violations: a repeated type 1 component, a type 1 summand that is not symplectic,
    a type 2 component without a dedicated torus coordinate, a torus coordinate that
    scales no type 2 component, or a torus character on a summand. Repeated type 2
    components and T(U) with U symplectic are saturated and only remarked upon.
    """
    glued = glue_links(rep) if rep.links else rep
    shape = glued.shape
    violations: list[str] = []
    remarks: list[str] = []

    type1 = Counter(c.summand for c in glued.type1)
    for summand, k in sorted(type1.items()):
        if k > 1:
            violations.append(
                f"type 1 component {summand.highest_weights} occurs {k} times "
                "(every type 1 component must have multiplicity one)"
            )
    for comp in glued.type1:
        if any(comp.summand.torus_character):
            continue
        if duality_class(shape, comp.summand) is not DualityClass.SYMPLECTIC:
            violations.append(
                f"type 1 component {comp.summand.highest_weights} is not symplectic"
            )

    type2 = glued.type2
    if any(any(c.summand.torus_character) for c in glued.components):
        violations.append("a summand carries a torus character (torus must act by dedicated scalings)")
    indices = [c.torus_index for c in type2]
    if any(i is None for i in indices):
        violations.append("a type 2 component has no dedicated torus coordinate")
    dedicated = [i for i in indices if i is not None]
    if len(set(dedicated)) != len(dedicated):
        violations.append("two type 2 components share a torus coordinate")
    if shape.torus_dim != len(type2):
        violations.append(
            f"torus dimension {shape.torus_dim} differs from the number of type 2 "
            f"components {len(type2)}"
        )
    elif set(dedicated) != set(range(shape.torus_dim)):
        violations.append("some torus coordinate scales no type 2 component")

    canon = Counter(canonical_component(shape, c).summand for c in type2)
    for summand, k in sorted(canon.items()):
        if k > 1:
            remarks.append(f"T{summand.highest_weights} occurs {k} times")
    for comp in type2:
        if any(comp.summand.torus_character):
            continue
        if duality_class(shape, comp.summand) is DualityClass.SYMPLECTIC:
            remarks.append(f"T{comp.summand.highest_weights} pairs a symplectic module with its dual")
    return SaturationReport(not violations, tuple(violations), tuple(dict.fromkeys(remarks)))
