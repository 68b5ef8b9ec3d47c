"""Symplectic representations as ordered lists of type 1 / type 2 components."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import StrEnum

from mfsr.lattice import AlgebraShape, SimpleFactor
from mfsr.repspec.errors import LinkError, RepError
from mfsr.repspec.summands import IrreducibleSummand, dual_summand, summand_dimension

_A1 = SimpleFactor("A", 1)

LinkPair = tuple[int, int]


class ComponentKind(StrEnum):
    TYPE1 = "type1"
    TYPE2 = "type2"


@dataclass(frozen=True, order=True)
class Component:
    """A type 1 summand U, or a type 2 summand U ⊕ U* scaled by torus coordinate ``torus_index``."""

    kind: ComponentKind
    summand: IrreducibleSummand
    torus_index: int | None = None

    def dimension(self, shape: AlgebraShape) -> int:
        d = summand_dimension(shape, self.summand)
        return 2 * d if self.kind is ComponentKind.TYPE2 else d

    def label(self, shape: AlgebraShape) -> str:
        """Short human form such as ``T[(1,0)|(0,1)]@t0``."""
        body = "|".join(
            ",".join(str(c) for c in block) or "-" for block in self.summand.highest_weights
        )
        if self.summand.torus_character:
            body += ";" + ",".join(str(c) for c in self.summand.torus_character)
        if self.kind is ComponentKind.TYPE1:
            return f"[{body}]"
        suffix = "" if self.torus_index is None else f"@t{self.torus_index}"
        return f"T[{body}]{suffix}"


def normalize_links(links: Iterable[Iterable[int]]) -> frozenset[LinkPair]:
    out: set[LinkPair] = set()
    for pair in links:
        items = tuple(pair)
        if len(items) != 2:
            raise LinkError(f"a link joins exactly two factors, got {items}")
        u, v = items
        if u == v:
            raise LinkError(f"cannot link factor {u} with itself")
        out.add((min(u, v), max(u, v)))
    return frozenset(out)


def check_link_pairs(shape: AlgebraShape, pairs: frozenset[LinkPair]) -> None:
    """Reject non-A1 factors, out-of-range indices and overlapping pairs.

    Raises:
        LinkError: the first rule violated.
    """
    used: set[int] = set()
    for u, v in sorted(pairs):
        for index in (u, v):
            if not 0 <= index < len(shape.factors):
                raise LinkError(f"link factor {index} is out of range for {shape.label()}")
            if shape.factors[index] != _A1:
                raise LinkError(
                    f"only sl(2) factors can be linked; factor {index} is {shape.factors[index].label()}"
                )
            if index in used:
                raise LinkError(f"factor {index} appears in more than one link pair")
            used.add(index)


@dataclass(frozen=True)
class SymplecticRep:
    """(g, V): the algebra shape, its components and pending sl₂ link pairs."""

    shape: AlgebraShape
    components: tuple[Component, ...] = ()
    links: frozenset[LinkPair] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "links", normalize_links(self.links))
        for comp in self.components:
            comp.summand.check(self.shape)
            if comp.kind is ComponentKind.TYPE1 and comp.torus_index is not None:
                raise RepError("a type 1 component has no dedicated torus coordinate")
            if comp.torus_index is not None and not 0 <= comp.torus_index < self.shape.torus_dim:
                raise RepError(
                    f"torus index {comp.torus_index} is out of range for t{self.shape.torus_dim}"
                )
        check_link_pairs(self.shape, self.links)
        for u, v in self.links:
            for index in (u, v):
                if not any(c.summand.acts_on(index) for c in self.components):
                    raise LinkError(f"linked factor {index} acts trivially on every component")

    def __len__(self) -> int:
        return len(self.components)

    @property
    def type1(self) -> tuple[Component, ...]:
        return tuple(c for c in self.components if c.kind is ComponentKind.TYPE1)

    @property
    def type2(self) -> tuple[Component, ...]:
        return tuple(c for c in self.components if c.kind is ComponentKind.TYPE2)

    def components_on(self, factor_index: int) -> tuple[int, ...]:
        """Return the positions of the components factor ``factor_index`` acts on."""
        return tuple(i for i, c in enumerate(self.components) if c.summand.acts_on(factor_index))


def dim(rep: SymplecticRep) -> int:
    """Return dim V; a type 2 component counts 2·dim U."""
    return sum(c.dimension(rep.shape) for c in rep.components)


def algebra_rank(rep: SymplecticRep) -> int:
    """Return the rank of g after link quotients."""
    return rep.shape.total_rank - len(rep.links)


def algebra_dimension(rep: SymplecticRep) -> int:
    """Return dim g after link quotients (each link removes one sl₂)."""
    return rep.shape.dimension - 3 * len(rep.links)


def trivial_factors(rep: SymplecticRep) -> tuple[int, ...]:
    """Return the simple factors acting trivially on every component."""
    return tuple(
        i for i in range(len(rep.shape.factors)) if not rep.components_on(i)
    )


def canonical_component(shape: AlgebraShape, comp: Component) -> Component:
    """Report T(U*) as T(U) when U has the lexicographically smaller highest weight."""
    if comp.kind is ComponentKind.TYPE1:
        return comp
    dual = dual_summand(shape, comp.summand)
    if dual.sort_key() < comp.summand.sort_key():
        return Component(ComponentKind.TYPE2, dual, comp.torus_index)
    return comp


def _component_order(comp: Component) -> tuple[int, tuple[int, ...], int]:
    kind = 0 if comp.kind is ComponentKind.TYPE1 else 1
    index = -1 if comp.torus_index is None else comp.torus_index
    return (kind, comp.summand.sort_key(), index)


def decompose_components(rep: SymplecticRep) -> list[Component]:
    """Return the components in canonical order: type 1 first, then type 2, each by highest weight."""
    canon = [canonical_component(rep.shape, c) for c in rep.components]
    return sorted(canon, key=_component_order)


def canonical(rep: SymplecticRep) -> SymplecticRep:
    return SymplecticRep(rep.shape, tuple(decompose_components(rep)), rep.links)


def _pad(summand: IrreducibleSummand, before: AlgebraShape, after: AlgebraShape, *, first: bool) -> IrreducibleSummand:
    """Extend a summand of one side of a product by zero weights on the other side."""
    zeros_before = tuple((0,) * f.rank for f in before.factors)
    zeros_after = tuple((0,) * f.rank for f in after.factors)
    if first:
        blocks = summand.highest_weights + zeros_after
        char = summand.torus_character + (0,) * after.torus_dim
    else:
        blocks = zeros_before + summand.highest_weights
        char = (0,) * before.torus_dim + summand.torus_character
    return IrreducibleSummand(blocks, char, summand.tag)


def product(first: SymplecticRep, second: SymplecticRep) -> SymplecticRep:
    """Return (g₁ ⊕ g₂, V₁ ⊕ V₂) on the concatenated shape."""
    a, b = first.shape, second.shape
    shape = AlgebraShape(a.factors + b.factors, a.torus_dim + b.torus_dim)
    comps: list[Component] = [
        Component(c.kind, _pad(c.summand, a, b, first=True), c.torus_index)
        for c in first.components
    ]
    shift_f, shift_t = len(a.factors), a.torus_dim
    for c in second.components:
        index = None if c.torus_index is None else c.torus_index + shift_t
        comps.append(Component(c.kind, _pad(c.summand, a, b, first=False), index))
    links = set(first.links) | {(u + shift_f, v + shift_f) for u, v in second.links}
    return SymplecticRep(shape, tuple(comps), frozenset(links))
