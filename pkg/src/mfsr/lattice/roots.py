"""Root systems of reductive shapes and the coroot pairing."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache

from mfsr.lattice.cartan import AlgebraShape, ShapeError, Weight, factor_data


@dataclass(frozen=True, order=True)
class Root:
    """A root of one simple factor, written in the global weight layout."""

    coords: Weight
    factor: int
    offset: int = field(compare=False)
    coroot: Weight = field(compare=False)
    simple: Weight = field(compare=False)

    def pair(self, weight: Sequence[int | Fraction]) -> int | Fraction:
        """Return ⟨weight | α∨⟩ (integer for lattice weights)."""
        off = self.offset
        return sum(c * weight[off + i] for i, c in enumerate(self.coroot) if c)

    @property
    def positive(self) -> bool:
        return any(a > 0 for a in self.simple)

    @property
    def height(self) -> int:
        return sum(self.simple)

    def negate(self) -> Weight:
        return tuple(-c for c in self.coords)


@dataclass(frozen=True)
class RootSystem:
    """The finite root set Δ of a reductive shape with its coroot data."""

    shape: AlgebraShape
    roots: tuple[Root, ...]
    _by_coords: dict[Weight, Root] = field(repr=False, compare=False, default_factory=dict)
    _two_rho_check: Weight = field(repr=False, compare=False, default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "_by_coords", {r.coords: r for r in self.roots})
        two_rho = [0] * self.shape.total_rank
        for r in self.roots:
            if r.positive:
                for i, c in enumerate(r.coroot):
                    two_rho[r.offset + i] += c
        object.__setattr__(self, "_two_rho_check", tuple(two_rho))

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, coords: object) -> bool:
        return coords in self._by_coords

    def get(self, coords: Weight) -> Root | None:
        return self._by_coords.get(coords)

    @property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if r.positive)

    def factor_roots(self, index: int) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if r.factor == index)

    def height(self, weight: Sequence[int]) -> int:
        """Return ⟨weight, 2ρ∨⟩ for the fixed positive system (the χ-selection height)."""
        return sum(c * w for c, w in zip(self._two_rho_check, weight, strict=True) if c)


@cache
def build_root_system(shape: AlgebraShape) -> RootSystem:
    """Return the full root set Δ of ``shape``, closed under negation, in sorted order."""
    roots: list[Root] = []
    for index, factor in enumerate(shape.factors):
        data = factor_data(factor)
        off = shape.offset(index)
        width = shape.total_rank
        for fr in data.roots:
            coords = [0] * width
            coords[off : off + factor.rank] = fr.weight
            roots.append(
                Root(
                    coords=tuple(coords),
                    factor=index,
                    offset=off,
                    coroot=fr.coroot,
                    simple=fr.simple,
                )
            )
    return RootSystem(shape=shape, roots=tuple(sorted(roots)))


def coroot_pairing(chi: Sequence[int | Fraction], alpha: Root, system: RootSystem) -> Fraction:
    """Return ⟨χ | α∨⟩ = 2(χ, α)/(α, α) under the per-factor invariant form.

    Raises:
        ShapeError: ``chi`` or ``alpha`` does not belong to ``system.shape``.
    """
    system.shape.check_weight(tuple(chi))
    if alpha.coords not in system:
        raise ShapeError(f"root {alpha.coords} is not in the root system of {system.shape.label()}")
    return Fraction(alpha.pair(chi))


def height(system: RootSystem, weight: Sequence[int]) -> int:
    """Return ⟨χ, 2ρ∨⟩; torus coordinates do not contribute."""
    system.shape.check_weight(tuple(weight))
    return system.height(weight)


def simple_roots(system: RootSystem, index: int) -> tuple[Root, ...]:
    """Return the simple roots of factor ``index`` in Bourbaki order."""
    found = [r for r in system.factor_roots(index) if r.positive and r.height == 1]
    return tuple(sorted(found, key=lambda r: r.simple, reverse=True))


def restrict(system: RootSystem, coords: Iterable[Weight]) -> tuple[Root, ...]:
    """Look up roots by coordinates, keeping input order; unknown coordinates raise."""
    out: list[Root] = []
    for c in coords:
        r = system.get(c)
        if r is None:
            raise ShapeError(f"{c} is not a root of {system.shape.label()}")
        out.append(r)
    return tuple(out)
