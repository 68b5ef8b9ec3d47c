"""Irreducible summands: highest weights per factor, torus character, duality class."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum

from mfsr.lattice import (
    AlgebraShape,
    ShapeError,
    Weight,
    WeightMultiset,
    dual_highest_weight,
    factor_data,
    irreducible_weights,
    weyl_dimension,
)
from mfsr.repspec.errors import RepError


class DualityClass(StrEnum):
    SYMPLECTIC = "symplectic"
    ORTHOGONAL = "orthogonal"
    NOT_SELF_DUAL = "notSelfDual"


@dataclass(frozen=True, order=True)
class IrreducibleSummand:
    """One irreducible module: a dominant weight per simple factor plus a torus character.

    ``tag`` records the surface constructor it came from (``sl``, ``spin+``, ``ext3`` ...)
    and never takes part in equality.
    """

    highest_weights: tuple[Weight, ...]
    torus_character: tuple[int, ...] = ()
    tag: str = field(default="hw", compare=False)

    def weight(self, shape: AlgebraShape) -> Weight:
        """Return the highest weight in the global coordinate layout of ``shape``."""
        self.check(shape)
        flat: list[int] = []
        for block in self.highest_weights:
            flat.extend(block)
        flat.extend(self.torus_character)
        return tuple(flat)

    def check(self, shape: AlgebraShape) -> None:
        if len(self.highest_weights) != len(shape.factors):
            raise RepError(
                f"summand has {len(self.highest_weights)} factor weights, "
                f"shape {shape.label()} has {len(shape.factors)} factors"
            )
        for factor, block in zip(shape.factors, self.highest_weights, strict=True):
            if len(block) != factor.rank:
                raise ShapeError(f"{factor.label()} needs {factor.rank} coordinates, got {block}")
        if len(self.torus_character) != shape.torus_dim:
            raise RepError(
                f"torus character {self.torus_character} does not match t{shape.torus_dim}"
            )

    def acts_on(self, factor_index: int) -> bool:
        """Return whether factor ``factor_index`` acts nontrivially."""
        return any(self.highest_weights[factor_index])

    def with_character(self, character: tuple[int, ...]) -> IrreducibleSummand:
        return IrreducibleSummand(self.highest_weights, tuple(character), self.tag)

    def sort_key(self) -> tuple[int, ...]:
        """Concatenated highest-weight vector; orders T(U) against T(U*)."""
        return tuple(c for block in self.highest_weights for c in block) + self.torus_character


def summand_weights(shape: AlgebraShape, summand: IrreducibleSummand) -> WeightMultiset:
    """Return Φ(U) over ``shape``."""
    return irreducible_weights(shape, summand.weight(shape))


def summand_dimension(shape: AlgebraShape, summand: IrreducibleSummand) -> int:
    return weyl_dimension(shape, summand.weight(shape))


def dual_summand(shape: AlgebraShape, summand: IrreducibleSummand) -> IrreducibleSummand:
    """Return U*: −w₀λ on every factor and the negated torus character."""
    summand.check(shape)
    blocks = tuple(
        dual_highest_weight(factor, block)
        for factor, block in zip(shape.factors, summand.highest_weights, strict=True)
    )
    return IrreducibleSummand(blocks, tuple(-c for c in summand.torus_character), summand.tag)


def duality_class(shape: AlgebraShape, summand: IrreducibleSummand) -> DualityClass:
    """Classify U as symplectic, orthogonal or not self-dual.

    A self-dual U is symplectic exactly when ⟨λ, 2ρ∨⟩ summed over the factors is odd.
    """
    summand.check(shape)
    if any(summand.torus_character):
        return DualityClass.NOT_SELF_DUAL
    parity = 0
    for factor, block in zip(shape.factors, summand.highest_weights, strict=True):
        if dual_highest_weight(factor, block) != block:
            return DualityClass.NOT_SELF_DUAL
        two_rho = factor_data(factor).two_rho_check
        parity += sum(c * w for c, w in zip(two_rho, block, strict=True))
    return DualityClass.SYMPLECTIC if parity % 2 else DualityClass.ORTHOGONAL
