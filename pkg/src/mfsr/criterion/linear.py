"""Exact rank tests over ℚ (sympy), with an integer kernel vector as certificate."""

from __future__ import annotations

import math
from collections.abc import Sequence
from fractions import Fraction

from sympy import Matrix

from mfsr.lattice import Weight


def _matrix(vectors: Sequence[Weight]) -> Matrix:
    return Matrix([list(v) for v in vectors])


def rank_of(vectors: Sequence[Weight]) -> int:
    """Return dim_ℚ span(vectors)."""
    if not vectors or not vectors[0]:
        return 0
    return int(_matrix(vectors).rank())


def independent(vectors: Sequence[Weight]) -> bool:
    """Return whether the list (with repetitions) is linearly independent over ℚ."""
    return rank_of(vectors) == len(vectors)


def dependency_witness(vectors: Sequence[Weight]) -> tuple[int, ...] | None:
    """Return primitive integers c ≠ 0 with Σ cᵢ vᵢ = 0, or None if independent.

    The first nonzero coefficient is positive.
    """
    if not vectors or independent(vectors):
        return None
    if not vectors[0]:
        return (1,) + (0,) * (len(vectors) - 1)
    kernel = _matrix(vectors).T.nullspace()
    vec = [Fraction(int(x.p), int(x.q)) for x in kernel[0]]
    scale = math.lcm(*(f.denominator for f in vec))
    ints = [int(f * scale) for f in vec]
    g = math.gcd(*ints)
    ints = [c // g for c in ints]
    if next(c for c in ints if c) < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def extends_independently(phi_plus: Sequence[Weight], extra: Sequence[Weight]) -> bool:
    """Return whether Φ₊ᵗ ∪ extra is linearly independent."""
    return independent(list(phi_plus) + list(extra))


def combine(witness: Sequence[int], vectors: Sequence[Weight]) -> Weight:
    """Return Σ cᵢ vᵢ (the zero vector for a valid witness)."""
    width = len(vectors[0]) if vectors else 0
    return tuple(sum(c * v[i] for c, v in zip(witness, vectors, strict=True)) for i in range(width))
