"""Weight multisets: Freudenthal multiplicities, Weyl dimensions, tensor and power products."""

from __future__ import annotations

import itertools
import logging
from collections import Counter, deque
from collections.abc import Iterable, Iterator, Mapping, Sequence
from fractions import Fraction
from functools import cache
from typing import Literal

from mfsr.lattice.cartan import AlgebraShape, ShapeError, SimpleFactor, Weight, factor_data

logger = logging.getLogger(__name__)

PowerKind = Literal["exterior", "symmetric"]


class WeightError(ValueError):
    """Non-dominant or non-integral highest weight, or an out-of-range power."""


class WeightMultiset(Mapping[Weight, int]):
    """Immutable mapping weight -> positive multiplicity (the Φ of the reduction)."""

    __slots__ = ("_counts", "_hash")

    def __init__(self, counts: Mapping[Weight, int] | Iterable[Weight] = ()) -> None:
        source = Counter(counts) if not isinstance(counts, Mapping) else counts
        clean: dict[Weight, int] = {}
        for w, m in source.items():
            if m < 0:
                raise WeightError(f"negative multiplicity {m} for weight {w}")
            if m:
                clean[tuple(w)] = int(m)
        self._counts = dict(sorted(clean.items()))
        self._hash: int | None = None

    def __getitem__(self, weight: Weight) -> int:
        return self._counts[weight]

    def __iter__(self) -> Iterator[Weight]:
        return iter(self._counts)

    def __len__(self) -> int:
        return len(self._counts)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._counts.items()))
        return self._hash

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WeightMultiset):
            return self._counts == other._counts
        if isinstance(other, Mapping):
            return self._counts == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __repr__(self) -> str:
        return f"WeightMultiset({self._counts!r})"

    def __add__(self, other: WeightMultiset) -> WeightMultiset:
        """Disjoint multiset union."""
        merged = Counter(self._counts)
        merged.update(other._counts)
        return WeightMultiset(merged)

    def __sub__(self, other: WeightMultiset) -> WeightMultiset:
        """Multiset difference, clamped at zero."""
        return WeightMultiset(Counter(self._counts) - Counter(other._counts))

    def multiplicity(self, weight: Weight) -> int:
        return self._counts.get(weight, 0)

    @property
    def total(self) -> int:
        """Return Σ multiplicities (the dimension of the module)."""
        return sum(self._counts.values())

    def counter(self) -> Counter[Weight]:
        """Return a mutable copy."""
        return Counter(self._counts)

    def slots(self) -> list[Weight]:
        """Expand into one entry per unit of multiplicity, in sorted order."""
        return [w for w, m in self._counts.items() for _ in range(m)]

    def is_symmetric(self) -> bool:
        """Return whether Φ = −Φ as multisets."""
        return all(self._counts.get(tuple(-c for c in w), 0) == m for w, m in self._counts.items())


def factor_dominant_conjugate(factor: SimpleFactor, weight: Weight) -> Weight:
    """Return the dominant element of the Weyl orbit of a weight of one simple factor."""
    data = factor_data(factor)
    current = tuple(weight)
    while True:
        for i, c in enumerate(current):
            if c < 0:
                current = data.reflect(current, i)
                break
        else:
            return current


def dominant_conjugate(shape: AlgebraShape, weight: Weight) -> Weight:
    """Return the dominant Weyl conjugate of a global weight, factor by factor."""
    shape.check_weight(weight)
    out = list(weight)
    for index, factor in enumerate(shape.factors):
        block = shape.block(index)
        out[block] = factor_dominant_conjugate(factor, tuple(weight[block]))
    return tuple(out)


def reflect(shape: AlgebraShape, weight: Weight, factor_index: int, i: int) -> Weight:
    """Apply the simple reflection s_i of factor ``factor_index`` to a global weight."""
    shape.check_weight(weight)
    block = shape.block(factor_index)
    data = factor_data(shape.factors[factor_index])
    local = data.reflect(tuple(weight[block]), i)
    out = list(weight)
    out[block] = local
    return tuple(out)


def weyl_orbit(factor: SimpleFactor, dominant: Weight) -> list[Weight]:
    """Return the Weyl orbit of a dominant weight (generated by reflections in positive coordinates)."""
    data = factor_data(factor)
    seen = {dominant}
    order = [dominant]
    queue = deque([dominant])
    while queue:
        w = queue.popleft()
        for i, c in enumerate(w):
            if c > 0:
                image = data.reflect(w, i)
                if image not in seen:
                    seen.add(image)
                    order.append(image)
                    queue.append(image)
    return order


def _check_dominant(factor: SimpleFactor, weight: Weight) -> None:
    if len(weight) != factor.rank:
        raise ShapeError(f"{factor.label()} needs {factor.rank} coordinates, got {len(weight)}")
    for c in weight:
        if isinstance(c, Fraction) and c.denominator != 1:
            raise WeightError(f"non-integral highest weight {weight} for {factor.label()}")
        if c < 0:
            raise WeightError(f"highest weight {weight} for {factor.label()} is not dominant")


def factor_weyl_dimension(factor: SimpleFactor, weight: Weight) -> int:
    """Weyl dimension formula Π⟨λ+ρ, α∨⟩/⟨ρ, α∨⟩ over positive roots of one factor."""
    _check_dominant(factor, weight)
    data = factor_data(factor)
    num = Fraction(1)
    for r in data.positive_roots:
        rho = sum(r.coroot)
        num *= Fraction(rho + sum(c * w for c, w in zip(r.coroot, weight, strict=True)), rho)
    if num.denominator != 1:
        raise WeightError(f"Weyl dimension of {weight} for {factor.label()} is not integral: {num}")
    return int(num)


@cache
def dominant_multiplicities(factor: SimpleFactor, weight: Weight) -> dict[Weight, int]:
    """Freudenthal recursion over the dominant weights ≤ λ of V(λ) for one simple factor."""
    _check_dominant(factor, weight)
    data = factor_data(factor)
    rank = factor.rank
    positive = [r.weight for r in data.positive_roots]
    heights = [r.height for r in data.positive_roots]

    level: dict[Weight, int] = {weight: 0}
    queue = deque([weight])
    while queue:
        mu = queue.popleft()
        for alpha, h in zip(positive, heights, strict=True):
            nu = tuple(m - a for m, a in zip(mu, alpha, strict=True))
            if min(nu) < 0 or nu in level:
                continue
            level[nu] = level[mu] + h
            queue.append(nu)

    rho = (1,) * rank
    lam_rho = tuple(w + 1 for w in weight)
    norm_lam = data.inner(lam_rho, lam_rho)
    mult: dict[Weight, int] = {weight: 1}
    for mu in sorted(level, key=lambda w: (level[w], w)):
        if mu == weight:
            continue
        total = Fraction(0)
        for alpha in positive:
            k = 1
            while True:
                nu = tuple(m + k * a for m, a in zip(mu, alpha, strict=True))
                dom = factor_dominant_conjugate(factor, nu)
                m_nu = mult.get(dom) if dom in level else None
                if m_nu is None:
                    break
                total += m_nu * data.inner(nu, alpha)
                k += 1
        mu_rho = tuple(m + r for m, r in zip(mu, rho, strict=True))
        denom = norm_lam - data.inner(mu_rho, mu_rho)
        value = 2 * total / denom
        if value.denominator != 1:
            raise WeightError(f"Freudenthal produced non-integral multiplicity {value} at {mu}")
        if value:
            mult[mu] = int(value)
    return mult


@cache
def factor_weights(factor: SimpleFactor, weight: Weight) -> WeightMultiset:
    """Return the full weight multiset of the irreducible module V(λ) of one simple factor."""
    counts: dict[Weight, int] = {}
    for dom, m in dominant_multiplicities(factor, tuple(weight)).items():
        for w in weyl_orbit(factor, dom):
            counts[w] = m
    result = WeightMultiset(counts)
    logger.debug(
        "factor=%s hw=%s weights=%d dim=%d", factor.label(), weight, len(result), result.total
    )
    return result


def embed(shape: AlgebraShape, factor_index: int, block_weights: WeightMultiset) -> WeightMultiset:
    """Place a per-factor multiset into the global layout (zeros elsewhere)."""
    block = shape.block(factor_index)
    out: dict[Weight, int] = {}
    for w, m in block_weights.items():
        coords = [0] * shape.total_rank
        coords[block] = w
        out[tuple(coords)] = m
    return WeightMultiset(out)


def _split(shape: AlgebraShape, weight: Sequence[int]) -> list[Weight]:
    return [tuple(weight[shape.block(i)]) for i in range(len(shape.factors))]


def irreducible_weights(shape: AlgebraShape, weight: Weight) -> WeightMultiset:
    """Return Φ(V(λ)) over ``shape``; torus coordinates of λ pass through to every weight.

    Raises:
        WeightError: λ is not dominant integral on some factor.
    """
    shape.check_weight(weight)
    torus = tuple(weight[shape.torus_block()])
    result = WeightMultiset({shape.semisimple_rank * (0,) + torus: 1})
    for index, (factor, block) in enumerate(zip(shape.factors, _split(shape, weight), strict=True)):
        result = tensor_weights(result, embed(shape, index, factor_weights(factor, block)))
    return result


def weyl_dimension(shape: AlgebraShape, weight: Weight) -> int:
    """Return dim V(λ) by the Weyl dimension formula (exact arithmetic)."""
    shape.check_weight(weight)
    dim = 1
    for factor, block in zip(shape.factors, _split(shape, weight), strict=True):
        dim *= factor_weyl_dimension(factor, block)
    return dim


def tensor_weights(a: WeightMultiset, b: WeightMultiset) -> WeightMultiset:
    """Minkowski product: mult(μ) = Σ_ν mult_a(ν)·mult_b(μ−ν).

    Raises:
        ShapeError: the two multisets live in different coordinate layouts.
    """
    widths = {len(w) for w in a} | {len(w) for w in b}
    if len(widths) > 1:
        raise ShapeError(f"tensor_weights: mismatched weight lengths {sorted(widths)}")
    out: Counter[Weight] = Counter()
    for u, mu in a.items():
        for v, mv in b.items():
            out[tuple(x + y for x, y in zip(u, v, strict=True))] += mu * mv
    return WeightMultiset(out)


def power_weights(a: WeightMultiset, kind: PowerKind, k: int) -> WeightMultiset:
    """Return the weights of Λ^k or S^k of the module with weights ``a``.

    Raises:
        WeightError: ``k`` is not positive, or exceeds total(a) for the exterior power.
    """
    if k < 1:
        raise WeightError(f"power must be positive, got {k}")
    slots = a.slots()
    if kind == "exterior":
        if k > len(slots):
            raise WeightError(f"Λ^{k} of a {len(slots)}-dimensional module is zero")
        combos: Iterable[tuple[Weight, ...]] = itertools.combinations(slots, k)
    elif kind == "symmetric":
        combos = itertools.combinations_with_replacement(slots, k)
    else:
        raise WeightError(f"unknown power kind {kind!r}")
    width = len(slots[0]) if slots else 0
    out: Counter[Weight] = Counter()
    for combo in combos:
        out[tuple(sum(w[i] for w in combo) for i in range(width))] += 1
    return WeightMultiset(out)


def dual_weights(a: WeightMultiset) -> WeightMultiset:
    """Negate every weight (the weights of the dual module)."""
    return WeightMultiset({tuple(-c for c in w): m for w, m in a.items()})


def dual_highest_weight(factor: SimpleFactor, weight: Weight) -> Weight:
    """Return −w₀λ, the highest weight of the dual module."""
    return factor_dominant_conjugate(factor, tuple(-c for c in weight))
