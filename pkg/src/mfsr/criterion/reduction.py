"""The extremal-weight reduction: classify weights, remove χ−P and its negative, repeat."""

from __future__ import annotations

import logging
import random
from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from enum import StrEnum

from mfsr.lattice import Root, RootSystem, Weight, WeightMultiset

logger = logging.getLogger(__name__)


class ReductionError(RuntimeError):
    """An internal invariant of the reduction failed; this points at a realization bug."""


class WeightClass(StrEnum):
    TOROIDAL = "toroidal"
    SINGULAR = "singular"
    EXTREMAL = "extremal"
    ORDINARY = "ordinary"


@dataclass(frozen=True)
class StepRecord:
    """One replacement step: the chosen χ, P = {α : ⟨χ|α∨⟩ > 0} and Q = χ − P ∩ Φ."""

    chosen: Weight
    multiplicity: int
    positive: tuple[Weight, ...]
    removed: tuple[Weight, ...]
    remaining_roots: int
    remaining_weights: int


@dataclass(frozen=True)
class ReductionResult:
    """Δ₀, the toroidal and singular parts of Φ₀, the chosen half Φ₊ᵗ and the trace."""

    system: RootSystem = field(repr=False, compare=False)
    delta0: tuple[Weight, ...]
    phi0_toroidal: WeightMultiset
    phi0_singular: WeightMultiset
    phi_plus: tuple[Weight, ...]
    trace: tuple[StepRecord, ...]
    initial_roots: int = 0
    initial_weights: int = 0

    @property
    def delta0_roots(self) -> tuple[Root, ...]:
        keep = set(self.delta0)
        return tuple(r for r in self.system.roots if r.coords in keep)


def _add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def _sub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def _neg(a: Weight) -> Weight:
    return tuple(-x for x in a)


def classify_weight(
    chi: Weight, mult: int, delta: Iterable[Root], phi: Mapping[Weight, int]
) -> WeightClass:
    """Tag χ as toroidal, singular, extremal or ordinary (in that priority).

    Raises:
        ReductionError: χ is not in Φ.
    """
    if not phi.get(chi):
        raise ReductionError(f"weight {chi} is not in the current weight set")
    roots = tuple(delta)
    pairings = [(r, r.pair(chi)) for r in roots]
    if all(p == 0 for _, p in pairings):
        return WeightClass.TOROIDAL
    for r, p in pairings:
        if p > 0 and phi.get(_add(chi, r.coords)):
            return WeightClass.ORDINARY
    double = tuple(2 * c for c in chi)
    if mult == 1 and any(r.coords == double for r in roots):
        return WeightClass.SINGULAR
    return WeightClass.EXTREMAL


def reduction_step(
    delta: Iterable[Root], phi: Mapping[Weight, int], chi: Weight
) -> tuple[tuple[Root, ...], Counter[Weight], StepRecord]:
    """Apply Δ ← Δ∖(P∪−P), Φ ← Φ∖(Q∪−Q) for an admissible χ.

    Raises:
        ReductionError: χ is toroidal, singular or not extremal, or the step removes nothing.
    """
    roots = tuple(delta)
    counts = Counter({w: m for w, m in phi.items() if m})
    mult = counts.get(chi, 0)
    tag = classify_weight(chi, mult, roots, counts)
    if tag is not WeightClass.EXTREMAL:
        raise ReductionError(f"weight {chi} is {tag}, not an admissible extremal weight")

    positive = tuple(r for r in roots if r.pair(chi) > 0)
    removed = tuple(
        sorted({q for r in positive if counts.get(q := _sub(chi, r.coords))})
    )
    if not removed:
        raise ReductionError(f"step at {chi} removes no weights")
    drop = Counter(removed) + Counter(_neg(q) for q in removed)
    counts.subtract(drop)
    next_phi = +counts
    gone = {r.coords for r in positive} | {_neg(r.coords) for r in positive}
    next_delta = tuple(r for r in roots if r.coords not in gone)
    record = StepRecord(
        chosen=chi,
        multiplicity=mult,
        positive=tuple(r.coords for r in positive),
        removed=removed,
        remaining_roots=len(next_delta),
        remaining_weights=sum(next_phi.values()),
    )
    return next_delta, next_phi, record


def admissible_weights(
    delta: tuple[Root, ...], phi: Mapping[Weight, int]
) -> list[Weight]:
    """Return the extremal weights that are neither toroidal nor singular."""
    return [
        w
        for w, m in phi.items()
        if m and classify_weight(w, m, delta, phi) is WeightClass.EXTREMAL
    ]


def positive_half(toroidal: Mapping[Weight, int]) -> tuple[Weight, ...]:
    """Pick Φ₊ᵗ: weights whose first nonzero coordinate is positive, half the zero weight.

    Raises:
        ReductionError: the toroidal part is not symmetric or has the zero weight an odd
            number of times.
    """
    out: list[Weight] = []
    for w, m in sorted(toroidal.items()):
        if not m:
            continue
        if not any(w):
            if m % 2:
                raise ReductionError(f"zero weight has odd multiplicity {m} in Φ₀ᵗ")
            out.extend([w] * (m // 2))
            continue
        first = next(c for c in w if c)
        if first > 0:
            if toroidal.get(_neg(w), 0) != m:
                raise ReductionError(f"toroidal weights are not symmetric at {w}")
            out.extend([w] * m)
    return tuple(sorted(out, reverse=True))


def run_reduction(
    system: RootSystem,
    phi: WeightMultiset,
    *,
    rng: random.Random | None = None,
) -> ReductionResult:
    """Iterate the replacement step until no admissible weight remains.

    The default policy takes the admissible χ of greatest height ⟨χ, 2ρ∨⟩, ties broken
    by reverse lexicographic order; with ``rng`` it picks uniformly at random.

    Raises:
        ReductionError: Φ is not symmetric, the step cap is exceeded, or a weight left at
            the end is neither toroidal nor singular.
    """
    if not phi.is_symmetric():
        raise ReductionError("the weight multiset is not symmetric (Φ ≠ −Φ)")
    delta: tuple[Root, ...] = tuple(system.roots)
    counts: Counter[Weight] = phi.counter()
    cap = phi.total
    trace: list[StepRecord] = []
    while True:
        candidates = admissible_weights(delta, counts)
        if not candidates:
            break
        if len(trace) >= cap:
            raise ReductionError(f"reduction did not terminate within {cap} steps")
        if rng is None:
            chi = max(candidates, key=lambda w: (system.height(w), w))
        else:
            chi = rng.choice(sorted(candidates))
        delta, counts, record = reduction_step(delta, counts, chi)
        trace.append(record)
        logger.debug(
            "step=%d chi=%s P=%d Q=%d roots=%d weights=%d",
            len(trace),
            chi,
            len(record.positive),
            len(record.removed),
            record.remaining_roots,
            record.remaining_weights,
        )

    toroidal: Counter[Weight] = Counter()
    singular: Counter[Weight] = Counter()
    for w, m in sorted(counts.items()):
        tag = classify_weight(w, m, delta, counts)
        if tag is WeightClass.TOROIDAL:
            toroidal[w] = m
        elif tag is WeightClass.SINGULAR:
            singular[w] = m
        else:
            raise ReductionError(f"weight {w} is {tag} after the reduction stopped")
    return ReductionResult(
        system=system,
        delta0=tuple(r.coords for r in delta),
        phi0_toroidal=WeightMultiset(toroidal),
        phi0_singular=WeightMultiset(singular),
        phi_plus=positive_half(toroidal),
        trace=tuple(trace),
        initial_roots=len(system),
        initial_weights=phi.total,
    )
