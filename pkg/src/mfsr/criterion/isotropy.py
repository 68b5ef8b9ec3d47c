"""Generic isotropy algebra: root subsystems of Δ₀, odd symplectic parts, leftover torus."""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from mfsr.criterion.linear import rank_of
from mfsr.criterion.reduction import ReductionError, ReductionResult
from mfsr.lattice import AlgebraShape, Root, ShapeError, SimpleFactor, Weight, factor_data

_NORMAL_FORMS = {
    SimpleFactor("C", 1): SimpleFactor("A", 1),
    SimpleFactor("B", 2): SimpleFactor("C", 2),
    SimpleFactor("D", 3): SimpleFactor("A", 3),
}

_CLASSICAL = re.compile(r"(sl|gl|so|sp|t)\(?\s*(-?\d+)\s*\)?(?:\^(\d+))?")
_DYNKIN = re.compile(r"([ABCD]\d+|E6|E7|G2)(?:\^(\d+))?")


class IsotropyFormatError(ValueError):
    """A table isotropy string that does not parse."""


def normal_factor(factor: SimpleFactor) -> SimpleFactor:
    """Map low-rank coincidences (C1, B2, D3) to one representative (A1, C2, A3)."""
    return _NORMAL_FORMS.get(factor, factor)


@dataclass(frozen=True)
class IsotropyDescription:
    """l = simple parts ⊕ t^n ⊕ sp_{2k₁−1} ⊕ …, compared up to abstract isomorphism."""

    simple_parts: tuple[SimpleFactor, ...] = ()
    torus_dim: int = 0
    odd_parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.torus_dim < 0:
            raise ValueError(f"isotropy torus dimension must be >= 0, got {self.torus_dim}")
        if any(k < 1 for k in self.odd_parts):
            raise ValueError(f"odd symplectic parts must be >= 1, got {self.odd_parts}")
        object.__setattr__(
            self, "simple_parts", tuple(sorted(normal_factor(f) for f in self.simple_parts))
        )
        object.__setattr__(self, "odd_parts", tuple(sorted(self.odd_parts)))

    def __str__(self) -> str:
        parts = [f.label() for f in self.simple_parts]
        parts.extend(f"sp{2 * k - 1}" for k in self.odd_parts)
        if self.torus_dim:
            parts.append(f"t{self.torus_dim}")
        return "+".join(parts) or "0"

    @property
    def dimension(self) -> int:
        """dim l; sp_{2k−1} has dimension 2k² − k."""
        return (
            sum(f.dimension for f in self.simple_parts)
            + self.torus_dim
            + sum(2 * k * k - k for k in self.odd_parts)
        )

    def __add__(self, other: IsotropyDescription) -> IsotropyDescription:
        return IsotropyDescription(
            self.simple_parts + other.simple_parts,
            self.torus_dim + other.torus_dim,
            self.odd_parts + other.odd_parts,
        )


def _so(k: int) -> IsotropyDescription:
    if k < 0:
        raise IsotropyFormatError(f"so({k}) has negative size")
    if k <= 1:
        return IsotropyDescription()
    if k == 2:
        return IsotropyDescription(torus_dim=1)
    if k == 3:
        return IsotropyDescription((SimpleFactor("A", 1),))
    if k == 4:
        return IsotropyDescription((SimpleFactor("A", 1), SimpleFactor("A", 1)))
    if k % 2:
        return IsotropyDescription((SimpleFactor("B", (k - 1) // 2),))
    return IsotropyDescription((SimpleFactor("D", k // 2),))


def _sp(k: int) -> IsotropyDescription:
    if k < -1:
        raise IsotropyFormatError(f"sp({k}) has negative size")
    if k == -1:
        return IsotropyDescription()
    if k % 2:
        return IsotropyDescription(odd_parts=((k + 1) // 2,))
    if k == 0:
        return IsotropyDescription()
    return IsotropyDescription((SimpleFactor("C", k // 2),))


def _classical(kind: str, k: int) -> IsotropyDescription:
    match kind:
        case "sl":
            if k < 0:
                raise IsotropyFormatError(f"sl({k}) has negative size")
            return IsotropyDescription((SimpleFactor("A", k - 1),)) if k >= 2 else IsotropyDescription()
        case "gl":
            if k < 0:
                raise IsotropyFormatError(f"gl({k}) has negative size")
            if k == 0:
                return IsotropyDescription()
            return _classical("sl", k) + IsotropyDescription(torus_dim=1)
        case "so":
            return _so(k)
        case "sp":
            return _sp(k)
        case _:
            if k < 0:
                raise IsotropyFormatError(f"t({k}) has negative size")
            return IsotropyDescription(torus_dim=k)


def parse_isotropy(text: str) -> IsotropyDescription:
    """Parse a table isotropy string such as ``gl(2)+t(1)``, ``sl2^3``, ``sp(3)`` or ``C2+A1``.

    gl₀ = so₁ = sp₀ = sp₋₁ = 0; gl_k is sl_k + t¹; so₂..so₆ map to t¹, A1, A1+A1, C2, A3;
    sp_k with k odd is the odd symplectic part (k+1)/2.

    Raises:
        IsotropyFormatError: an unknown or negative-size part.
    """
    body = text.replace(" ", "")
    if not body:
        raise IsotropyFormatError("empty isotropy string")
    result = IsotropyDescription()
    for part in body.split("+"):
        if part == "0":
            continue
        m = _CLASSICAL.fullmatch(part)
        if m:
            piece = _classical(m.group(1), int(m.group(2)))
            power = int(m.group(3) or 1)
        else:
            d = _DYNKIN.fullmatch(part)
            if not d:
                raise IsotropyFormatError(f"cannot parse isotropy part {part!r} in {text!r}")
            try:
                piece = IsotropyDescription((SimpleFactor.parse(d.group(1)),))
            except ShapeError as e:
                raise IsotropyFormatError(str(e)) from e
            power = int(d.group(2) or 1)
        for _ in range(power):
            result = result + piece
    return result


def _root_length(shape_factor: SimpleFactor, root: Root) -> Fraction:
    local = root.coords[root.offset : root.offset + shape_factor.rank]
    return factor_data(shape_factor).inner(local, local)


def _components(roots: Sequence[Root]) -> list[list[Root]]:
    """Split a closed root subset into irreducible pieces (union-find on non-orthogonality)."""
    parent = list(range(len(roots)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, a in enumerate(roots):
        for j in range(i + 1, len(roots)):
            b = roots[j]
            if a.factor == b.factor and b.pair(a.coords) != 0:
                parent[find(i)] = find(j)
    groups: dict[int, list[Root]] = {}
    for i, r in enumerate(roots):
        groups.setdefault(find(i), []).append(r)
    return sorted(groups.values(), key=lambda g: min(r.coords for r in g))


def classify_root_subsystem(roots: Sequence[Root], factors: Sequence[SimpleFactor]) -> SimpleFactor:
    """Name an irreducible root subsystem from its size, rank and root lengths.

    Raises:
        ReductionError: no simple type matches.
    """
    n = len(roots)
    r = rank_of([x.coords for x in roots])
    lengths = [_root_length(factors[x.factor], x) for x in roots]
    longest = max(lengths)
    long_count = sum(1 for x in lengths if x == longest)
    if long_count == n:
        if n == r * (r + 1):
            return normal_factor(SimpleFactor("A", r))
        if r >= 4 and n == 2 * r * (r - 1):
            return SimpleFactor("D", r)
        if r == 6 and n == 72:
            return SimpleFactor("E6", 6)
        if r == 7 and n == 126:
            return SimpleFactor("E7", 7)
    elif r == 2 and n == 12:
        return SimpleFactor("G2", 2)
    elif n == 2 * r * r:
        if r == 2:
            return SimpleFactor("C", 2)
        if long_count == 2 * r:
            return SimpleFactor("C", r)
        if long_count == 2 * r * (r - 1):
            return SimpleFactor("B", r)
    raise ReductionError(f"root subsystem with {n} roots of rank {r} matches no simple type")


def _singular_classes(weights: Iterable[Weight], delta0: set[Weight]) -> list[list[Weight]]:
    """Group singular weights: χ₁ ~ χ₂ when χ₁ − χ₂ ∈ Δ₀."""
    items = sorted(weights)
    parent = list(range(len(items)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, a in enumerate(items):
        for j in range(i + 1, len(items)):
            diff = tuple(x - y for x, y in zip(a, items[j], strict=True))
            if diff in delta0:
                parent[find(i)] = find(j)
    groups: dict[int, list[Weight]] = {}
    for i, w in enumerate(items):
        groups.setdefault(find(i), []).append(w)
    return sorted(groups.values())


def generic_isotropy(
    result: ReductionResult, shape: AlgebraShape | None = None
) -> IsotropyDescription:
    """Assemble l from Δ₀, the singular classes and the span of Φ₀ᵗ.

    Each singular class of size 2m consumes the C_m piece of Δ₀ containing 2χ and yields
    sp_{2m−1}. The torus part is rank(g) − rank(Δ₀) − dim span(Φ₀ᵗ).

    Raises:
        ReductionError: a singular class of odd size, or one not matched by a C_m piece.
    """
    if shape is None:
        shape = result.system.shape
    elif shape != result.system.shape:
        raise ReductionError(
            f"result was computed over {result.system.shape.label()}, not {shape.label()}"
        )
    roots = result.delta0_roots
    pieces = _components(roots)
    types = [classify_root_subsystem(p, shape.factors) for p in pieces]
    consumed: set[int] = set()
    odd: list[int] = []
    delta0 = set(result.delta0)
    for cls in _singular_classes(result.phi0_singular, delta0):
        for w in cls:
            if result.phi0_singular[w] != 1:
                raise ReductionError(f"singular weight {w} has multiplicity {result.phi0_singular[w]}")
        if len(cls) % 2:
            raise ReductionError(f"singular class {cls} has odd size {len(cls)}")
        m = len(cls) // 2
        double = tuple(2 * c for c in cls[0])
        home = next((i for i, p in enumerate(pieces) if any(r.coords == double for r in p)), None)
        expected = normal_factor(SimpleFactor("C", m))
        if home is None or home in consumed or types[home] != expected:
            raise ReductionError(
                f"singular class of size {len(cls)} does not match a {expected.label()} piece of Δ₀"
            )
        consumed.add(home)
        odd.append(m)
    simple = tuple(t for i, t in enumerate(types) if i not in consumed)
    torus = (
        shape.total_rank
        - rank_of([r.coords for r in roots])
        - rank_of(list(result.phi0_toroidal))
    )
    if torus < 0:
        raise ReductionError(f"negative isotropy torus dimension {torus}")
    return IsotropyDescription(simple, torus, tuple(odd))
