"""Simple factors, algebra shapes and per-factor Cartan data (Bourbaki numbering)."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from sympy import Matrix

logger = logging.getLogger(__name__)

SERIES = ("A", "B", "C", "D", "E6", "E7", "G2")
_EXCEPTIONAL_RANK = {"E6": 6, "E7": 7, "G2": 2}
_MIN_RANK = {"A": 1, "B": 2, "C": 1, "D": 3}

# Dynkin edges of the simply-laced exceptional types (1-based nodes).
_E_EDGES = {
    "E6": ((1, 3), (3, 4), (4, 5), (5, 6), (2, 4)),
    "E7": ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)),
}

Weight = tuple[int, ...]


class ShapeError(ValueError):
    """Invalid series/rank combination or coordinate layout."""


@dataclass(frozen=True, order=True)
class SimpleFactor:
    """One simple summand of a reductive Lie algebra."""

    series: str
    rank: int

    def __post_init__(self) -> None:
        if self.series not in SERIES:
            raise ShapeError(f"unknown series {self.series!r}; expected one of {', '.join(SERIES)}")
        fixed = _EXCEPTIONAL_RANK.get(self.series)
        if fixed is not None:
            if self.rank != fixed:
                raise ShapeError(f"{self.series} has rank {fixed}, got {self.rank}")
            return
        minimum = _MIN_RANK[self.series]
        if self.rank < minimum:
            raise ShapeError(
                f"{self.series}{self.rank} is not admitted ({self.series} needs rank >= {minimum})"
            )

    def label(self) -> str:
        """Return the Dynkin label, e.g. ``A5`` or ``E6``."""
        if self.series in _EXCEPTIONAL_RANK:
            return self.series
        return f"{self.series}{self.rank}"

    @property
    def root_count(self) -> int:
        """Return |Δ| of this factor."""
        n = self.rank
        match self.series:
            case "A":
                return n * (n + 1)
            case "B" | "C":
                return 2 * n * n
            case "D":
                return 2 * n * (n - 1)
            case "G2":
                return 12
            case "E6":
                return 72
            case _:
                return 126

    @property
    def dimension(self) -> int:
        """Return the dimension of the simple Lie algebra."""
        return self.root_count + self.rank

    @classmethod
    def parse(cls, label: str) -> SimpleFactor:
        """Parse a Dynkin label such as ``C2``, ``D4`` or ``G2``."""
        text = label.strip()
        if text in _EXCEPTIONAL_RANK:
            return cls(text, _EXCEPTIONAL_RANK[text])
        if len(text) >= 2 and text[0] in _MIN_RANK and text[1:].isdigit():
            return cls(text[0], int(text[1:]))
        raise ShapeError(f"not a Dynkin label: {label!r}")


@dataclass(frozen=True)
class AlgebraShape:
    """Ordered simple factors plus a torus t^n; fixes the coordinate layout of weights."""

    factors: tuple[SimpleFactor, ...] = ()
    torus_dim: int = 0

    def __post_init__(self) -> None:
        if self.torus_dim < 0:
            raise ShapeError(f"torus dimension must be >= 0, got {self.torus_dim}")
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def semisimple_rank(self) -> int:
        return sum(f.rank for f in self.factors)

    @property
    def total_rank(self) -> int:
        """Return the length of every weight vector over this shape."""
        return self.semisimple_rank + self.torus_dim

    @property
    def dimension(self) -> int:
        """Return dim g = Σ|Δ_factor| + total rank."""
        return sum(f.root_count for f in self.factors) + self.total_rank

    def offset(self, index: int) -> int:
        """Return the first coordinate of factor ``index``."""
        return sum(f.rank for f in self.factors[:index])

    def block(self, index: int) -> slice:
        start = self.offset(index)
        return slice(start, start + self.factors[index].rank)

    def torus_block(self) -> slice:
        start = self.semisimple_rank
        return slice(start, start + self.torus_dim)

    def zero(self) -> Weight:
        return (0,) * self.total_rank

    def label(self) -> str:
        """Return a compact name such as ``C2+A1+t1`` (``0`` for the zero algebra)."""
        parts = [f.label() for f in self.factors]
        if self.torus_dim:
            parts.append(f"t{self.torus_dim}")
        return "+".join(parts) or "0"

    def check_weight(self, weight: tuple[object, ...]) -> None:
        if len(weight) != self.total_rank:
            raise ShapeError(
                f"weight has {len(weight)} coordinates, shape {self.label()} needs {self.total_rank}"
            )


def symmetric_form(factor: SimpleFactor) -> tuple[tuple[int, ...], ...]:
    """Return the matrix of (α_i, α_j) on simple roots, long roots of squared length 2.

    C_n is scaled so that its long roots 2ε_i have squared length 4; only ratios matter.
    """
    n = factor.rank
    b = [[0] * n for _ in range(n)]
    if factor.series == "G2":
        return ((2, -3), (-3, 6))
    if factor.series in _E_EDGES:
        for i in range(n):
            b[i][i] = 2
        for i, j in _E_EDGES[factor.series]:
            b[i - 1][j - 1] = b[j - 1][i - 1] = -1
        return tuple(tuple(row) for row in b)
    for i in range(n):
        b[i][i] = 2
    for i in range(n - 1):
        b[i][i + 1] = b[i + 1][i] = -1
    match factor.series:
        case "B":
            b[n - 1][n - 1] = 1
        case "C":
            if n == 1:
                b[0][0] = 4
            else:
                b[n - 1][n - 1] = 4
                b[n - 2][n - 1] = b[n - 1][n - 2] = -2
        case "D":
            b[n - 2][n - 1] = b[n - 1][n - 2] = 0
            b[n - 3][n - 1] = b[n - 1][n - 3] = -1
    return tuple(tuple(row) for row in b)


@dataclass(frozen=True)
class FactorRoot:
    """A root of one simple factor: fundamental coordinates, simple-root coordinates, coroot."""

    weight: Weight
    simple: Weight
    coroot: Weight

    @property
    def positive(self) -> bool:
        return any(a > 0 for a in self.simple)

    @property
    def height(self) -> int:
        return sum(self.simple)


@dataclass(frozen=True)
class FactorData:
    """Cartan matrix, invariant form and roots of one simple factor."""

    factor: SimpleFactor
    cartan: tuple[Weight, ...]
    form: tuple[Weight, ...]
    half_lengths: tuple[Fraction, ...]
    gram: tuple[tuple[Fraction, ...], ...]
    roots: tuple[FactorRoot, ...]
    two_rho_check: Weight

    def inner(self, mu: tuple[Fraction | int, ...], nu: tuple[Fraction | int, ...]) -> Fraction:
        """Return (μ, ν) for weights in fundamental coordinates."""
        total = Fraction(0)
        for i, mi in enumerate(mu):
            if not mi:
                continue
            row = self.gram[i]
            for j, nj in enumerate(nu):
                if nj:
                    total += mi * row[j] * nj
        return total

    def reflect(self, weight: Weight, i: int) -> Weight:
        """Apply the simple reflection s_i to a weight in fundamental coordinates."""
        k = weight[i]
        if not k:
            return weight
        row = self.cartan[i]
        return tuple(w - k * r for w, r in zip(weight, row, strict=True))

    @property
    def positive_roots(self) -> tuple[FactorRoot, ...]:
        return tuple(r for r in self.roots if r.positive)


def _to_fraction(value: object) -> Fraction:
    return Fraction(int(value.p), int(value.q))  # type: ignore[attr-defined]


@cache
def factor_data(factor: SimpleFactor) -> FactorData:
    """Build (and memoize) the Cartan data and full root set of a simple factor."""
    form = symmetric_form(factor)
    n = factor.rank
    cartan = tuple(
        tuple(2 * form[i][j] // form[j][j] for j in range(n)) for i in range(n)
    )
    half = tuple(Fraction(form[i][i], 2) for i in range(n))
    inverse = Matrix(cartan).inv()
    gram = tuple(
        tuple(_to_fraction(inverse[i, j]) * half[j] for j in range(n)) for i in range(n)
    )

    def coroot_of(simple: Weight) -> Weight:
        length = sum(simple[i] * form[i][j] * simple[j] for i in range(n) for j in range(n))
        d_alpha = Fraction(length, 2)
        coeffs = tuple(simple[i] * half[i] / d_alpha for i in range(n))
        if any(c.denominator != 1 for c in coeffs):
            raise ShapeError(f"non-integral coroot for {factor.label()} root {simple}")
        return tuple(int(c) for c in coeffs)

    seen: dict[Weight, Weight] = {}
    queue: deque[tuple[Weight, Weight]] = deque()
    for i in range(n):
        simple = tuple(1 if k == i else 0 for k in range(n))
        seen[cartan[i]] = simple
        queue.append((cartan[i], simple))
    while queue:
        weight, simple = queue.popleft()
        for j in range(n):
            k = weight[j]
            if not k:
                continue
            image = tuple(w - k * r for w, r in zip(weight, cartan[j], strict=True))
            if image in seen:
                continue
            image_simple = tuple(a - (k if idx == j else 0) for idx, a in enumerate(simple))
            seen[image] = image_simple
            queue.append((image, image_simple))

    roots = tuple(
        FactorRoot(weight=w, simple=a, coroot=coroot_of(a)) for w, a in sorted(seen.items())
    )
    if len(roots) != factor.root_count:
        raise ShapeError(
            f"{factor.label()}: reflection closure produced {len(roots)} roots, expected {factor.root_count}"
        )
    two_rho = [0] * n
    for r in roots:
        if r.positive:
            for i, c in enumerate(r.coroot):
                two_rho[i] += c
    logger.debug("factor=%s roots=%d", factor.label(), len(roots))
    return FactorData(
        factor=factor,
        cartan=cartan,
        form=form,
        half_lengths=half,
        gram=gram,
        roots=roots,
        two_rho_check=tuple(two_rho),
    )
