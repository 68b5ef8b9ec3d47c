"""Turn a parsed DSL tree into a SymplecticRep (factor sharing, links, torus coordinates)."""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass

from mfsr.dsl.parser import (
    Classical,
    ComponentExpr,
    Ctor,
    DslSemanticError,
    Exceptional,
    FactorRep,
    HighestWeight,
    Power,
    RepExpr,
    Span,
    Spin,
    parse_dsl,
)
from mfsr.lattice import AlgebraShape, ShapeError, SimpleFactor, Weight
from mfsr.repspec import Component, ComponentKind, IrreducibleSummand, SymplecticRep

logger = logging.getLogger(__name__)

_A1 = SimpleFactor("A", 1)


@dataclass(frozen=True)
class ResolvedFactor:
    """A constructor mapped onto one simple factor and a dominant weight."""

    factor: SimpleFactor
    weight: Weight
    tag: str


def _omega(rank: int, *entries: tuple[int, int]) -> Weight:
    """Weight with coefficient c at fundamental weight i (1-based) for each (i, c)."""
    coords = [0] * rank
    for i, c in entries:
        coords[i - 1] += c
    return tuple(coords)


def _defining(ctor: Classical) -> ResolvedFactor:
    n, span = ctor.n, ctor.span
    match ctor.kind:
        case "sl":
            if n < 2:
                raise DslSemanticError(f"sl({n}) is not a simple algebra; use n >= 2", span)
            return ResolvedFactor(SimpleFactor("A", n - 1), _omega(n - 1, (1, 1)), "sl")
        case "sp":
            if n < 2 or n % 2:
                raise DslSemanticError(f"sp({n}) needs an even size >= 2", span)
            if n == 2:
                return ResolvedFactor(_A1, (1,), "sp")
            return ResolvedFactor(SimpleFactor("C", n // 2), _omega(n // 2, (1, 1)), "sp")
        case _:
            if n <= 2:
                raise DslSemanticError(f"so({n}) is not semisimple", span)
            if n == 3:
                return ResolvedFactor(_A1, (2,), "so")
            if n == 4:
                raise DslSemanticError("so(4) is not simple; write sl(2)*sl(2)", span)
            if n == 5:
                return ResolvedFactor(SimpleFactor("C", 2), (0, 1), "so")
            if n == 6:
                return ResolvedFactor(SimpleFactor("A", 3), (0, 1, 0), "so")
            r = n // 2
            series = "B" if n % 2 else "D"
            return ResolvedFactor(SimpleFactor(series, r), _omega(r, (1, 1)), "so")


def _spin(ctor: Spin) -> ResolvedFactor:
    n, sign, span = ctor.n, ctor.sign, ctor.span
    if n % 2 and sign is not None:
        raise DslSemanticError(f"spin({n}) has a single spin module; drop the sign", span)
    minus = sign == "-"
    tag = "spin-" if minus else "spin+"
    match n:
        case 3:
            return ResolvedFactor(_A1, (1,), tag)
        case 5:
            return ResolvedFactor(SimpleFactor("C", 2), (1, 0), tag)
        case 6:
            return ResolvedFactor(SimpleFactor("A", 3), (0, 0, 1) if minus else (1, 0, 0), tag)
    if n < 7:
        raise DslSemanticError(f"spin({n}) is not supported; use n = 3, 5, 6 or n >= 7", span)
    r = n // 2
    if n % 2:
        return ResolvedFactor(SimpleFactor("B", r), _omega(r, (r, 1)), tag)
    return ResolvedFactor(SimpleFactor("D", r), _omega(r, (r - 1 if minus else r, 1)), tag)


def _power(ctor: Power) -> ResolvedFactor:
    inner, k, span = ctor.inner, ctor.k, ctor.span
    if not isinstance(inner, Classical):
        raise DslSemanticError(f"{ctor.kind}(k, ...) applies to sl, so or sp only", inner.span)
    if k < 1:
        raise DslSemanticError(f"{ctor.kind} power must be positive, got {k}", span)
    base = _defining(inner)
    factor, r = base.factor, base.factor.rank
    match ctor.kind:
        case "ext":
            if inner.kind == "sl":
                if k >= inner.n:
                    raise DslSemanticError(f"ext({k}, sl({inner.n})) needs k < {inner.n}", span)
                return ResolvedFactor(factor, _omega(r, (k, 1)), f"ext{k}")
            if inner.kind == "so" and inner.n >= 7:
                if factor.series == "B":
                    if k < r:
                        return ResolvedFactor(factor, _omega(r, (k, 1)), f"ext{k}")
                    if k == r:
                        return ResolvedFactor(factor, _omega(r, (r, 2)), f"ext{k}")
                else:
                    if k <= r - 2:
                        return ResolvedFactor(factor, _omega(r, (k, 1)), f"ext{k}")
                    if k == r - 1:
                        return ResolvedFactor(factor, _omega(r, (r - 1, 1), (r, 1)), f"ext{k}")
                raise DslSemanticError(
                    f"ext({k}, so({inner.n})) is not irreducible or exceeds half the dimension", span
                )
            raise DslSemanticError(
                f"ext({k}, {inner.kind}({inner.n})) is not supported; use ext0 for sp", span
            )
        case "ext0":
            if inner.kind != "sp":
                raise DslSemanticError("ext0(k, ...) is the primitive part of an sp exterior power", span)
            if k > r:
                raise DslSemanticError(f"ext0({k}, sp({inner.n})) needs k <= {r}", span)
            return ResolvedFactor(factor, _omega(r, (k, 1)), f"ext0_{k}")
        case _:
            if inner.kind not in ("sl", "sp"):
                raise DslSemanticError("sym(k, ...) applies to sl or sp", span)
            return ResolvedFactor(factor, _omega(r, (1, k)), f"sym{k}")


def _exceptional(ctor: Exceptional) -> ResolvedFactor:
    match ctor.name:
        case "g2":
            return ResolvedFactor(SimpleFactor("G2", 2), (1, 0), "g2")
        case "e6":
            return ResolvedFactor(SimpleFactor("E6", 6), _omega(6, (1, 1)), "e6")
        case _:
            return ResolvedFactor(SimpleFactor("E7", 7), _omega(7, (7, 1)), "e7")


def _highest_weight(ctor: HighestWeight) -> ResolvedFactor:
    series = ctor.series
    if series in ("E", "G"):
        series = f"{series}{ctor.rank}"
    try:
        factor = SimpleFactor(series, ctor.rank)
    except ShapeError as e:
        raise DslSemanticError(str(e), ctor.span) from e
    if len(ctor.coords) != factor.rank:
        raise DslSemanticError(
            f"{factor.label()} needs {factor.rank} coordinates, got {len(ctor.coords)}", ctor.span
        )
    if any(c < 0 for c in ctor.coords):
        raise DslSemanticError("highest weight coordinates must be >= 0", ctor.span)
    return ResolvedFactor(factor, ctor.coords, "hw")


def resolve_ctor(ctor: Ctor) -> ResolvedFactor:
    """Map one constructor onto its simple factor and highest weight.

    Raises:
        DslSemanticError: the constructor names no irreducible module of a simple algebra.
    """
    match ctor:
        case Classical():
            return _defining(ctor)
        case Spin():
            return _spin(ctor)
        case Power():
            return _power(ctor)
        case Exceptional():
            return _exceptional(ctor)
        case HighestWeight():
            return _highest_weight(ctor)
    raise TypeError(f"not a constructor: {ctor!r}")


def _shares(prev: tuple[FactorRep, ResolvedFactor], nxt: tuple[FactorRep, ResolvedFactor]) -> bool:
    return prev[0].label is None and nxt[0].label is None and prev[1].factor == nxt[1].factor


def build_rep(tree: RepExpr) -> SymplecticRep:
    """Build the representation described by ``tree``.

    The last factor of one component and the first factor of the next are one simple
    factor when both are unlabelled and realize the same simple algebra. Equal labels
    glue two sl(2) factors of different components. Each T(...) gets its own torus
    coordinate.

    Unlabelled sharing is unconditional, so the text cannot keep two adjacent equal
    factors apart without labels. A label is used exactly twice and therefore always
    links; ``sl(2)#a ++ sl(2)#a`` is two sl(2) factors joined by one link. A rep with
    two unrelated adjacent copies is built with ``repspec.product`` instead.

    Raises:
        DslSemanticError: bad constructor, bad label use, or a label on a non-sl(2) factor.
    """
    factors: list[SimpleFactor] = []
    per_component: list[list[tuple[int, Weight, str]]] = []
    labels: dict[str, list[tuple[int, int, Span]]] = defaultdict(list)
    previous: tuple[FactorRep, ResolvedFactor] | None = None

    for ci, comp in enumerate(tree.components):
        entries: list[tuple[int, Weight, str]] = []
        resolved = [(f, resolve_ctor(f.ctor)) for f in comp.factors]
        for pos, (node, res) in enumerate(resolved):
            if pos == 0 and previous is not None and _shares(previous, (node, res)):
                index = len(factors) - 1
            else:
                factors.append(res.factor)
                index = len(factors) - 1
            if node.label is not None:
                if res.factor != _A1:
                    raise DslSemanticError(
                        f"link label #{node.label} on {res.factor.label()}; only sl(2) factors can be linked",
                        node.span,
                    )
                labels[node.label].append((index, ci, node.span))
            entries.append((index, res.weight, res.tag))
        per_component.append(entries)
        previous = resolved[-1]

    links: set[tuple[int, int]] = set()
    for name, uses in sorted(labels.items()):
        if len(uses) != 2:
            raise DslSemanticError(
                f"link label #{name} is used {len(uses)} times; a link joins exactly two sl(2)'s",
                uses[-1][2],
            )
        (u, cu, _), (v, cv, span) = uses
        if cu == cv:
            raise DslSemanticError(
                f"link #{name} joins two sl(2)'s of one component, which cannot be identified", span
            )
        links.add((u, v))

    torus_dim = sum(1 for c in tree.components if c.twisted)
    shape = AlgebraShape(tuple(factors), torus_dim)
    comps: list[Component] = []
    t = 0
    for comp, entries in zip(tree.components, per_component, strict=True):
        comps.append(_component(shape, comp, entries, t if comp.twisted else None))
        t += comp.twisted
    rep = SymplecticRep(shape, tuple(comps), frozenset(links))
    logger.debug("built shape=%s components=%d links=%d", shape.label(), len(comps), len(links))
    return rep


def _component(
    shape: AlgebraShape,
    comp: ComponentExpr,
    entries: list[tuple[int, Weight, str]],
    torus_index: int | None,
) -> Component:
    blocks: list[Weight] = [(0,) * f.rank for f in shape.factors]
    for index, weight, _ in entries:
        blocks[index] = weight
    tag = "*".join(tag for _, _, tag in entries)
    summand = IrreducibleSummand(tuple(blocks), (0,) * shape.torus_dim, tag)
    kind = ComponentKind.TYPE2 if comp.twisted else ComponentKind.TYPE1
    return Component(kind, summand, torus_index)


def rep_from_text(text: str) -> SymplecticRep:
    """Parse and build in one call."""
    return build_rep(parse_dsl(text))
