"""Representations the classification rules out: each must come back not multiplicity free."""

from __future__ import annotations

from dataclasses import dataclass

from mfsr.dsl import rep_from_text
from mfsr.lattice import AlgebraShape, SimpleFactor
from mfsr.repspec import Component, ComponentKind, IrreducibleSummand, SymplecticRep

_A1 = SimpleFactor("A", 1)
_A2 = SimpleFactor("A", 2)
_B3 = SimpleFactor("B", 3)


@dataclass(frozen=True)
class NegativeFixture:
    """A concrete non-MF representation with a note on where it comes from."""

    id: str
    rep: SymplecticRep
    provenance: str
    text: str | None = None


# (id, DSL, provenance)
_DSL_FIXTURES: tuple[tuple[str, str, str], ...] = (
    ("N.1", "ext(3,sl(6)) ++ T(sl(6)) ++ T(sl(6))", "seven toroidal weights, linearly dependent"),
    ("N.2", "sl(2)*g2 ++ g2*sl(2)", "G2 shared by two sl(2) tensor components"),
    ("N.3", "sl(2)*g2 ++ T(g2)", "G2 tensor component next to T(C^7)"),
    ("N.4", "sp(4)*so(7) ++ so(7)*sl(2)", "so_n family at (m, p) = (2, 1)"),
    ("N.5", "sl(2)*so(7) ++ T(so(7))", "sp(2m) x so(n) next to T(so(n))"),
    ("N.6", "sl(2)*so(13) ++ spin(13)", "spin(13) family, reduced to m = 1"),
    ("N.7", "T(so(13)) ++ spin(13)", "spin(13) next to a twisted defining module"),
    ("N.8", "sp(6)*so(12) ++ spin(12)", "sp(2m) x so(12) + spin(12) beyond m = 2"),
    ("N.9", "sl(2)*so(12) ++ spin(12) ++ so(12)*sl(2)", "so(12) acting on three components"),
    ("N.10", "sp(4)*so(11) ++ spin(11)", "spin(11) family beyond m = 1"),
    ("N.11", "T(so(11)) ++ spin(11)", "spin(11) next to a twisted defining module"),
    ("N.12", "sp(4)*so(10) ++ T(spin(10))", "T(spin(10)) family beyond m = 1"),
    ("N.13", "sl(2)*so(9) ++ spin(9)*sl(2)", "spin(9) with an sl(2) on each side"),
    ("N.14", "sl(2)*spin(9) ++ spin(9)*sl(2)", "two sl(2) x spin(9) components"),
    ("N.15", "sl(2)*spin(9) ++ T(spin(9))", "sl(2) x spin(9) next to T(spin(9))"),
    ("N.16", "sl(2)*so(9) ++ T(spin(9))", "so(9) tensor component next to T(spin(9))"),
    ("N.17", "sp(4)*so(8) ++ spin(8)*sp(4)", "triality family with sp(4) on both sides"),
    ("N.18", "sp(6)*so(8) ++ spin(8)*sl(2)", "triality family beyond m = 2"),
    ("N.19", "sp(4)*so(8) ++ T(spin(8))", "so(8) tensor component next to T(spin(8)) beyond m = 1"),
    ("N.20", "sp(4)*so(7) ++ spin(7)*sl(2)", "so(7) family beyond m = 1"),
    ("N.21", "sl(2)*so(7) ++ spin(7)*sp(4)", "so(7) family with sp(4) on the spin side"),
    ("N.22", "ext(3,sl(6)) ++ T(sl(6)*sl(3))", "ext^3 C^6 next to T(C^6 x C^3)"),
    ("N.23", "ext(3,sl(6)) ++ T(ext(2,sl(6)))", "ext^3 C^6 next to T(ext^2 C^6)"),
    ("N.24", "sl(2)*so(6) ++ T(so(6))", "so(6) tensor component next to T(ext^2 C^4)"),
    ("N.25", "sp(4) ++ T(sp(4)) ++ T(sp(4))", "sp(4) on three components"),
    ("N.26", "so(3)*sp(4) ++ sp(4)*so(3)", "so(3) x sp(2n) chain, dependent toroidal set"),
    ("N.27", "so(3)*sp(4) ++ T(sp(4))", "so(3) x sp(4) next to T(C^4)"),
    ("N.28", "sp(4) ++ T(sp(4)*sl(2))", "C^4 next to T(C^4 x C^2)"),
    ("N.29", "sl(2) ++ sl(2) ++ sl(2) ++ sl(2)", "four copies of C^2 under one sl(2)"),
    ("N.30", "sp(4) ++ sp(4) ++ sp(4)", "three copies of C^4 under one sp(4)"),
    ("N.31", "spin(12,+) ++ spin(12,-) ++ so(12)*sl(2)", "both half-spin modules plus a tensor component"),
    ("N.32", "ext0(3,sp(6)) ++ sp(6) ++ T(sp(6))", "sp(6) on three components"),
    ("N.33", "ext0(3,sp(6)) ++ T(sp(6)) ++ T(sp(6))", "primitive ext^3 with two twisted copies"),
    ("N.34", "sp(4)*so(13) ++ spin(13)", "spin(13) family at m = 2, before reducing to m = 1"),
)


def _summand(shape: AlgebraShape, blocks: dict[int, tuple[int, ...]]) -> IrreducibleSummand:
    highest = tuple(blocks.get(i, (0,) * f.rank) for i, f in enumerate(shape.factors))
    return IrreducibleSummand(highest, (0,) * shape.torus_dim)


def _shared_torus() -> SymplecticRep:
    """gl(3) on T(C^3) + T(C^3) where both copies share one scaling torus."""
    shape = AlgebraShape((_A2,), 1)
    comp = Component(ComponentKind.TYPE2, _summand(shape, {0: (1, 0)}), 0)
    return SymplecticRep(shape, (comp, comp))


def _orthogonal_without_torus() -> SymplecticRep:
    """so(7) on C^7 + C^7 (a type 2 pair with no scaling torus)."""
    shape = AlgebraShape((_B3,), 0)
    return SymplecticRep(shape, (Component(ComponentKind.TYPE2, _summand(shape, {0: (1, 0, 0)})),))


def _so_on_three() -> SymplecticRep:
    """so(7) shared by three so(7) x sl(2) components, each with its own sl(2)."""
    shape = AlgebraShape((_A1, _B3, _A1, _A1), 0)
    vector = (1, 0, 0)
    comps = tuple(
        Component(ComponentKind.TYPE1, _summand(shape, {1: vector, j: (1,)})) for j in (0, 2, 3)
    )
    return SymplecticRep(shape, comps)


def negative_fixtures() -> list[NegativeFixture]:
    """Return every negative fixture, DSL-built ones first."""
    out = [
        NegativeFixture(fid, rep_from_text(text), provenance, text)
        for fid, text, provenance in _DSL_FIXTURES
    ]
    out.append(NegativeFixture("N.35", _shared_torus(), "gl(U) on T(U) twice with one shared torus"))
    out.append(NegativeFixture("N.36", _orthogonal_without_torus(), "so(U) on U + U without a torus"))
    out.append(NegativeFixture("N.37", _so_on_three(), "so(n) x sl(2) three times around one so(n)"))
    return out
