"""Tests for gluing Table S entries along underlined sl(2)'s."""

from __future__ import annotations

import pytest

from mfsr.catalog import (
    CatalogError,
    GluePart,
    TableEntry,
    get_entry,
    glue,
    glue_cases,
    instantiate,
    underlined_factors,
)
from mfsr.criterion import is_multiplicity_free
from mfsr.repspec import LinkError, RealizabilityError, check_saturated


def _part(catalog: tuple[TableEntry, ...], entry_id: str, **params: int) -> GluePart:
    return GluePart(get_entry(entry_id, catalog), params)


def test_underlined_positions_count_from_the_end(catalog: tuple[TableEntry, ...]) -> None:
    s13 = get_entry("S.13", catalog)
    rep = instantiate(s13, {"m": 1})
    assert rep.shape.label() == "A1+A1"
    assert underlined_factors(s13, rep) == (1,)
    s1 = get_entry("S.1b", catalog)
    assert underlined_factors(s1, instantiate(s1, {"m": 2})) == (0, 2)


def test_underlined_position_out_of_range() -> None:
    entry = TableEntry(id="X.1", table="S", template="sl(2)", rank="0", isotropy="sp(1)", underlined=(3,))
    with pytest.raises(CatalogError, match="out of range"):
        underlined_factors(entry, instantiate(entry))


def test_s6_s8_glue_is_mf(catalog: tuple[TableEntry, ...]) -> None:
    rep = glue([_part(catalog, "S.6"), _part(catalog, "S.8")])
    assert rep.links == frozenset({(1, 4)})
    assert check_saturated(rep).saturated
    assert is_multiplicity_free(rep).multiplicity_free


def test_s13_twice_is_mf(catalog: tuple[TableEntry, ...]) -> None:
    rep = glue([_part(catalog, "S.13", m=1), _part(catalog, "S.13", m=1)])
    assert rep.shape.label() == "A1+A1+A1+A1"
    assert rep.links == frozenset({(1, 3)})
    assert is_multiplicity_free(rep).multiplicity_free


def test_self_link_inside_one_component_is_rejected(catalog: tuple[TableEntry, ...]) -> None:
    with pytest.raises(LinkError, match="one component"):
        glue([_part(catalog, "S.1b", m=2)], [((0, 0), (0, 1))])


def test_gluing_two_defining_sl2_breaks_saturation(catalog: tuple[TableEntry, ...]) -> None:
    with pytest.raises(RealizabilityError, match="not saturated"):
        glue([_part(catalog, "S.9"), _part(catalog, "S.9")])


def test_glue_argument_errors(catalog: tuple[TableEntry, ...]) -> None:
    with pytest.raises(LinkError, match="nothing to glue"):
        glue([])
    with pytest.raises(LinkError, match="need underlined"):
        glue([_part(catalog, "11.4"), _part(catalog, "S.9")])
    with pytest.raises(LinkError, match="slot 1 is not one"):
        glue([_part(catalog, "S.9"), _part(catalog, "S.10")], [((0, 1), (1, 0))])
    with pytest.raises(LinkError, match="part 2 does not exist"):
        glue([_part(catalog, "S.9"), _part(catalog, "S.10")], [((0, 0), (2, 0))])


def test_glue_cases_all_pass(catalog: tuple[TableEntry, ...]) -> None:
    cases = glue_cases(catalog)
    assert [(c.name, c.expected) for c in cases] == [
        ("S.6+S.8", "mf"),
        ("S.13+S.13", "mf"),
        ("S.1 self", "rejected"),
        ("S.9+S.9", "rejected"),
    ]
    assert all(c.passed for c in cases), [c.detail for c in cases]
    assert cases[3].detail.startswith("rejected:")


def test_glue_cases_need_table_s(catalog: tuple[TableEntry, ...]) -> None:
    without_s9 = tuple(e for e in catalog if e.id != "S.9")
    with pytest.raises(CatalogError, match="S.9"):
        glue_cases(without_s9)
