"""Tests for the negative fixtures: each must be rejected with a real dependency witness."""

from __future__ import annotations

import pytest

from mfsr.catalog import negative_fixtures, verify_fixture
from mfsr.criterion import combine, criterion_A, is_multiplicity_free

_FIXTURES = {f.id: f for f in negative_fixtures()}


def test_fixture_ids() -> None:
    assert list(_FIXTURES) == [f"N.{i}" for i in range(1, 38)]
    assert all(f.provenance for f in _FIXTURES.values())
    assert _FIXTURES["N.35"].text is None
    assert _FIXTURES["N.1"].text == "ext(3,sl(6)) ++ T(sl(6)) ++ T(sl(6))"


@pytest.mark.parametrize("fixture_id", ["N.1", "N.29", "N.30", "N.35", "N.36"])
def test_small_fixtures_are_not_mf(fixture_id: str) -> None:
    fixture = _FIXTURES[fixture_id]
    verdict = is_multiplicity_free(fixture.rep)
    assert not verdict.multiplicity_free
    assert verdict.witness is not None
    assert not any(combine(verdict.witness, verdict.phi_plus))


def test_spin13_with_sp4_is_rejected_before_reducing_to_sl2() -> None:
    fixture = _FIXTURES["N.34"]
    assert fixture.text == "sp(4)*so(13) ++ spin(13)"
    assert fixture.rep.shape.label() == "C2+B6"
    assert not criterion_A(fixture.rep)
    report = verify_fixture(fixture)
    assert report.passed, report.mismatches
    assert report.witness is not None


def test_fixture_report_carries_witness() -> None:
    report = verify_fixture(_FIXTURES["N.29"])
    assert report.passed
    assert report.phi_plus == [[1], [1], [1]]
    assert report.witness == [1, -1, 0]
    assert report.mismatches == []


@pytest.mark.slow
@pytest.mark.parametrize("fixture_id", list(_FIXTURES))
def test_every_fixture_is_rejected(fixture_id: str) -> None:
    report = verify_fixture(_FIXTURES[fixture_id])
    assert report.passed, report.mismatches
