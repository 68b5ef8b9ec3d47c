"""Property suites over the catalog: choice invariance, criterion A, products, reduction and links."""

from __future__ import annotations

import itertools
import random
from functools import cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mfsr.catalog import (
    NegativeFixture,
    TableEntry,
    instantiate,
    load_catalog,
    negative_fixtures,
)
from mfsr.config import DEFAULT_CATALOG_PATH
from mfsr.criterion import (
    Verdict,
    choice_invariant,
    criterion_A,
    extends_independently,
    is_multiplicity_free,
    reduction_step,
)
from mfsr.dsl import rep_from_text
from mfsr.lattice import SimpleFactor, WeightMultiset, build_root_system, simple_roots
from mfsr.repspec import (
    RepError,
    SymplecticRep,
    assemble_saturated,
    check_saturated,
    decompose_components,
    module_summands,
    product,
    realize,
    replace_sl2_by_torus,
)

_CATALOG = load_catalog(DEFAULT_CATALOG_PATH)
_BY_ID = {e.id: e for e in _CATALOG}
_FIXTURES = negative_fixtures()
_CHEAP = ("S.9", "S.10", "S.13", "1.2", "11.4")
_A1 = SimpleFactor("A", 1)


@cache
def _smallest(entry_id: str) -> SymplecticRep:
    entry = _BY_ID[entry_id]
    return instantiate(entry, entry.smallest())


@cache
def _verdict(entry_id: str) -> Verdict:
    return is_multiplicity_free(_smallest(entry_id))


def _signature(rep: SymplecticRep) -> tuple[str, list[tuple[str, tuple[tuple[int, ...], ...]]]]:
    comps = sorted((c.kind.value, c.summand.highest_weights) for c in decompose_components(rep))
    return rep.shape.label(), comps


def _simple_root(rep: SymplecticRep, factor_index: int) -> tuple[int, ...]:
    return simple_roots(build_root_system(rep.shape), factor_index)[0].coords


def _single_component_sl2s(rep: SymplecticRep) -> list[int]:
    linked = {i for pair in rep.links for i in pair}
    return [
        i
        for i, f in enumerate(rep.shape.factors)
        if f == _A1 and i not in linked and len(rep.components_on(i)) == 1
    ]


def _assert_trace_replays(rep: SymplecticRep, verdict: Verdict) -> None:
    """Replay every recorded step and check symmetry, shrinking and the step bound."""
    system, phi, _ = realize(rep)
    result = verdict.result
    delta = tuple(system.roots)
    counts = phi.counter()
    roots_left, weights_left = len(delta), phi.total
    for record in result.trace:
        delta, counts, replayed = reduction_step(delta, counts, record.chosen)
        assert replayed == record
        assert WeightMultiset(counts).is_symmetric()
        coords = {r.coords for r in delta}
        assert coords == {r.negate() for r in delta}
        assert replayed.remaining_weights < weights_left
        assert replayed.remaining_roots < roots_left
        roots_left, weights_left = replayed.remaining_roots, replayed.remaining_weights
    assert len(result.trace) <= phi.total // 2
    assert len(result.trace) <= len(system) // 2
    plus = WeightMultiset(result.phi_plus)
    minus = WeightMultiset({tuple(-c for c in w): m for w, m in plus.items()})
    assert result.phi0_toroidal == plus + minus


# -- product law --------------------------------------------------------------------


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(_CHEAP), st.sampled_from(_CHEAP))
def test_product_rank_is_additive(first: str, second: str) -> None:
    a, b = _verdict(first), _verdict(second)
    both = is_multiplicity_free(product(_smallest(first), _smallest(second)))
    assert both.multiplicity_free == (a.multiplicity_free and b.multiplicity_free)
    assert both.rank == a.rank + b.rank
    assert both.isotropy == a.isotropy + b.isotropy


def test_product_with_non_mf_part_is_not_mf() -> None:
    fixture = next(f for f in _FIXTURES if f.id == "N.29")
    assert not is_multiplicity_free(product(_smallest("S.9"), fixture.rep)).multiplicity_free


_CATALOG_PAIRS = random.Random(20240601).sample(
    list(itertools.combinations_with_replacement(sorted(_BY_ID), 2)), 100
)


@pytest.mark.slow
@pytest.mark.parametrize(("first", "second"), _CATALOG_PAIRS, ids=[f"{a}+{b}" for a, b in _CATALOG_PAIRS])
def test_product_of_catalog_pairs(first: str, second: str) -> None:
    a, b = _verdict(first), _verdict(second)
    both = is_multiplicity_free(product(_smallest(first), _smallest(second)))
    assert both.multiplicity_free
    assert both.multiplicity_free == (a.multiplicity_free and b.multiplicity_free)
    assert both.rank == a.rank + b.rank
    assert both.isotropy == a.isotropy + b.isotropy


_SHORT_FIXTURES = [(e, f.id) for e in _CHEAP for f in _FIXTURES if f.text is not None and len(f.text) < 40]
_MIXED_PAIRS = random.Random(7).sample(_SHORT_FIXTURES, min(20, len(_SHORT_FIXTURES)))


@pytest.mark.slow
@pytest.mark.parametrize(("entry_id", "fixture_id"), _MIXED_PAIRS, ids=[f"{a}+{b}" for a, b in _MIXED_PAIRS])
def test_product_with_a_fixture_is_never_mf(entry_id: str, fixture_id: str) -> None:
    fixture = next(f for f in _FIXTURES if f.id == fixture_id)
    for rep in (product(_smallest(entry_id), fixture.rep), product(fixture.rep, _smallest(entry_id))):
        assert not is_multiplicity_free(rep).multiplicity_free


# -- criterion A ------------------------------------------------------------------------

# Each pool names symplectic modules of one simple algebra, so adjacent summands share it.
_POOLS = (
    ("sl(2)", "sym(3,sl(2))", "T(sl(2))", "T(sym(2,sl(2)))"),
    ("sp(4)", "T(sp(4))", "T(so(5))"),
    ("T(sl(3))", "T(sym(2,sl(3)))"),
    ("sp(6)", "ext0(3,sp(6))", "T(sp(6))"),
    ("T(sl(4))", "T(ext(2,sl(4)))"),
    ("T(so(7))", "T(spin(7))"),
    ("T(g2)",),
)


@st.composite
def _criterion_a_violators(draw: st.DrawFn) -> str:
    """Add summands over one simple algebra until dim V > dim g + rk g."""
    pool = draw(st.sampled_from(_POOLS))
    parts = [draw(st.sampled_from(pool))]
    while criterion_A(rep_from_text(" ++ ".join(parts))):
        parts.append(draw(st.sampled_from(pool)))
    return " ++ ".join(parts)


@pytest.mark.parametrize(
    "text",
    ["sl(2) ++ sl(2) ++ sl(2)", "T(sl(2)) ++ T(sl(2)) ++ T(sl(2))", "sp(4) ++ T(sp(4)) ++ sp(4)", "T(g2) ++ T(g2)"],
)
def test_small_criterion_a_violators_are_not_mf(text: str) -> None:
    rep = rep_from_text(text)
    assert not criterion_A(rep)
    assert not is_multiplicity_free(rep).multiplicity_free


@pytest.mark.slow
@settings(max_examples=200, deadline=None)
@given(_criterion_a_violators())
def test_violating_criterion_a_is_never_mf(text: str) -> None:
    rep = rep_from_text(text)
    assert not criterion_A(rep)
    assert not is_multiplicity_free(rep).multiplicity_free


@pytest.mark.slow
@pytest.mark.parametrize("entry", _CATALOG, ids=lambda e: e.id)
def test_catalog_rows_satisfy_criterion_a_and_reassemble(entry: TableEntry) -> None:
    rep = instantiate(entry, entry.smallest())
    assert criterion_A(rep)
    shape, summands = module_summands(rep)
    assert _signature(assemble_saturated(shape, summands)) == _signature(rep)


# -- reduction invariants ---------------------------------------------------------------


@pytest.mark.parametrize("entry_id", _CHEAP)
def test_cheap_traces_replay_symmetrically(entry_id: str) -> None:
    _assert_trace_replays(_smallest(entry_id), _verdict(entry_id))


@pytest.mark.slow
@pytest.mark.parametrize("entry", _CATALOG, ids=lambda e: e.id)
def test_catalog_traces_keep_symmetry_and_shrink(entry: TableEntry) -> None:
    verdict = _verdict(entry.id)
    assert verdict.multiplicity_free
    _assert_trace_replays(_smallest(entry.id), verdict)
    assert all(step.multiplicity <= 2 for step in verdict.result.trace)


@pytest.mark.slow
@pytest.mark.parametrize("fixture", _FIXTURES, ids=lambda f: f.id)
def test_fixture_traces_keep_symmetry_and_shrink(fixture: NegativeFixture) -> None:
    _assert_trace_replays(fixture.rep, is_multiplicity_free(fixture.rep))


@pytest.mark.slow
@pytest.mark.parametrize("entry", _CATALOG, ids=lambda e: e.id)
def test_catalog_verdict_ignores_weight_choice(entry: TableEntry) -> None:
    assert choice_invariant(instantiate(entry, entry.smallest()), 100)


@pytest.mark.slow
@pytest.mark.parametrize("fixture", _FIXTURES, ids=lambda f: f.id)
def test_fixture_verdict_ignores_weight_choice(fixture: NegativeFixture) -> None:
    assert choice_invariant(fixture.rep, 100)


# -- sl(2) links and the torus form --------------------------------------------------------


def _link_cases() -> list[tuple[str, int, str]]:
    """(entry, sl(2) factor, partner) for unlinked entries where gluing onto the partner's sl(2) stays saturated."""
    cases = []
    for entry_id in sorted(_BY_ID):
        rep = _smallest(entry_id)
        slots = _single_component_sl2s(rep)
        if rep.links or not slots:
            continue
        for partner in ("S.9", "S.10"):
            if entry_id == partner == "S.9":
                continue
            width = len(rep.shape.factors)
            joined = product(rep, _smallest(partner))
            linked = SymplecticRep(joined.shape, joined.components, frozenset({(slots[0], width)}))
            if check_saturated(linked):
                cases.append((entry_id, slots[0], partner))
    return cases


def _linked(entry_id: str, slot: int, partner: str) -> tuple[SymplecticRep, SymplecticRep, list[tuple[int, ...]]]:
    rep = _smallest(entry_id)
    width = len(rep.shape.factors)
    joined = product(rep, _smallest(partner))
    linked = SymplecticRep(joined.shape, joined.components, frozenset({(slot, width)}))
    return joined, linked, [_simple_root(joined, slot), _simple_root(joined, width)]


def test_linking_onto_s9_matches_the_root_criterion() -> None:
    joined, linked, roots = _linked("S.6", len(_smallest("S.6").shape.factors) - 1, "S.9")
    assert is_multiplicity_free(linked).multiplicity_free
    assert extends_independently(is_multiplicity_free(joined).phi_plus, roots)


@pytest.mark.slow
@pytest.mark.parametrize(("entry_id", "slot", "partner"), _link_cases(), ids=lambda v: str(v))
def test_link_verdict_matches_root_independence(entry_id: str, slot: int, partner: str) -> None:
    """The glued rep is MF exactly when the unglued toroidal half plus both sl(2) roots is independent."""
    joined, linked, roots = _linked(entry_id, slot, partner)
    unglued = is_multiplicity_free(joined)
    assert unglued.multiplicity_free
    assert is_multiplicity_free(linked).multiplicity_free == extends_independently(unglued.phi_plus, roots)


def _torus_cases(reps: dict[str, SymplecticRep]) -> list[tuple[str, int]]:
    cases = []
    for name, rep in reps.items():
        for slot in _single_component_sl2s(rep):
            try:
                replace_sl2_by_torus(rep, slot)
            except RepError:
                continue
            cases.append((name, slot))
    return cases


_TORUS_CATALOG = _torus_cases({e.id: _smallest(e.id) for e in _CATALOG})
_TORUS_FIXTURES = _torus_cases({f.id: f.rep for f in _FIXTURES})


def test_torus_form_of_s9_adds_one_to_the_rank() -> None:
    toral = is_multiplicity_free(replace_sl2_by_torus(_smallest("S.9"), 0))
    assert toral.multiplicity_free
    assert toral.rank == _verdict("S.9").rank + 1


@pytest.mark.slow
@pytest.mark.parametrize(("entry_id", "slot"), _TORUS_CATALOG, ids=lambda v: str(v))
def test_torus_form_matches_root_independence(entry_id: str, slot: int) -> None:
    """Replacing an sl(2) on C^2 x U by its Cartan keeps MF exactly when its root avoids the toroidal span."""
    rep = _smallest(entry_id)
    verdict = _verdict(entry_id)
    toral = is_multiplicity_free(replace_sl2_by_torus(rep, slot))
    expected = extends_independently(verdict.phi_plus, [_simple_root(rep, slot)])
    assert toral.multiplicity_free == expected
    if expected:
        assert toral.rank == verdict.rank + 1


@pytest.mark.slow
@pytest.mark.parametrize(("fixture_id", "slot"), _TORUS_FIXTURES, ids=lambda v: str(v))
def test_torus_form_of_a_fixture_is_not_mf(fixture_id: str, slot: int) -> None:
    fixture = next(f for f in _FIXTURES if f.id == fixture_id)
    assert not is_multiplicity_free(replace_sl2_by_torus(fixture.rep, slot)).multiplicity_free
