"""Replay catalog rows through the reduction and compare with the printed columns.

Mismatches are collected into reports; only internal reduction failures raise.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Iterable, Mapping, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Literal

from mfsr.catalog.entries import (
    TableEntry,
    describe_params,
    entries_for_table,
    expected_isotropy,
    expected_rank,
    instantiate,
    instantiate_text,
    load_catalog,
)
from mfsr.catalog.errors import CatalogError, ParamError
from mfsr.catalog.fixtures import NegativeFixture, negative_fixtures
from mfsr.criterion import (
    choice_invariant,
    combine,
    criterion_A,
    extends_independently,
    is_multiplicity_free,
)
from mfsr.lattice import build_root_system, simple_roots
from mfsr.repspec import (
    LinkError,
    RealizabilityError,
    RepError,
    SymplecticRep,
    algebra_dimension,
    check_saturated,
    dim,
    product,
    replace_sl2_by_torus,
)
from mfsr.reports.models import (
    EntryReport,
    FixtureReport,
    GlueCase,
    InstanceReport,
    Mismatch,
    TableSummary,
    Timing,
    VerifyReport,
)

logger = logging.getLogger(__name__)

GlueEnd = tuple[int, int]  # (part index, position in that part's ``underlined`` list)


@dataclass(frozen=True)
class GluePart:
    """One Table S entry at fixed parameters inside a gluing."""

    entry: TableEntry
    params: Mapping[str, int] = field(default_factory=dict)


def underlined_factors(entry: TableEntry, rep: SymplecticRep) -> tuple[int, ...]:
    """Resolve ``entry.underlined`` (negative = from the end) to factor indices of ``rep``.

    Raises:
        CatalogError: a position outside the factor list.
    """
    n = len(rep.shape.factors)
    out = []
    for pos in entry.underlined:
        index = pos + n if pos < 0 else pos
        if not 0 <= index < n:
            raise CatalogError(f"entry {entry.id}: underlined position {pos} out of range for {n} factors")
        out.append(index)
    return tuple(out)


def glue(parts: Sequence[GluePart], pairs: Iterable[tuple[GlueEnd, GlueEnd]] | None = None) -> SymplecticRep:
    """Take the product of the parts and identify pairs of underlined sl(2)'s.

    Without ``pairs`` the last underlined sl(2) of each part is glued to the first
    underlined sl(2) of the next one.

    Raises:
        LinkError: a pair names a factor that is not underlined, or joins two sl(2)'s
            acting on one component.
        RealizabilityError: the glued representation is not saturated.
    """
    if not parts:
        raise LinkError("nothing to glue")
    reps = [instantiate(p.entry, p.params) for p in parts]
    total = reps[0]
    offsets = [0]
    for rep in reps[1:]:
        offsets.append(len(total.shape.factors))
        total = product(total, rep)

    underlined = [underlined_factors(p.entry, r) for p, r in zip(parts, reps, strict=True)]
    if pairs is None:
        chosen: list[tuple[GlueEnd, GlueEnd]] = []
        for i in range(len(parts) - 1):
            if not underlined[i] or not underlined[i + 1]:
                raise LinkError(f"{parts[i].entry.id} and {parts[i + 1].entry.id} need underlined sl(2)'s to glue")
            chosen.append(((i, len(underlined[i]) - 1), (i + 1, 0)))
    else:
        chosen = list(pairs)

    def resolve(end: GlueEnd) -> int:
        part, slot = end
        if not 0 <= part < len(parts):
            raise LinkError(f"glue part {part} does not exist")
        if not 0 <= slot < len(underlined[part]):
            raise LinkError(
                f"{parts[part].entry.id} has {len(underlined[part])} underlined sl(2)'s; slot {slot} is not one"
            )
        return offsets[part] + underlined[part][slot]

    links = frozenset((resolve(a), resolve(b)) for a, b in chosen)
    glued = SymplecticRep(total.shape, total.components, links)
    saturation = check_saturated(glued)
    if not saturation:
        names = "+".join(p.entry.id for p in parts)
        raise RealizabilityError(f"gluing {names} is not saturated: " + "; ".join(saturation.violations))
    return glued


def _mismatch(check: str, expected: object, actual: object) -> Mismatch:
    return Mismatch(check=check, expected=str(expected), actual=str(actual))


def _torus_form_mismatch(rep: SymplecticRep, index: int, rank: int) -> Mismatch | None:
    """Replace an underlined sl(2) on C^2 x U by its Cartan subalgebra; the result stays MF one rank up.

    Factors that do not act by C^2 on a single type 1 component have no such form and pass.
    """
    try:
        toral = replace_sl2_by_torus(rep, index)
    except RepError:
        return None
    verdict = is_multiplicity_free(toral)
    if verdict.multiplicity_free and verdict.rank == rank + 1:
        return None
    return _mismatch(
        "torus_form",
        f"factor {index} replaced by t1: mf rank {rank + 1}",
        f"mf={verdict.multiplicity_free} rank={verdict.rank}",
    )


def verify_instance(entry: TableEntry, params: Mapping[str, int], *, seeds: int = 0) -> InstanceReport:
    """Check one parameter assignment of ``entry`` against its printed columns.

    Raises:
        ReductionError: an internal invariant of the reduction failed.
    """
    start = time.perf_counter()
    text = instantiate_text(entry, params)
    mismatches: list[Mismatch] = []

    def done(rank: int | None = None, isotropy: str | None = None) -> InstanceReport:
        report = InstanceReport(
            params=dict(params),
            text=text,
            passed=not mismatches,
            rank=rank,
            isotropy=isotropy,
            mismatches=mismatches,
            timing=Timing(duration_s=time.perf_counter() - start),
        )
        logger.info(
            "entry=%s params=%s status=%s duration_s=%.3f",
            entry.id,
            describe_params(params) or "-",
            "ok" if report.passed else "mismatch",
            report.timing.duration_s,
        )
        return report

    try:
        rep = instantiate(entry, params)
    except CatalogError as e:
        mismatches.append(_mismatch("instantiate", "a valid representation", e))
        return done()

    saturation = check_saturated(rep)
    if not saturation:
        mismatches.append(_mismatch("saturated", True, "; ".join(saturation.violations)))
    if not criterion_A(rep):
        mismatches.append(_mismatch("criterion_a", "dim V <= dim g + rk g", f"dim V = {dim(rep)}"))
    try:
        verdict = is_multiplicity_free(rep)
    except RepError as e:
        mismatches.append(_mismatch("symplectic", True, e))
        return done()
    if not verdict.multiplicity_free or verdict.rank is None or verdict.isotropy is None:
        mismatches.append(_mismatch("multiplicity_free", True, False))
        return done()

    rank, isotropy = verdict.rank, verdict.isotropy
    want_rank = expected_rank(entry, params)
    if rank != want_rank:
        mismatches.append(_mismatch("rank", want_rank, rank))
    try:
        want_isotropy = expected_isotropy(entry, params)
    except CatalogError as e:
        mismatches.append(_mismatch("isotropy", entry.isotropy, e))
    else:
        if isotropy != want_isotropy:
            mismatches.append(_mismatch("isotropy", want_isotropy, isotropy))
    balance = algebra_dimension(rep) - isotropy.dimension + rank
    if dim(rep) != balance:
        mismatches.append(_mismatch("dimension", f"dim g - dim l + rank = {balance}", dim(rep)))

    if entry.underlined:
        system = build_root_system(rep.shape)
        roots = [simple_roots(system, i)[0].coords for i in underlined_factors(entry, rep)]
        if not extends_independently(verdict.phi_plus, roots):
            mismatches.append(_mismatch("underlined", "independent of the toroidal half", "dependent"))
        for index in underlined_factors(entry, rep):
            mismatch = _torus_form_mismatch(rep, index, rank)
            if mismatch is not None:
                mismatches.append(mismatch)
    if seeds and not choice_invariant(rep, seeds):
        mismatches.append(_mismatch("choice_invariance", f"{seeds} seeds agree", "verdict depends on choices"))
    return done(rank, str(isotropy))


def verify_entry(entry: TableEntry, cap: int, *, seeds: int = 0) -> EntryReport:
    """Verify every admissible assignment of ``entry`` with all parameters <= ``cap``.

    Raises:
        ParamError: ``cap`` is negative.
    """
    start = time.perf_counter()
    instances = [verify_instance(entry, params, seeds=seeds) for params in entry.instances(cap)]
    return EntryReport(
        id=entry.id,
        table=entry.table,
        passed=all(i.passed for i in instances),
        instances=instances,
        timing=Timing(duration_s=time.perf_counter() - start),
    )


def verify_fixture(fixture: NegativeFixture) -> FixtureReport:
    """A fixture passes when the verdict is false and its witness really annihilates Φ₊ᵗ."""
    start = time.perf_counter()
    mismatches: list[Mismatch] = []
    verdict = is_multiplicity_free(fixture.rep)
    if verdict.multiplicity_free:
        mismatches.append(_mismatch("multiplicity_free", False, True))
    elif verdict.witness is None or any(combine(verdict.witness, verdict.phi_plus)):
        mismatches.append(_mismatch("witness", "a kernel vector of the toroidal half", verdict.witness))
    report = FixtureReport(
        id=fixture.id,
        provenance=fixture.provenance,
        text=fixture.text,
        passed=not mismatches,
        phi_plus=[list(w) for w in verdict.phi_plus],
        witness=None if verdict.witness is None else list(verdict.witness),
        mismatches=mismatches,
        timing=Timing(duration_s=time.perf_counter() - start),
    )
    logger.info(
        "fixture=%s status=%s duration_s=%.3f",
        fixture.id,
        "ok" if report.passed else "mismatch",
        report.timing.duration_s,
    )
    return report


def _glue_case(
    name: str,
    expected: Literal["mf", "rejected"],
    parts: Sequence[GluePart],
    pairs: Iterable[tuple[GlueEnd, GlueEnd]] | None = None,
) -> GlueCase:
    start = time.perf_counter()
    try:
        rep = glue(parts, pairs)
    except (LinkError, RealizabilityError) as e:
        passed, detail = expected == "rejected", f"rejected: {e}"
    else:
        verdict = is_multiplicity_free(rep)
        passed = expected == "mf" and verdict.multiplicity_free
        detail = f"mf={verdict.multiplicity_free} rank={verdict.rank} isotropy={verdict.isotropy}"
    return GlueCase(
        name=name,
        expected=expected,
        passed=passed,
        detail=detail,
        timing=Timing(duration_s=time.perf_counter() - start),
    )


def glue_cases(entries: Sequence[TableEntry]) -> list[GlueCase]:
    """The linking rules on concrete gluings: two allowed and the two forbidden ones."""
    by_id = {e.id: e for e in entries}
    try:
        s1, s6, s8, s9, s13 = (by_id[k] for k in ("S.1b", "S.6", "S.8", "S.9", "S.13"))
    except KeyError as e:
        raise CatalogError(f"gluing checks need Table S entry {e.args[0]}") from e
    m1 = {"m": 1}
    return [
        _glue_case("S.6+S.8", "mf", [GluePart(s6), GluePart(s8)]),
        _glue_case("S.13+S.13", "mf", [GluePart(s13, m1), GluePart(s13, m1)]),
        _glue_case("S.1 self", "rejected", [GluePart(s1, {"m": 2})], [((0, 0), (0, 1))]),
        _glue_case("S.9+S.9", "rejected", [GluePart(s9), GluePart(s9)]),
    ]


def _verify_job(args: tuple[TableEntry, int, int]) -> EntryReport:
    entry, cap, seeds = args
    return verify_entry(entry, cap, seeds=seeds)


def _summaries(entries: Sequence[EntryReport]) -> list[TableSummary]:
    out: list[TableSummary] = []
    for table in dict.fromkeys(e.table for e in entries):
        rows = [e for e in entries if e.table == table]
        instances = [i for e in rows for i in e.instances]
        out.append(
            TableSummary(
                table=table,
                entries=len(rows),
                instances=len(instances),
                passed=sum(i.passed for i in instances),
                failed=sum(not i.passed for i in instances),
                timing=Timing(duration_s=sum(e.timing.duration_s for e in rows)),
            )
        )
    return out


def verify_all(
    cap: int,
    *,
    table: str | None = None,
    jobs: int = 1,
    seeds: int = 0,
    entries: Sequence[TableEntry] | None = None,
) -> VerifyReport:
    """Verify a table (or the whole catalog), the negative fixtures and the gluing rules.

    Fixtures run only for the whole catalog; gluing checks run for the whole catalog and
    for Table S. With ``jobs > 1`` entries are verified in worker processes.

    Raises:
        ParamError: ``cap`` is negative.
        CatalogError: unknown table, or a catalog that cannot be loaded.
    """
    if cap < 0:
        raise ParamError(f"parameter cap must be >= 0, got {cap}")
    start = time.perf_counter()
    pool = tuple(entries) if entries is not None else load_catalog()
    selected = entries_for_table(table, pool)
    jobs_args = [(e, cap, seeds) for e in selected]
    if jobs > 1 and len(jobs_args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            reports = list(executor.map(_verify_job, jobs_args))
    else:
        reports = [_verify_job(a) for a in jobs_args]

    fixtures = [verify_fixture(f) for f in negative_fixtures()] if table is None else []
    gluing = glue_cases(pool) if table in (None, "S") else []
    passed = (
        all(r.passed for r in reports)
        and all(f.passed for f in fixtures)
        and all(g.passed for g in gluing)
    )
    report = VerifyReport(
        cap=cap,
        seeds=seeds,
        passed=passed,
        tables=_summaries(reports),
        entries=reports,
        fixtures=fixtures,
        glue=gluing,
        timing=Timing(duration_s=time.perf_counter() - start),
    )
    logger.info(
        "verify cap=%d table=%s entries=%d passed=%s duration_s=%.3f",
        cap,
        table or "all",
        len(reports),
        passed,
        report.timing.duration_s,
    )
    return report
