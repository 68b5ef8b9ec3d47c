"""Turn domain results into report models, and serialize them."""

from __future__ import annotations

import json
import logging
import time
from typing import Any, Literal

from pydantic import BaseModel

from mfsr.catalog.entries import TableEntry
from mfsr.criterion import Verdict, criterion_A, is_multiplicity_free
from mfsr.repspec import (
    SymplecticRep,
    algebra_dimension,
    algebra_rank,
    assemble_saturated,
    check_saturated,
    decompose_components,
    dim,
    duality_class,
    glue_links,
    link_pair_list,
    module_summands,
    trivial_factors,
)
from mfsr.reports.models import (
    CheckReport,
    ComponentModel,
    DecomposeReport,
    EntryInfo,
    SaturateReport,
    StepModel,
    Timing,
    VerdictModel,
)

logger = logging.getLogger(__name__)


def verdict_model(verdict: Verdict, *, trace: bool = False) -> VerdictModel:
    result = verdict.result
    steps = None
    if trace:
        steps = [
            StepModel(
                chosen=list(s.chosen),
                multiplicity=s.multiplicity,
                positive=[list(w) for w in s.positive],
                removed=[list(w) for w in s.removed],
                remaining_roots=s.remaining_roots,
                remaining_weights=s.remaining_weights,
            )
            for s in result.trace
        ]
    return VerdictModel(
        multiplicity_free=verdict.multiplicity_free,
        rank=verdict.rank,
        isotropy=None if verdict.isotropy is None else str(verdict.isotropy),
        phi_plus=[list(w) for w in verdict.phi_plus],
        witness=None if verdict.witness is None else list(verdict.witness),
        delta0_size=len(result.delta0),
        singular=[list(w) for w in result.phi0_singular.slots()],
        steps=len(result.trace),
        trace=steps,
    )


def component_models(rep: SymplecticRep) -> list[ComponentModel]:
    """Canonical components of ``rep`` (links glued) with their duality classes."""
    glued = glue_links(rep) if rep.links else rep
    return [
        ComponentModel(
            kind=c.kind.value,
            label=c.label(glued.shape),
            dimension=c.dimension(glued.shape),
            duality=duality_class(glued.shape, c.summand).value,
            torus_index=c.torus_index,
        )
        for c in decompose_components(glued)
    ]


def rep_warnings(rep: SymplecticRep) -> list[str]:
    """Saturation violations and remarks, plus factors acting trivially."""
    report = check_saturated(rep)
    out = [f"not saturated: {v}" for v in report.violations]
    out.extend(report.remarks)
    for i in trivial_factors(rep):
        out.append(f"factor {i} ({rep.shape.factors[i].label()}) acts trivially")
    return out


def check_report(
    text: str,
    rep: SymplecticRep,
    *,
    command: Literal["check", "trace", "glue"] = "check",
) -> CheckReport:
    """Run the reduction on ``rep`` and collect the verdict, saturation and warnings.

    Raises:
        RepError: the module carries no symplectic form.
        ReductionError: an internal invariant of the reduction failed.
    """
    start = time.perf_counter()
    saturation = check_saturated(rep)
    verdict = is_multiplicity_free(rep)
    report = CheckReport(
        command=command,
        input=text,
        shape=rep.shape.label(),
        dimension=dim(rep),
        algebra_dimension=algebra_dimension(rep),
        algebra_rank=algebra_rank(rep),
        saturated=saturation.saturated,
        violations=list(saturation.violations),
        warnings=rep_warnings(rep),
        criterion_a=criterion_A(rep),
        verdict=verdict_model(verdict, trace=command == "trace"),
        timing=Timing(duration_s=time.perf_counter() - start),
    )
    logger.info(
        "command=%s shape=%s mf=%s rank=%s duration_s=%.3f",
        command,
        report.shape,
        report.verdict.multiplicity_free,
        report.verdict.rank,
        report.timing.duration_s,
    )
    return report


def decompose_report(text: str, rep: SymplecticRep) -> DecomposeReport:
    start = time.perf_counter()
    return DecomposeReport(
        input=text,
        shape=rep.shape.label(),
        links=link_pair_list(rep.links),
        components=component_models(rep),
        warnings=rep_warnings(rep),
        timing=Timing(duration_s=time.perf_counter() - start),
    )


def saturate_report(text: str, rep: SymplecticRep) -> SaturateReport:
    """Assemble the saturated representation on the underlying module of ``rep``.

    Raises:
        RealizabilityError: the module has no saturated symplectic structure.
    """
    start = time.perf_counter()
    shape, summands = module_summands(rep)
    saturated = assemble_saturated(shape, summands)
    return SaturateReport(
        input=text,
        shape=saturated.shape.label(),
        components=component_models(saturated),
        was_saturated=check_saturated(rep).saturated,
        timing=Timing(duration_s=time.perf_counter() - start),
    )


def entry_info(entry: TableEntry) -> EntryInfo:
    return EntryInfo(
        id=entry.id,
        table=entry.table,
        template=entry.template,
        params=list(entry.params),
        constraints=list(entry.constraints),
        rank=entry.rank,
        isotropy=entry.isotropy,
        wv=entry.wv,
        i=entry.i,
        notes=entry.notes,
        underlined=list(entry.underlined),
    )


def _zero_timing(data: Any) -> Any:
    if isinstance(data, dict):
        return {k: 0.0 if k == "duration_s" else _zero_timing(v) for k, v in data.items()}
    if isinstance(data, list):
        return [_zero_timing(v) for v in data]
    return data


def report_dict(report: BaseModel, *, timing: bool = True) -> dict[str, Any]:
    """JSON-ready dict; ``timing=False`` zeroes every ``duration_s``."""
    data = report.model_dump(mode="json")
    return data if timing else _zero_timing(data)


def dump_json(report: BaseModel, *, timing: bool = True) -> str:
    """Serialize with sorted keys so identical inputs give identical bytes."""
    return json.dumps(report_dict(report, timing=timing), sort_keys=True, indent=2, ensure_ascii=False)
