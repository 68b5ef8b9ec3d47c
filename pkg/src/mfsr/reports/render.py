"""Human-readable rendering of reports (``--format text``)."""

from __future__ import annotations

from mfsr import config
from mfsr.reports.models import (
    CheckReport,
    DecomposeReport,
    EntryInfo,
    ListReport,
    SaturateReport,
    ShowReport,
    VerdictModel,
    VerifyReport,
)


def _vec(v: list[int]) -> str:
    return "(" + ",".join(str(c) for c in v) + ")"


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _timing(seconds: float, timing: bool) -> str:
    return f"{seconds:.3f}s" if timing else "-"


def _verdict_lines(v: VerdictModel) -> list[str]:
    lines = [f"multiplicity free: {_yes(v.multiplicity_free)}"]
    if v.multiplicity_free:
        lines.append(f"rank: {v.rank}")
        lines.append(f"generic isotropy 𝔩: {v.isotropy}")
    lines.append(f"Φ₊ᵗ ({len(v.phi_plus)}): " + (" ".join(_vec(w) for w in v.phi_plus) or "∅"))
    if v.witness is not None:
        lines.append("dependency witness: " + " ".join(str(c) for c in v.witness))
    if v.singular:
        lines.append(f"singular weights: {' '.join(_vec(w) for w in v.singular)}")
    lines.append(f"|Δ₀| = {v.delta0_size}, steps = {v.steps}")
    if v.trace is not None:
        limit = config.get_max_trace_steps()
        shown = v.trace if limit == 0 else v.trace[:limit]
        for n, step in enumerate(shown, start=1):
            lines.append(
                f"  step {n}: χ={_vec(step.chosen)} ×{step.multiplicity} "
                f"|P|={len(step.positive)} |Q|={len(step.removed)} "
                f"→ {step.remaining_roots} roots, {step.remaining_weights} weights"
            )
        if len(shown) < len(v.trace):
            lines.append(f"  … {len(v.trace) - len(shown)} more steps")
    return lines


def render_check(report: CheckReport, *, timing: bool = True) -> str:
    lines = [
        f"input: {report.input}",
        f"𝔤 = {report.shape} (dim {report.algebra_dimension}, rank {report.algebra_rank}); dim V = {report.dimension}",
        f"saturated: {_yes(report.saturated)}; criterion A: {_yes(report.criterion_a)}",
        *_verdict_lines(report.verdict),
    ]
    lines.extend(f"warning: {w}" for w in report.warnings)
    lines.append(f"time: {_timing(report.timing.duration_s, timing)}")
    return "\n".join(lines)


def render_decompose(report: DecomposeReport | SaturateReport) -> str:
    lines = [f"input: {report.input}", f"𝔤 = {report.shape}"]
    if isinstance(report, DecomposeReport) and report.links:
        lines.append("links: " + ", ".join(f"{u}~{v}" for u, v in report.links))
    if isinstance(report, SaturateReport):
        lines.append(f"input was saturated: {_yes(report.was_saturated)}")
    for c in report.components:
        torus = "" if c.torus_index is None else f" t{c.torus_index}"
        lines.append(f"  {c.kind} {c.label} dim={c.dimension} {c.duality}{torus}")
    if isinstance(report, DecomposeReport):
        lines.extend(f"warning: {w}" for w in report.warnings)
    return "\n".join(lines)


def _entry_line(e: EntryInfo) -> str:
    cons = "; ".join(e.constraints) or "-"
    meta = " ".join(x for x in (f"W_V={e.wv}" if e.wv else "", f"i={e.i}" if e.i else "") if x)
    return f"{e.id:<7} {e.template}  [{cons}]  rank={e.rank}  𝔩={e.isotropy}  {meta}".rstrip()


def render_list(report: ListReport) -> str:
    return "\n".join(_entry_line(e) for e in report.entries)


def render_show(report: ShowReport) -> str:
    lines = [_entry_line(report.entry)]
    if report.entry.notes:
        lines.append(f"notes: {report.entry.notes}")
    if report.entry.underlined:
        lines.append(f"underlined sl(2) positions: {report.entry.underlined}")
    for inst in report.instances:
        params = ",".join(f"{k}={v}" for k, v in sorted(inst.params.items())) or "-"
        status = "ok" if inst.passed else "MISMATCH"
        lines.append(f"  {params:<10} {inst.text}  rank={inst.rank} 𝔩={inst.isotropy} {status}")
        lines.extend(f"    {m.check}: expected {m.expected}, got {m.actual}" for m in inst.mismatches)
    return "\n".join(lines)


def render_verify(report: VerifyReport, *, timing: bool = True) -> str:
    lines = [f"cap={report.cap} seeds={report.seeds}"]
    for t in report.tables:
        lines.append(
            f"Table {t.table:<3} entries={t.entries:<3} instances={t.instances:<4} "
            f"passed={t.passed:<4} failed={t.failed:<3} {_timing(t.timing.duration_s, timing)}"
        )
    for entry in report.entries:
        for inst in entry.instances:
            for m in inst.mismatches:
                params = ",".join(f"{k}={v}" for k, v in sorted(inst.params.items())) or "-"
                lines.append(f"MISMATCH {entry.id} {params} {m.check}: expected {m.expected}, got {m.actual}")
    if report.fixtures:
        ok = sum(f.passed for f in report.fixtures)
        lines.append(f"negative fixtures: {ok}/{len(report.fixtures)} not multiplicity free")
        for f in report.fixtures:
            for m in f.mismatches:
                lines.append(f"MISMATCH {f.id} {m.check}: expected {m.expected}, got {m.actual}")
    for g in report.glue:
        status = "ok" if g.passed else "MISMATCH"
        lines.append(f"glue {g.name}: {status} (expected {g.expected}; {g.detail})")
    lines.append(f"{'PASS' if report.passed else 'FAIL'} in {_timing(report.timing.duration_s, timing)}")
    return "\n".join(lines)


def render_text(report: object, *, timing: bool = True) -> str:
    """Dispatch on the report type."""
    match report:
        case CheckReport():
            return render_check(report, timing=timing)
        case DecomposeReport() | SaturateReport():
            return render_decompose(report)
        case ListReport():
            return render_list(report)
        case ShowReport():
            return render_show(report)
        case VerifyReport():
            return render_verify(report, timing=timing)
    raise TypeError(f"no text renderer for {type(report).__name__}")
