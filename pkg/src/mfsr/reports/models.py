"""Pydantic report models shared by the CLI, the MCP tools and ``docs/report.schema.json``."""

from __future__ import annotations

from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field, RootModel

Vector = list[int]


class _Model(BaseModel):
    model_config = ConfigDict(extra="forbid")


class Timing(_Model):
    """Wall-clock time; the only field that differs between identical runs."""

    duration_s: float = 0.0


class StepModel(_Model):
    chosen: Vector
    multiplicity: int
    positive: list[Vector]
    removed: list[Vector]
    remaining_roots: int
    remaining_weights: int


class VerdictModel(_Model):
    multiplicity_free: bool
    rank: int | None
    isotropy: str | None
    phi_plus: list[Vector]
    witness: list[int] | None
    delta0_size: int
    singular: list[Vector]
    steps: int
    trace: list[StepModel] | None = None


class ComponentModel(_Model):
    kind: Literal["type1", "type2"]
    label: str
    dimension: int
    duality: Literal["symplectic", "orthogonal", "notSelfDual"]
    torus_index: int | None = None


class CheckReport(_Model):
    """``check``, ``trace`` and ``glue``: one representation and its verdict."""

    command: Literal["check", "trace", "glue"]
    input: str
    shape: str
    dimension: int
    algebra_dimension: int
    algebra_rank: int
    saturated: bool
    violations: list[str] = Field(default_factory=list)
    warnings: list[str] = Field(default_factory=list)
    criterion_a: bool
    verdict: VerdictModel
    timing: Timing = Field(default_factory=Timing)


class DecomposeReport(_Model):
    command: Literal["decompose"] = "decompose"
    input: str
    shape: str
    links: list[list[int]] = Field(default_factory=list)
    components: list[ComponentModel]
    warnings: list[str] = Field(default_factory=list)
    timing: Timing = Field(default_factory=Timing)


class SaturateReport(_Model):
    """The saturated representation assembled from the underlying module of the input."""

    command: Literal["saturate"] = "saturate"
    input: str
    shape: str
    components: list[ComponentModel]
    was_saturated: bool
    timing: Timing = Field(default_factory=Timing)


class Mismatch(_Model):
    check: str
    expected: str
    actual: str


class InstanceReport(_Model):
    params: dict[str, int]
    text: str
    passed: bool
    rank: int | None = None
    isotropy: str | None = None
    mismatches: list[Mismatch] = Field(default_factory=list)
    timing: Timing = Field(default_factory=Timing)


class EntryReport(_Model):
    id: str
    table: str
    passed: bool
    instances: list[InstanceReport]
    timing: Timing = Field(default_factory=Timing)


class FixtureReport(_Model):
    id: str
    provenance: str
    text: str | None
    passed: bool
    phi_plus: list[Vector] = Field(default_factory=list)
    witness: list[int] | None = None
    mismatches: list[Mismatch] = Field(default_factory=list)
    timing: Timing = Field(default_factory=Timing)


class GlueCase(_Model):
    """One gluing of Table S entries and whether it behaved as the linking rules require."""

    name: str
    expected: Literal["mf", "rejected"]
    passed: bool
    detail: str
    timing: Timing = Field(default_factory=Timing)


class TableSummary(_Model):
    table: str
    entries: int
    instances: int
    passed: int
    failed: int
    timing: Timing = Field(default_factory=Timing)


class VerifyReport(_Model):
    command: Literal["tables verify"] = "tables verify"
    cap: int
    seeds: int
    passed: bool
    tables: list[TableSummary]
    entries: list[EntryReport]
    fixtures: list[FixtureReport] = Field(default_factory=list)
    glue: list[GlueCase] = Field(default_factory=list)
    timing: Timing = Field(default_factory=Timing)


class EntryInfo(_Model):
    id: str
    table: str
    template: str
    params: list[str]
    constraints: list[str]
    rank: str
    isotropy: str
    wv: str
    i: str
    notes: str
    underlined: list[int]


class ListReport(_Model):
    command: Literal["tables list"] = "tables list"
    table: str | None
    entries: list[EntryInfo]


class ShowReport(_Model):
    command: Literal["tables show"] = "tables show"
    entry: EntryInfo
    cap: int
    instances: list[InstanceReport]


AnyReport = Annotated[
    CheckReport | DecomposeReport | SaturateReport | VerifyReport | ListReport | ShowReport,
    Field(discriminator="command"),
]


class Report(RootModel[AnyReport]):
    """Any report the CLI prints in JSON form, discriminated by ``command``."""
