"""Catalog entries: loading the JSON-lines file and instantiating parametric rows."""

from __future__ import annotations

import json
import logging
from collections.abc import Mapping
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, ValidationError

from mfsr import config
from mfsr.catalog.errors import CatalogError, ParamError
from mfsr.catalog.params import enumerate_params, evaluate, expand_template, holds, parameter_names
from mfsr.dsl import DslError, rep_from_text
from mfsr.criterion import IsotropyDescription, IsotropyFormatError, parse_isotropy
from mfsr.repspec import RepError, SymplecticRep

logger = logging.getLogger(__name__)

TABLES = ("1", "2", "11", "12", "22", "S")

TableName = Literal["1", "2", "11", "12", "22", "S"]


class TableEntry(BaseModel):
    """One table row (or parameter sub-row) with its printed rank and isotropy."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    id: str
    table: TableName
    template: str
    constraints: tuple[str, ...] = ()
    rank: str
    isotropy: str
    wv: str = ""
    i: str = ""
    notes: str = ""
    underlined: tuple[int, ...] = ()

    @property
    def params(self) -> tuple[str, ...]:
        """Sorted parameter names used by the template, constraints and formulas."""
        return parameter_names(
            templates=(self.template, self.isotropy),
            formulas=(*self.constraints, self.rank),
        )

    def instances(self, cap: int) -> list[dict[str, int]]:
        """Every admissible parameter assignment with all parameters <= ``cap``."""
        return enumerate_params(self.params, self.constraints, cap)

    def smallest(self) -> dict[str, int]:
        """The first admissible assignment, searching caps up to 16.

        Raises:
            ParamError: no assignment satisfies the constraints within that range.
        """
        for cap in (4, 8, 16):
            found = self.instances(cap)
            if found:
                return found[0]
        raise ParamError(f"entry {self.id} has no admissible parameters up to 16")


def describe_params(params: Mapping[str, int]) -> str:
    """``m=2,n=2``; the empty string for a row without parameters."""
    return ",".join(f"{k}={v}" for k, v in sorted(params.items()))


def _check_params(entry: TableEntry, params: Mapping[str, int]) -> None:
    expected = set(entry.params)
    given = set(params)
    if given != expected:
        missing = ", ".join(sorted(expected - given)) or "-"
        extra = ", ".join(sorted(given - expected)) or "-"
        raise ParamError(
            f"entry {entry.id} takes parameters ({', '.join(entry.params)}); missing: {missing}; unexpected: {extra}"
        )
    if not holds(entry.constraints, params):
        raise ParamError(
            f"parameters {describe_params(params)} violate the constraints of {entry.id}: "
            + "; ".join(entry.constraints)
        )


def instantiate_text(entry: TableEntry, params: Mapping[str, int]) -> str:
    """Return the DSL text of ``entry`` at ``params``.

    Raises:
        ParamError: wrong parameter names or violated constraints.
    """
    _check_params(entry, params)
    return expand_template(entry.template, params)


def instantiate(entry: TableEntry, params: Mapping[str, int] | None = None) -> SymplecticRep:
    """Build the concrete representation of ``entry`` at ``params``.

    Raises:
        ParamError: wrong parameter names or violated constraints.
        CatalogError: the expanded template is not a valid representation.
    """
    values = dict(params or {})
    text = instantiate_text(entry, values)
    try:
        return rep_from_text(text)
    except (DslError, RepError) as e:
        raise CatalogError(f"entry {entry.id} at {describe_params(values) or '-'} gives bad DSL {text!r}: {e}") from e


def expected_rank(entry: TableEntry, params: Mapping[str, int]) -> int:
    """The printed rank column evaluated at ``params``."""
    _check_params(entry, params)
    return evaluate(entry.rank, params)


def expected_isotropy(entry: TableEntry, params: Mapping[str, int]) -> IsotropyDescription:
    """The printed isotropy column at ``params``, normalized.

    Raises:
        CatalogError: the isotropy template does not parse.
    """
    _check_params(entry, params)
    text = expand_template(entry.isotropy, params)
    try:
        return parse_isotropy(text)
    except IsotropyFormatError as e:
        raise CatalogError(f"entry {entry.id}: isotropy {text!r} does not parse: {e}") from e


def read_catalog_header(path: Path) -> int:
    """Return the format version from the first line of ``path``.

    Raises:
        CatalogError: unreadable file, or the first line is not a version header.
    """
    try:
        with path.open(encoding="utf-8") as fh:
            first = fh.readline()
    except OSError as e:
        raise CatalogError(f"cannot read catalog {path}: {e}") from e
    try:
        header = json.loads(first)
    except json.JSONDecodeError as e:
        raise CatalogError(f"{path}:1: header is not JSON") from e
    if not isinstance(header, dict) or not isinstance(header.get("version"), int):
        raise CatalogError(f'{path}:1: expected a header like {{"version": {config.CATALOG_FORMAT_VERSION}}}')
    return header["version"]


def load_catalog(path: Path | None = None) -> tuple[TableEntry, ...]:
    """Load every entry from ``path`` (default: MFSR_CATALOG or the embedded catalog).

    Raises:
        CatalogError: bad header, unsupported version, malformed line or duplicate id.
    """
    source = path if path is not None else config.get_catalog_path()
    version = read_catalog_header(source)
    if version != config.CATALOG_FORMAT_VERSION:
        raise CatalogError(
            f"{source}: unsupported catalog version {version} (expected {config.CATALOG_FORMAT_VERSION})"
        )
    entries: list[TableEntry] = []
    seen: set[str] = set()
    lines = source.read_text(encoding="utf-8").splitlines()
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            entry = TableEntry.model_validate(json.loads(line))
        except json.JSONDecodeError as e:
            raise CatalogError(f"{source}:{lineno}: not JSON ({e.msg})") from e
        except ValidationError as e:
            raise CatalogError(f"{source}:{lineno}: invalid entry: {e.errors()[0]['msg']}") from e
        if entry.id in seen:
            raise CatalogError(f"{source}:{lineno}: duplicate entry id {entry.id!r}")
        seen.add(entry.id)
        entries.append(entry)
    logger.debug("catalog path=%s entries=%d", source, len(entries))
    return tuple(entries)


def get_entry(entry_id: str, entries: tuple[TableEntry, ...] | None = None) -> TableEntry:
    """Look up one entry by id.

    Raises:
        CatalogError: unknown id.
    """
    for entry in entries if entries is not None else load_catalog():
        if entry.id == entry_id:
            return entry
    raise CatalogError(f"no catalog entry with id {entry_id!r}")


def entries_for_table(table: str | None, entries: tuple[TableEntry, ...] | None = None) -> tuple[TableEntry, ...]:
    """Entries of one table, or all entries when ``table`` is None.

    Raises:
        CatalogError: ``table`` is not one of 1, 2, 11, 12, 22, S.
    """
    pool = entries if entries is not None else load_catalog()
    if table is None:
        return pool
    if table not in TABLES:
        raise CatalogError(f"unknown table {table!r}; expected one of {', '.join(TABLES)}")
    return tuple(e for e in pool if e.table == table)
