"""Executable encoding of the classification tables, the negative fixtures and the gluing rules."""

from mfsr.catalog.entries import (
    TABLES,
    TableEntry,
    describe_params,
    entries_for_table,
    expected_isotropy,
    expected_rank,
    get_entry,
    instantiate,
    instantiate_text,
    load_catalog,
    read_catalog_header,
)
from mfsr.catalog.errors import CatalogError, ParamError
from mfsr.catalog.fixtures import NegativeFixture, negative_fixtures
from mfsr.catalog.params import enumerate_params, evaluate, expand_template, holds, parameter_names, so
from mfsr.catalog.verify import (
    GluePart,
    glue,
    glue_cases,
    underlined_factors,
    verify_all,
    verify_entry,
    verify_fixture,
    verify_instance,
)

__all__ = [
    "TABLES",
    "CatalogError",
    "GluePart",
    "NegativeFixture",
    "ParamError",
    "TableEntry",
    "describe_params",
    "entries_for_table",
    "enumerate_params",
    "evaluate",
    "expand_template",
    "expected_isotropy",
    "expected_rank",
    "get_entry",
    "glue",
    "glue_cases",
    "holds",
    "instantiate",
    "instantiate_text",
    "load_catalog",
    "negative_fixtures",
    "parameter_names",
    "read_catalog_header",
    "so",
    "underlined_factors",
    "verify_all",
    "verify_entry",
    "verify_fixture",
    "verify_instance",
]
