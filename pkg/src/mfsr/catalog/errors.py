"""Catalog errors."""


class CatalogError(ValueError):
    """The catalog file is missing, has a bad header, or holds a malformed entry."""


class ParamError(ValueError):
    """A parameter expression is not allowed, or parameters violate an entry's constraints."""
