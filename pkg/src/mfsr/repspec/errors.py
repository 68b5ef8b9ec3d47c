"""Errors raised while building or transforming symplectic representations."""


class RepError(ValueError):
    """Malformed representation data (layout, component kinds, torus indices)."""


class RealizabilityError(RepError):
    """The module admits no saturated symplectic realization, or gluing broke saturation."""


class LinkError(RepError):
    """An sl₂ identification that the gluing rules forbid."""
