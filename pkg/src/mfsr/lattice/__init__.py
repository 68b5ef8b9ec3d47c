"""Root data and weight multisets of reductive Lie algebras."""

from mfsr.lattice.cartan import (
    AlgebraShape,
    ShapeError,
    SimpleFactor,
    Weight,
    factor_data,
)
from mfsr.lattice.roots import (
    Root,
    RootSystem,
    build_root_system,
    coroot_pairing,
    height,
    restrict,
    simple_roots,
)
from mfsr.lattice.weights import (
    WeightError,
    WeightMultiset,
    dominant_conjugate,
    dual_highest_weight,
    dual_weights,
    embed,
    factor_dominant_conjugate,
    factor_weights,
    irreducible_weights,
    power_weights,
    reflect,
    tensor_weights,
    weyl_dimension,
    weyl_orbit,
)

__all__ = [
    "AlgebraShape",
    "Root",
    "RootSystem",
    "ShapeError",
    "SimpleFactor",
    "Weight",
    "WeightError",
    "WeightMultiset",
    "build_root_system",
    "coroot_pairing",
    "dominant_conjugate",
    "dual_highest_weight",
    "dual_weights",
    "embed",
    "factor_dominant_conjugate",
    "factor_data",
    "factor_weights",
    "height",
    "irreducible_weights",
    "power_weights",
    "reflect",
    "restrict",
    "simple_roots",
    "tensor_weights",
    "weyl_dimension",
    "weyl_orbit",
]
