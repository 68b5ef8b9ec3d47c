"""MF verdict: rank test on Φ₊ᵗ, rank, generic isotropy and criterion (A)."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass

from mfsr.criterion.isotropy import IsotropyDescription, generic_isotropy
from mfsr.criterion.linear import dependency_witness
from mfsr.criterion.reduction import ReductionResult, run_reduction
from mfsr.lattice import AlgebraShape, Weight
from mfsr.repspec import (
    RepError,
    SymplecticRep,
    algebra_dimension,
    algebra_rank,
    dim,
    realize,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Verdict:
    """Outcome of the reduction for one representation."""

    multiplicity_free: bool
    rank: int | None
    phi_plus: tuple[Weight, ...]
    isotropy: IsotropyDescription | None
    witness: tuple[int, ...] | None
    result: ReductionResult
    shape: AlgebraShape

    def key(self) -> tuple[bool, int | None, str | None]:
        """(mf, rank, isotropy): the part that must not depend on choices."""
        return (
            self.multiplicity_free,
            self.rank,
            None if self.isotropy is None else str(self.isotropy),
        )


def is_multiplicity_free(rep: SymplecticRep, *, rng: random.Random | None = None) -> Verdict:
    """Realize ``rep``, run the reduction and test Φ₊ᵗ for linear independence.

    A zero or repeated weight in Φ₊ᵗ makes it dependent.

    Raises:
        RepError: the weights of ``rep`` are not symmetric (no symplectic structure).
    """
    system, phi, glued = realize(rep)
    if not phi.is_symmetric():
        raise RepError(
            "the module is not self-dual, so it carries no symplectic form; "
            "write non-self-dual summands as T(...)"
        )
    result = run_reduction(system, phi, rng=rng)
    witness = dependency_witness(result.phi_plus)
    if witness is None:
        isotropy = generic_isotropy(result, glued.shape)
        verdict = Verdict(True, len(result.phi_plus), result.phi_plus, isotropy, None, result, glued.shape)
    else:
        verdict = Verdict(False, None, result.phi_plus, None, witness, result, glued.shape)
    logger.debug(
        "verdict shape=%s mf=%s rank=%s steps=%d",
        glued.shape.label(),
        verdict.multiplicity_free,
        verdict.rank,
        len(result.trace),
    )
    return verdict


def criterion_A(rep: SymplecticRep) -> bool:
    """Necessary condition dim V ≤ dim g + rk g."""
    return dim(rep) <= algebra_dimension(rep) + algebra_rank(rep)


def choice_invariant(rep: SymplecticRep, seeds: int, *, base_seed: int = 0) -> bool:
    """Return whether ``seeds`` random selection policies agree with the default policy."""
    reference = is_multiplicity_free(rep).key()
    for seed in range(base_seed, base_seed + seeds):
        other = is_multiplicity_free(rep, rng=random.Random(seed)).key()
        if other != reference:
            logger.warning("choice_dependence seed=%d default=%s random=%s", seed, reference, other)
            return False
    return True
