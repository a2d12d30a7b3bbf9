"""Milnor numbers of hypersurface germs and of their generic plane sections.

sectional(f, k) samples random k-planes through the origin; the Milnor
number of a generic section is the minimum over planes (special planes only
inflate it, or lose finiteness), so two independent draws that agree give
the generic value with high confidence and the protocol retries with larger
coefficient bounds when they do not.  All randomness is seeded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cycles import sigma_ideal
from .local import local_dim, local_quotient_dim
from .poly import Polynomial, restrict


def milnor(f: Polynomial) -> int | None:
    """Milnor number of f at the origin, None when the singularity is not
    isolated.  Smooth points give 0."""
    if f.is_zero:
        raise ValueError("f must be nonzero")
    if f.constant_term != 0:
        raise ValueError("f(0) != 0")
    return local_quotient_dim(sigma_ideal(f))


def _section_seed(seed: int, k: int, round_: int, draw: int) -> int:
    return ((seed * 1000003 + k) * 31 + round_) * 2 + draw


def sectional(f: Polynomial, k: int, seed: int = 0) -> int | None:
    """Milnor number of the restriction of f to a generic k-plane through
    the origin; k = 0 gives 1 by convention and k = dim gives milnor(f).

    Two independent random planes per round must agree; otherwise the bound
    doubles, and after the last round the smallest defined value wins (a
    special plane can only overshoot).  None when no sampled section had an
    isolated singularity."""
    n1 = len(f.vars)
    if not 0 <= k <= n1:
        raise ValueError(f"need 0 <= k <= {n1}")
    if k == 0:
        return 1
    if k == n1:
        return milnor(f)
    best = None
    bound = 10
    for round_ in range(5):
        a = milnor(restrict(f, k, seed=_section_seed(seed, k, round_, 0), bound=bound))
        b = milnor(restrict(f, k, seed=_section_seed(seed, k, round_, 1), bound=bound))
        if a is not None and a == b:
            return a
        for value in (a, b):
            if value is not None and (best is None or value < best):
                best = value
        bound *= 2
    return best


@dataclass(frozen=True)
class SectionalProfile:
    """Sectional Milnor numbers mu(f^[k]) for k = 0..dim, None marking a
    section that never came out isolated."""

    values: tuple
    seed: int

    @classmethod
    def compute(cls, f: Polynomial, seed: int = 0) -> "SectionalProfile":
        n1 = len(f.vars)
        return cls(
            values=tuple(sectional(f, k, seed=seed) for k in range(n1 + 1)),
            seed=seed,
        )


@dataclass(frozen=True)
class TeissierReport:
    """Verdicts on the sectional profile of an isolated singularity: the
    ratio chain mu^[k]/mu^[k-1] must not increase as k drops, which forces
    mu^[k+1] >= (mult-1) * mu^[k] and mu^[k] >= (mult-1)^k."""

    profile: SectionalProfile
    ratios: tuple
    monotone: bool
    power_bounds: bool
    mult_consistent: bool

    @property
    def holds(self) -> bool:
        return self.monotone and self.power_bounds and self.mult_consistent


def teissier_chain(f: Polynomial, seed: int = 0) -> TeissierReport:
    if f.is_zero or f.constant_term != 0:
        raise ValueError("f must be nonzero with f(0) = 0")
    if f.mult_origin() < 2:
        raise ValueError("f is smooth at the origin")
    if local_dim(sigma_ideal(f)) > 0:
        raise ValueError("the singularity is not isolated")
    profile = SectionalProfile.compute(f, seed=seed)
    mu = profile.values
    if any(v is None for v in mu):
        raise RuntimeError("a sectional Milnor number came out undefined")
    ratios = tuple(Fraction(mu[k], mu[k - 1]) for k in range(1, len(mu)))
    m1 = f.mult_origin() - 1
    return TeissierReport(
        profile=profile,
        ratios=ratios,
        monotone=all(ratios[k] <= ratios[k + 1] for k in range(len(ratios) - 1)),
        power_bounds=all(
            mu[k + 1] >= m1 * mu[k] and mu[k] >= m1**k for k in range(len(mu) - 1)
        ),
        mult_consistent=mu[0] == 1 and mu[1] == m1,
    )
