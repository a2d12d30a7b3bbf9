"""Shared corpus of singular germs with known critical dimension.

Every member is singular at the origin.  s is the dimension of the critical
locus there, derived by hand from the Jacobian ideal; mu is the Milnor
number for the isolated members (Brieskorn product formula or an ordinary
multiple point).  The property suites sweep this list with several seeds,
so members stay small enough that a generic Le computation is cheap."""

from dataclasses import dataclass
from functools import lru_cache

from lenumbers import generic_le, parse


@dataclass(frozen=True)
class Member:
    name: str
    text: str
    vars: tuple
    s: int
    homogeneous: bool
    mu: int | None = None

    @property
    def poly(self):
        return parse(self.text, self.vars)


CORPUS = (
    # isolated
    Member("a2", "x^2+y^3", ("x", "y"), 0, False, 2),
    Member("e6ish", "x^3+y^4", ("x", "y"), 0, False, 6),
    Member("cubic3", "x^3+y^3+z^3", ("x", "y", "z"), 0, True, 8),
    Member("quad3", "x^2+y^2+z^2", ("x", "y", "z"), 0, True, 1),
    Member("a2sus", "x^2+y^2+z^3", ("x", "y", "z"), 0, False, 2),
    Member("cubic4", "x^3+y^3+z^3+w^3", ("x", "y", "z", "w"), 0, True, 16),
    Member("triple", "x^2*y+x*y^2", ("x", "y"), 0, True, 4),
    Member("shear", "x^2+2*x*y+y^2+y^3", ("x", "y"), 0, False, 2),
    Member("brieskorn", "x^2+y^3+z^5", ("x", "y", "z"), 0, False, 8),
    # one-dimensional critical locus
    Member("bn0", "(x^2-z^2+y^2)*(x-z)", ("x", "y", "z"), 1, True),
    Member("tx", "y^3-x^4-t^2*x^2", ("t", "x", "y"), 1, False),
    Member("umbrella", "x^2-y^2*z", ("x", "y", "z"), 1, False),
    Member("cylinder", "y^2+z^2", ("x", "y", "z"), 1, True),
    Member("x2y2", "x^2*y^2", ("x", "y"), 1, True),
    Member("fatline", "(x+y)^2*(x-y)", ("x", "y"), 1, True),
    Member("axes", "x^2*y^2+z^4", ("x", "y", "z"), 1, True),
    Member("cuspsus", "z^2+(x^2+y^3)^2", ("x", "y", "z"), 1, False),
    Member("twolines", "y^2-x^2*t^2", ("t", "x", "y"), 1, False),
    Member("fatcusp", "x^3+x^2*y", ("x", "y"), 1, True),
    Member("fatcircle", "(x^2+y^2)^2", ("x", "y"), 1, True),
    # two-dimensional critical locus
    Member("planes", "x^2*y^2", ("x", "y", "z"), 2, True),
    Member("fatsurf", "(y^2+z^3)^2", ("x", "y", "z"), 2, False),
    Member("sheet4", "z^2+x^2*y^2", ("x", "y", "z", "w"), 2, False),
    Member("q4", "y^2+z^2", ("w", "x", "y", "z"), 2, True),
    Member("cuspsheet", "w^2+(x^2+y^3)^2", ("x", "y", "z", "w"), 2, False),
)

SEEDS = (0, 1, 2)

BY_NAME = {m.name: m for m in CORPUS}


@lru_cache(maxsize=None)
def generic_record(name: str, seed: int):
    """Generic Le record of a corpus member, shared across the suites."""
    return generic_le(BY_NAME[name].poly, seed=seed, trials=3)
