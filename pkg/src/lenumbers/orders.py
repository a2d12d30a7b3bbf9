"""Monomial orders on exponent tuples.

An order is described by a small frozen value object; the actual comparison is
done through a sort key so that ``max(terms, key=order.key(n))`` picks the
leading monomial.  Global orders (every variable smaller than 1... i.e. 1 is
the smallest monomial) drive Buchberger; the local order (1 largest) drives
the tangent-cone algorithm.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

ExpVec = tuple[int, ...]
Key = Callable[[ExpVec], tuple]


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order: one of grevlex, lex, an elimination block order, or
    the degree-first local order (negative degree + reverse lex tie-break)."""

    kind: str
    # variable indices eliminated first; only meaningful for kind == "elim"
    block: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.kind not in ("grevlex", "lex", "elim", "local"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.kind == "elim" and not self.block:
            raise ValueError("elimination order needs a nonempty block")

    @property
    def is_global(self) -> bool:
        return self.kind != "local"

    def key(self, nvars: int) -> Key:
        """Return a sort key; larger key means larger monomial."""
        if self.kind == "lex":
            return lambda e: e
        if self.kind == "grevlex":
            return _grevlex_key
        if self.kind == "local":
            # 1 is the largest monomial; ties broken as in grevlex
            return lambda e: (-sum(e), tuple(-x for x in reversed(e)))
        first = self.block
        rest = tuple(i for i in range(nvars) if i not in first)

        def elim_key(e: ExpVec) -> tuple:
            eb = [e[i] for i in first]
            er = [e[i] for i in rest]
            return (
                sum(eb),
                tuple(-x for x in reversed(eb)),
                sum(er),
                tuple(-x for x in reversed(er)),
            )

        return elim_key


def _grevlex_key(e: ExpVec) -> tuple:
    return (sum(e), tuple(-x for x in reversed(e)))


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")
LOCAL = MonomialOrder("local")


def elimination_order(block: tuple[int, ...]) -> MonomialOrder:
    """Block order that eliminates the given variable indices."""
    return MonomialOrder("elim", tuple(sorted(block)))
