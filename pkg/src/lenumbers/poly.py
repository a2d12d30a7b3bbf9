"""Sparse multivariate polynomials over the rationals, linear frames, and the
input-side transforms (frame changes, generic restriction, add-a-power).

Polynomials are dicts from exponent tuples to nonzero Fractions over a fixed,
ordered variable tuple.  The variable order is semantically meaningful: the
first variable is the distinguished slicing coordinate z0 used throughout the
cycle computations, so "apply a frame" always means rewriting f in the frame's
coordinates and then treating those as the standard ones.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .orders import _grevlex_key

ExpVec = tuple[int, ...]


class Polynomial:
    """Immutable sparse polynomial with Fraction coefficients."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Sequence[str], terms: dict[ExpVec, Fraction] | None = None):
        if not vars:
            raise ValueError("a polynomial needs at least one variable")
        object.__setattr__(self, "vars", tuple(vars))
        clean: dict[ExpVec, Fraction] = {}
        n = len(self.vars)
        for exps, c in (terms or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {n} variables")
            clean[tuple(exps)] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):  # pragma: no cover - guard only
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "Polynomial":
        return cls(vars, {})

    @classmethod
    def constant(cls, c, vars: Sequence[str]) -> "Polynomial":
        return cls(vars, {(0,) * len(vars): Fraction(c)})

    @classmethod
    def variable(cls, name: str, vars: Sequence[str]) -> "Polynomial":
        i = tuple(vars).index(name)
        e = [0] * len(vars)
        e[i] = 1
        return cls(vars, {tuple(e): Fraction(1)})

    @classmethod
    def var_index(cls, i: int, vars: Sequence[str]) -> "Polynomial":
        e = [0] * len(vars)
        e[i] = 1
        return cls(vars, {tuple(e): Fraction(1)})

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    def mult_origin(self) -> int:
        """Order of vanishing at the origin (minimal total degree of a term)."""
        if not self.terms:
            raise ValueError("multiplicity of the zero polynomial is undefined")
        return min(sum(e) for e in self.terms)

    def homogeneous_degree(self) -> int | None:
        """The common total degree of all terms, or None if inhomogeneous."""
        if not self.terms:
            raise ValueError("zero polynomial has no homogeneous degree")
        degs = {sum(e) for e in self.terms}
        return degs.pop() if len(degs) == 1 else None

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.vars)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.vars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Polynomial(self.vars, {e: c * v for e, v in self.terms.items()})
        self._check(other)
        out: dict[ExpVec, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Polynomial(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        result = Polynomial.constant(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self):
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash((self.vars, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # -- calculus and substitution ----------------------------------------

    def partial(self, i: int) -> "Polynomial":
        """Partial derivative with respect to the i-th variable."""
        out: dict[ExpVec, Fraction] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            d = list(e)
            d[i] -= 1
            out[tuple(d)] = c * e[i]
        return Polynomial(self.vars, out)

    def compose_linear(
        self, rows: Sequence[Sequence[Fraction]], new_vars: Sequence[str]
    ) -> "Polynomial":
        """Substitute x_i -> sum_j rows[i][j] * w_j and expand in new_vars."""
        if len(rows) != len(self.vars):
            raise ValueError("need one substitution row per variable")
        m = len(tuple(new_vars))
        forms = []
        for row in rows:
            if len(row) != m:
                raise ValueError("substitution row length mismatch")
            forms.append(
                Polynomial(
                    new_vars,
                    {
                        tuple(1 if j == k else 0 for k in range(m)): Fraction(c)
                        for j, c in enumerate(row)
                        if c
                    },
                )
            )
        # cache powers of each linear form up to the largest exponent used
        cache: list[dict[int, Polynomial]] = [
            {0: Polynomial.constant(1, new_vars)} for _ in forms
        ]

        def power(i: int, k: int) -> Polynomial:
            have = cache[i]
            if k not in have:
                top = max(have)
                p = have[top]
                for j in range(top + 1, k + 1):
                    p = p * forms[i]
                    have[j] = p
            return have[k]

        total = Polynomial.zero(new_vars)
        for e, c in self.terms.items():
            piece = Polynomial.constant(c, new_vars)
            for i, k in enumerate(e):
                if k:
                    piece = piece * power(i, k)
            total = total + piece
        return total

    def set_var_zero(self, i: int) -> "Polynomial":
        """The restriction to the hyperplane {x_i = 0}, with x_i dropped."""
        if len(self.vars) == 1:
            raise ValueError("cannot drop the last variable")
        new_vars = self.vars[:i] + self.vars[i + 1 :]
        out: dict[ExpVec, Fraction] = {}
        for e, c in self.terms.items():
            if e[i]:
                continue
            out[e[:i] + e[i + 1 :]] = c
        return Polynomial(new_vars, out)

    # -- printing ----------------------------------------------------------

    def _term_str(self, e: ExpVec, c: Fraction) -> str:
        factors = []
        for name, k in zip(self.vars, e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append(f"{name}^{k}")
        if not factors:
            return str(abs(c))
        mono = "*".join(factors)
        a = abs(c)
        return mono if a == 1 else f"{a}*{mono}"

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: _grevlex_key(t[0]), reverse=True)
        pieces = []
        for idx, (e, c) in enumerate(items):
            body = self._term_str(e, c)
            if idx == 0:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, vars={self.vars})"


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>\*\*|[-+*/^()−]))"
)


class ParseError(ValueError):
    pass


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            rest = text[pos:]
            stripped = rest.lstrip()
            if stripped:
                at = pos + len(rest) - len(stripped)
                raise ParseError(f"unexpected character {stripped[0]!r} at {at}")
            break
        if m.group("num"):
            out.append(("num", m.group("num"), m.start()))
        elif m.group("name"):
            out.append(("name", m.group("name"), m.start()))
        else:
            op = m.group("op")
            if op == "−":
                op = "-"
            if op == "**":
                op = "^"
            out.append(("op", op, m.start()))
        pos = m.end()
    return out


class _Parser:
    """Recursive descent over +, -, *, ^, parentheses and rational literals."""

    def __init__(self, tokens, vars):
        self.tokens = tokens
        self.i = 0
        self.vars = tuple(vars)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", -1)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r} at position {pos}")

    def parse(self) -> Polynomial:
        p = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"trailing input {val!r} at position {pos}")
        return p

    def expr(self) -> Polynomial:
        kind, val, _ = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.take()
            negate = val == "-"
        p = self.term()
        if negate:
            p = -p
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                q = self.term()
                p = p - q if val == "-" else p + q
            else:
                return p

    def term(self) -> Polynomial:
        p = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                p = p * self.factor()
            else:
                return p

    def factor(self) -> Polynomial:
        kind, val, pos = self.peek()
        if kind == "op" and val == "-":
            self.take()
            return -self.factor()
        p = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, exp, pos = self.take()
            if kind != "num":
                raise ParseError(f"expected integer exponent at position {pos}")
            p = p ** int(exp)
        return p

    def atom(self) -> Polynomial:
        kind, val, pos = self.take()
        if kind == "num":
            num = int(val)
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "/":
                self.take()
                k3, v3, p3 = self.take()
                if k3 != "num":
                    raise ParseError(f"expected denominator at position {p3}")
                return Polynomial.constant(Fraction(num, int(v3)), self.vars)
            return Polynomial.constant(num, self.vars)
        if kind == "name":
            if val not in self.vars:
                raise ParseError(f"unknown variable {val!r} at position {pos}")
            return Polynomial.variable(val, self.vars)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        raise ParseError(f"unexpected token {val!r} at position {pos}")


def parse(text: str, vars: Sequence[str]) -> Polynomial:
    """Parse polynomial text over the given ordered variable tuple."""
    names = tuple(vars)
    if len(set(names)) != len(names) or not names:
        raise ParseError("variables must be a nonempty tuple of distinct names")
    for name in names:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
            raise ParseError(f"bad variable name {name!r}")
    return _Parser(_tokenize(text), names).parse()


# -- frames ----------------------------------------------------------------


def _det(mat: list[list[Fraction]]) -> Fraction:
    n = len(mat)
    m = [row[:] for row in mat]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return det


@dataclass(frozen=True)
class Frame:
    """An invertible linear coordinate tuple: row i is the linear form z_i."""

    matrix: tuple[tuple[Fraction, ...], ...]
    seed: int | None = None

    def __post_init__(self):
        n = len(self.matrix)
        mat = tuple(tuple(Fraction(c) for c in row) for row in self.matrix)
        if any(len(row) != n for row in mat):
            raise ValueError("frame matrix must be square")
        object.__setattr__(self, "matrix", mat)
        if _det([list(r) for r in mat]) == 0:
            raise ValueError("frame matrix is singular")

    @property
    def n(self) -> int:
        return len(self.matrix)

    @classmethod
    def identity(cls, n: int) -> "Frame":
        return cls(
            tuple(
                tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
            )
        )

    @classmethod
    def permutation(cls, perm: Sequence[int]) -> "Frame":
        """Frame whose i-th coordinate is the perm[i]-th old variable."""
        n = len(perm)
        return cls(
            tuple(
                tuple(Fraction(1 if j == perm[i] else 0) for j in range(n))
                for i in range(n)
            )
        )

    @classmethod
    def rotation(cls, n: int) -> "Frame":
        """The cyclic frame (z1, ..., z_{n-1}, z0)."""
        return cls.permutation([(i + 1) % n for i in range(n)])

    @classmethod
    def random(cls, n: int, seed: int, bound: int = 10) -> "Frame":
        rng = random.Random(seed)
        while True:
            rows = tuple(
                tuple(Fraction(rng.randint(-bound, bound)) for _ in range(n))
                for _ in range(n)
            )
            if _det([list(r) for r in rows]) != 0:
                return cls(rows, seed=seed)

    def inverse_rows(self) -> list[list[Fraction]]:
        """Rows of the inverse matrix (Gauss-Jordan over Fractions)."""
        n = self.n
        m = [list(row) + [Fraction(1 if i == j else 0) for j in range(n)]
             for i, row in enumerate(self.matrix)]
        for col in range(n):
            pivot = next(r for r in range(col, n) if m[r][col])
            m[col], m[pivot] = m[pivot], m[col]
            inv = 1 / m[col][col]
            m[col] = [a * inv for a in m[col]]
            for r in range(n):
                if r != col and m[r][col]:
                    f = m[r][col]
                    m[r] = [a - f * b for a, b in zip(m[r], m[col])]
        return [row[n:] for row in m]

    def compose(self, other: "Frame") -> "Frame":
        """The frame whose coordinates are self's, read in other's coordinates."""
        a, b = self.matrix, other.matrix
        n = self.n
        rows = tuple(
            tuple(sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(n))
            for i in range(n)
        )
        return Frame(rows, seed=self.seed)


def apply_frame(p: Polynomial, frame: Frame) -> Polynomial:
    """Rewrite p in the frame's coordinates (same variable names)."""
    if frame.n != len(p.vars):
        raise ValueError("frame size does not match variable count")
    return p.compose_linear(frame.inverse_rows(), p.vars)


def iomdine(f: Polynomial, m: int, a) -> tuple[Polynomial, Frame]:
    """The add-a-power transform f + a*z0^m with its rotated frame."""
    if not isinstance(m, int) or m < 2:
        raise ValueError("power m must be an integer >= 2")
    a = Fraction(a)
    if a == 0:
        raise ValueError("coefficient a must be nonzero")
    n = len(f.vars)
    g = f + Polynomial.var_index(0, f.vars) ** m * a
    return g, Frame.rotation(n)


def restrict(
    f: Polynomial,
    k: int,
    frame: Frame | None = None,
    seed: int | None = None,
    bound: int = 10,
) -> Polynomial:
    """Restrict f to a k-dimensional linear subspace.

    The first k variables survive; each eliminated variable is replaced by a
    linear combination of the survivors (random integer coefficients drawn
    from the seed unless an explicit frame supplies the subspace).
    """
    n = len(f.vars)
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= {n}")
    if k == n:
        return f
    if frame is not None:
        g = apply_frame(f, frame)
        for i in range(n - 1, k - 1, -1):
            g = g.set_var_zero(i)
        return g
    rng = random.Random(0 if seed is None else seed)
    new_vars = f.vars[:k]
    rows: list[list[Fraction]] = []
    for i in range(n):
        if i < k:
            rows.append([Fraction(1 if j == i else 0) for j in range(k)])
        else:
            rows.append([Fraction(rng.randint(-bound, bound)) for _ in range(k)])
    return f.compose_linear(rows, new_vars)
