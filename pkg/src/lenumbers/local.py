"""Local computations at the origin: standard bases, dimensions, colengths.

Standard bases for the degree-first local order are computed by Lazard's
homogenization trick: homogenize each generator, run the global engine under
an order that restricts to the local one, set the new variable to 1.  Mora's
tangent cone algorithm (weak normal forms with the ecart rule, intermediate
results joining the reducer set) is kept alongside as an independent engine;
it swells on dense generators but is the classical reference point.
Dimension, colength and multiplicity of the local ring are read off the
Hilbert series of the leading ideal, whose numerator we compute by the usual
pivot recursion N(I) = N(I + (x)) + T*N(I : x).

Further counting routes live here deliberately.  mora_quotient_dim reads the
colength off the Mora engine's leading ideal, standard_monomial_count
enumerates the staircase box directly, and m_primary_colength extracts the
origin component globally (I : (I : m^infinity)) and counts its staircase.
They share as little code as possible, so each can vouch for the others.

The Buchberger pair criteria need care in the local order: divisibility no
longer bounds monomials from below, which breaks the product criterion's
proof, so the pair update here uses only the chain criterion.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .groebner import (
    Basis,
    Ideal,
    IPoly,
    _buchberger,
    _divides,
    _lcm_exp,
    _mul_exp,
    _normalize_sign,
    _strip,
    _to_int,
    ideal_quotient,
    saturate,
)
from .orders import GREVLEX, LOCAL, ExpVec, _grevlex_key
from .poly import Polynomial

_MAX_REDUCTIONS = 200000


def _max_deg(d: IPoly) -> int:
    return max(sum(e) for e in d)


def _mora_nf(h: IPoly, red: list[list], keyf) -> IPoly:
    """Weak normal form of h: some unit multiple of h minus an ideal element,
    with an irreducible leading monomial.  red entries are [lm, lc, ecart,
    poly]; intermediate results with smaller ecart than every reducer join
    the list for the duration of the call."""
    T = list(red)
    h = _strip(dict(h))
    steps = 0
    while h:
        lm = max(h, key=keyf)
        best = None
        for idx, (glm, glc, gec, g) in enumerate(T):
            if _divides(glm, lm):
                if best is None or gec < best[2]:
                    best = (glm, glc, gec, g)
        if best is None:
            return h
        glm, glc, gec, g = best
        deg = sum(lm)
        ecart_h = _max_deg(h) - deg
        if gec > ecart_h:
            T.append([lm, h[lm], ecart_h, dict(h)])
        c = h[lm]
        shift = tuple(a - b for a, b in zip(lm, glm))
        nh: IPoly = {e: glc * v for e, v in h.items()}
        for e, v in g.items():
            ee = _mul_exp(e, shift)
            nv = nh.get(ee, 0) - c * v
            if nv:
                nh[ee] = nv
            else:
                nh.pop(ee, None)
        h = _strip(nh)
        steps += 1
        if steps > _MAX_REDUCTIONS:  # pragma: no cover - safety valve
            raise RuntimeError("local reduction did not terminate")
    return h


def _update_pairs_local(lms: list[ExpVec], pairs: set[tuple[int, int]], t: int):
    """Pair update by the chain criterion alone (safe for local orders)."""
    lmt = lms[t]
    lcms = {i: _lcm_exp(lms[i], lmt) for i in range(t)}
    drop = set()
    for (i, j) in pairs:
        lij = _lcm_exp(lms[i], lms[j])
        if _divides(lmt, lij) and lcms[i] != lij and lcms[j] != lij:
            drop.add((i, j))
    pairs -= drop
    for i in range(t):
        li = lcms[i]
        if any(
            j != i and _divides(lcms[j], li) and lcms[j] != li for j in range(t)
        ):
            continue
        pairs.add((i, t))


def _standard_basis_ints(gens: list[IPoly], keyf) -> list[IPoly]:
    G: list[list] = []
    lms: list[ExpVec] = []
    pairs: set[tuple[int, int]] = set()

    def add(d: IPoly):
        d = _normalize_sign(d, keyf)
        lm = max(d, key=keyf)
        G.append([lm, d[lm], _max_deg(d) - sum(lm), d])
        lms.append(lm)
        _update_pairs_local(lms, pairs, len(G) - 1)

    for d in gens:
        if d:
            add(_strip(d))
    while pairs:
        i, j = min(
            pairs,
            key=lambda p: (_grevlex_key(_lcm_exp(lms[p[0]], lms[p[1]])), p[1], p[0]),
        )
        pairs.discard((i, j))
        lcm = _lcm_exp(lms[i], lms[j])
        si = tuple(a - b for a, b in zip(lcm, lms[i]))
        sj = tuple(a - b for a, b in zip(lcm, lms[j]))
        s: IPoly = {}
        for e, v in G[i][3].items():
            s[_mul_exp(e, si)] = G[j][1] * v
        for e, v in G[j][3].items():
            ee = _mul_exp(e, sj)
            nv = s.get(ee, 0) - G[i][1] * v
            if nv:
                s[ee] = nv
            else:
                s.pop(ee, None)
        if not s:
            continue
        r = _mora_nf(_strip(s), G, keyf)
        if r:
            add(r)
    # minimal (not reduced: tail reduction need not terminate locally)
    keep = []
    for idx, lm in enumerate(lms):
        if any(
            o != idx and _divides(lms[o], lm) and (lms[o] != lm or o < idx)
            for o in range(len(lms))
        ):
            continue
        keep.append(idx)
    out = [G[i][3] for i in keep]
    out.sort(key=lambda p: keyf(max(p, key=keyf)), reverse=True)
    return out


def _homog_key(e: ExpVec) -> tuple:
    """Global order on k[x.., t] (t the last variable) that homogenizes the
    local order: total degree first, ties by the local key of the x part."""
    xs = e[:-1]
    return (sum(e), -sum(xs), tuple(-v for v in reversed(xs)))


def _lazard_standard_ints(gens: list[IPoly]) -> list[IPoly]:
    """Standard basis leading data without Mora: homogenize each generator,
    run the global engine under the homogenizing order, set t = 1.

    Mora reduction swells badly on dense generators; the homogenized global
    computation is far better behaved and Lazard's theorem makes its
    dehomogenization a standard basis for the local order."""
    hgens = []
    for d in gens:
        deg = max(sum(e) for e in d)
        hgens.append({e + (deg - sum(e),): c for e, c in d.items()})
    return [{e[:-1]: c for e, c in d.items()} for d in _buchberger(hgens, _homog_key)]


def local_standard_basis(I: Ideal) -> Basis:
    """Standard basis of I for the local order, cached on the ideal."""
    with I._lock:
        cached = I._cache.get(LOCAL)
    if cached is not None:
        return cached
    ints = _lazard_standard_ints([_to_int(g) for g in I.gens if not g.is_zero])
    basis = Basis(I.vars, LOCAL, ints)
    with I._lock:
        I._cache.setdefault(LOCAL, basis)
    return basis


def mora_normal_form(p: Polynomial, basis: Basis) -> Polynomial:
    """Weak normal form of p against a local standard basis: zero exactly
    when p lies in the ideal of the localization at the origin."""
    if basis.order != LOCAL:
        raise ValueError("mora_normal_form needs a local-order basis")
    if p.vars != basis.vars:
        raise ValueError("variable mismatch")
    if p.is_zero:
        return p
    keyf = LOCAL.key(len(basis.vars))
    red = [[lm, lc, _max_deg(d) - sum(lm), d] for lm, lc, d in basis._red]
    r = _mora_nf(_to_int(p), red, keyf)
    if not r:
        return Polynomial.zero(p.vars)
    lm = max(r, key=keyf)
    return Polynomial(p.vars, {e: Fraction(v, r[lm]) for e, v in r.items()})


def local_leading_monomials(I: Ideal) -> tuple[ExpVec, ...]:
    basis = local_standard_basis(I)
    return tuple(lm for lm, _, _ in basis._red)


# -- Hilbert series of a monomial ideal ------------------------------------


def _minimalize(gens: frozenset[ExpVec]) -> frozenset[ExpVec]:
    return frozenset(
        m for m in gens if not any(o != m and _divides(o, m) for o in gens)
    )


def _poly_mul_one_minus_t(coeffs: tuple[int, ...], d: int) -> tuple[int, ...]:
    # multiply by 1 - T^d
    out = list(coeffs) + [0] * d
    for i, c in enumerate(coeffs):
        out[i + d] -= c
    return tuple(out)


def hilbert_numerator(lms, nvars: int) -> tuple[int, ...]:
    """Coefficients of N(T) where the Hilbert series of k[x]/(lms) is
    N(T) / (1-T)^nvars."""
    memo: dict[frozenset, tuple[int, ...]] = {}

    def rec(gens: frozenset[ExpVec]) -> tuple[int, ...]:
        if not gens:
            return (1,)
        if any(sum(e) == 0 for e in gens):
            return (0,)
        got = memo.get(gens)
        if got is not None:
            return got
        mixed = [e for e in gens if sum(1 for x in e if x) > 1]
        if not mixed:
            out = (1,)
            for e in gens:
                out = _poly_mul_one_minus_t(out, sum(e))
        else:
            counts = [0] * nvars
            for e in mixed:
                for i, x in enumerate(e):
                    if x:
                        counts[i] += 1
            piv = max(range(nvars), key=lambda i: (counts[i], -i))
            unit = tuple(1 if i == piv else 0 for i in range(nvars))
            plus = _minimalize(frozenset(gens) | {unit})
            colon = _minimalize(
                frozenset(
                    tuple(x - 1 if i == piv and x else x for i, x in enumerate(e))
                    for e in gens
                )
            )
            a = rec(plus)
            b = rec(colon)
            out = tuple(
                (a[i] if i < len(a) else 0) + (b[i - 1] if 0 < i <= len(b) else 0)
                for i in range(max(len(a), len(b) + 1))
            )
        memo[gens] = out
        return out

    return rec(_minimalize(frozenset(lms)))


def _strip_one_minus_t(coeffs: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Write N(T) = (1-T)^c * Q(T) with Q(1) != 0; returns (c, Q)."""
    if not any(coeffs):
        raise ValueError("zero numerator has no well-defined factorization")
    c = 0
    cur = list(coeffs)
    while sum(cur) == 0:
        # synthetic division by (1 - T): q_i = sum of cur[0..i]
        acc = 0
        q = []
        for v in cur[:-1]:
            acc += v
            q.append(acc)
        cur = q if q else [0]
        c += 1
    return c, tuple(cur)


def local_dim(I: Ideal) -> int:
    """Krull dimension of the localization at the origin; -1 when the origin
    is not on V(I)."""
    basis = local_standard_basis(I)
    lms = [lm for lm, _, _ in basis._red]
    if any(sum(lm) == 0 for lm in lms):
        return -1
    n = len(I.vars)
    c, _ = _strip_one_minus_t(hilbert_numerator(lms, n))
    return n - c


def local_quotient_dim(I: Ideal) -> int | None:
    """Vector space dimension of O/I at the origin; None when infinite."""
    basis = local_standard_basis(I)
    lms = [lm for lm, _, _ in basis._red]
    if any(sum(lm) == 0 for lm in lms):
        return 0
    n = len(I.vars)
    c, q = _strip_one_minus_t(hilbert_numerator(lms, n))
    if c < n:
        return None
    return sum(q)


def mora_quotient_dim(I: Ideal) -> int | None:
    """local_quotient_dim with the Mora engine in place of the
    homogenization route; an independent cross-check, not a fast path."""
    keyf = LOCAL.key(len(I.vars))
    ints = _standard_basis_ints([_to_int(g) for g in I.gens if not g.is_zero], keyf)
    lms = [max(d, key=keyf) for d in ints]
    if any(sum(lm) == 0 for lm in lms):
        return 0
    c, q = _strip_one_minus_t(hilbert_numerator(lms, len(I.vars)))
    if c < len(I.vars):
        return None
    return sum(q)


def hs_multiplicity(I: Ideal) -> int:
    """Hilbert-Samuel multiplicity of the local ring at the origin."""
    basis = local_standard_basis(I)
    lms = [lm for lm, _, _ in basis._red]
    if any(sum(lm) == 0 for lm in lms):
        raise ValueError("origin does not lie on the variety")
    _, q = _strip_one_minus_t(hilbert_numerator(lms, len(I.vars)))
    return sum(q)


# -- independent counting routes -------------------------------------------


def standard_monomial_count(lms, nvars: int, limit: int = 10**7) -> int | None:
    """Count monomials outside the monomial ideal by walking the staircase
    box; None when the count is infinite (some variable has no pure power)."""
    gens = list(_minimalize(frozenset(lms)))
    if any(sum(e) == 0 for e in gens):
        return 0
    bounds = [None] * nvars
    for e in gens:
        support = [i for i, x in enumerate(e) if x]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or e[i] < bounds[i]:
                bounds[i] = e[i]
    if any(b is None for b in bounds):
        return None
    size = 1
    for b in bounds:
        size *= b
    if size > limit:
        raise RuntimeError("staircase box too large to enumerate")
    count = 0
    for m in itertools.product(*(range(b) for b in bounds)):
        if not any(_divides(e, m) for e in gens):
            count += 1
    return count


def m_primary_colength(I: Ideal) -> int:
    """Colength of the origin component of I, found globally: saturate away
    everything through other points (I : m^infinity), then quotient back.
    Agrees with local_quotient_dim whenever that is finite."""
    m = Ideal(
        [Polynomial.var_index(i, I.vars) for i in range(len(I.vars))],
        vars=I.vars,
    )
    away = saturate(I, m)
    origin = ideal_quotient(I, away)
    basis = origin.groebner(GREVLEX)
    if basis.contains_unit():
        return 0
    count = standard_monomial_count(basis.leading_monomials(), len(I.vars))
    if count is None:
        raise ValueError("origin component is not zero-dimensional")
    return count
