"""Le cycles, relative polar cycles, and their intersection numbers.

A cycle is carried as a saturated ideal: multiplicities along components sit
in the non-reduced structure, and unwanted components (inside the critical
locus for polar cycles, origin-supported junk mid-pipeline) are removed by
saturation rather than by any explicit decomposition.

intersection_number slices one hypersurface at a time.  Coordinate
hyperplanes are sliced by substitution, which shrinks the ring; a general
form is added to the ideal.  Between slices the ideal is saturated by the
maximal ideal, and the dimension at the origin must drop by exactly one per
slice; any violation makes the answer None (undefined) rather than a wrong
integer.  The final step counts a local colength, which is exact because the
last slice cuts a saturated (hence Cohen-Macaulay) curve by a
nonzerodivisor.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from .groebner import Ideal, radical_member, saturate
from .local import hs_multiplicity, local_dim, local_quotient_dim
from .poly import Frame, Polynomial, apply_frame


def sigma_ideal(f: Polynomial) -> Ideal:
    """The ideal of all partial derivatives; its zero set is the critical
    locus of f."""
    gens = [f.partial(i) for i in range(len(f.vars))]
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        raise ValueError("constant polynomial has no critical locus ideal")
    return Ideal(gens, vars=f.vars)


def _polar_of(h: Polynomial, j: int, s: int | None = None) -> Ideal:
    """Polar ideal of an already-reframed h: partials j..n, with components
    inside the critical locus removed.  j = n+1 gives the zero ideal (the
    whole space), which makes the j = n step of the cycle recursion uniform.

    When the critical dimension s is known, a principal ideal with j > s
    needs no saturation: principal ideals are unmixed, and their components
    have dimension j, too big to fit inside the critical locus."""
    n1 = len(h.vars)
    if not 1 <= j <= n1 + 1:
        raise ValueError(f"need 1 <= j <= {n1 + 1}")
    gens = [h.partial(i) for i in range(j, n1)]
    gens = [g for g in gens if not g.is_zero]
    if j == n1 + 1 or not gens:
        return Ideal((), vars=h.vars)
    if s is not None and j > s and len(gens) == 1:
        return Ideal(gens, vars=h.vars)
    # saturating by the critical ideal only tests the partials below j: the
    # generators above vanish on every component of their own zero set
    low = [h.partial(i) for i in range(j)]
    low = [g for g in low if not g.is_zero]
    return saturate(Ideal(gens, vars=h.vars), Ideal(low or (), vars=h.vars))


def polar_ideal(f: Polynomial, frame: Frame, j: int) -> Ideal:
    return _polar_of(apply_frame(f, frame), j)


def _max_ideal(vars: tuple[str, ...]) -> Ideal:
    return Ideal([Polynomial.var_index(i, vars) for i in range(len(vars))], vars=vars)


def _coordinate_index(p: Polynomial) -> int | None:
    """Index i when p is a nonzero multiple of the variable z_i."""
    if len(p.terms) != 1:
        return None
    (e,) = p.terms
    if sum(e) != 1:
        return None
    return e.index(1)


def intersection_number(
    I: Ideal, forms: Sequence[Polynomial], diag: list | None = None
) -> int | None:
    """Local intersection number at the origin of the cycle of I with the
    given hypersurfaces, len(forms) matching the cycle dimension.

    I must carry no origin-supported junk (polar ideals come back saturated)
    and every component of V(I) must have dimension >= len(forms); both hold
    for the cycles produced in this module.  Under that guarantee one
    dimension check at the curve stage certifies the whole chain: each slice
    can cut the dimension at the origin by at most one, so a curve after
    len(forms)-1 slices forces every intermediate stage to have been proper,
    and a finite colength at the end does the same for the last cut.  The
    final count is exact because the curve, once saturated, is
    Cohen-Macaulay and the last form is then a nonzerodivisor.

    None means undefined: an improper slice or a degenerate form.  When a
    list is passed as diag, a description of the failure is appended."""
    d = len(forms)
    if d == 0:
        raise ValueError("need at least one hypersurface")

    def fail(step: int, why: str) -> None:
        if diag is not None:
            diag.append(f"step {step}: {why}")
        return None

    gens = list(I.gens)
    cur_vars = I.vars
    work = list(forms)

    def take(step: int, form: Polynomial) -> bool:
        """Slice by one form, by substitution when it is a coordinate."""
        nonlocal gens, cur_vars
        i = _coordinate_index(form)
        if i is not None and len(cur_vars) > 1:
            gens = [g.set_var_zero(i) for g in gens]
            gens = [g for g in gens if not g.is_zero]
            for k in range(step + 1, d):
                work[k] = work[k].set_var_zero(i)
            cur_vars = cur_vars[:i] + cur_vars[i + 1 :]
        else:
            gens = gens + [form]
        return True

    for step in range(d):
        form = work[step]
        if form.is_zero:
            return fail(step, "zero slicing form")
        if form.constant_term != 0:
            # hypersurface misses the origin; nothing left to count there
            return 0
        if step == d - 1:
            break
        take(step, form)
    if d > 1:
        J = saturate(Ideal(gens, vars=cur_vars), _max_ideal(cur_vars))
        ld = local_dim(J)
        if ld == -1:
            return 0
        if ld != 1:
            return fail(
                d - 2, f"{ld}-dimensional at the origin going into the last slice"
            )
        gens = list(J.gens)
    take(d - 1, work[d - 1])
    q = local_quotient_dim(Ideal(gens, vars=cur_vars))
    if q is None:
        return fail(d - 1, "final slice left a positive-dimensional germ")
    return q


@dataclass(frozen=True)
class LeRecord:
    """Le numbers lambda^0..lambda^s and relative polar numbers
    gamma^1..gamma^s at the origin, None marking an improper (undefined)
    intersection.  gamma^0 is identically zero and not stored."""

    s: int
    lam: tuple
    gam: tuple
    frame: Frame
    seed: int | None = None
    verified: bool | None = None

    @property
    def defined(self) -> tuple:
        return tuple(v is not None for v in self.lam)

    @property
    def fully_defined(self) -> bool:
        return all(v is not None for v in self.lam) and all(
            v is not None for v in self.gam
        )

    def lex_key(self) -> tuple:
        """(lambda^s, ..., lambda^0, gamma^s, ..., gamma^1); generic frames
        minimize this.  The gamma tail breaks ties between frames with the
        same Le numbers: a hyperplane tangent to a polar variety inflates
        gamma^j above mult Gamma^j without necessarily disturbing lambda."""
        if not self.fully_defined:
            raise ValueError("record has undefined entries")
        return tuple(reversed(self.lam)) + tuple(reversed(self.gam))


def _validate_singular(f: Polynomial) -> None:
    if f.is_zero:
        raise ValueError("f must be nonzero")
    if f.constant_term != 0:
        raise ValueError("f(0) != 0")
    for i in range(len(f.vars)):
        if f.partial(i).constant_term != 0:
            raise ValueError("the origin is not a critical point of f")


def lambda_numbers(
    f: Polynomial, frame: Frame | None = None, verify: bool = False
) -> LeRecord:
    """Le and relative polar numbers of f at the origin for one frame.

    Runs the cycle recursion Lambda^j + Gamma^j = Gamma^{j+1} . V(df/dz_j):
    lambda^j is the intersection number of Gamma^{j+1} with V(df/dz_j) and j
    coordinate hyperplanes, minus gamma^j.  Improper intersections leave the
    affected entries None.  With verify=True the slice cross-check
    (slice_check) verdict is attached to the record.
    """
    _validate_singular(f)
    n1 = len(f.vars)
    if frame is None:
        frame = Frame.identity(n1)
    h = apply_frame(f, frame)
    # the critical locus dimension does not depend on the frame; the original
    # coordinates keep the generators sparse
    s = local_dim(sigma_ideal(f))
    zvars = [Polynomial.var_index(i, h.vars) for i in range(n1)]
    polar = {j: _polar_of(h, j, s) for j in range(1, s + 2)}
    lam: list = [None] * (s + 1)
    gam_full: list = [None] * (s + 1)
    gam_full[0] = 0
    for j in range(s, -1, -1):
        if j >= 1:
            gam_full[j] = intersection_number(polar[j], zvars[:j])
        total = intersection_number(polar[j + 1], zvars[:j] + [h.partial(j)])
        if total is not None and gam_full[j] is not None:
            diff = total - gam_full[j]
            lam[j] = diff if diff >= 0 else None
    rec = LeRecord(
        s=s,
        lam=tuple(lam),
        gam=tuple(gam_full[1:]),
        frame=frame,
        seed=frame.seed,
    )
    if verify:
        rec = replace(rec, verified=slice_check(f, frame, rec))
    return rec


def generic_le(
    f: Polynomial, seed: int = 0, trials: int = 3, bound: int = 10
) -> LeRecord:
    """Generic Le numbers: lexicographic minimum (lambda^s first, relative
    polar numbers as tie-break) over random frames, the coefficient bound
    doubling when every frame in a round comes out undefined."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    _validate_singular(f)
    n1 = len(f.vars)
    best = None
    b = bound
    for round_ in range(5):
        for t in range(trials):
            fseed = seed * 1000003 + round_ * trials + t
            rec = lambda_numbers(f, Frame.random(n1, fseed, b))
            if rec.fully_defined and (best is None or rec.lex_key() < best.lex_key()):
                best = rec
        if best is not None:
            return best
        b *= 2
    raise RuntimeError(
        "no frame gave defined Le numbers; raise the coefficient bound or trials"
    )


def slice_check(f: Polynomial, frame: Frame, rec: LeRecord | None = None) -> bool | None:
    """Cross-check lambda^0 of f|V(z0) against gamma^1 + lambda^1.

    The two sides agree for frames generic enough that both are defined;
    None when either side is undefined (nothing to compare)."""
    if rec is None:
        rec = lambda_numbers(f, frame)
    h = apply_frame(f, frame)
    if len(h.vars) == 1:
        return None
    if rec.s >= 1:
        g1, l1 = rec.gam[0], rec.lam[1]
    else:
        z0 = Polynomial.var_index(0, h.vars)
        g1, l1 = intersection_number(_polar_of(h, 1), [z0]), 0
    if g1 is None or l1 is None:
        return None
    h0 = h.set_var_zero(0)
    if h0.is_zero or h0.constant_term != 0:
        return None
    if any(h0.partial(i).constant_term != 0 for i in range(len(h0.vars))):
        return None
    rec0 = lambda_numbers(h0)
    if rec0.lam[0] is None:
        return None
    return rec0.lam[0] == g1 + l1


def polar_mult(f: Polynomial, frame: Frame, j: int) -> int:
    """Multiplicity at the origin of the polar cycle Gamma^j; 0 when it
    misses the origin."""
    P = polar_ideal(f, frame, j)
    ld = local_dim(P)
    if ld == -1:
        return 0
    if ld != j:
        raise ValueError(f"polar ideal is {ld}-dimensional, expected {j}")
    return hs_multiplicity(P)


def polar_curve_mult(f: Polynomial, frame: Frame) -> int:
    """Multiplicity of the relative polar curve at the origin."""
    return polar_mult(f, frame, 1)


@dataclass(frozen=True)
class MprBounds:
    """Bounds on the maximum polar ratio: lower <= mpr <= both uppers.
    upper_polar needs gamma^1 defined and equal to mult Gamma^1; under the
    same hypothesis with gamma^1 != 0 the lower bound is mult f, else 1."""

    lower: int
    upper_simple: int
    upper_polar: int | None
    exact: Fraction | None = None


def mpr_bounds(f: Polynomial, frame: Frame, rec: LeRecord | None = None) -> MprBounds:
    if rec is None:
        rec = lambda_numbers(f, frame)
    lam0 = rec.lam[0]
    if lam0 is None:
        raise ValueError("lambda^0 undefined for this frame")
    h = apply_frame(f, frame)
    if rec.s >= 1:
        g1 = rec.gam[0]
    else:
        g1 = intersection_number(_polar_of(h, 1), [Polynomial.var_index(0, h.vars)])
    hyp = g1 is not None and g1 == polar_curve_mult(f, frame)
    return MprBounds(
        lower=f.mult_origin() if (hyp and g1 != 0) else 1,
        upper_simple=lam0 + 1,
        upper_polar=lam0 - g1 + 2 if hyp else None,
    )


def polar_ratios(
    f: Polynomial, frame: Frame, components: Sequence[tuple[Ideal, int]]
) -> tuple[Fraction, ...]:
    """Polar ratios of user-supplied irreducible components of the polar
    curve, validated against the computed Gamma^1 (containment of each
    component and additivity of multiplicities)."""
    h = apply_frame(f, frame)
    P = _polar_of(h, 1)
    ld = local_dim(P)
    if ld == -1:
        if components:
            raise ValueError("polar curve is empty but components were supplied")
        return ()
    if ld != 1:
        raise ValueError(f"polar ideal is {ld}-dimensional, expected a curve")
    total = 0
    for C, p in components:
        if C.vars != h.vars:
            raise ValueError("component in the wrong ring")
        if not (isinstance(p, int) and p >= 1):
            raise ValueError("component multiplicity must be a positive integer")
        if local_dim(C) != 1:
            raise ValueError("component is not a curve through the origin")
        if not all(radical_member(g, C) for g in P.groebner().elements):
            raise ValueError("component does not lie on the polar curve")
        total += p * hs_multiplicity(C)
    if total != hs_multiplicity(P):
        raise ValueError("component multiplicities do not add up to mult Gamma^1")
    z0 = Polynomial.var_index(0, h.vars)
    d0 = h.partial(0)
    ratios = []
    for C, _ in components:
        b = intersection_number(C, [z0])
        if b is None:
            # component inside V(z0): ratio 1 by convention
            ratios.append(Fraction(1))
            continue
        a = intersection_number(C, [d0])
        if a is None or b == 0:
            raise ValueError("component meets V(df/dz0) improperly")
        ratios.append(Fraction(a, b) + 1)
    return tuple(ratios)


def mpr_exact(
    f: Polynomial, frame: Frame, components: Sequence[tuple[Ideal, int]]
) -> Fraction:
    """Maximum polar ratio from a supplied component decomposition of the
    polar curve; 1 when the curve is empty."""
    return max(polar_ratios(f, frame, components), default=Fraction(1))


def germ_subset(I: Ideal, J: Ideal) -> bool:
    """Whether V(I) is contained in V(J) as germs at the origin.

    Global radical membership is a cheap sufficient test; the germ-accurate
    fallback asks whether every component of V(I) through the origin lies in
    V(J), i.e. whether the saturation I : J^infinity misses the origin."""
    if I.vars != J.vars:
        raise ValueError("variable mismatch")
    if all(radical_member(g, I) for g in J.gens):
        return True
    return local_dim(saturate(I, J)) == -1
