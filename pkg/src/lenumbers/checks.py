"""Checkers for the inequalities relating Le numbers, sectional Milnor
numbers, multiplicities and polar ratios.

Each checker returns a list of IneqReport carrying exact rational sides.
Nothing here ever aborts a batch: an input a checker cannot decide produces
a skip-report that says why.  Identities that are only guaranteed for
generic coordinates are folded into the verdict exactly when the caller
left the frame choice to us.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Sequence

from .cycles import (
    LeRecord,
    generic_le,
    intersection_number,
    germ_subset,
    lambda_numbers,
    mpr_bounds,
    mpr_exact,
    polar_curve_mult,
    polar_ideal,
    polar_mult,
    sigma_ideal,
)
from .groebner import Ideal
from .local import local_dim
from .milnor import sectional, teissier_chain
from .poly import Frame, ParseError, Polynomial, apply_frame, iomdine, parse, restrict


@dataclass(frozen=True)
class IneqReport:
    """One checked relation.

    holds compares lhs against rhs in the direction the checker's name
    implies (usually at least, sometimes at most or exact equality);
    equality is always the literal lhs == rhs.  A skipped report leaves
    both sides None and explains itself in reason."""

    name: str
    lhs: Fraction | None
    rhs: Fraction | None
    holds: bool
    equality: bool
    skipped: bool = False
    reason: str | None = None
    context: dict = field(default_factory=dict)


def _skip(name: str, reason: str, **ctx) -> IneqReport:
    return IneqReport(name, None, None, False, False, True, reason, dict(ctx))


def _rep(name: str, lhs, rhs, holds: bool, **ctx) -> IneqReport:
    lhs = Fraction(lhs)
    rhs = Fraction(rhs)
    return IneqReport(name, lhs, rhs, holds, lhs == rhs, context=dict(ctx))


def _le_record(f, frame, seed, trials, bound):
    """(record, generic flag); record is None when no frame worked."""
    if frame is not None:
        return lambda_numbers(f, frame), False
    try:
        return generic_le(f, seed=seed, trials=trials, bound=bound), True
    except (ValueError, RuntimeError):
        return None, True


def check_funbound(
    f: Polynomial,
    frame: Frame | None = None,
    seed: int = 0,
    trials: int = 3,
    bound: int = 10,
) -> list[IneqReport]:
    """Multiplicity bound: sum of (mult-1)^j lambda^j against
    (mult-1)^(variable count), with equality required of homogeneous
    inputs."""
    rec, generic = _le_record(f, frame, seed, trials, bound)
    if rec is None or any(v is None for v in rec.lam):
        return [_skip("funbound", "Le numbers undefined for this frame")]
    m1 = f.mult_origin() - 1
    lhs = sum(m1**j * rec.lam[j] for j in range(rec.s + 1))
    rhs = m1 ** len(f.vars)
    homog = f.homogeneous_degree() is not None
    holds = lhs >= rhs and (lhs == rhs or not homog)
    return [
        _rep(
            "funbound",
            lhs,
            rhs,
            holds,
            f=str(f),
            lam=rec.lam,
            mult=m1 + 1,
            homogeneous=homog,
            seed=seed,
            generic=generic,
        )
    ]


def check_teissier(f: Polynomial, seed: int = 0) -> list[IneqReport]:
    """Log-convexity of the sectional Milnor sequence for an isolated
    singularity; lhs/rhs are the top two consecutive ratios."""
    try:
        rep = teissier_chain(f, seed=seed)
    except (ValueError, RuntimeError) as e:
        return [_skip("teissier", str(e))]
    lhs = rep.ratios[-1]
    rhs = rep.ratios[-2] if len(rep.ratios) >= 2 else Fraction(1)
    return [
        _rep(
            "teissier",
            lhs,
            rhs,
            rep.holds,
            profile=rep.profile.values,
            ratios=tuple(str(r) for r in rep.ratios),
            monotone=rep.monotone,
            power_bounds=rep.power_bounds,
            mult_consistent=rep.mult_consistent,
            seed=seed,
        )
    ]


def check_mainone(
    f: Polynomial,
    frame: Frame | None = None,
    seed: int = 0,
    trials: int = 3,
    bound: int = 10,
) -> list[IneqReport]:
    """The s <= 1 Minkowski-type inequality between lambda^0, lambda^1 and
    the top two sectional Milnor numbers."""
    n = len(f.vars) - 1
    if n < 1:
        return [_skip("mainone", "needs at least two variables")]
    rec, generic = _le_record(f, frame, seed, trials, bound)
    if rec is None:
        return [_skip("mainone", "Le numbers undefined")]
    if rec.s > 1:
        return [_skip("mainone", f"critical locus has dimension {rec.s}")]
    lam0 = rec.lam[0]
    lam1 = rec.lam[1] if rec.s >= 1 else 0
    if lam0 is None or lam1 is None:
        return [_skip("mainone", "Le numbers undefined for this frame")]
    mun = sectional(f, n, seed=seed)
    mun1 = sectional(f, n - 1, seed=seed)
    if not mun or not mun1:
        return [_skip("mainone", "sectional Milnor number undefined")]
    lhs = Fraction(lam0 + (mun - mun1 + 1) * lam1, mun)
    rhs = Fraction(mun, mun1)
    return [
        _rep(
            "mainone",
            lhs,
            rhs,
            lhs >= rhs,
            lam0=lam0,
            lam1=lam1,
            mu_top=mun,
            mu_next=mun1,
            s=rec.s,
            seed=seed,
            generic=generic,
        )
    ]


def check_mainmany(
    f: Polynomial,
    frame: Frame | None = None,
    seed: int = 0,
    trials: int = 3,
    bound: int = 10,
) -> list[IneqReport]:
    """The general Minkowski-type inequality through the k_p recursion on
    generic slice profiles.

    When lambda^0 of the top slice vanishes the whole statement shifts
    down: f is replaced by its restriction to a generic plane one
    dimension above the largest slice with nonzero lambda^0."""
    n = len(f.vars) - 1
    if n < 1:
        return [_skip("mainmany", "needs at least two variables")]

    cache: dict[int, LeRecord | None] = {}

    def profile(k: int) -> LeRecord | None:
        if k not in cache:
            g = restrict(f, k, seed=seed * 53 + 11 * k, bound=bound)
            rec_k, _ = _le_record(g, None, seed, trials, bound)
            cache[k] = rec_k
        return cache[k]

    def lam0_of(k: int) -> int | None:
        if k == 0:
            return 1
        p = profile(k)
        return None if p is None else p.lam[0]

    omega = n
    while omega >= 1:
        l0 = lam0_of(omega)
        if l0 is None:
            return [_skip("mainmany", f"slice profile at dimension {omega} undefined")]
        if l0 != 0:
            break
        omega -= 1
    if omega < 1:
        return [_skip("mainmany", "every slice has vanishing lambda^0")]
    shifted = omega < n

    if shifted:
        A = profile(omega + 1)
        generic = True
    else:
        A, generic = _le_record(f, frame, seed, trials, bound)
    if A is None:
        return [_skip("mainmany", "Le numbers undefined")]
    su = A.s
    if any(A.lam[i] is None for i in range(su + 1)):
        return [_skip("mainmany", "Le numbers undefined for this frame")]
    B = profile(omega)
    C = profile(omega - 1) if omega - 1 >= 1 else None
    if B is None or (omega - 1 >= 1 and C is None):
        return [_skip("mainmany", "slice profile undefined")]

    def lamA(i):
        return A.lam[i] if i <= A.s else 0

    def lamB(i):
        return B.lam[i] if i <= B.s else 0

    lam0C = 1 if C is None else C.lam[0]

    def lamC(i):
        return 0 if C is None or i > C.s else C.lam[i]

    # k_1 = lambda^0 of the top slice; each later k adds one more term of
    # the slice profile weighted by the product of the earlier k's
    ks: list[int] = []
    for p in range(1, su + 1):
        val, prod = lamB(0), 1
        for i in range(1, p):
            prod *= ks[i - 1]
            val += lamB(i) * prod
        ks.append(val)

    def weighted(lam, top):
        val, prod = lam(0), 1
        for i in range(1, top + 1):
            prod *= ks[i - 1]
            val += lam(i) * prod
        return val

    D = weighted(lamB, su - 1)
    rhsden = weighted(lamC, su - 2) if C is not None else lam0C
    if D == 0 or rhsden == 0:
        return [_skip("mainmany", "degenerate denominator")]
    lhs = Fraction(weighted(lamA, su), D)
    rhs = Fraction(D, rhsden)

    ident: dict[str, bool] = {}
    if su >= 1:
        ident["k_last"] = D == ks[-1]
    if A.s >= 1 and A.gam[0] is not None and A.lam[1] is not None:
        ident["slice0"] = lamB(0) == A.gam[0] + A.lam[1]
    if A.s >= 2 and A.gam[1] is not None and A.lam[2] is not None:
        ident["slice1"] = lam0C == A.gam[1] + A.lam[2]
    for i in range(1, B.s + 1):
        ident[f"shift_{i}"] = B.lam[i] == lamA(i + 1)
    if C is not None:
        for i in range(1, C.s + 1):
            ident[f"shift2_{i}"] = C.lam[i] == lamA(i + 2)

    holds = lhs >= rhs
    if generic:
        holds = holds and all(ident.values())
    return [
        _rep(
            "mainmany",
            lhs,
            rhs,
            holds,
            ks=tuple(ks),
            D=D,
            shifted=shifted,
            omega=omega,
            lam=A.lam,
            slice_lam=B.lam,
            next_lam=None if C is None else C.lam,
            identities=ident,
            seed=seed,
            generic=generic,
        )
    ]


def check_dagger(
    f: Polynomial,
    frame: Frame | None = None,
    seed: int = 0,
    trials: int = 3,
    bound: int = 10,
) -> list[IneqReport]:
    """The open s = 1 inequality; a report that fails to hold is a
    counterexample candidate worth publishing, not a bug."""
    n = len(f.vars) - 1
    if n < 1:
        return [_skip("dagger", "needs at least two variables")]
    rec, generic = _le_record(f, frame, seed, trials, bound)
    if rec is None:
        return [_skip("dagger", "Le numbers undefined")]
    if rec.s != 1:
        return [_skip("dagger", f"critical locus has dimension {rec.s}, needs 1")]
    lam0, lam1 = rec.lam[0], rec.lam[1]
    if lam0 is None or lam1 is None:
        return [_skip("dagger", "Le numbers undefined for this frame")]
    if lam0 == 0:
        return [_skip("dagger", "lambda^0 = 0, hypotheses not met", lam0=0)]
    mun = sectional(f, n, seed=seed)
    mun1 = sectional(f, n - 1, seed=seed)
    if not mun or not mun1:
        return [_skip("dagger", "sectional Milnor number undefined")]
    if mun <= lam0:
        return [_skip(
            "dagger",
            "sectional Milnor number does not exceed lambda^0",
            lam0=lam0,
            mu_top=mun,
        )]
    lhs = Fraction(lam0, mun) * (1 + lam1)
    rhs = Fraction(mun, mun1)
    return [
        _rep(
            "dagger",
            lhs,
            rhs,
            lhs >= rhs,
            candidate=True,
            lam0=lam0,
            lam1=lam1,
            mu_top=mun,
            mu_next=mun1,
            margin=lhs - rhs,
            homogeneous=f.homogeneous_degree() is not None,
            seed=seed,
            generic=generic,
        )
    ]


def _substitute(template: str, params: dict) -> str:
    out = template
    for name in sorted(params, key=len, reverse=True):
        v = params[name]
        text = f"({v})" if v < 0 else str(v)
        out = re.sub(rf"\b{re.escape(name)}\b", text, out)
    return out


def _template_vars(template: str, params: dict) -> tuple[str, ...]:
    names = set(re.findall(r"[A-Za-z_][A-Za-z_0-9]*", template))
    return tuple(sorted(names - set(params)))


@dataclass(frozen=True)
class SearchResult:
    """Family sweep outcome: every instance report in family order, the
    candidate subset ordered by how close the inequality came to failing,
    and any outright counterexamples."""

    reports: tuple
    candidates: tuple
    counterexamples: tuple


def search_dagger(
    entries: Iterable[dict],
    seed: int = 0,
    trials: int = 3,
    bound: int = 10,
    limit: int | None = None,
    on_report=None,
) -> SearchResult:
    """Run check_dagger over a parameter family.

    Each entry carries a polynomial template, one integer grid per
    parameter name, and optionally an explicit variable tuple (inferred
    from the leftover identifiers otherwise).  Instances the checker
    cannot decide turn into skip-reports; malformed entries raise.  limit
    caps the number of instances; on_report sees each (params, report)
    pair as it is produced."""
    reports = []
    for entry in entries:
        template = entry["template"]
        grids = entry["params"]
        vars_ = tuple(entry["vars"]) if "vars" in entry else _template_vars(template, grids)
        if not vars_:
            raise ValueError(f"family template {template!r} has no variables")
        names = list(grids)
        for combo in itertools.product(*(grids[name] for name in names)):
            if limit is not None and len(reports) >= limit:
                break
            params = dict(zip(names, combo))
            text = _substitute(template, params)
            try:
                fp = parse(text, vars_)
            except ParseError as e:
                raise ValueError(f"family instance {text!r}: {e}") from e
            if (
                fp.is_zero
                or fp.constant_term != 0
                or any(
                    fp.partial(i).constant_term != 0 for i in range(len(fp.vars))
                )
            ):
                rep = _skip("dagger", "not singular at the origin", instance=text)
            else:
                (rep,) = check_dagger(fp, seed=seed, trials=trials, bound=bound)
            rep = replace(rep, context={**rep.context, "instance": text, "params": params})
            reports.append((params, rep))
            if on_report is not None:
                on_report(params, rep)
        if limit is not None and len(reports) >= limit:
            break
    candidates = tuple(
        sorted(
            (pr for pr in reports if not pr[1].skipped),
            key=lambda pr: pr[1].lhs - pr[1].rhs,
        )
    )
    counterexamples = tuple(
        pr for pr in reports if not pr[1].skipped and not pr[1].holds
    )
    return SearchResult(tuple(reports), candidates, counterexamples)


def _nonreduced_at_origin(g: Polynomial) -> bool:
    # a repeated factor through the origin makes the partials vanish along
    # a curve of V(g); for a reduced plane germ that locus is at most a point
    gens = [g] + [g.partial(i) for i in range(len(g.vars))]
    gens = [p for p in gens if not p.is_zero]
    return local_dim(Ideal(gens, vars=g.vars)) >= 1


def _suspension_shape(f: Polynomial):
    """(g, p, axis) splitting f = c*axis^p + g with g free of the axis
    variable; (f, None, None) for a two-variable input; None otherwise."""
    if len(f.vars) == 2:
        return f, None, None
    if len(f.vars) != 3:
        return None
    for i in range(3):
        vterms = {e: c for e, c in f.terms.items() if e[i] > 0}
        if len(vterms) != 1:
            continue
        ((e, _),) = vterms.items()
        if sum(e) != e[i] or e[i] < 2:
            continue
        g = f.set_var_zero(i)
        if g.is_zero:
            continue
        return g, e[i], i
    return None


def check_suspension(
    f: Polynomial,
    frame: Frame | None = None,
    seed: int = 0,
    trials: int = 3,
    bound: int = 10,
) -> list[IneqReport]:
    """lambda^0 of a non-reduced plane curve, or of a suspension of one,
    dominates the Milnor number of a generic hyperplane slice.

    The statement is unproved, so a failed verdict here is a reportable
    finding.  Inputs not of the required shape are rejected outright."""
    shape = _suspension_shape(f)
    if shape is None:
        raise ValueError("not a suspension: need g(x,y) or c*z^p + g(x,y)")
    g, p, axis = shape
    if not _nonreduced_at_origin(g):
        raise ValueError("not a suspension: the plane part is reduced at the origin")
    rec, generic = _le_record(f, frame, seed, trials, bound)
    if rec is None or rec.lam[0] is None:
        return [_skip("suspension", "lambda^0 undefined")]
    mu_slice = sectional(f, len(f.vars) - 1, seed=seed)
    if mu_slice is None:
        return [_skip("suspension", "hyperplane slice not isolated")]
    lam0 = rec.lam[0]
    return [
        _rep(
            "suspension",
            lam0,
            mu_slice,
            lam0 >= mu_slice,
            power=p,
            axis=axis,
            lam=rec.lam,
            seed=seed,
            generic=generic,
        )
    ]


def check_newmpr_and_easybound(
    f: Polynomial,
    frame: Frame | None = None,
    seed: int = 0,
    trials: int = 3,
    bound: int = 10,
    components: Sequence[tuple[Ideal, int]] | None = None,
) -> list[IneqReport]:
    """Bundle of polar-ratio and multiplicity bounds.

    Without a component decomposition of the polar curve the two upper
    bounds are checked for consistency against the multiplicity lower
    bound; supplying components sharpens everything to the exact maximum
    polar ratio."""
    rec, generic = _le_record(f, frame, seed, trials, bound)
    if rec is None:
        return [_skip("newmpr", "Le numbers undefined")]
    lam0 = rec.lam[0]
    if lam0 is None:
        return [_skip("newmpr", "lambda^0 undefined for this frame")]
    frame_used = rec.frame
    h = apply_frame(f, frame_used)
    mult = f.mult_origin()
    mb = mpr_bounds(f, frame_used, rec)
    exact = mpr_exact(f, frame_used, components) if components is not None else None
    base = exact if exact is not None else Fraction(mb.lower)
    ctx = dict(
        lower=mb.lower,
        upper_simple=mb.upper_simple,
        upper_polar=mb.upper_polar,
        exact=exact,
        lam=rec.lam,
        gam=rec.gam,
        mult=mult,
        seed=seed,
        generic=generic,
    )
    reports = [
        _rep("newmpr-simple", mb.upper_simple, base, Fraction(mb.upper_simple) >= base, **ctx)
    ]
    if mb.upper_polar is not None:
        reports.append(
            _rep("newmpr-polar", mb.upper_polar, base, Fraction(mb.upper_polar) >= base, **ctx)
        )
    if mb.lower > 1:
        # the multiplicity hypothesis held with a nonzero gamma^1, so the
        # ratio itself must reach mult f; test whatever stands in for it
        probe = exact
        if probe is None:
            probe = Fraction(mb.upper_simple)
            if mb.upper_polar is not None:
                probe = min(probe, Fraction(mb.upper_polar))
        reports.append(_rep("mprmult", probe, mult, probe >= mult, **ctx))
    if lam0 != 0:
        d0 = h.partial(0)
        try:
            mg1 = polar_curve_mult(f, frame_used)
        except ValueError:
            mg1 = None
        if mg1 is not None and not d0.is_zero:
            mid = mg1 * d0.mult_origin()
            low = mg1 * (mult - 1)
            holds = lam0 >= mid >= low and lam0 >= mult - 1
            reports.append(
                _rep(
                    "easybound",
                    lam0,
                    mid,
                    holds,
                    chain=(lam0, mid, low, mult - 1),
                    polar_mult=mg1,
                    **ctx,
                )
            )
    homog = f.homogeneous_degree() is not None
    for j in range(1, rec.s + 1):
        lj, gj = rec.lam[j], rec.gam[j - 1]
        if lj is None or gj is None:
            continue
        try:
            mnext = polar_mult(f, frame_used, j + 1)
        except ValueError:
            continue
        lhs_j = lj + gj
        rhs_j = (mult - 1) * mnext
        holds_j = lhs_j >= rhs_j
        if homog and generic:
            holds_j = holds_j and lhs_j == rhs_j
        reports.append(
            _rep(f"lambda-gamma-{j}", lhs_j, rhs_j, holds_j, j=j, homogeneous=homog, **ctx)
        )
    return reports


def check_leiom(
    f: Polynomial,
    m: int | None = None,
    a: int | None = None,
    frame: Frame | None = None,
    seed: int = 0,
    trials: int = 3,
    bound: int = 10,
    retries: int = 8,
) -> list[IneqReport]:
    """Add a generic multiple of z0^m and compare the Le numbers of the
    transform, in rotated coordinates, with the asserted shifts and
    bounds.

    m defaults to the smallest exponent that guarantees the equality
    branch.  The structure claims (critical locus restriction, dimension
    drop, existence) gate everything: a coefficient that fails them is
    replaced, walking a deterministic ladder, and only claim failures
    count as findings."""
    rec, generic = _le_record(f, frame, seed, trials, bound)
    if rec is None:
        return [_skip("leiom", "Le numbers undefined")]
    s = rec.s
    lam0 = rec.lam[0]
    lam1 = rec.lam[1] if s >= 1 else 0
    if lam0 is None or lam1 is None:
        return [_skip("leiom", "Le numbers undefined for this frame")]
    if m is None:
        m = 2 if lam0 == 0 else 1 + lam0
    if not isinstance(m, int) or m < 2:
        raise ValueError("power m must be an integer >= 2")
    frame_used = rec.frame
    h = apply_frame(f, frame_used)
    z0 = Polynomial.var_index(0, h.vars)
    sig_h = sigma_ideal(h)
    target = Ideal(list(sig_h.gens) + [z0], vars=h.vars)

    lam0_slice = None
    h0 = h.set_var_zero(0)
    if (
        not h0.is_zero
        and h0.constant_term == 0
        and all(h0.partial(i).constant_term == 0 for i in range(len(h0.vars)))
    ):
        lam0_slice = lambda_numbers(h0).lam[0]

    if s >= 1:
        g1 = rec.gam[0]
    else:
        g1 = intersection_number(polar_ideal(f, frame_used, 1), [z0])
    try:
        mult_g1 = polar_curve_mult(f, frame_used)
    except ValueError:
        mult_g1 = None
    hyp_mult = g1 is not None and mult_g1 is not None and g1 == mult_g1

    ladder = [] if a is None else [a]
    k = 1
    while len(ladder) < retries:
        ladder.append(k)
        if len(ladder) < retries:
            ladder.append(-k)
        k += 1

    chosen = None
    failures = []
    for av in ladder:
        if av == 0:
            continue
        g, gframe = iomdine(h, m, av)
        sig_g = sigma_ideal(g)
        if not (germ_subset(sig_g, target) and germ_subset(target, sig_g)):
            failures.append(f"a={av}: critical locus of the transform is wrong")
            continue
        if s >= 1 and local_dim(sig_g) != s - 1:
            failures.append(f"a={av}: critical dimension did not drop to {s - 1}")
            continue
        recg = lambda_numbers(g, gframe)
        if any(v is None for v in recg.lam):
            failures.append(f"a={av}: Le numbers of the transform undefined")
            continue
        chosen = (av, recg)
        break
    if chosen is None:
        return [_skip("leiom", "no coefficient passed the structure checks", failures=failures)]
    av, recg = chosen

    ctx = dict(
        m=m,
        a=av,
        lam=rec.lam,
        lam_transform=recg.lam,
        s=s,
        slice_lam0=lam0_slice,
        gamma1=g1,
        polar_mult=mult_g1,
        seed=seed,
        generic=generic,
    )
    reports = []
    for j in range(1, s):
        lj = rec.lam[j + 1]
        if lj is None:
            continue
        lhs_j = recg.lam[j]
        rhs_j = (m - 1) * lj
        reports.append(_rep(f"leiom-shift-{j}", lhs_j, rhs_j, lhs_j == rhs_j, **ctx))
    ub = lam0 + (m - 1) * lam1
    l0g = recg.lam[0]
    reports.append(_rep("leiom-bound", l0g, ub, l0g <= ub, **ctx))
    threshold = (
        (lam0 == 0)
        or (lam0 != 0 and m >= 1 + lam0)
        or (hyp_mult and m >= lam0 - g1 + 2)
    )
    if threshold:
        reports.append(_rep("leiom-equality", l0g, ub, l0g == ub, **ctx))
    if g1 is not None and lam0_slice is not None:
        rhs6 = (m - 1) * lam0_slice
        reports.append(_rep("leiom-slice", l0g, rhs6, l0g <= rhs6, **ctx))
    return reports
