"""The two arithmetically-Cohen-Macaulay decision procedures and the
homogeneous side of the picture.

The criterion route evaluates a handful of integer inequalities on the
parameters; the Groebner route computes a reduced Groebner basis under a
reverse lexicographic order with x4 least and checks that no minimal
initial-ideal generator is divisible by x4.  The two are mathematically
equivalent, so `cross_validate` treats any disagreement as a hard
implementation failure and aborts with a diagnostic dump.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .bresinsky import (
    DEFAULT_D_CAP,
    SKIP_FORM,
    SKIP_GCD,
    SKIP_MAX,
    BresinskyData,
    ConditionValue,
    ShiftFamily,
    Vec4,
    case_conditions,
    closed_form_basis,
    d_from_a_any_order,
    generators,
)
from .errors import AmbientMismatchError, DisagreementError, RefusalError
from .groebner import (
    DEFAULT_STEP_BOUND,
    Binomial,
    BinomialBasis,
    buchberger,
    reduce_basis,
)
from .monomials import AFFINE_ORDER, PROJECTIVE_ORDER, Monomial


@dataclass(frozen=True)
class CriterionResult:
    """Verdict of the inequality criterion, with the evaluated values."""

    acm: bool
    case: int
    w: Optional[int]
    conditions: tuple[ConditionValue, ...]


@dataclass(frozen=True)
class GroebnerVerdict:
    """Verdict of the Groebner oracle.

    `x4_leads` lists the minimal initial-ideal generators divisible by
    x4; the verdict is ACM exactly when it is empty.  The reduced basis
    is kept for diagnostics.
    """

    acm: bool
    x4_leads: tuple[Monomial, ...]
    basis: BinomialBasis


@dataclass(frozen=True)
class AcmReport:
    """Per-member verdict record.

    `applicable` is False for skipped members, with the reason in
    `skip_reason`.  When the fourth coordinate of the shifted vector is
    not the strict maximum but some permutation of it is analyzable, the
    verdicts are computed in permuted coordinates and labelled as such
    via `reordered` and `permuted_degrees`.  `x4_initial` carries the
    string forms of any x4-bearing minimal initial generators; it is
    diagnostic and not part of the serialized record.
    """

    m: int
    degrees: Vec4
    applicable: bool
    skip_reason: Optional[str] = None
    case: Optional[int] = None
    w: Optional[int] = None
    conditions: tuple[ConditionValue, ...] = ()
    verdict_criterion: Optional[bool] = None
    verdict_groebner: Optional[bool] = None
    agree: Optional[bool] = None
    reordered: bool = False
    permuted_degrees: Optional[Vec4] = None
    x4_initial: tuple[str, ...] = field(default=(), compare=False)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "degrees": list(self.degrees),
            "applicable": self.applicable,
            "skip_reason": self.skip_reason,
            "case": self.case,
            "w": self.w,
            "conditions": [c.to_json() for c in self.conditions],
            "verdict_criterion": self.verdict_criterion,
            "verdict_groebner": self.verdict_groebner,
            "agree": self.agree,
            "reordered": self.reordered,
            "permuted_degrees": list(self.permuted_degrees) if self.permuted_degrees else None,
        }


def acm_by_criterion(data: BresinskyData, m: int) -> CriterionResult:
    """Decide Cohen-Macaulayness of the projective closure at shift m by
    the inequality criterion.

    Refuses when the member degrees are not coprime or their fourth entry
    is not the strict maximum; the criterion is only stated under those
    hypotheses.
    """
    fam = ShiftFamily.from_data(data)
    member = fam.member(m)
    if not member.gcd_ok:
        raise RefusalError(SKIP_GCD, {"m": m, "degrees": member.degrees})
    if not member.max_ok:
        raise RefusalError(SKIP_MAX, {"m": m, "degrees": member.degrees})
    cc = case_conditions(data, m)
    return CriterionResult(acm=cc.all_pass, case=cc.case, w=cc.w, conditions=cc.conditions)


def acm_by_groebner(
    degrees: Iterable[int],
    gens: Iterable[Binomial],
    step_bound: int = DEFAULT_STEP_BOUND,
) -> GroebnerVerdict:
    """Decide Cohen-Macaulayness by the initial-ideal test.

    Computes the reduced Groebner basis of the ideal generated by `gens`
    under the fixed order x2 > x1 > x3 > x4 (any reverse lexicographic
    order with x4 least gives the same verdict; this one is pinned for
    deterministic reports) and returns ACM iff no minimal generator of
    the initial ideal is divisible by x4.
    """
    vec = tuple(int(x) for x in degrees)
    if len(vec) != 4 or any(x < 1 for x in vec):
        raise ValueError(f"degree vector must have 4 positive entries: {vec}")
    if math.gcd(*vec) != 1:
        raise RefusalError(SKIP_GCD, {"degrees": vec})
    if not all(vec[3] > vec[i] for i in range(3)):
        raise RefusalError(SKIP_MAX, {"degrees": vec})
    reduced = reduce_basis(buchberger(gens, AFFINE_ORDER, step_bound), step_bound)
    x4_leads = tuple(mono for mono in reduced.leads() if mono.exponent(4) > 0)
    return GroebnerVerdict(acm=not x4_leads, x4_leads=x4_leads, basis=reduced)


def homogenize(b: Binomial) -> Binomial:
    """Homogenize a 4-variable binomial: pad the lower-degree side with
    the needed power of x0.  The result is oriented under the extended
    order, which keeps the original lead in the lead position."""
    if b.nvars != 4:
        raise AmbientMismatchError(f"homogenize expects a 4-variable binomial, got {b.nvars}")
    dl = b.lead.degree()
    dt = b.trail.degree()
    lead = Monomial((max(0, dt - dl),) + b.lead.exponents)
    trail = Monomial((max(0, dl - dt),) + b.trail.exponents)
    out = Binomial.from_pair(lead, trail, PROJECTIVE_ORDER)
    assert out is not None
    return out


def dehomogenize(b: Binomial) -> Binomial:
    """Set x0 := 1 in a 5-variable binomial and re-orient."""
    if b.nvars != 5:
        raise AmbientMismatchError(f"dehomogenize expects a 5-variable binomial, got {b.nvars}")
    out = Binomial.from_pair(
        Monomial(b.lead.exponents[1:]), Monomial(b.trail.exponents[1:]), AFFINE_ORDER
    )
    assert out is not None  # homogeneous sides differing only in x0 are impossible
    return out


def check_h_membership(b: Binomial, degrees: Iterable[int]) -> bool:
    """Membership test for the homogenized toric ideal.

    True iff the two sides have equal total degree and equal weight under
    (a1..a4) on x1..x4 with weight 0 on x0.  Equality of the
    complementary weights then follows, since that weight is
    a4 * totaldegree minus this one.
    """
    if b.nvars != 5:
        raise AmbientMismatchError(f"expected a 5-variable binomial, got {b.nvars}")
    vec = tuple(int(x) for x in degrees)
    if len(vec) != 4:
        raise ValueError(f"degree vector must have 4 entries, got {len(vec)}")
    tweights = (0,) + vec
    return (
        b.lead.degree() == b.trail.degree()
        and b.lead.weight(tweights) == b.trail.weight(tweights)
    )


@dataclass(frozen=True)
class HomogeneousBasis(BinomialBasis):
    """A basis over the homogenized ring, validated on construction:
    every element must be degree-homogeneous and lie in the homogenized
    toric ideal of `degrees`."""

    degrees: Vec4 = field(kw_only=True)

    def __post_init__(self) -> None:
        super().__post_init__()
        for b in self.elements:
            if b.lead.degree() != b.trail.degree():
                raise ValueError(f"inhomogeneous element: {b}")
            if not check_h_membership(b, self.degrees):
                raise ValueError(f"element fails homogeneous membership for {self.degrees}: {b}")


def homogeneous_basis(data: BresinskyData, m: int) -> HomogeneousBasis:
    """Element-wise homogenization of the closed-form basis at shift m.

    Only defined when the projective closure is Cohen-Macaulay (which is
    exactly when the closed form exists); refuses otherwise.  Case 1
    output is the reduced Groebner basis of the homogenized ideal, case 2
    output a Groebner basis, both under the extended order with x0 least.
    """
    crit = acm_by_criterion(data, m)
    if not crit.acm:
        failing = next(c for c in crit.conditions if not c.passed)
        raise RefusalError(
            "not arithmetically Cohen-Macaulay",
            {"m": m, "condition": failing.name, "value": failing.value},
        )
    closed = closed_form_basis(data, m)
    member = ShiftFamily.from_data(data).member(m)
    elems = [homogenize(b) for b in closed.basis.elements]
    key = PROJECTIVE_ORDER.key
    elems.sort(key=lambda b: (key(b.lead), key(b.trail)))
    return HomogeneousBasis(
        tuple(elems),
        PROJECTIVE_ORDER,
        is_groebner_verified=True,
        is_reduced=closed.case == 1,
        degrees=member.degrees,
    )


def _skip(m: int, degrees: Vec4, reason: str) -> AcmReport:
    return AcmReport(m=m, degrees=degrees, applicable=False, skip_reason=reason)


def _agreement_checked(report: AcmReport, gb: GroebnerVerdict) -> AcmReport:
    if report.agree:
        return report
    dump = json.dumps(
        {
            "report": report.to_dict(),
            "x4_leads": [str(mono) for mono in gb.x4_leads],
            "reduced_basis": gb.basis.to_json(),
        },
        indent=2,
    )
    raise DisagreementError(
        f"verdicts disagree at m={report.m}: criterion={report.verdict_criterion} "
        f"groebner={report.verdict_groebner}",
        report=report,
        dump=dump,
    )


def analyze_member(
    data: BresinskyData,
    m: int,
    step_bound: int = DEFAULT_STEP_BOUND,
    d_cap: int = DEFAULT_D_CAP,
) -> AcmReport:
    """Full dual-route analysis of one family member.

    Members whose degrees have a common factor are skipped.  When the
    fourth coordinate is not the strict maximum, the shifted vector is
    re-analyzed in permuted coordinates if some permutation admits the
    parameter form; the verdicts are then labelled as permuted.  A
    disagreement between the two routes raises DisagreementError.
    """
    fam = ShiftFamily.from_data(data)
    member = fam.member(m)
    deg = member.degrees
    if not member.gcd_ok:
        return _skip(m, deg, SKIP_GCD)

    if member.max_ok:
        crit = acm_by_criterion(data, m)
        gb = acm_by_groebner(deg, generators(data, m), step_bound)
        report = AcmReport(
            m=m,
            degrees=deg,
            applicable=True,
            case=crit.case,
            w=crit.w,
            conditions=crit.conditions,
            verdict_criterion=crit.acm,
            verdict_groebner=gb.acm,
            agree=crit.acm == gb.acm,
            x4_initial=tuple(str(mono) for mono in gb.x4_leads),
        )
        return _agreement_checked(report, gb)

    mx = max(deg)
    if deg.count(mx) > 1:
        return _skip(m, deg, SKIP_MAX)
    hits = d_from_a_any_order(deg, cap=d_cap)
    if not hits:
        return _skip(m, deg, SKIP_FORM)
    perm, data2 = hits[0]
    permuted = tuple(deg[i] for i in perm)
    crit = acm_by_criterion(data2, 0)
    gb = acm_by_groebner(permuted, generators(data2, 0), step_bound)
    report = AcmReport(
        m=m,
        degrees=deg,
        applicable=True,
        case=crit.case,
        w=crit.w,
        conditions=crit.conditions,
        verdict_criterion=crit.acm,
        verdict_groebner=gb.acm,
        agree=crit.acm == gb.acm,
        reordered=True,
        permuted_degrees=permuted,
        x4_initial=tuple(str(mono) for mono in gb.x4_leads),
    )
    return _agreement_checked(report, gb)


def cross_validate(
    data: BresinskyData,
    m_range: Iterable[int],
    step_bound: int = DEFAULT_STEP_BOUND,
    d_cap: int = DEFAULT_D_CAP,
) -> list[AcmReport]:
    """Run the dual-route analysis across a range of shifts.

    Per-member refusals and operational errors are recorded as skipped
    rows; a verdict disagreement aborts the scan, since agreement is the
    property the whole tool exists to certify.
    """
    fam = ShiftFamily.from_data(data)
    reports = []
    for m in sorted(set(int(m) for m in m_range)):
        try:
            reports.append(analyze_member(data, m, step_bound=step_bound, d_cap=d_cap))
        except DisagreementError:
            raise
        except RefusalError as exc:
            reports.append(_skip(m, fam.member(m).degrees, exc.reason))
        except Exception as exc:  # recorded per member, the scan goes on
            reports.append(_skip(m, fam.member(m).degrees, f"error: {exc}"))
    return reports
