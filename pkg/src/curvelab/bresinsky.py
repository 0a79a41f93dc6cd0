"""Parameter system for Gorenstein non-complete-intersection monomial
curves in 4-space.

Such a curve is described by eight positive integers d21, d41, d32, d42,
d13, d23, d14, d34 with row sums d1 = d21+d41, d2 = d32+d42,
d3 = d13+d23, d4 = d14+d34.  They determine the degree vector a, a shift
direction v along which the presentation persists for every m >= 0, and
the five defining binomials of the toric ideal.  This module implements
the parameter <-> degree-vector correspondence in both directions, the
per-shift family members, the w statistic, the extra binomials that enter
the second case, and the closed-form Groebner bases available when the
case conditions hold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Mapping, Optional

from .errors import AnomalyError, RefusalError
from .groebner import Binomial, BinomialBasis
from .monomials import AFFINE_ORDER, Monomial

#: Default cap on each of d1..d4 in the recovery search.
DEFAULT_D_CAP = 64

SKIP_GCD = "gcd>1"
SKIP_MAX = "max-coordinate fails"
SKIP_FORM = "not Bresinsky form"

Vec4 = tuple[int, int, int, int]


@dataclass(frozen=True)
class BresinskyData:
    """The eight base parameters.  Row sums d1..d4 are derived.

    All eight must be positive; every constraint of the parameter system
    (di > 1, and each d_ij strictly between 0 and its row sum) then holds
    automatically.
    """

    d21: int
    d41: int
    d32: int
    d42: int
    d13: int
    d23: int
    d14: int
    d34: int

    def __post_init__(self) -> None:
        for name, value in self.as_dict().items():
            if value < 1:
                raise ValueError(f"parameter {name} must be positive, got {value}")

    @property
    def d1(self) -> int:
        return self.d21 + self.d41

    @property
    def d2(self) -> int:
        return self.d32 + self.d42

    @property
    def d3(self) -> int:
        return self.d13 + self.d23

    @property
    def d4(self) -> int:
        return self.d14 + self.d34

    def as_dict(self) -> dict[str, int]:
        return {
            "d21": self.d21,
            "d41": self.d41,
            "d32": self.d32,
            "d42": self.d42,
            "d13": self.d13,
            "d23": self.d23,
            "d14": self.d14,
            "d34": self.d34,
        }

    def to_json(self) -> dict:
        return self.as_dict()

    @classmethod
    def from_json(cls, obj: Mapping) -> "BresinskyData":
        return cls(**{k: int(obj[k]) for k in
                      ("d21", "d41", "d32", "d42", "d13", "d23", "d14", "d34")})


@dataclass(frozen=True)
class ConditionValue:
    """One evaluated inequality, normalized to `value >= 0` form."""

    name: str
    value: int

    @property
    def passed(self) -> bool:
        return self.value >= 0

    def to_json(self) -> dict:
        return {"name": self.name, "value": self.value, "pass": self.passed}


@dataclass(frozen=True)
class CaseConditions:
    """Which case applies and the evaluated condition values.

    Case 1 is d2 >= d21 + d23 (three conditions); case 2 is the strict
    opposite (five conditions plus exactly one of two, selected by the
    sign of d1 + m - w*d21, recorded in `branch_positive`).
    """

    case: int
    w: Optional[int]
    branch_positive: Optional[bool]
    conditions: tuple[ConditionValue, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.conditions)

    def first_failing(self) -> Optional[ConditionValue]:
        for c in self.conditions:
            if not c.passed:
                return c
        return None


@dataclass(frozen=True)
class ExtraBinomials:
    """The binomials that extend the five generators to a Groebner basis
    in case 2: p_i and q_i for 1 <= i <= w-2, plus r.

    The i = 0 instances coincide with two of the generators and are never
    re-emitted, so for w = 2 the extra set is exactly {r}.
    """

    p: tuple[Binomial, ...]
    q: tuple[Binomial, ...]
    r: Binomial
    w: int
    branch_positive: bool

    def all(self) -> tuple[Binomial, ...]:
        return self.p + self.q + (self.r,)


@dataclass(frozen=True)
class ClosedFormBasis:
    """A closed-form Groebner basis with its case tag."""

    basis: BinomialBasis
    case: int
    w: Optional[int]
    conditions: tuple[ConditionValue, ...]


@dataclass(frozen=True)
class FamilyMember:
    """One member of a shifted family: degrees = base + m * shift."""

    m: int
    degrees: Vec4
    gcd_ok: bool
    max_ok: bool


@dataclass(frozen=True)
class ShiftFamily:
    """Base degree vector, shift vector and the parameters behind them."""

    data: BresinskyData
    base: Vec4
    shift: Vec4

    @classmethod
    def from_data(cls, data: BresinskyData) -> "ShiftFamily":
        base = a_from_d(data)
        if math.gcd(*base) != 1:
            raise RefusalError(SKIP_GCD, {"degrees": base})
        return cls(data=data, base=base, shift=shift_vector(data))

    def member(self, m: int) -> FamilyMember:
        if m < 0:
            raise ValueError(f"shift index must be non-negative, got {m}")
        deg = tuple(a + m * v for a, v in zip(self.base, self.shift))
        return FamilyMember(
            m=m,
            degrees=deg,
            gcd_ok=math.gcd(*deg) == 1,
            max_ok=all(deg[3] > deg[i] for i in range(3)),
        )


def a_from_d(data: BresinskyData) -> Vec4:
    """Degree vector induced by the parameters."""
    d = data
    return (
        d.d2 * d.d4 * d.d13 + d.d42 * d.d14 * d.d23,
        d.d3 * d.d4 * d.d21 + d.d41 * d.d34 * d.d23,
        d.d1 * d.d2 * d.d34 + d.d32 * d.d21 * d.d14,
        d.d1 * d.d3 * d.d42 + d.d13 * d.d32 * d.d41,
    )


def shift_vector(data: BresinskyData) -> Vec4:
    """Shift direction of the family; first and last entries coincide."""
    d = data
    v1 = d.d2 * d.d3 - d.d23 * d.d32
    return (v1, d.d21 * d.d3 + d.d23 * d.d34, d.d2 * d.d34 + d.d21 * d.d32, v1)


def generators(data: BresinskyData, m: int) -> tuple[Binomial, ...]:
    """The five defining binomials of the toric ideal at shift m.

    Only the first and fourth pick up the shift: their x1 and x4
    exponents each grow by m.
    """
    if m < 0:
        raise ValueError(f"shift index must be non-negative, got {m}")
    d = data
    pairs = (
        ({1: d.d1 + m}, {3: d.d13, 4: d.d14 + m}),
        ({2: d.d2}, {1: d.d21, 3: d.d23}),
        ({3: d.d3}, {2: d.d32, 4: d.d34}),
        ({1: d.d41 + m, 2: d.d42}, {4: d.d4 + m}),
        ({2: d.d42, 3: d.d13}, {1: d.d21, 4: d.d34}),
    )
    out = []
    for lhs, rhs in pairs:
        b = Binomial.from_pair(Monomial.from_powers(lhs), Monomial.from_powers(rhs), AFFINE_ORDER)
        assert b is not None  # the two sides have disjoint supports
        out.append(b)
    return tuple(out)


def toric_membership(b: Binomial, degrees: Iterable[int]) -> bool:
    """True iff both monomials have equal weight under the degree vector,
    i.e. the binomial lies in the toric ideal of that vector."""
    w = tuple(degrees)
    return b.lead.weight(w) == b.trail.weight(w)


def compute_w(data: BresinskyData, m: int) -> int:
    """The least l >= 1 with d1 + m - l*d21 <= 0 or d3 - l*d23 <= 0.

    Always >= 2, because d21 < d1 and d23 < d3 rule out l = 1.
    """
    if m < 0:
        raise ValueError(f"shift index must be non-negative, got {m}")
    l = 1
    while data.d1 + m - l * data.d21 > 0 and data.d3 - l * data.d23 > 0:
        l += 1
    assert l >= 2
    return l


def extra_binomials(data: BresinskyData, m: int) -> ExtraBinomials:
    """The case-2 companions p_i, q_i (1 <= i <= w-2) and r.

    The branch of r follows the sign of d1 + m - w*d21.  A negative
    exponent here would mean the case assumptions are violated; it
    surfaces as a ValueError from the monomial constructor.
    """
    d = data
    w = compute_w(data, m)
    branch_positive = d.d1 + m - w * d.d21 > 0

    p = []
    q = []
    for i in range(1, w - 1):
        p.append(
            _oriented(
                {2: (i + 1) * d.d2 - d.d32, 3: d.d3 - (i + 1) * d.d23},
                {1: (i + 1) * d.d21, 4: d.d34},
            )
        )
        q.append(
            _oriented(
                {1: d.d1 + m - (i + 1) * d.d21, 2: (i + 1) * d.d2 - d.d32},
                {3: i * d.d23, 4: d.d4 + m},
            )
        )

    lead = {2: w * d.d2 - d.d32}
    if branch_positive:
        tail = {1: w * d.d21, 3: w * d.d23 - d.d3, 4: d.d34}
    else:
        tail = {1: w * d.d21 - d.d1 - m, 3: (w - 1) * d.d23, 4: d.d4 + m}
    r = _oriented(lead, tail)

    return ExtraBinomials(p=tuple(p), q=tuple(q), r=r, w=w, branch_positive=branch_positive)


def _oriented(lhs: Mapping[int, int], rhs: Mapping[int, int]) -> Binomial:
    b = Binomial.from_pair(Monomial.from_powers(lhs), Monomial.from_powers(rhs), AFFINE_ORDER)
    assert b is not None
    return b


def case_conditions(data: BresinskyData, m: int) -> CaseConditions:
    """Evaluate the per-case condition set at shift m.

    Every condition is reported as an integer that must be >= 0; the
    names spell out the formula evaluated.
    """
    d = data
    c1 = ConditionValue("d1-d13-d14", d.d1 - d.d13 - d.d14)
    c2 = ConditionValue("d3-d32-d34", d.d3 - d.d32 - d.d34)
    c3 = ConditionValue("d13+d42-d21-d34", d.d13 + d.d42 - d.d21 - d.d34)

    if d.d2 >= d.d21 + d.d23:
        return CaseConditions(case=1, w=None, branch_positive=None, conditions=(c1, c2, c3))

    w = compute_w(data, m)
    s = d.d2 - d.d21 - d.d23  # negative in case 2
    c4 = ConditionValue("(w-1)(d2-d21-d23)+d3-d32-d34", (w - 1) * s + d.d3 - d.d32 - d.d34)
    c5 = ConditionValue(
        "(w-1)(d2-d21-d23)+d1+d23-d4-d32", (w - 1) * s + d.d1 + d.d23 - d.d4 - d.d32
    )
    branch_positive = d.d1 + m - w * d.d21 > 0
    if branch_positive:
        c67 = ConditionValue("w(d2-d21-d23)+d3-d32-d34", w * s + d.d3 - d.d32 - d.d34)
    else:
        c67 = ConditionValue(
            "w(d2-d21-d23)+d1+d23-d4-d32", w * s + d.d1 + d.d23 - d.d4 - d.d32
        )
    return CaseConditions(
        case=2, w=w, branch_positive=branch_positive, conditions=(c1, c2, c3, c4, c5, c67)
    )


def closed_form_basis(data: BresinskyData, m: int) -> ClosedFormBasis:
    """The closed-form Groebner basis at shift m, when available.

    Case 1 returns the five generators, which form the reduced Groebner
    basis; case 2 returns them together with the extra binomials, a
    Groebner basis that need not be reduced.  Refuses (naming the first
    failing condition) when the case conditions do not hold, and when the
    member degrees are not coprime.
    """
    fam = ShiftFamily.from_data(data)
    member = fam.member(m)
    if not member.gcd_ok:
        raise RefusalError(SKIP_GCD, {"m": m, "degrees": member.degrees})

    cc = case_conditions(data, m)
    failing = cc.first_failing()
    if failing is not None:
        raise RefusalError(
            "conditions not met",
            {"case": cc.case, "condition": failing.name, "value": failing.value},
        )

    elems = list(generators(data, m))
    if cc.case == 2:
        elems.extend(extra_binomials(data, m).all())

    key = AFFINE_ORDER.key
    elems.sort(key=lambda b: (key(b.lead), key(b.trail)))
    basis = BinomialBasis(
        tuple(elems),
        AFFINE_ORDER,
        is_groebner_verified=True,
        is_reduced=cc.case == 1,
    )
    return ClosedFormBasis(basis=basis, case=cc.case, w=cc.w, conditions=cc.conditions)


def _validated_vector(a: Iterable[int]) -> Vec4:
    vec = tuple(int(x) for x in a)
    if len(vec) != 4:
        raise ValueError(f"degree vector must have 4 entries, got {len(vec)}")
    if any(x < 1 for x in vec):
        raise ValueError(f"degree entries must be positive: {vec}")
    return vec


def _search_parameters(a: Vec4, cap: int) -> list[BresinskyData]:
    """Exhaustive recovery of all parameter sets inducing `a`, with each
    row sum capped.

    The first degree equation a1 = d2*d4*d13 + d42*d14*d23 drives the
    enumeration of (d2, d4, d13, d42, d14, d23); the second and third are
    then linear in (d21, d41) and solved exactly, and the fourth is
    verified on each candidate.
    """
    a1, a2, a3, a4 = a
    sols: list[BresinskyData] = []
    d2_hi = min(cap, (a1 - 1) // 2, (a3 - 1) // 2)
    for d2 in range(2, d2_hi + 1):
        d4_hi = min(cap, (a1 - 1) // d2, (a2 - 1) // 2)
        for d4 in range(2, d4_hi + 1):
            d13_hi = min(cap - 1, (a1 - 1) // (d2 * d4))
            for d13 in range(1, d13_hi + 1):
                rem = a1 - d2 * d4 * d13  # = d42 * d14 * d23 >= 1
                for d42 in range(1, d2):
                    if rem % d42:
                        continue
                    rem2 = rem // d42
                    for d14 in range(1, d4):
                        if rem2 % d14:
                            continue
                        d23 = rem2 // d14
                        if d13 + d23 > cap:
                            continue
                        d32 = d2 - d42
                        d34 = d4 - d14
                        d3 = d13 + d23
                        # a2 = A*d21 + B*d41, a3 = C*d21 + D*d41
                        A = d3 * d4
                        B = d34 * d23
                        C = d2 * d34 + d32 * d14
                        D = d2 * d34
                        det = A * D - B * C
                        if det != 0:
                            n21 = a2 * D - a3 * B
                            n41 = A * a3 - C * a2
                            if n21 % det or n41 % det:
                                continue
                            d21, d41 = n21 // det, n41 // det
                            if d21 < 1 or d41 < 1:
                                continue
                            cands = [(d21, d41)]
                        else:
                            cands = []
                            for d21 in range(1, cap):
                                t = a2 - A * d21
                                if t <= 0:
                                    break
                                if t % B == 0:
                                    cands.append((d21, t // B))
                        for d21, d41 in cands:
                            if d21 + d41 > cap:
                                continue
                            data = BresinskyData(d21, d41, d32, d42, d13, d23, d14, d34)
                            if a_from_d(data) == a:
                                sols.append(data)
    return sols


def d_from_a(a: Iterable[int], cap: int = DEFAULT_D_CAP) -> Optional[BresinskyData]:
    """Recover the parameters from a degree vector in role order.

    Returns None when no parameter set with row sums within `cap` induces
    the vector, i.e. the curve is not of this form in the given
    coordinate order (or its parameters exceed the cap).  More than one
    solution would contradict uniqueness of the parameter system and
    raises AnomalyError.
    """
    vec = _validated_vector(a)
    if math.gcd(*vec) != 1:
        raise RefusalError(SKIP_GCD, {"degrees": vec})
    sols = _search_parameters(vec, cap)
    if len(sols) > 1:
        raise AnomalyError(
            f"{len(sols)} parameter solutions for {vec}; the parameter system must be unique"
        )
    return sols[0] if sols else None


def d_from_a_any_order(
    a: Iterable[int], cap: int = DEFAULT_D_CAP
) -> list[tuple[tuple[int, int, int, int], BresinskyData]]:
    """Try every coordinate permutation that puts a strict maximum last.

    Returns all (permutation, parameters) hits; `permutation` maps target
    positions to source indices, i.e. permuted[i] = a[permutation[i]].
    A vector whose maximum is tied admits no valid permutation and yields
    the empty list.
    """
    vec = _validated_vector(a)
    if math.gcd(*vec) != 1:
        raise RefusalError(SKIP_GCD, {"degrees": vec})
    hits = []
    seen: set[Vec4] = set()
    for perm in permutations(range(4)):
        b = tuple(vec[i] for i in perm)
        if b in seen:
            continue
        seen.add(b)
        if not all(b[3] > b[i] for i in range(3)):
            continue
        sols = _search_parameters(b, cap)
        if len(sols) > 1:
            raise AnomalyError(
                f"{len(sols)} parameter solutions for {b}; the parameter system must be unique"
            )
        if sols:
            hits.append((perm, sols[0]))
    return hits
