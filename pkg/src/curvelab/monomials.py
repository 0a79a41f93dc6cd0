"""Exponent-vector monomials and graded reverse lexicographic orders.

The ambient ring has either 4 variables (x1..x4) or 5 variables (x0..x4,
x0 being the homogenizing variable).  The ambient size travels with every
monomial, and mixing sizes raises AmbientMismatchError instead of
coercing: homogenization bugs are silent otherwise.  All values are
immutable and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import ClassVar, Mapping, Sequence

from .errors import AmbientMismatchError

LESS = -1
EQUAL = 0
GREATER = 1

_VAR_IDS: dict[int, tuple[int, ...]] = {4: (1, 2, 3, 4), 5: (0, 1, 2, 3, 4)}


@dataclass(frozen=True, slots=True)
class Monomial:
    """A monomial as a tuple of non-negative exponents.

    A 4-tuple holds the exponents of x1..x4 in that order; a 5-tuple
    holds those of x0..x4.
    """

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.exponents)
        if n not in _VAR_IDS:
            raise ValueError(f"ambient ring must have 4 or 5 variables, got {n}")
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")

    @classmethod
    def from_powers(cls, powers: Mapping[int, int], nvars: int = 4) -> "Monomial":
        """Build from a {variable id: exponent} mapping; ids not listed get 0."""
        if nvars not in _VAR_IDS:
            raise ValueError(f"ambient ring must have 4 or 5 variables, got {nvars}")
        ids = _VAR_IDS[nvars]
        unknown = set(powers) - set(ids)
        if unknown:
            raise ValueError(
                f"variable ids {sorted(unknown)} not in ambient ring of size {nvars}"
            )
        return cls(tuple(powers.get(i, 0) for i in ids))

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    @property
    def var_ids(self) -> tuple[int, ...]:
        return _VAR_IDS[self.nvars]

    def degree(self) -> int:
        return sum(self.exponents)

    def exponent(self, var_id: int) -> int:
        """Exponent of the variable with the given id."""
        ids = self.var_ids
        if var_id not in ids:
            raise ValueError(f"variable id {var_id} not in ambient ring of size {self.nvars}")
        return self.exponents[ids.index(var_id)]

    def _same_ring(self, other: "Monomial") -> None:
        if self.nvars != other.nvars:
            raise AmbientMismatchError(
                f"ambient rings differ: {self.nvars} vs {other.nvars} variables"
            )

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._same_ring(other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: "Monomial") -> bool:
        """True iff every exponent of self is <= the matching one of other."""
        self._same_ring(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        """Componentwise maximum of exponents."""
        self._same_ring(other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def weight(self, weights: Sequence[int]) -> int:
        """Dot product of exponents with a weight vector of ambient size."""
        if len(weights) != self.nvars:
            raise AmbientMismatchError(
                f"weight vector of length {len(weights)} for a {self.nvars}-variable ring"
            )
        return sum(e * w for e, w in zip(self.exponents, weights))

    def __str__(self) -> str:
        parts = []
        for vid, e in zip(self.var_ids, self.exponents):
            if e == 1:
                parts.append(f"x{vid}")
            elif e > 1:
                parts.append(f"x{vid}^{e}")
        return "*".join(parts) if parts else "1"

    def to_json(self) -> dict:
        return {"exponents": list(self.exponents)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "Monomial":
        return cls(tuple(int(e) for e in obj["exponents"]))


@dataclass(frozen=True)
class MonomialOrder:
    """Graded reverse lexicographic order with an explicit variable priority.

    `priority` lists the variable ids from greatest to least.  Total
    degree decides first; on a tie the exponent vectors are scanned from
    the least-priority variable upward, and the monomial with the larger
    exponent at the first difference is the smaller one.  This is a
    multiplicative total order; two monomials compare equal only when
    their exponent vectors coincide.
    """

    priority: tuple[int, ...]
    _scan: tuple[int, ...] = field(init=False, repr=False, compare=False)

    kind: ClassVar[str] = "degrevlex"

    def __post_init__(self) -> None:
        n = len(self.priority)
        if n not in _VAR_IDS or set(self.priority) != set(_VAR_IDS[n]):
            raise ValueError(
                f"priority must be a permutation of the ids of a 4- or 5-variable ring: {self.priority}"
            )
        ids = _VAR_IDS[n]
        # exponent indices in least-priority-first scan order
        object.__setattr__(self, "_scan", tuple(ids.index(v) for v in reversed(self.priority)))

    @property
    def nvars(self) -> int:
        return len(self.priority)

    def _check(self, m: Monomial) -> None:
        if m.nvars != self.nvars:
            raise AmbientMismatchError(
                f"{m.nvars}-variable monomial under a {self.nvars}-variable order"
            )

    def key(self, m: Monomial) -> tuple:
        """Sort key, ascending in the order."""
        self._check(m)
        e = m.exponents
        return (sum(e), tuple(-e[i] for i in self._scan))

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        """LESS, EQUAL or GREATER for m1 against m2."""
        self._check(m1)
        self._check(m2)
        d1 = sum(m1.exponents)
        d2 = sum(m2.exponents)
        if d1 != d2:
            return GREATER if d1 > d2 else LESS
        e1 = m1.exponents
        e2 = m2.exponents
        for i in self._scan:
            if e1[i] != e2[i]:
                return LESS if e1[i] > e2[i] else GREATER
        return EQUAL

    def to_json(self) -> dict:
        return {"kind": self.kind, "priority": list(self.priority)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "MonomialOrder":
        if obj.get("kind") != cls.kind:
            raise ValueError(f"unsupported order kind: {obj.get('kind')!r}")
        return cls(tuple(int(v) for v in obj["priority"]))


#: The working order on the 4-variable ring: x2 > x1 > x3 > x4.
AFFINE_ORDER = MonomialOrder((2, 1, 3, 4))

#: Its extension to the homogenized ring, with x0 as the least variable.
PROJECTIVE_ORDER = MonomialOrder((2, 1, 3, 4, 0))
