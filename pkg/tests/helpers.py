"""Shared test utilities: monomial builders, an independent comparison
oracle, and a seeded generator of valid parameter sets."""

from random import Random

from curvelab import AFFINE_ORDER, Binomial, BresinskyData, Monomial, ShiftFamily, case_conditions


def m4(e1=0, e2=0, e3=0, e4=0) -> Monomial:
    return Monomial((e1, e2, e3, e4))


def m5(e0=0, e1=0, e2=0, e3=0, e4=0) -> Monomial:
    return Monomial((e0, e1, e2, e3, e4))


def bino(lead: Monomial, trail: Monomial) -> Binomial:
    b = Binomial.from_pair(lead, trail, AFFINE_ORDER)
    assert b is not None
    return b


def pair_set(binomials) -> set:
    """Orientation-insensitive view of a collection of binomials."""
    return {frozenset((b.lead.exponents, b.trail.exponents)) for b in binomials}


def oracle_compare(ma: Monomial, mb: Monomial, priority) -> int:
    """Textbook restatement of the graded reverse lexicographic rule:
    degree first, then the sign at the last position where the exponent
    vectors differ when listed from greatest to least priority (larger
    exponent there loses)."""
    da, db = sum(ma.exponents), sum(mb.exponents)
    if da != db:
        return 1 if da > db else -1
    last = 0
    for vid in priority:
        diff = ma.exponent(vid) - mb.exponent(vid)
        if diff != 0:
            last = diff
    if last == 0:
        return 0
    return 1 if last < 0 else -1


def monomials_of_degree_at_most(nvars: int, d: int):
    """All exponent vectors with total degree <= d."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 0:
            out.append(Monomial(tuple(prefix)))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, slots - 1)

    rec([], d, nvars)
    return out


def random_valid_data(rng: Random, max_row: int = 10) -> BresinskyData:
    """Uniform-ish valid parameter set with every row sum <= max_row."""

    def split():
        x = rng.randint(1, max_row - 1)
        y = rng.randint(1, max_row - x)
        return x, y

    d21, d41 = split()
    d32, d42 = split()
    d13, d23 = split()
    d14, d34 = split()
    return BresinskyData(d21, d41, d32, d42, d13, d23, d14, d34)


def sample_condition_passing(seed: int, count: int, max_row: int = 10, max_m: int = 10):
    """Deterministic corpus of (data, m) with coprime degrees, strictly
    maximal fourth degree, and every case condition passing."""
    rng = Random(seed)
    out = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        assert attempts < 500_000, "sampling is not converging"
        data = random_valid_data(rng, max_row)
        m = rng.randint(0, max_m)
        try:
            member = ShiftFamily.from_data(data).member(m)
        except Exception:
            continue
        if not (member.gcd_ok and member.max_ok):
            continue
        if not case_conditions(data, m).all_pass:
            continue
        out.append((data, m))
    return out


def sample_applicable(seed: int, count: int, max_row: int = 10, max_m: int = 10):
    """Deterministic corpus of (data, m) with coprime degrees and strictly
    maximal fourth degree, with no condition filter."""
    rng = Random(seed)
    out = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        assert attempts < 500_000, "sampling is not converging"
        data = random_valid_data(rng, max_row)
        m = rng.randint(0, max_m)
        try:
            member = ShiftFamily.from_data(data).member(m)
        except Exception:
            continue
        if member.gcd_ok and member.max_ok:
            out.append((data, m))
    return out
