"""Maximal-depth classification of hypersurface rings S/(f).

Only the bidegrees of the bihomogeneous irreducible factors of f matter (the
user asserts irreducibility; coefficients are never touched).  Writing a_i for
the x-degree and b_i for the y-degree of a factor, the ring has maximal depth
with respect to the y-axis iff b = 0 or some factor is purely in the y-block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import BadProfile, BadRing
from .rings import Monomial, MonomialIdeal, RingSpec, minimal_generators


@dataclass(frozen=True)
class FactorProfile:
    """Multiset of factor bidegrees (a_i, b_i), each nonzero."""

    factors: tuple

    def __post_init__(self):
        if not self.factors:
            raise BadProfile("need at least one factor")
        for a, b in self.factors:
            if a < 0 or b < 0 or a + b < 1:
                raise BadProfile(f"factor bidegree ({a},{b}) must be nonzero and nonnegative")

    @property
    def alpha1(self) -> int:
        return sum(a for a, b in self.factors if b == 0)

    @property
    def alpha2(self) -> int:
        return sum(a for a, b in self.factors if a > 0 and b > 0)

    @property
    def beta1(self) -> int:
        return sum(b for a, b in self.factors if a > 0 and b > 0)

    @property
    def beta2(self) -> int:
        return sum(b for a, b in self.factors if a == 0)

    @property
    def a(self) -> int:
        return self.alpha1 + self.alpha2

    @property
    def b(self) -> int:
        return self.beta1 + self.beta2


@dataclass(frozen=True)
class HypersurfaceVerdict:
    maximal_depth: bool
    case_label: str  # one of "a", "b", "c", "none"
    grade_Q: int
    mgrade_Q: int
    case_trace: str  # which proof case applied

    def __post_init__(self):
        ok = self.maximal_depth == (self.grade_Q == self.mgrade_Q) == (
            self.case_label in ("a", "b", "c")
        )
        if not ok:
            raise BadProfile("inconsistent verdict fields")


def classify(profile: FactorProfile, ring: RingSpec) -> HypersurfaceVerdict:
    """Theorem-based classification of S/(f) from the factor bidegree profile."""
    if ring.m < 1 or ring.n < 1:
        raise BadRing("the hypersurface classification needs m >= 1 and n >= 1")
    a1, a2, b1, b2 = profile.alpha1, profile.alpha2, profile.beta1, profile.beta2
    n = ring.n

    grade_q = n - 1 if profile.b > 0 else n
    mgrade_q = n - 1 if any(a == 0 and b > 0 for a, b in profile.factors) else n

    if a1 > 0 and a2 > 0 and b1 > 0 and b2 > 0:
        label, trace = "a", "case1"
    elif a1 == 0 and a2 > 0 and b1 > 0 and b2 > 0:
        label, trace = "b", "case2"
    elif a2 == 0 and b1 == 0:
        # no mixed factor: f = (pure x part) * (pure y part)
        label = "c"
        if a1 > 0 and b2 > 0:
            trace = "case3"
        else:
            trace = "pure-block"
    elif b2 == 0 and a1 > 0 and a2 > 0 and b1 > 0:
        label, trace = "none", "case4"
    elif a1 == 0 and b2 == 0 and a2 > 0 and b1 > 0:
        label, trace = "none", "case5"
    else:
        # mixed factor present, no pure-y factor, no pure-x factor pattern above
        label, trace = "none", "case4"

    return HypersurfaceVerdict(
        maximal_depth=(grade_q == mgrade_q),
        case_label=label,
        grade_Q=grade_q,
        mgrade_Q=mgrade_q,
        case_trace=trace,
    )


def profile_of_monomial(ring: RingSpec, f: Monomial) -> FactorProfile:
    """Each variable power of a monomial is one factor: x_i^e -> (e,0), y_j^e -> (0,e)."""
    if len(f) != ring.nvars:
        raise BadProfile(f"monomial {f} has wrong length for {ring}")
    factors = []
    for i, e in enumerate(f):
        if e == 0:
            continue
        factors.append((e, 0) if i < ring.m else (0, e))
    if not factors:
        raise BadProfile("the constant monomial is not a hypersurface")
    return FactorProfile(tuple(factors))


def monomial_crosscheck(f: Monomial, ring: RingSpec) -> bool:
    """Compare the theorem's verdict with the fiber engine on the monomial (f)."""
    from .homology import Subquotient
    from .invariants import grade, mgrade

    profile = profile_of_monomial(ring, f)
    verdict = classify(profile, ring)
    I = minimal_generators(ring, [f])
    Z = ring.y_block()
    g = grade(Subquotient.cyclic(I), Z)
    mg = mgrade(I, Z)
    return (
        verdict.grade_Q == g
        and verdict.mgrade_Q == mg
        and verdict.maximal_depth == (g == mg)
    )


def parse_profile(text: str, ring: Optional[RingSpec] = None) -> FactorProfile:
    """Parse `factors: (a1,b1) (a2,b2) ...` with xN/yN shorthand for variables."""
    from .errors import ParseError

    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if len(lines) > 1:
        raise ParseError(
            f"unexpected line {lines[1][1]!r}", line=lines[1][0]
        )
    body = lines[0][1] if lines else ""
    if body.startswith("factors:"):
        # the file form; --factors passes the bare list
        body = body[len("factors:"):].strip()
    if not body:
        raise ParseError("empty factor profile")

    factors = []
    for tok in body.split():
        if tok.startswith("(") and tok.endswith(")"):
            inner = tok[1:-1]
            try:
                a_str, b_str = inner.split(",")
                factors.append((int(a_str), int(b_str)))
            except ValueError as exc:
                raise ParseError(f"bad bidegree {tok!r}") from exc
        elif tok[0] == "x" and tok[1:].isdigit():
            factors.append((1, 0))
        elif tok[0] == "y" and tok[1:].isdigit():
            factors.append((0, 1))
        else:
            raise ParseError(f"bad factor token {tok!r}")
    return FactorProfile(tuple(factors))
