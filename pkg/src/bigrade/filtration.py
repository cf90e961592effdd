"""Dimension filtration with respect to an axis and sequential CM classification.

For S/I the filtration is realized by ideals: the i-th submodule D_i is
J_i/I where J_i intersects the primary components whose radical has cd value
above the i-th threshold.  The Ass-theoretic facts about the filtration are
theorems, so they are re-verified at runtime from independent enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalCheckFailed, UnitIdeal, ZeroIdeal
from .homology import Subquotient, ass_subquotient
from .invariants import cd, cd_prime, grade
from .rings import (
    MonomialIdeal,
    associated_primes,
    intersect_all,
    irreducible_decomposition,
    unit_ideal,
)


@dataclass(frozen=True)
class FiltrationLadder:
    """Ideals I = J_0 < J_1 < ... < J_r = S realizing D_i = J_i/I."""

    axis: frozenset
    ideals: tuple  # (J_0, ..., J_r)
    cd_values: tuple  # (gamma_1 < ... < gamma_r), gamma_i = cd(Z, J_i/I)

    @property
    def base(self) -> MonomialIdeal:
        return self.ideals[0]

    @property
    def steps(self):
        """(J_i, gamma_i) pairs for i = 1..r."""
        return list(zip(self.ideals[1:], self.cd_values))


def dimension_filtration(I: MonomialIdeal, Z) -> FiltrationLadder:
    if I.is_unit:
        raise UnitIdeal("filtration of the zero module")
    if I.is_zero:
        raise ZeroIdeal("filtration of a free module; use a nonzero ideal")
    Z = frozenset(Z)
    comps = irreducible_decomposition(I)
    gammas = sorted({cd_prime(pc.radical, Z) for pc in comps})

    ideals = [I]
    for g in gammas:
        higher = [pc.component for pc in comps if cd_prime(pc.radical, Z) > g]
        ideals.append(intersect_all(higher) if higher else unit_ideal(I.ring))

    for lower, upper in zip(ideals, ideals[1:]):
        if not (upper.contains_ideal(lower) and upper != lower):
            raise InternalCheckFailed("filtration ladder is not strictly increasing")

    ladder = FiltrationLadder(axis=Z, ideals=tuple(ideals), cd_values=tuple(gammas))
    _verify_ass_facts(ladder)
    return ladder


def _verify_ass_facts(ladder: FiltrationLadder):
    """Runtime check of the filtration's Ass identities (they are theorems)."""
    I = ladder.base
    Z = ladder.axis
    ass_total = associated_primes(I)
    for J_i, gamma in ladder.steps:
        expected = {p for p in ass_total if cd_prime(p, Z) <= gamma}
        actual = ass_subquotient(J_i, I)
        if actual != expected:
            raise InternalCheckFailed(
                f"Ass(D_i) mismatch at cd {gamma}: computed {sorted(map(sorted, actual))}, "
                f"expected {sorted(map(sorted, expected))}"
            )
        if not J_i.is_unit:
            quotient_ass = associated_primes(J_i)
            if quotient_ass != ass_total - expected:
                raise InternalCheckFailed(f"Ass(M/D_i) mismatch at cd {gamma}")


def ass_quotients(ladder: FiltrationLadder) -> list:
    """Ass(D_i/D_{i-1}) per step: the Ass primes at exactly the step's cd value."""
    I = ladder.base
    ass_total = associated_primes(I)
    blocks = []
    seen = set()
    prev = I
    for J_i, gamma in ladder.steps:
        expected = {p for p in ass_total if cd_prime(p, ladder.axis) == gamma}
        actual = ass_subquotient(J_i, prev)
        if actual != expected:
            raise InternalCheckFailed(f"Ass(D_i/D_(i-1)) mismatch at cd {gamma}")
        blocks.append(expected)
        seen |= expected
        prev = J_i
    if seen != ass_total:
        raise InternalCheckFailed("step primes do not partition Ass(M)")
    return blocks


def sequentially_cm(I: MonomialIdeal, Z) -> dict:
    """Sequential CM test: every filtration step must have grade = cd."""
    ladder = dimension_filtration(I, Z)
    per_step = []
    verdict = True
    prev = I
    for J_i, gamma in ladder.steps:
        step = Subquotient(I.ring, J_i, prev)
        g = grade(step, Z)
        c = cd(step, Z)
        if c != gamma:
            raise InternalCheckFailed(f"step cd {c} differs from ladder value {gamma}")
        per_step.append({"grade": g, "cd": c, "is_cm": g == c})
        verdict = verdict and g == c
        prev = J_i
    return {"verdict": verdict, "per_step": per_step, "ladder": ladder}


def mgrade_constancy(I: MonomialIdeal, Z) -> bool:
    """All D_i share mgrade = gamma_1; False would signal an internal bug."""
    if I.is_unit:
        raise UnitIdeal("mgrade constancy of the zero module")
    ladder = dimension_filtration(I, Z)
    ass_total = associated_primes(I)
    gamma_1 = ladder.cd_values[0]
    for _, gamma in ladder.steps:
        primes = {p for p in ass_total if cd_prime(p, ladder.axis) <= gamma}
        if min(cd_prime(p, ladder.axis) for p in primes) != gamma_1:
            return False
    return True
