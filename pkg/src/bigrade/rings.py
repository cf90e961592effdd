"""Exact monomial-ideal arithmetic in the bigraded ring K[x_1..x_m, y_1..y_n].

Monomials are exponent tuples of length m+n (x-block first).  Ideals are kept
in minimal-generator normal form with a fixed lexicographic generator order,
so equal ideals compare equal and all downstream output is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DimensionMismatch, RingMismatch, UnitIdeal, ZeroIdeal

Monomial = tuple[int, ...]
PrimeSupport = frozenset  # set of variable indices; the prime generated by them


@dataclass(frozen=True, order=True)
class RingSpec:
    """Ambient ring data: m x-variables, n y-variables, rank characteristic."""

    m: int
    n: int
    char: int = 0

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or self.m + self.n < 1:
            raise ValueError(f"need m, n >= 0 and m + n >= 1, got m={self.m} n={self.n}")
        if self.char < 0 or self.char == 1 or (self.char > 1 and not _is_prime(self.char)):
            raise ValueError(f"characteristic must be 0 or prime, got {self.char}")

    @property
    def nvars(self) -> int:
        return self.m + self.n

    def var_name(self, i: int) -> str:
        if i < self.m:
            return f"x{i + 1}"
        return f"y{i - self.m + 1}"

    def x_block(self) -> frozenset:
        return frozenset(range(self.m))

    def y_block(self) -> frozenset:
        return frozenset(range(self.m, self.m + self.n))

    def all_vars(self) -> frozenset:
        return frozenset(range(self.nvars))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def mon_mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def mon_quot(g: Monomial, u: Monomial) -> Monomial:
    """g / gcd(g, u): the generator of the colon (g : u)."""
    return tuple(max(a - b, 0) for a, b in zip(g, u))


def support(u: Monomial) -> frozenset:
    return frozenset(i for i, e in enumerate(u) if e > 0)


def unit_monomial(ring: RingSpec) -> Monomial:
    return (0,) * ring.nvars


def var_power(ring: RingSpec, i: int, e: int = 1) -> Monomial:
    u = [0] * ring.nvars
    u[i] = e
    return tuple(u)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in canonical form: minimal generators, lex-sorted."""

    ring: RingSpec
    gens: tuple = field(default=())

    def __post_init__(self):
        for g in self.gens:
            if len(g) != self.ring.nvars:
                raise DimensionMismatch(
                    f"generator {g} has length {len(g)}, ring has {self.ring.nvars} variables"
                )

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return bool(self.gens) and all(e == 0 for e in self.gens[0])

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    def contains(self, u: Monomial) -> bool:
        return any(divides(g, u) for g in self.gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def max_exponents(self) -> Monomial:
        """Componentwise max of generator exponents (the lcm box); 0-vector if zero ideal."""
        box = [0] * self.ring.nvars
        for g in self.gens:
            for i, e in enumerate(g):
                if e > box[i]:
                    box[i] = e
        return tuple(box)

    def __str__(self):
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(render_monomial(self.ring, g) for g in self.gens) + ")"


def render_monomial(ring: RingSpec, u: Monomial) -> str:
    parts = [
        ring.var_name(i) + (f"^{e}" if e > 1 else "")
        for i, e in enumerate(u)
        if e > 0
    ]
    return "*".join(parts) if parts else "1"


def minimal_generators(ring: RingSpec, raw) -> MonomialIdeal:
    """Canonical form: drop duplicates and any generator divisible by another."""
    gens = set()
    for u in raw:
        u = tuple(int(e) for e in u)
        if len(u) != ring.nvars:
            raise DimensionMismatch(
                f"monomial {u} has length {len(u)}, ring has {ring.nvars} variables"
            )
        if any(e < 0 for e in u):
            raise ValueError(f"negative exponent in {u}")
        gens.add(u)
    minimal = [
        u for u in gens
        if not any(v != u and divides(v, u) for v in gens)
    ]
    return MonomialIdeal(ring, tuple(sorted(minimal)))


def unit_ideal(ring: RingSpec) -> MonomialIdeal:
    return MonomialIdeal(ring, (unit_monomial(ring),))


def zero_ideal(ring: RingSpec) -> MonomialIdeal:
    return MonomialIdeal(ring, ())


def _check_same_ring(I: MonomialIdeal, J: MonomialIdeal):
    if I.ring != J.ring:
        raise RingMismatch(f"rings differ: {I.ring} vs {J.ring}")


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(I, J)
    if I.is_unit:
        return J
    if J.is_unit:
        return I
    return minimal_generators(I.ring, (lcm(u, v) for u in I.gens for v in J.gens))


def intersect_all(ideals) -> MonomialIdeal:
    ideals = list(ideals)
    if not ideals:
        raise ValueError("intersect_all needs at least one ideal")
    acc = ideals[0]
    for J in ideals[1:]:
        acc = intersect(acc, J)
    return acc


def colon(I: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """(I : u) = {v : v*u in I}."""
    if len(u) != I.ring.nvars:
        raise DimensionMismatch(f"monomial {u} has wrong length for {I.ring}")
    return minimal_generators(I.ring, (mon_quot(g, u) for g in I.gens))


def colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """(I : J) = intersection of (I : g) over generators g of J."""
    _check_same_ring(I, J)
    if J.is_zero:
        return unit_ideal(I.ring)
    return intersect_all([colon(I, g) for g in J.gens])


def membership(u: Monomial, I: MonomialIdeal) -> bool:
    return I.contains(tuple(u))


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return minimal_generators(
        I.ring, (tuple(min(e, 1) for e in g) for g in I.gens)
    )


def sum_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(I, J)
    return minimal_generators(I.ring, I.gens + J.gens)


def prime_ideal(ring: RingSpec, p: PrimeSupport) -> MonomialIdeal:
    return minimal_generators(ring, (var_power(ring, i) for i in sorted(p)))


@dataclass(frozen=True)
class PrimaryComponent:
    """A primary (or irreducible) monomial ideal together with its radical."""

    component: MonomialIdeal
    radical: PrimeSupport


def _is_irreducible(gens: tuple) -> bool:
    return all(len(support(g)) == 1 for g in gens)


def _first_splittable(gens: tuple):
    """Lex-first generator with >= 2 variables in its support, or None."""
    for g in gens:
        if len(support(g)) >= 2:
            return g
    return None


def irreducible_decomposition(I: MonomialIdeal) -> list:
    """Irredundant irreducible decomposition, each component pure variable powers.

    Splits the lex-first mixed generator u = u1*u2 (u1 the leading variable
    power) into I = (I + (u1)) cap (I + (u2)) until every branch is
    irreducible, then removes redundant components.
    """
    if I.is_unit:
        raise UnitIdeal("unit ideal has no decomposition")
    if I.is_zero:
        raise ZeroIdeal("zero ideal has no irreducible decomposition")
    ring = I.ring

    components = set()
    stack = [I]
    while stack:
        J = stack.pop()
        u = _first_splittable(J.gens)
        if u is None:
            components.add(J.gens)
            continue
        i = min(support(u))
        u1 = var_power(ring, i, u[i])
        u2 = tuple(0 if k == i else e for k, e in enumerate(u))
        stack.append(minimal_generators(ring, J.gens + (u1,)))
        stack.append(minimal_generators(ring, J.gens + (u2,)))

    comps = [MonomialIdeal(ring, g) for g in sorted(components)]

    # irredundancy: drop q when the intersection of the others is inside q
    kept = list(comps)
    changed = True
    while changed:
        changed = False
        for idx in range(len(kept)):
            others = kept[:idx] + kept[idx + 1:]
            if not others:
                break
            if kept[idx].contains_ideal(intersect_all(others)):
                del kept[idx]
                changed = True
                break

    return [PrimaryComponent(q, support(lcm_of_gens(q))) for q in kept]


def lcm_of_gens(I: MonomialIdeal) -> Monomial:
    return I.max_exponents()


def associated_primes(I: MonomialIdeal) -> set:
    """Ass(S/I) as a set of variable-index frozensets; {frozenset()} for I = 0."""
    if I.is_unit:
        raise UnitIdeal("Ass(S/S) is undefined (zero module)")
    if I.is_zero:
        return {frozenset()}
    return {pc.radical for pc in irreducible_decomposition(I)}


def primary_decomposition(I: MonomialIdeal) -> list:
    """Irredundant primary decomposition: intersect irreducible components per radical."""
    comps = irreducible_decomposition(I)
    by_radical = {}
    for pc in comps:
        by_radical.setdefault(pc.radical, []).append(pc.component)
    out = []
    for rad in sorted(by_radical, key=sorted):
        out.append(PrimaryComponent(intersect_all(by_radical[rad]), rad))
    return out


def minimal_primes(I: MonomialIdeal) -> set:
    ass = associated_primes(I)
    return {p for p in ass if not any(q < p for q in ass)}


def dim_quotient(I: MonomialIdeal) -> int:
    """Krull dimension of S/I."""
    if I.is_unit:
        raise UnitIdeal("S/S is the zero module")
    if I.is_zero:
        return I.ring.nvars
    return I.ring.nvars - min(len(p) for p in minimal_primes(I))
