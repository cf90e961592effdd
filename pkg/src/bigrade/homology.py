"""Fine-degree Koszul and Cech homology of monomial subquotients.

A subquotient J/J' has a monomial K-basis (monomials in J but not J'), so in
each fine degree every term of a Koszul or Cech complex is 0- or 1-dimensional
and the differentials are 0/+-1 matrices.  All dimensions come out of exact
integer ranks over the ring's configured characteristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from . import kernels
from .errors import (
    InternalCheckFailed,
    PreconditionFailed,
    RingMismatch,
    ZeroModule,
)
from .rings import (
    MonomialIdeal,
    RingSpec,
    colon_ideal,
    dim_quotient,
    minimal_generators,
    unit_ideal,
)

AxisIdeal = frozenset  # nonempty subset of variable indices


@dataclass(frozen=True)
class Subquotient:
    """The module J/J' for monomial ideals J' <= J; S/I is pair (S, I)."""

    ring: RingSpec
    J: MonomialIdeal
    Jp: MonomialIdeal

    def __post_init__(self):
        if self.J.ring != self.ring or self.Jp.ring != self.ring:
            raise RingMismatch("subquotient ideals must share the ambient ring")
        if not self.J.contains_ideal(self.Jp):
            raise ValueError("J' must be contained in J")

    @classmethod
    def cyclic(cls, I: MonomialIdeal) -> "Subquotient":
        return cls(I.ring, unit_ideal(I.ring), I)

    @property
    def is_zero(self) -> bool:
        return all(self.Jp.contains(g) for g in self.J.gens)

    def box(self) -> tuple:
        """Componentwise max generator exponent of J and J' (the lcm box)."""
        bj = self.J.max_exponents()
        bp = self.Jp.max_exponents()
        return tuple(max(a, b) for a, b in zip(bj, bp))


def fine_piece(N: Subquotient, c) -> int:
    """1 iff the monomial with exponent c >= 0 lies in J \\ J'."""
    c = tuple(c)
    if any(e < 0 for e in c):
        return 0
    return 1 if (N.J.contains(c) and not N.Jp.contains(c)) else 0


def _divides_capped(g, exps, inf_set) -> bool:
    return all(i in inf_set or g[i] <= exps[i] for i in range(len(g)))


def _contains_capped(I: MonomialIdeal, exps, inf_set) -> bool:
    return any(_divides_capped(g, exps, inf_set) for g in I.gens)


def piece_stable(N: Subquotient, exps, inf_set) -> int:
    """Piece of the localization at the variables in inf_set (those exponents -> +inf)."""
    if any(e < 0 for i, e in enumerate(exps) if i not in inf_set):
        return 0
    if _contains_capped(N.J, exps, inf_set) and not _contains_capped(N.Jp, exps, inf_set):
        return 1
    return 0


def _rank(entries, nrows, ncols, char):
    if nrows == 0 or ncols == 0:
        return 0
    mat = [[0] * ncols for _ in range(nrows)]
    for (r, c), v in entries.items():
        mat[r][c] = v
    return kernels.rank(mat, char)


def koszul_dims_at(N: Subquotient, zvars, b) -> list:
    """All Koszul homology dimensions [H_0 .. H_k] on the variables zvars in fine degree b."""
    zvars = sorted(zvars)
    k = len(zvars)
    b = tuple(b)

    # present[j]: ordered subsets sigma with nonzero term N_{b - e_sigma}
    present = []
    index = []
    for j in range(k + 1):
        level = []
        for sigma in combinations(zvars, j):
            deg = list(b)
            for z in sigma:
                deg[z] -= 1
            if fine_piece(N, deg):
                level.append(sigma)
        present.append(level)
        index.append({s: i for i, s in enumerate(level)})

    ranks = [0] * (k + 2)  # ranks[j] = rank of d_j : level j -> level j-1
    for j in range(1, k + 1):
        entries = {}
        for ci, sigma in enumerate(present[j]):
            for pos, z in enumerate(sigma):
                tau = tuple(v for v in sigma if v != z)
                ri = index[j - 1].get(tau)
                if ri is not None:
                    entries[(ri, ci)] = (-1) ** pos
        ranks[j] = _rank(entries, len(present[j - 1]), len(present[j]), N.ring.char)

    return [len(present[j]) - ranks[j] - ranks[j + 1] for j in range(k + 1)]


def koszul_homology_dim(N: Subquotient, Z, j: int, b) -> int:
    if not (0 <= j <= len(Z)):
        raise PreconditionFailed(f"index {j} outside [0, {len(Z)}]")
    return koszul_dims_at(N, Z, b)[j]


def _scan_koszul(N: Subquotient, Z, max_retries: int = 3):
    """Scan the certified box; returns {degree: [dims per j]} with zero rows dropped.

    The shell (some coordinate = box + 1) must vanish entirely; a violation
    doubles the offending coordinate and rescans.  For finitely generated
    modules stabilization of membership makes the first pass certify.
    """
    box = list(N.box())
    for _ in range(max_retries):
        table = {}
        violation = None
        for b in product(*(range(e + 2) for e in box)):
            dims = koszul_dims_at(N, Z, b)
            if any(dims):
                table[b] = dims
                if any(b[i] == box[i] + 1 for i in range(len(box))):
                    violation = b
        if violation is None:
            return table
        for i in range(len(box)):
            if violation[i] == box[i] + 1:
                box[i] = 2 * (box[i] + 1)
    raise InternalCheckFailed(
        f"shell certification failed; module is not finitely generated over the "
        f"chosen variables {sorted(Z)}"
    )


def betti_and_projdim(N: Subquotient, Z):
    """Graded Betti numbers over K[Z] and the projective dimension.

    Only valid when N is finitely generated over K[Z] (Z = all variables of
    the ring, or a restricted fiber module).
    """
    if N.is_zero:
        raise ZeroModule("Betti numbers of the zero module")
    table = _scan_koszul(N, Z)
    betti = {}
    projdim = 0
    for b, dims in table.items():
        for j, d in enumerate(dims):
            if d:
                betti[(j, b)] = d
                if j > projdim:
                    projdim = j
    return betti, projdim


_depth_cache: dict = {}
_dim_cache: dict = {}


def depth_module(N: Subquotient, Z) -> int:
    """depth over K[Z] via Auslander-Buchsbaum: |Z| - projdim."""
    key = (N, frozenset(Z))
    if key not in _depth_cache:
        _, projdim = betti_and_projdim(N, Z)
        _depth_cache[key] = len(Z) - projdim
    return _depth_cache[key]


def dim_module(N: Subquotient) -> int:
    """Krull dimension of J/J' via its annihilator (J' : J)."""
    if N not in _dim_cache:
        ann = colon_ideal(N.Jp, N.J)
        if ann.is_unit:
            raise ZeroModule("dimension of the zero module")
        _dim_cache[N] = dim_quotient(ann)
    return _dim_cache[N]


def cech_piece_dim(N: Subquotient, Z, i: int, c) -> int:
    """dim_K of H^i_Z(N) in fine degree c (coordinates on Z may be negative)."""
    zvars = sorted(Z)
    k = len(zvars)
    if not (0 <= i <= k):
        raise PreconditionFailed(f"index {i} outside [0, {k}]")
    c = tuple(c)
    zset = set(zvars)
    if any(e < 0 for idx, e in enumerate(c) if idx not in zset):
        return 0
    neg = frozenset(z for z in zvars if c[z] < 0)

    present = []
    index = []
    for j in (i - 1, i, i + 1):
        if j < 0 or j > k:
            present.append([])
            index.append({})
            continue
        level = []
        for sigma in combinations(zvars, j):
            sset = frozenset(sigma)
            if not neg <= sset:
                continue
            if piece_stable(N, c, sset):
                level.append(sigma)
        present.append(level)
        index.append({s: n for n, s in enumerate(level)})

    def diff_rank(src_level, src_index, dst_level, dst_index):
        entries = {}
        for ci, sigma in enumerate(src_level):
            sset = set(sigma)
            for z in zvars:
                if z in sset:
                    continue
                tau = tuple(sorted(sigma + (z,)))
                ri = dst_index.get(tau)
                if ri is not None:
                    sign = (-1) ** tau.index(z)
                    entries[(ri, ci)] = sign
        return _rank(entries, len(dst_level), len(src_level), N.ring.char)

    rank_out = diff_rank(present[1], index[1], present[2], index[2])
    rank_in = diff_rank(present[0], index[0], present[1], index[1])
    return len(present[1]) - rank_out - rank_in


def ass_subquotient(J: MonomialIdeal, Jp: MonomialIdeal) -> set:
    """Ass of the module J/J' by enumerating annihilators of capped monomials.

    (J' : u) and membership only see exponents up to the generator maxima, so
    the capped box covers every element class.
    """
    N = Subquotient(J.ring, J, Jp)
    box = N.box()
    found = set()
    from .rings import colon, support

    for u in product(*(range(e + 1) for e in box)):
        if not fine_piece(N, u):
            continue
        ann = colon(Jp, u)
        if all(len(support(g)) == 1 and max(g) == 1 for g in ann.gens):
            found.add(frozenset(idx for g in ann.gens for idx in support(g)))
    return found


def restrict_ideal(I: MonomialIdeal, Z, sub_ring: RingSpec) -> MonomialIdeal:
    """I intersected with K[Z], re-indexed into sub_ring (variables of Z in order)."""
    zvars = sorted(Z)
    gens = [
        tuple(g[z] for z in zvars)
        for g in I.gens
        if all(e == 0 for idx, e in enumerate(g) if idx not in Z)
    ]
    return minimal_generators(sub_ring, gens)


def sub_ring_for(ring: RingSpec, Z) -> RingSpec:
    """RingSpec of K[Z]; x-variables of Z first, preserving order."""
    m = sum(1 for z in Z if z < ring.m)
    n = len(Z) - m
    return RingSpec(m, n, ring.char)
