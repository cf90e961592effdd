import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bigrade.errors import DimensionMismatch, UnitIdeal, ZeroIdeal
from bigrade.rings import (
    MonomialIdeal,
    RingSpec,
    associated_primes,
    colon,
    colon_ideal,
    dim_quotient,
    intersect,
    irreducible_decomposition,
    membership,
    minimal_generators,
    minimal_primes,
    primary_decomposition,
    prime_ideal,
    radical,
    render_monomial,
    sum_ideal,
    unit_ideal,
    zero_ideal,
)

R22 = RingSpec(2, 2)


def ideal(ring, *gens):
    return minimal_generators(ring, gens)


def test_ringspec_validation():
    RingSpec(0, 1)
    RingSpec(3, 0, 5)
    with pytest.raises(ValueError):
        RingSpec(0, 0)
    with pytest.raises(ValueError):
        RingSpec(1, 1, 4)
    with pytest.raises(ValueError):
        RingSpec(1, 1, -2)


def test_var_names_and_blocks():
    r = RingSpec(2, 3)
    assert [r.var_name(i) for i in range(5)] == ["x1", "x2", "y1", "y2", "y3"]
    assert r.x_block() == frozenset({0, 1})
    assert r.y_block() == frozenset({2, 3, 4})


def test_minimal_generators_drops_multiples():
    I = ideal(R22, (1, 0, 0, 0), (1, 1, 0, 0), (2, 0, 1, 0), (0, 0, 1, 1))
    assert I.gens == ((0, 0, 1, 1), (1, 0, 0, 0))


def test_unit_zero_flags():
    assert unit_ideal(R22).is_unit
    assert zero_ideal(R22).is_zero
    assert not ideal(R22, (1, 0, 0, 0)).is_unit
    with pytest.raises(DimensionMismatch):
        minimal_generators(R22, [(1, 0)])


def test_render_monomial():
    assert render_monomial(R22, (2, 0, 1, 0)) == "x1^2*y1"
    assert render_monomial(R22, (0, 0, 0, 0)) == "1"


exp_tuples = st.tuples(*[st.integers(min_value=0, max_value=3)] * 4)


@settings(max_examples=60, deadline=None)
@given(st.lists(exp_tuples, min_size=1, max_size=6))
def test_canonical_form_idempotent_and_order_free(gens):
    I = minimal_generators(R22, gens)
    assert minimal_generators(R22, I.gens) == I
    assert minimal_generators(R22, reversed(gens)) == I


@settings(max_examples=40, deadline=None)
@given(
    st.lists(exp_tuples, min_size=1, max_size=4),
    st.lists(exp_tuples, min_size=1, max_size=4),
)
def test_intersect_matches_membership(ga, gb):
    I = minimal_generators(R22, ga)
    J = minimal_generators(R22, gb)
    K = intersect(I, J)
    for u in _small_monomials():
        assert membership(u, K) == (membership(u, I) and membership(u, J))


@settings(max_examples=40, deadline=None)
@given(st.lists(exp_tuples, min_size=1, max_size=4), exp_tuples)
def test_colon_matches_membership(gens, u):
    I = minimal_generators(R22, gens)
    C = colon(I, u)
    for v in _small_monomials():
        uv = tuple(a + b for a, b in zip(u, v))
        assert membership(v, C) == membership(uv, I)


def _small_monomials(top=4):
    from itertools import product

    return product(range(top + 1), repeat=4)


def test_colon_ideal_of_zero():
    assert colon_ideal(ideal(R22, (1, 0, 0, 0)), zero_ideal(R22)).is_unit


def test_radical():
    I = ideal(R22, (2, 0, 3, 0), (0, 1, 0, 0))
    assert radical(I) == ideal(R22, (1, 0, 1, 0), (0, 1, 0, 0))


def test_sum_and_prime_ideal():
    p = prime_ideal(R22, frozenset({0, 2}))
    assert p == ideal(R22, (1, 0, 0, 0), (0, 0, 1, 0))
    s = sum_ideal(p, ideal(R22, (0, 1, 0, 0)))
    assert len(s.gens) == 3


def test_irreducible_decomposition_monomial_xy():
    # (x1*y1) = (x1) cap (y1)
    r = RingSpec(1, 1)
    comps = irreducible_decomposition(ideal(r, (1, 1)))
    assert sorted(pc.component.gens for pc in comps) == [((0, 1),), ((1, 0),)]
    assert {pc.radical for pc in comps} == {frozenset({0}), frozenset({1})}


def test_decomposition_errors():
    with pytest.raises(UnitIdeal):
        irreducible_decomposition(unit_ideal(R22))
    with pytest.raises(ZeroIdeal):
        irreducible_decomposition(zero_ideal(R22))
    with pytest.raises(UnitIdeal):
        associated_primes(unit_ideal(R22))


def test_ass_of_zero_ideal():
    assert associated_primes(zero_ideal(R22)) == {frozenset()}


@settings(max_examples=40, deadline=None)
@given(st.lists(exp_tuples, min_size=1, max_size=5))
def test_decomposition_intersects_back(gens):
    I = minimal_generators(R22, gens)
    if I.is_unit or I.is_zero:
        return
    comps = irreducible_decomposition(I)
    from bigrade.rings import intersect_all

    assert intersect_all([pc.component for pc in comps]) == I
    # irredundancy: dropping any component changes the intersection
    if len(comps) > 1:
        for k in range(len(comps)):
            rest = [pc.component for j, pc in enumerate(comps) if j != k]
            assert intersect_all(rest) != I


def test_primary_groups_by_radical():
    # (x1^2, x1*y1) = (x1) cap (x1^2, y1): two primaries with distinct radicals
    r = RingSpec(1, 1)
    I = ideal(r, (2, 0), (1, 1))
    prim = primary_decomposition(I)
    assert {pc.radical for pc in prim} == {frozenset({0}), frozenset({0, 1})}
    assert len(prim) == 2


def test_dim_quotient():
    assert dim_quotient(zero_ideal(R22)) == 4
    assert dim_quotient(ideal(R22, (1, 0, 0, 0))) == 3
    assert dim_quotient(prime_ideal(R22, frozenset(range(4)))) == 0
    assert minimal_primes(ideal(R22, (1, 1, 0, 0))) == {
        frozenset({0}),
        frozenset({1}),
    }
