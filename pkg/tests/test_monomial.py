from __future__ import annotations

import itertools

import pytest
from hypothesis import HealthCheck, given, settings
from strategies import RING3, monomial_ideals, squarefree_ideals

from relcoh import Ideal, MonomialIdeal, SimplicialComplex, alexander_dual, associated_primes
from relcoh import free_resolution, hochster_betti, intersect, projective_dimension, radical_equal
from relcoh import stanley_reisner
from relcoh.monomial import complex_ideal, depth_quotient, irreducible_decomposition, squarefree_radical

SETTINGS = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])

X, Y, Z = (1, 0, 0), (0, 1, 0), (0, 0, 1)


def M(*gens, n=3):
    return MonomialIdeal(n, gens)


TRIANGLE = M((1, 1, 0), (1, 0, 1), (0, 1, 1))


def test_squarefree_radical_examples():
    assert squarefree_radical(M((2, 1, 0), (0, 0, 3))) == M((1, 1, 0), Z)
    assert squarefree_radical(M((1, 1), n=2)) == M((1, 1), n=2)
    assert squarefree_radical(M((2, 0, 0), (1, 2, 0))) == M(X)


def test_irreducible_decomposition_examples():
    assert set(irreducible_decomposition(M((1, 1, 0)))) == {M(X), M(Y)}
    assert set(irreducible_decomposition(TRIANGLE)) == {M(X, Y), M(X, Z), M(Y, Z)}
    assert set(irreducible_decomposition(M((2, 1, 0)))) == {M((2, 0, 0)), M(Y)}


def test_associated_primes_examples():
    assert associated_primes(M(X)) == [frozenset({0})]
    assert set(associated_primes(TRIANGLE)) == {frozenset({0, 1}), frozenset({0, 2}), frozenset({1, 2})}
    assert set(associated_primes(M((2, 1, 0)))) == {frozenset({0}), frozenset({1})}


def test_stanley_reisner_examples():
    assert stanley_reisner(TRIANGLE) == SimplicialComplex(3, [{0}, {1}, {2}])
    assert stanley_reisner(M((1, 0), n=2)) == SimplicialComplex(2, [{1}])
    boundary = SimplicialComplex(3, [{0, 1}, {0, 2}, {1, 2}])
    assert stanley_reisner(M((1, 1, 1))) == boundary
    assert complex_ideal(boundary) == M((1, 1, 1))


def test_hochster_examples():
    plane = M((1, 0), (0, 1), n=2)
    table = hochster_betti(plane)
    assert table.ideal_totals() == [2, 1]
    assert table.totals() == [1, 2, 1]
    assert projective_dimension(plane) == 2
    assert projective_dimension(TRIANGLE) == 2
    assert projective_dimension(M((1, 1, 0))) == 1
    assert table.graded() == {(0, 0): 1, (1, 1): 2, (2, 2): 1}


def test_pd_and_depth_examples():
    assert (projective_dimension(M(X, Y, Z)), depth_quotient(M(X, Y, Z))) == (3, 0)
    assert (projective_dimension(TRIANGLE), depth_quotient(TRIANGLE)) == (2, 1)
    xz = M((1, 1), n=2)
    assert (projective_dimension(xz), depth_quotient(xz)) == (1, 1)


def test_pd_depends_on_characteristic():
    """Reisner's projective plane: pd differs over QQ and GF(2) (six vertices)."""
    from relcoh import Field
    facets = [{0, 1, 2}, {0, 1, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5},
              {1, 2, 3}, {1, 3, 5}, {1, 4, 5}, {2, 3, 4}, {2, 4, 5}]
    I = complex_ideal(SimplicialComplex(6, facets))
    assert projective_dimension(I, Field(0)) == 3
    assert projective_dimension(I, Field(2)) == 4


def test_alexander_dual_examples():
    assert alexander_dual(alexander_dual(TRIANGLE)) == TRIANGLE
    assert alexander_dual(TRIANGLE) == TRIANGLE
    assert alexander_dual(M((1, 0), n=2)) == M((1, 0), n=2)
    assert alexander_dual(M((1, 1, 1))) == M(X, Y, Z)


# -- properties

@SETTINGS
@given(monomial_ideals())
def test_radical_idempotent_and_correct(I):
    r = squarefree_radical(I)
    assert squarefree_radical(r) == r
    assert radical_equal(I.to_ideal(RING3), r.to_ideal(RING3))


@SETTINGS
@given(monomial_ideals())
def test_decomposition_intersects_back(I):
    if I.is_unit():
        return
    parts = irreducible_decomposition(I)
    for p in parts:
        assert all(sum(1 for a in g if a) == 1 for g in p.gens)
    total = parts[0].to_ideal(RING3)
    for p in parts[1:]:
        total = intersect(total, p.to_ideal(RING3))
    assert total == I.to_ideal(RING3)


@SETTINGS
@given(squarefree_ideals())
def test_faces_are_squarefree_monomials_outside(I):
    if I.is_unit():
        return
    delta = stanley_reisner(I)
    for k in range(4):
        for s in itertools.combinations(range(3), k):
            e = tuple(1 if i in s else 0 for i in range(3))
            assert delta.contains(s) == (not I.contains(e))


@SETTINGS
@given(squarefree_ideals())
def test_euler_characteristic_matches_resolution(I):
    """Alternating sums of Betti numbers agree with the computed resolution's ranks."""
    if I.is_unit() or I.is_zero():
        return
    table = hochster_betti(I)
    res = free_resolution(I.to_ideal(RING3), 4)
    assert sum((-1) ** i * b for i, b in enumerate(table.totals())) == \
        sum((-1) ** i * b for i, b in enumerate(res.ranks()))
    assert table.totals() == res.ranks()


@SETTINGS
@given(squarefree_ideals(4, 5))
def test_alexander_dual_involution_and_oracle(I):
    if I.is_unit() or I.is_zero():
        return
    D = alexander_dual(I)
    assert alexander_dual(D) == I
    # dual = intersection of the primes generated by the supports of the generators
    from relcoh import Ring
    R = Ring(["a", "b", "c", "d"])
    total = None
    for s in I.supports():
        P = Ideal(R, [R.gens()[i] for i in s])
        total = P if total is None else intersect(total, P)
    assert total == D.to_ideal(R)


def test_rejects_non_squarefree():
    with pytest.raises(ValueError):
        stanley_reisner(M((2, 0, 0)))
