##
## partitions, tableaux and symmetrizers
##

import numpy as np
import pytest

from algebra_core import is_zero
from alt_constructions import random_vector
from free_poly import SizeGuardError, evaluate, random_poly, sn_act
from sym_tools import (Tableau, check_partition, conjugate, dims_square_sum,
                       essential_idempotent, essential_idempotent_apply,
                       ga_apply, ga_mul, ga_scale, hook_dim, hook_lengths,
                       partitions_of, rectangle_bound, rectangle_trend,
                       standard_tableaux, symmetrizers)


def test_partitions():
    assert partitions_of(3) == [(1, 1, 1), (2, 1), (3,)]
    assert len(partitions_of(5)) == 7
    assert len(partitions_of(10)) == 42
    assert conjugate((3, 1)) == (2, 1, 1)
    with pytest.raises(ValueError):
        check_partition((1, 2))
    with pytest.raises(ValueError):
        check_partition((2, 0))
    with pytest.raises(SizeGuardError):
        partitions_of(41)

def test_hook_lengths():
    assert hook_lengths((2, 1)) == [[3, 1], [1]]
    assert hook_dim((2, 1)) == 2
    assert hook_dim((3, 3, 3)) == 42
    assert hook_dim((4,)) == 1
    assert hook_dim((1, 1, 1, 1)) == 1

@pytest.mark.parametrize('shape', [(2, 1), (3, 2), (2, 2, 1), (3, 3, 3)])
def test_standard_tableaux_count(shape):
    tabs = standard_tableaux(shape)
    assert len(tabs) == hook_dim(shape)
    assert all(t.is_standard() for t in tabs)

def test_square_sum():
    for n in range(1, 7):
        assert dims_square_sum(n) == [1, 2, 6, 24, 120, 720][n - 1]

def test_tableau():
    T = Tableau.canonical((3, 1))
    assert T.rows == [[1, 2, 3], [4]]
    assert T.columns() == [[1, 4], [2], [3]]
    assert T.is_standard()
    with pytest.raises(ValueError):
        Tableau([[1, 2], [2]])

@pytest.mark.parametrize('shape', [(2, 1), (2, 2), (3, 1)])
def test_essential_idempotent(shape):
    T = Tableau.canonical(shape)
    n = T.n
    e = essential_idempotent(T)
    factorial = {3: 6, 4: 24}[n]
    assert ga_mul(e, e) == ga_scale(e, factorial // hook_dim(shape))

def test_symmetrizer_sizes():
    R, C = symmetrizers(Tableau.canonical((2, 2)))
    assert len(R) == 4
    assert len(C) == 4
    assert sorted(C.values()) == [-1, -1, 1, 1]
    with pytest.raises(SizeGuardError):
        symmetrizers(Tableau.canonical((9,)))

def test_idempotent_action():
    T = Tableau.canonical((2, 1))
    f = random_poly(3, 5, seed=2)
    assert essential_idempotent_apply(T, f) == ga_apply(essential_idempotent(T), f)

def test_rectangle_bound():
    r = rectangle_bound(3, 1)
    assert r['shape'] == [3, 3, 3]
    assert r['d_lambda'] == 42
    assert r['holds']
    rows = rectangle_trend(3, 5)
    assert [row['k'] for row in rows] == [1, 2, 3, 4, 5]
    assert all(row['holds'] for row in rows)
    assert all(row['root'] < 3 for row in rows)
    with pytest.raises(ValueError):
        rectangle_bound(0, 1)

@pytest.mark.slow
def test_symmetric_group_suite():
    for n in range(1, 9):
        for shape in partitions_of(n):
            assert len(standard_tableaux(shape)) == hook_dim(shape)
    assert dims_square_sum(8) == 40320
    factorials = {1: 1, 2: 2, 3: 6, 4: 24, 5: 120}
    for n in range(1, 6):
        for shape in partitions_of(n):
            e = essential_idempotent(Tableau.canonical(shape))
            assert ga_mul(e, e) == ga_scale(e, factorials[n] // hook_dim(shape))
    assert all(rectangle_bound(3, k)['holds'] for k in range(0, 7))

def _random_point(rng, A, n):
    return {v: random_vector(rng, A.dim) for v in range(1, n + 1)}

@pytest.mark.parametrize('shape', [(1, 1, 1, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)])
def test_idempotent_of_tall_shapes_vanishes_on_sl2(sl2, shape):
    T = Tableau.canonical(shape)
    rng = np.random.default_rng(31)
    f = random_poly(T.n, 12, seed=sum(shape))
    g = essential_idempotent_apply(T, f)
    for _ in range(3):
        assert is_zero(evaluate(g, sl2, _random_point(rng, sl2, T.n)))

def test_column_antisymmetrizer_kills_symmetric_pairs():
    T = Tableau.canonical((2, 1))
    assert T.columns()[0] == [1, 3]
    _, C = symmetrizers(T)
    g = random_poly(3, 6, seed=8)
    f = g + sn_act((3, 2, 1), g)
    assert not f.is_zero()
    assert ga_apply(C, f).is_zero()

@pytest.mark.parametrize('shape', [(2, 1), (1, 1, 1), (2, 1, 1)])
def test_column_antisymmetrizer_on_dependent_values(sl2, shape):
    T = Tableau.canonical(shape)
    column = T.columns()[0]
    _, C = symmetrizers(T)
    f = ga_apply(C, random_poly(T.n, 8, seed=len(shape)))
    rng = np.random.default_rng(17)
    e = _random_point(rng, sl2, T.n)
    # last variable of the column is a combination of the others
    e[column[-1]] = sum((2 * e[v] for v in column[:-1]), sl2.zero())
    assert is_zero(evaluate(f, sl2, e))
