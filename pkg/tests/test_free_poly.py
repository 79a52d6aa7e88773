##
## free nonassociative polynomials
##

from fractions import Fraction

import numpy as np
import pytest

from algebra_core import lifted_index
from color_group import A, AB, B, E, canonical_cocycle
from free_poly import (MultilinearPoly, SizeGuardError, alt_evaluate,
                       alt_on_set, color_sign, enumerate_monomials, evaluate,
                       evaluate_monomial, left_normed, left_normed_word,
                       monomial_count, monomial_str, parse_monomial,
                       perm_compose, perm_inverse, perm_sign, random_poly,
                       rename, shapes, sn_act, tilde_transform)


def test_monomial_counts():
    assert len(shapes(4)) == 5
    assert monomial_count(3) == len(enumerate_monomials(3)) == 12
    assert monomial_count(4, 'left-normed') == len(enumerate_monomials(4, 'left-normed')) == 6
    assert all(left_normed_word(m)[0] == 1 for m in enumerate_monomials(4, 'left-normed'))
    assert len(set(enumerate_monomials(4))) == 5 * 24
    with pytest.raises(ValueError):
        enumerate_monomials(3, 'right-normed')

def test_monomial_text():
    m = ((1, 2), (3, 4))
    assert monomial_str(m) == '((1 2) (3 4))'
    assert parse_monomial('((1 2) (3 4))') == m
    assert parse_monomial('[1, 3, 2]') == ((1, 3), 2)
    assert parse_monomial('1 3 2') == ((1, 3), 2)
    assert left_normed([1, 3, 2]) == ((1, 3), 2)
    assert left_normed_word(((1, 3), 2)) == (1, 3, 2)
    assert left_normed_word(m) is None
    with pytest.raises(ValueError):
        parse_monomial('((1 2)')

def test_permutations():
    s = (2, 3, 1)
    t = (2, 1, 3)
    assert perm_compose(s, perm_inverse(s)) == (1, 2, 3)
    assert perm_compose(s, t) == (3, 2, 1)
    assert perm_sign(s) == 1
    assert perm_sign(t) == -1

def test_polynomial_arithmetic():
    f = MultilinearPoly.monomial((1, 2))
    g = MultilinearPoly.monomial((2, 1))
    assert (f + g) - g == f
    assert (f - f).is_zero()
    assert (3 * f).terms == {(1, 2): 3}
    with pytest.raises(ValueError):
        MultilinearPoly.monomial((1, 1))
    with pytest.raises(ValueError):
        MultilinearPoly([((1, 2), 1), ((1, 3), 1)])
    assert MultilinearPoly.from_list(f.to_list()) == f

def test_evaluate_sl2(sl2):
    e, h, f = (sl2.basis_vector(i) for i in range(3))
    p = MultilinearPoly({(1, 2): 1, (2, 1): 1})
    assert all(x == 0 for x in evaluate(p, sl2, {1: e, 2: f}))
    jac = MultilinearPoly({((1, 2), 3): 1, ((2, 3), 1): 1, ((3, 1), 2): 1})
    rng = np.random.default_rng(3)
    vals = {v: np.array([Fraction(int(x)) for x in rng.integers(-4, 5, 3)], dtype=object) for v in (1, 2, 3)}
    assert all(x == 0 for x in evaluate(jac, sl2, vals))
    assert list(evaluate_monomial((1, 2), sl2, {1: e, 2: f})) == list(h)
    with pytest.raises(ValueError):
        evaluate(p, sl2, {1: e})

def test_sn_action_is_a_left_action():
    f = random_poly(4, 6, seed=1)
    s = (2, 3, 1, 4)
    t = (4, 1, 3, 2)
    assert sn_act(s, sn_act(t, f)) == sn_act(perm_compose(s, t), f)
    assert sn_act((1, 2, 3, 4), f) == f
    assert sn_act(s, MultilinearPoly.monomial(((1, 2), (3, 4)))).terms == {((2, 3), (1, 4)): 1}

def test_alternation(sl2):
    f = MultilinearPoly.monomial(left_normed([1, 2, 3, 4]))
    g = alt_on_set(f, [2, 3, 4])
    assert len(g.terms) == 6
    # alternating in 2, 3, 4
    assert rename(g, {2: 3, 3: 2}) == -1 * g
    rng = np.random.default_rng(8)
    e = {v: np.array([Fraction(int(x)) for x in rng.integers(-3, 4, 3)], dtype=object) for v in (1, 2, 3, 4)}
    assert list(alt_evaluate(f, [2, 3, 4], sl2, e)) == list(evaluate(g, sl2, e))
    e[3] = e[2]
    assert all(x == 0 for x in alt_evaluate(f, [2, 3, 4], sl2, e))
    with pytest.raises(SizeGuardError):
        alt_on_set(MultilinearPoly.monomial(left_normed(range(1, 11))), range(1, 10))
    with pytest.raises(ValueError):
        alt_on_set(f, [5])

def test_color_sign_matches_lifted_evaluation(sl2, L):
    s = canonical_cocycle()
    word = (1, 2, 3)
    degrees = {1: A, 2: B, 3: AB}
    assert color_sign((1, 2), {1: B, 2: A}, s) == -1
    rng = np.random.default_rng(4)
    xs = {v: np.array([Fraction(int(x)) for x in rng.integers(-3, 4, 3)], dtype=object) for v in word}
    lifted = {}
    for v in word:
        u = L.zero()
        for i in range(3):
            u[lifted_index(L, degrees[v], i)] = xs[v][i]
        lifted[v] = u
    m = left_normed(word)
    got = evaluate_monomial(m, L, lifted)
    base = evaluate_monomial(m, sl2, xs)
    lam = color_sign(word, degrees, s)
    for i in range(3):
        # a * b * ab = e
        assert got[lifted_index(L, E, i)] == lam * base[i]

def test_tilde_transform():
    s = canonical_cocycle()
    f = MultilinearPoly({left_normed([1, 2, 3]): 1, left_normed([1, 3, 2]): 2})
    t = tilde_transform(f, [B, A, E], s)
    assert t.terms[left_normed([1, 2, 3])] == -1
    assert t.terms[left_normed([1, 3, 2])] == -2
    with pytest.raises(ValueError):
        tilde_transform(MultilinearPoly({left_normed([1, 2]): 1, left_normed([2, 1]): 1}), [A, B], s)
    with pytest.raises(ValueError):
        tilde_transform(MultilinearPoly.monomial(((1, 2), (3, 4))), [A, B, E, E], s)

def _check_sign_identity(L, sl2, word, degrees, basis_idx):
    s = canonical_cocycle()
    lifted = {}
    plain = {}
    for v, i in zip(sorted(word), basis_idx):
        plain[v] = sl2.basis_vector(i)
        lifted[v] = L.basis_vector(lifted_index(L, degrees[v], i))
    m = left_normed(word)
    got = evaluate_monomial(m, L, lifted)
    base = evaluate_monomial(m, sl2, plain)
    total = E
    for v in word:
        total = total * degrees[v]
    lam = color_sign(word, degrees, s)
    for i in range(3):
        assert got[lifted_index(L, total, i)] == lam * base[i]

def test_sign_identity_on_basis_tuples(sl2, L):
    import itertools
    from color_group import ELEMENTS
    for word in itertools.permutations((1, 2, 3)):
        for degs in itertools.product(ELEMENTS, repeat=3):
            degrees = dict(zip((1, 2, 3), degs))
            for idx in itertools.product(range(3), repeat=3):
                _check_sign_identity(L, sl2, word, degrees, idx)

@pytest.mark.slow
def test_sign_identity_n4(sl2, L):
    import itertools
    from color_group import ELEMENTS
    rng = np.random.default_rng(14)
    for word in itertools.permutations((1, 2, 3, 4)):
        for degs in itertools.product(ELEMENTS, repeat=4):
            idx = [int(i) for i in rng.integers(0, 3, size=4)]
            _check_sign_identity(L, sl2, word, dict(zip((1, 2, 3, 4), degs)), idx)

def test_tilde_transform_is_an_involution():
    s = canonical_cocycle()
    f = MultilinearPoly({left_normed(w): c for w, c in
                         (([1, 2, 3, 4], 1), ([1, 3, 2, 4], -2), ([1, 4, 3, 2], 5))})
    degrees = [AB, B, A, AB]
    assert tilde_transform(tilde_transform(f, degrees, s), degrees, s) == f

@pytest.mark.parametrize('name', ['sl2', 'L'])
def test_evaluate_is_multilinear(request, name):
    from alt_constructions import random_vector
    A = request.getfixturevalue(name)
    f = random_poly(4, 10, seed=6)
    rng = np.random.default_rng(21)
    e = {v: random_vector(rng, A.dim) for v in (1, 2, 3, 4)}
    for v in (1, 2, 3, 4):
        x = random_vector(rng, A.dim)
        y = random_vector(rng, A.dim)
        alpha = Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 8)))
        mixed = evaluate(f, A, {**e, v: alpha * x + y})
        split = alpha * evaluate(f, A, {**e, v: x}) + evaluate(f, A, {**e, v: y})
        assert list(mixed) == list(split)

def _lifted_value(Lb, f, degrees, idx):
    '''f evaluated on L at g_v (x) b_idx[v], read in the total degree'''
    B = Lb.base
    point = {v: Lb.basis_vector(lifted_index(Lb, degrees[v], i)) for v, i in zip(f.variables, idx)}
    total = E
    for v in f.variables:
        total = total * degrees[v]
    got = evaluate(f, Lb, point)
    return [got[lifted_index(Lb, total, i)] for i in range(B.dim)], got

def _dual_evaluation(Lb, f, degrees, s):
    '''
    Compare f on L with tilde(f) on the base algebra over every basis tuple;
    return (f vanishes on L, tilde(f) vanishes on B).
    '''
    import itertools
    B = Lb.base
    t = tilde_transform(f, degrees, s)
    f_zero = t_zero = True
    for idx in itertools.product(range(B.dim), repeat=f.n):
        base = evaluate(t, B, {v: B.basis_vector(i) for v, i in zip(f.variables, idx)})
        lifted, got = _lifted_value(Lb, f, degrees, idx)
        assert lifted == list(base)
        # nothing leaks outside the total degree
        assert sum(1 for x in got if x != 0) == sum(1 for x in base if x != 0)
        f_zero = f_zero and all(x == 0 for x in got)
        t_zero = t_zero and all(x == 0 for x in base)
    return f_zero, t_zero

def test_graded_identities_match_tilde_identities():
    import itertools
    from algebra_core import GradedAlgebra, tensor_color_construct
    from color_group import ELEMENTS
    s = canonical_cocycle()
    # [a, b] = b; metabelian
    r2 = GradedAlgebra('r2', 2, [E, E], [(0, 1, 1, 1), (1, 0, 1, -1)])
    Lr = tensor_color_construct(r2, s)
    metabelian = MultilinearPoly({left_normed([1, 2, 3, 4]): 1, left_normed([1, 2, 4, 3]): -1})
    single = MultilinearPoly.monomial(left_normed([1, 2, 3, 4]))
    for degs in itertools.product(ELEMENTS, repeat=4):
        degrees = dict(zip((1, 2, 3, 4), degs))
        # tilde is an involution, so f = tilde(h) has tilde(f) = h
        f = tilde_transform(metabelian, degrees, s)
        assert _dual_evaluation(Lr, f, degrees, s) == (True, True)
        g = tilde_transform(single, degrees, s)
        assert _dual_evaluation(Lr, g, degrees, s) == (False, False)

def test_dual_evaluation_small_degrees(L):
    import itertools
    from color_group import ELEMENTS
    s = canonical_cocycle()
    for n in (2, 3):
        f = random_poly(n, 3, seed=n, shape='left-normed')
        for degs in itertools.product(ELEMENTS, repeat=n):
            degrees = dict(zip(range(1, n + 1), degs))
            f_zero, t_zero = _dual_evaluation(L, f, degrees, s)
            assert f_zero == t_zero
