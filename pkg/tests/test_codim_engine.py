##
## ordinary, Lie and graded codimensions
##

import pytest

from algebra_core import abelian_algebra, tensor_color_construct
from color_group import trivial_cocycle
from codim_engine import (CodimReport, NotLieError, check_goldens, check_key,
                          codim_graded_component, codim_graded_total,
                          codim_lie, codim_plain, compositions,
                          exponent_trend, multinomial, pinned_goldens)
from free_poly import SizeGuardError


def test_sl2_lie_codimensions(sl2):
    assert [codim_lie(sl2, n).value for n in (1, 2, 3)] == [1, 1, 2]
    rep = codim_lie(sl2, 3)
    assert rep.status == 'exact'
    assert rep.mode == 'exact-full-basis'
    assert rep.rows == 2
    assert rep.columns == 3 ** 4
    assert rep.row_shape == 'left-normed'

def test_sl2_plain_codimensions(sl2):
    assert [codim_plain(sl2, n).value for n in (1, 2, 3)] == [1, 1, 2]
    assert codim_plain(sl2, 3).rows == 12

def test_abelian():
    ab = abelian_algebra(2)
    assert codim_plain(ab, 1).value == 1
    assert codim_plain(ab, 2).value == 0
    assert codim_lie(ab, 3).value == 0

def test_L_is_not_lie(L):
    with pytest.raises(NotLieError):
        codim_lie(L, 2)
    assert codim_plain(L, 2).value == 2

def test_graded_components(L):
    assert codim_graded_component(L, [1, 0, 0, 0]).value == 1
    assert codim_graded_component(L, [0, 2, 0, 0]).value == 1
    assert codim_graded_component(L, [0, 1, 1, 0], rows='all').value == 1
    rep = codim_graded_component(L, [0, 0, 1, 1])
    assert rep.key == [0, 0, 1, 1]
    assert rep.columns == 3 * 3 * 12

@pytest.mark.parametrize('n', [1, 2, 3])
def test_graded_reduction(sl2, L, n):
    rep = codim_graded_total(L, n)
    assert rep.value == 4 ** n * codim_lie(sl2, n).value
    assert sum(c['multinomial'] for c in rep.components) == 4 ** n
    assert [4, 16, 128][n - 1] == rep.value

def test_randomized_lower_bound(sl2):
    rep = codim_lie(sl2, 3, mode='randomized', seeds=[1, 2], primes=[1000003])
    assert rep.status == 'lower-bound-whp'
    assert rep.value == 2
    assert len(rep.runs) == 2
    assert rep.primes == [1000003]
    assert rep.window == 5
    assert all(h == sorted(h) for h in rep.rank_history)
    rep = codim_plain(sl2, 3, mode='randomized')
    assert rep.value <= 2
    assert len(rep.runs) == 6

def test_randomized_graded(L):
    exact = codim_graded_total(L, 2)
    rnd = codim_graded_total(L, 2, mode='randomized', seeds=[3], primes=[1000033])
    assert rnd.value <= exact.value
    assert rnd.status == 'lower-bound-whp'

def test_size_guards(sl2):
    with pytest.raises(SizeGuardError):
        codim_plain(sl2, 3, column_cap=10)
    with pytest.raises(ValueError):
        codim_plain(sl2, 0)
    with pytest.raises(ValueError):
        codim_plain(sl2, 2, mode='fast')

def test_keys():
    assert len(compositions(2)) == 10
    assert len(compositions(3)) == 20
    assert all(sum(k) == 3 for k in compositions(3))
    assert multinomial(4, [2, 1, 1, 0]) == 12
    with pytest.raises(ValueError):
        check_key([1, 0, 0])
    with pytest.raises(ValueError):
        check_key([0, 0, 0, 0])

def test_report_invariants():
    with pytest.raises(ValueError):
        CodimReport(algebra='x', n=2, mode='exact-full-basis', value=3, status='exact', rows=2, columns=8)
    with pytest.raises(ValueError):
        CodimReport(algebra='x', n=2, mode='exact-full-basis', value=2, status='exact', rows=2, columns=8, bound=1)
    d = CodimReport(algebra='x', n=1, mode='exact-full-basis', value=1, status='exact', rows=1, columns=2).to_dict()
    assert d['value'] == 1
    assert d['components'] == []

def test_exponent_trend(sl2):
    rows = exponent_trend(sl2, 3, kind='lie')
    assert [r['c_n'] for r in rows] == [1, 1, 2]
    assert [r['bound'] for r in rows] == [9, 27, 81]
    assert rows[1]['ratio'] == 2
    assert rows[2]['ratio'] is None
    assert all(r['monotone'] for r in rows)
    with pytest.raises(ValueError):
        exponent_trend(sl2, 2, kind='ordinary')

def test_pinned_values_load():
    goldens = pinned_goldens()
    assert goldens['L(sl2,canonical)']['graded']['3'] == 128
    assert goldens['L(sl2,canonical)']['graded']['4'] == 4 ** 4 * goldens['sl2']['lie']['4']
    assert goldens['sl2']['plain']['4'] == goldens['sl2']['lie']['4'] == 6

def test_sl2_has_no_identity_of_degree_4(sl2):
    # Lie(4) = (3,1) + (2,1,1) and neither component vanishes on sl2
    assert codim_lie(sl2, 4).value == 6

@pytest.mark.slow
def test_goldens(sl2, L):
    algebras = {'sl2': sl2, 'L(sl2,canonical)': L,
                'L(sl2,trivial)': tensor_color_construct(sl2, trivial_cocycle())}
    assert check_goldens(algebras) == []

def test_lie_rows_agree_with_all_bracketings(sl2):
    for n in (2, 3, 4):
        assert codim_lie(sl2, n).value == codim_plain(sl2, n).value

def test_bilinear_cocycles_reduce(sl2):
    from color_group import all_bilinear_cocycles
    base = [codim_lie(sl2, n).value for n in (1, 2)]
    for s in all_bilinear_cocycles():
        Ls = tensor_color_construct(sl2, s)
        assert [codim_graded_total(Ls, n).value for n in (1, 2)] == [4 * base[0], 16 * base[1]]

@pytest.mark.slow
def test_bilinear_cocycles_reduce_n3(sl2):
    from color_group import all_bilinear_cocycles
    c3 = codim_lie(sl2, 3).value
    for s in all_bilinear_cocycles():
        assert codim_graded_total(tensor_color_construct(sl2, s), 3).value == 64 * c3

@pytest.mark.slow
def test_graded_components_at_n4(sl2, L):
    c4 = codim_lie(sl2, 4).value
    rep = codim_graded_total(L, 4)
    assert all(comp['value'] == c4 for comp in rep.components)
    assert rep.value == 4 ** 4 * c4

@pytest.mark.slow
def test_trivial_twist_has_the_identities_of_sl2(sl2):
    Lt = tensor_color_construct(sl2, trivial_cocycle())
    for n in (1, 2, 3, 4):
        assert codim_plain(Lt, n).value == codim_plain(sl2, n).value

@pytest.mark.slow
def test_randomized_matches_exact(sl2, L):
    for n in (1, 2, 3, 4):
        for func in (codim_plain, codim_lie):
            exact = func(sl2, n).value
            assert func(sl2, n, mode='randomized').value == exact
    assert codim_graded_total(L, 2, mode='randomized').value == codim_graded_total(L, 2).value

def test_randomized_plain_codimensions_of_L(L):
    for n, expected in ((1, 1), (2, 2), (3, 12)):
        exact = codim_plain(L, n)
        rand = codim_plain(L, n, mode='randomized', seeds=[11, 23, 37], primes=[1000003, 1000033])
        assert exact.value == expected
        assert rand.value == exact.value
        assert rand.status == 'lower-bound-whp'
        assert len(rand.runs) == 6
        assert all(r['rank'] <= exact.value for r in rand.runs)

def test_trend_respects_bounds(sl2, L):
    for A, kind, n_max in ((sl2, 'plain', 4), (L, 'plain', 2), (L, 'graded', 2)):
        rows = exponent_trend(A, n_max, kind=kind)
        assert all(r['c_n'] <= r['bound'] for r in rows)
        assert all(r['monotone'] for r in rows)
