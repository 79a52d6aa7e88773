#!/usr/bin/env python
'''
sym_tools.py
============

Partitions, Young tableaux, hook-length dimensions and the row/column
symmetrizers of S_n acting on multilinear polynomials.

Permutations are tuples p with p[i-1] = p(i). Group-algebra elements are
dicts permutation -> integer coefficient.
'''

import itertools
import math

from scipy.special import factorial

from constants import GROUP_ALGEBRA_CAP, PARTITION_CAP
from free_poly import (MultilinearPoly, SizeGuardError, perm_compose,
                       perm_sign, sn_act)


def check_partition(shape):
    '''validate and return the partition as a tuple'''
    shape = tuple(int(x) for x in shape)
    if not shape:
        raise ValueError('Expected a nonempty partition')
    if any(x <= 0 for x in shape):
        raise ValueError('Partition %s has non-positive parts' % (shape,))
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        raise ValueError('Partition %s is not weakly decreasing' % (shape,))
    return shape


def conjugate(shape):
    shape = check_partition(shape)
    return tuple(sum(1 for r in shape if r > c) for c in range(shape[0]))


def partitions_of(n, cap=PARTITION_CAP):
    '''
    All partitions of n in increasing lexicographic order,
    e.g. n=3 -> (1,1,1), (2,1), (3).
    '''
    if n < 1:
        raise ValueError('Expected n >= 1, got %r' % n)
    if n > cap:
        raise SizeGuardError('partitions_of is capped at n = %d, got %d' % (cap, n))

    def _parts(rest, largest):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, largest), 0, -1):
            for tail in _parts(rest - first, first):
                yield (first,) + tail
    return sorted(_parts(n, n))


def hook_lengths(shape):
    shape = check_partition(shape)
    conj = conjugate(shape)
    return [[shape[i] - j + conj[j] - i - 1 for j in range(shape[i])] for i in range(len(shape))]


def hook_dim(shape):
    '''
    Dimension of the irreducible S_n-module of the given shape, n!/prod(hooks).
    '''
    shape = check_partition(shape)
    n = sum(shape)
    prod = 1
    for row in hook_lengths(shape):
        for h in row:
            prod *= h
    return int(factorial(n, exact=True)) // prod


class Tableau:
    '''
    A Young diagram filled with 1..n.

    :param rows: list of rows (lists of ints)
    '''

    def __init__(self, rows):
        self.rows = [list(int(x) for x in r) for r in rows]
        self.shape = check_partition([len(r) for r in self.rows])
        self.n = sum(self.shape)
        if sorted(x for r in self.rows for x in r) != list(range(1, self.n + 1)):
            raise ValueError('Tableau filling %s is not a bijection onto 1..%d' % (self.rows, self.n))

    @classmethod
    def canonical(cls, shape):
        '''row-major filling 1..n'''
        shape = check_partition(shape)
        rows, start = [], 1
        for r in shape:
            rows.append(list(range(start, start + r)))
            start += r
        return cls(rows)

    def columns(self):
        return [[r[c] for r in self.rows if len(r) > c] for c in range(self.shape[0])]

    def is_standard(self):
        rows_ok = all(r[i] < r[i + 1] for r in self.rows for i in range(len(r) - 1))
        cols_ok = all(c[i] < c[i + 1] for c in self.columns() for i in range(len(c) - 1))
        return rows_ok and cols_ok

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows

    def __repr__(self):
        return 'Tableau(%s)' % self.rows


def standard_tableaux(shape):
    '''
    Every standard tableau of the shape, built by placing 1..n one box at a time.
    '''
    shape = check_partition(shape)
    n = sum(shape)
    out = []

    def _place(rows, k):
        if k > n:
            out.append(Tableau([list(r) for r in rows]))
            return
        for i in range(len(shape)):
            if len(rows[i]) < shape[i] and (i == 0 or len(rows[i]) < len(rows[i - 1])):
                rows[i].append(k)
                _place(rows, k + 1)
                rows[i].pop()
    _place([[] for _ in shape], 1)
    return out


def rectangle_bound(q, k):
    '''
    Hook dimension of the q-row rectangle with rows of length 2k+1 against
    the lower estimate q! / (2 pi n)^q * q^n, n = (2k+1) q.
    '''
    if q < 1 or k < 0:
        raise ValueError('Expected q >= 1 and k >= 0, got q=%r, k=%r' % (q, k))
    shape = (2 * k + 1,) * q
    n = (2 * k + 1) * q
    d = hook_dim(shape)
    bound = math.exp(math.lgamma(q + 1) + n * math.log(q) - q * math.log(2 * math.pi * n))
    return {'q': q, 'k': k, 'n': n, 'shape': list(shape),
            'd_lambda': d, 'bound': bound, 'holds': d >= bound}


def rectangle_trend(q, k_max):
    '''rows (k, n, d_lambda, d_lambda^(1/n)); the root approaches q as k grows'''
    rows = []
    for k in range(1, k_max + 1):
        r = rectangle_bound(q, k)
        rows.append({'k': k, 'n': r['n'], 'd_lambda': r['d_lambda'],
                     'root': math.exp(math.log(r['d_lambda']) / r['n']),
                     'bound': r['bound'], 'holds': r['holds']})
    return rows


# ---- group algebra of S_n ----

def _check_cap(n, cap=GROUP_ALGEBRA_CAP):
    if n > cap:
        raise SizeGuardError('Group-algebra elements of S_%d need up to %d terms; cap is n <= %d'
                             % (n, int(factorial(n, exact=True)), cap))


def identity_perm(n):
    return tuple(range(1, n + 1))


def ga_mul(x, y):
    '''product in Q[S_n]: (sum a_s s)(sum b_t t) = sum a_s b_t (s o t)'''
    out = {}
    for s, a in x.items():
        for t, b in y.items():
            st = perm_compose(s, t)
            out[st] = out.get(st, 0) + a * b
    return {p: c for p, c in out.items() if c != 0}


def ga_scale(x, c):
    return {p: c * v for p, v in x.items() if c * v != 0}


def _set_group(blocks, n, signed):
    '''sum over permutations stabilizing every block, optionally signed'''
    out = {}
    for images in itertools.product(*[itertools.permutations(b) for b in blocks]):
        p = list(identity_perm(n))
        sign = 1
        for b, img in zip(blocks, images):
            for src, dst in zip(b, img):
                p[src - 1] = dst
            if signed:
                sign *= perm_sign(img) * perm_sign(b)
        out[tuple(p)] = sign
    return out


def symmetrizers(T):
    '''
    Row symmetrizer R = sum of the row group and column antisymmetrizer
    C = sum of sgn(t) t over the column group of T.
    '''
    _check_cap(T.n)
    R = _set_group(T.rows, T.n, signed=False)
    C = _set_group(T.columns(), T.n, signed=True)
    return R, C


def essential_idempotent(T):
    '''e_T = R C, with e_T^2 = (n!/d_lambda) e_T'''
    R, C = symmetrizers(T)
    return ga_mul(R, C)


def ga_apply(x, f):
    '''action of a group-algebra element on a polynomial in x1..xn'''
    out = MultilinearPoly(variables=f.variables, degrees=f.degrees)
    for p, c in sorted(x.items()):
        out = out + c * sn_act(p, f)
    return out


def essential_idempotent_apply(T, f):
    '''e_T f = R (C f)'''
    R, C = symmetrizers(T)
    return ga_apply(R, ga_apply(C, f))


def dims_square_sum(n):
    '''sum of d_lambda^2 over partitions of n; equals n!'''
    return sum(hook_dim(shape) ** 2 for shape in partitions_of(n))
