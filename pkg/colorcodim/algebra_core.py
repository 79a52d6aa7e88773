#!/usr/bin/env python
'''
algebra_core.py
===============

Finite-dimensional G-graded algebras over the rationals, given by
structure constants basis_i * basis_j = sum_k c_ijk basis_k.

The product u*v is the bracket [u,v]; ad x acts on the right, y -> y*x.
Coefficient vectors are numpy object arrays of Fractions.
'''

import itertools
import math
from fractions import Fraction

import numpy as np

from color_group import (E, ELEMENTS, element, group_mul, trivial_bicharacter,
                         NAMES)
from solver import det_exact, rref_exact


def frac(x):
    '''Fraction from an int, Fraction or "num/den" string'''
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (float, np.floating)):
        raise ValueError('Expected an exact rational, got float %r' % x)
    return Fraction(x)


def vector(values):
    return np.array([frac(x) for x in values], dtype=object)


def is_zero(v):
    return all(x == 0 for x in v)


class GradedAlgebra:
    '''
    A finite-dimensional algebra with a G-grading on its basis.

    :param name: label used in reports
    :param dim: number of basis elements m
    :param degrees: length-m sequence of group elements (or names / bit pairs)
    :param struct: iterable of (i, j, k, coefficient); zero coefficients are dropped
    '''

    def __init__(self, name, dim, degrees, struct, base=None, cocycle=None):
        self.name = name
        self.dim = int(dim)
        if self.dim < 1:
            raise ValueError('Expected a positive dimension, got %r' % dim)
        self.degrees = tuple(element(g) for g in degrees)
        if len(self.degrees) != self.dim:
            raise ValueError('Expected %d degrees, got %d' % (self.dim, len(self.degrees)))

        entries = {}
        for i, j, k, c in struct:
            if any(isinstance(x, bool) or not isinstance(x, (int, np.integer)) for x in (i, j, k)):
                raise ValueError('Structure constant indices must be integers, got %r' % ((i, j, k),))
            i, j, k = int(i), int(j), int(k)
            for idx in (i, j, k):
                if not 0 <= idx < self.dim:
                    raise ValueError('Structure constant index %d out of range 0..%d' % (idx, self.dim - 1))
            if (i, j, k) in entries:
                raise ValueError('Duplicate structure constant entry (%d, %d, %d)' % (i, j, k))
            c = frac(c)
            if c != 0 and self.degrees[k] != self.degrees[i] * self.degrees[j]:
                raise ValueError('Entry (%d, %d, %d) breaks the grading: deg %s * deg %s != deg %s'
                                 % (i, j, k, self.degrees[i], self.degrees[j], self.degrees[k]))
            entries[(i, j, k)] = c
        self.struct = tuple(sorted((i, j, k, c) for (i, j, k), c in entries.items() if c != 0))

        self._pairs = {}
        for i, j, k, c in self.struct:
            self._pairs.setdefault((i, j), []).append((k, c))

        # set for algebras built by tensor_color_construct
        self.base = base
        self.cocycle = cocycle

    def __repr__(self):
        return 'GradedAlgebra(%s, dim=%d)' % (self.name, self.dim)

    @property
    def is_trivially_graded(self):
        return all(g == E for g in self.degrees)

    @property
    def has_zero_product(self):
        return not self.struct

    def zero(self):
        return vector([0] * self.dim)

    def basis_vector(self, i):
        v = self.zero()
        v[i] = Fraction(1)
        return v

    def homogeneous_indices(self, g):
        return [i for i, d in enumerate(self.degrees) if d == g]

    def check_vector(self, u):
        if len(u) != self.dim:
            raise ValueError('Expected a vector of length %d for %s, got %d' % (self.dim, self.name, len(u)))

    def multiply(self, u, v):
        '''
        Exact bilinear product u*v.
        '''
        self.check_vector(u)
        self.check_vector(v)
        out = self.zero()
        nu = [i for i in range(self.dim) if u[i] != 0]
        nv = [j for j in range(self.dim) if v[j] != 0]
        for i in nu:
            for j in nv:
                terms = self._pairs.get((i, j))
                if terms:
                    uv = u[i] * v[j]
                    for k, c in terms:
                        out[k] += uv * c
        return out

    def structure_tensor(self):
        '''dense (m, m, m) object array T with T[i, j, k] = c_ijk'''
        T = np.zeros((self.dim,) * 3, dtype=object)
        T[...] = Fraction(0)
        for i, j, k, c in self.struct:
            T[i, j, k] = c
        return T

    def integer_structure(self):
        '''
        Structure constants scaled to integers.

        :return: (int64 array T of shape (m, m, m), common denominator D)
                 with D * c_ijk = T[i, j, k]
        '''
        D = 1
        for *_, c in self.struct:
            D = D * c.denominator // math.gcd(D, c.denominator)
        T = np.zeros((self.dim,) * 3, dtype=np.int64)
        for i, j, k, c in self.struct:
            T[i, j, k] = int(c * D)
        return T, D


def multiply(A, u, v):
    return A.multiply(u, v)


def _sl_basis(n):
    '''elementary-matrix basis of sl_n: E_ij (i<j), H_k, E_ij (i>j)'''
    labels = []
    mats = []
    for i, j in itertools.product(range(n), range(n)):
        if i < j:
            M = np.zeros((n, n), dtype=object)
            M[...] = Fraction(0)
            M[i, j] = Fraction(1)
            labels.append('E%d%d' % (i + 1, j + 1))
            mats.append(M)
    for k in range(n - 1):
        M = np.zeros((n, n), dtype=object)
        M[...] = Fraction(0)
        M[k, k] = Fraction(1)
        M[k + 1, k + 1] = Fraction(-1)
        labels.append('H%d' % (k + 1))
        mats.append(M)
    for i, j in itertools.product(range(n), range(n)):
        if i > j:
            M = np.zeros((n, n), dtype=object)
            M[...] = Fraction(0)
            M[i, j] = Fraction(1)
            labels.append('E%d%d' % (i + 1, j + 1))
            mats.append(M)
    return labels, mats


def _sl_coordinates(M, n, labels):
    coords = [Fraction(0)] * len(labels)
    for i, j in itertools.product(range(n), range(n)):
        if i != j and M[i, j] != 0:
            coords[labels.index('E%d%d' % (i + 1, j + 1))] = M[i, j]
    running = Fraction(0)
    for k in range(n - 1):
        running += M[k, k]
        coords[labels.index('H%d' % (k + 1))] = running
    return coords


def sln_factory(n):
    '''
    sl_n over Q with the elementary-matrix basis and the trivial grading.

    :param n: 2 or 3
    '''
    if n not in (2, 3):
        raise ValueError('sl_n factory supports n in {2, 3}, got %r' % (n,))
    labels, mats = _sl_basis(n)
    m = len(labels)
    struct = []
    for a, b in itertools.product(range(m), range(m)):
        C = mats[a].dot(mats[b]) - mats[b].dot(mats[a])
        for k, c in enumerate(_sl_coordinates(C, n, labels)):
            if c != 0:
                struct.append((a, b, k, c))
    A = GradedAlgebra('sl%d' % n, m, [E] * m, struct)
    A.labels = labels
    return A


def sl2_factory():
    '''
    sl_2 with basis (e, h, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
    '''
    A = sln_factory(2)
    A.labels = ['e', 'h', 'f']
    return A


def abelian_algebra(m):
    A = GradedAlgebra('abelian%d' % m, m, [E] * m, [])
    return A


def direct_sum(A, B):
    '''
    A + B with A's basis first; products between the summands vanish.
    '''
    struct = list(A.struct)
    s = A.dim
    struct += [(i + s, j + s, k + s, c) for i, j, k, c in B.struct]
    return GradedAlgebra('%s+%s' % (A.name, B.name), A.dim + B.dim,
                         A.degrees + B.degrees, struct)


def tensor_color_construct(B, s):
    '''
    L = F[G] (x) B with (g(x)x)(h(x)y) = s(g,h) gh (x) [x,y].

    Basis element (g, i) sits at index 4-block g.index * dim B + i and has
    degree g.

    :param B: trivially graded algebra
    :param s: Cocycle (not validated: the literal table is a test input)
    '''
    if not B.is_trivially_graded:
        raise ValueError('tensor_color_construct expects a trivially graded algebra, %s is graded' % B.name)
    m = B.dim
    degrees = [g for g in ELEMENTS for _ in range(m)]
    struct = []
    for g, h in itertools.product(ELEMENTS, ELEMENTS):
        sign = s(g, h)
        gh = g * h
        for i, j, k, c in B.struct:
            struct.append((g.index * m + i, h.index * m + j, gh.index * m + k, sign * c))
    L = GradedAlgebra('L(%s,%s)' % (B.name, s.label), 4 * m, degrees, struct, base=B, cocycle=s)
    labels = getattr(B, 'labels', [str(i) for i in range(m)])
    L.labels = ['%s*%s' % (g.name, x) for g in ELEMENTS for x in labels]
    return L


def lifted_index(L, g, i):
    '''index of the basis element g (x) basis_i of L'''
    return g.index * L.base.dim + i


def check_color_axioms(A, b):
    '''
    Exhaustive check of color anticommutativity and the color Jacobi
    identity on homogeneous basis elements:

        xy + beta(x,y) yx = 0
        (xy)z - x(yz) + beta(x,y) y(xz) = 0

    :return: dict with the violation lists and counts
    '''
    m = A.dim
    basis = [A.basis_vector(i) for i in range(m)]
    prod = [[A.multiply(basis[i], basis[j]) for j in range(m)] for i in range(m)]
    deg = A.degrees

    anti = []
    for i, j in itertools.product(range(m), range(m)):
        defect = prod[i][j] + b(deg[i], deg[j]) * prod[j][i]
        if not is_zero(defect):
            anti.append({'x': i, 'y': j, 'defect': list(defect)})

    jacobi = []
    for i, j, k in itertools.product(range(m), range(m), range(m)):
        defect = (A.multiply(prod[i][j], basis[k])
                  - A.multiply(basis[i], prod[j][k])
                  + b(deg[i], deg[j]) * A.multiply(basis[j], prod[i][k]))
        if not is_zero(defect):
            jacobi.append({'x': i, 'y': j, 'z': k, 'defect': list(defect)})

    return {'algebra': A.name,
            'bicharacter': b.label,
            'pairs_checked': m * m,
            'triples_checked': m ** 3,
            'anticommutativity': anti,
            'jacobi': jacobi,
            'violations': len(anti) + len(jacobi)}


def is_lie(A):
    '''True when A satisfies the ordinary Lie axioms (beta = 1)'''
    return check_color_axioms(A, trivial_bicharacter())['violations'] == 0


# 2x2 matrices identified with e, a, b, ab
GROUP_RING_MATRICES = {
    'e':  np.array([[1, 0], [0, 1]]),
    'a':  np.array([[-1, 0], [0, 1]]),
    'b':  np.array([[0, 1], [1, 0]]),
    'ab': np.array([[0, -1], [1, 0]]),
}


def group_ring_matrix_check(s):
    '''
    Check that e, a, b, ab -> the four 2x2 matrices is multiplicative for
    the twisted product g*h = s(g,h) gh, on all 16 pairs.
    '''
    pairs = []
    for g, h in itertools.product(ELEMENTS, ELEMENTS):
        lhs = GROUP_RING_MATRICES[g.name] @ GROUP_RING_MATRICES[h.name]
        rhs = s(g, h) * GROUP_RING_MATRICES[(g * h).name]
        pairs.append({'g': g.name, 'h': h.name, 'ok': bool(np.array_equal(lhs, rhs))})
    mismatches = [(p['g'], p['h']) for p in pairs if not p['ok']]
    return {'cocycle': s.label, 'passed': not mismatches,
            'pairs': pairs, 'mismatches': mismatches}


def group_ring_matrix(s):
    '''
    The twisted group algebra (F[G], *) over the basis (e, a, b, ab),
    graded by G itself.
    '''
    struct = [(g.index, h.index, (g * h).index, s(g, h))
              for g, h in itertools.product(ELEMENTS, ELEMENTS)]
    A = GradedAlgebra('F[G,%s]' % s.label, 4, ELEMENTS, struct)
    A.labels = list(NAMES)
    return A


def matrix_unit(u, v):
    '''
    E_uv (u, v in {1, 2}) as a vector over (e, a, b, ab).
    E11 = (e-a)/2, E22 = (e+a)/2, E12 = (b-ab)/2, E21 = (b+ab)/2.
    '''
    half = Fraction(1, 2)
    table = {(1, 1): [half, -half, 0, 0],
             (2, 2): [half, half, 0, 0],
             (1, 2): [0, 0, half, -half],
             (2, 1): [0, 0, half, half]}
    if (u, v) not in table:
        raise ValueError('Matrix units are indexed by 1 or 2, got (%r, %r)' % (u, v))
    return vector(table[(u, v)])


def group_ring_to_matrix(w):
    '''2x2 Fraction matrix of a vector over (e, a, b, ab)'''
    out = np.zeros((2, 2), dtype=object)
    out[...] = Fraction(0)
    for g in ELEMENTS:
        out = out + w[g.index] * GROUP_RING_MATRICES[g.name].astype(object)
    return out


def ad_matrix(A, x):
    '''
    Matrix of ad x: y -> y*x, so that ad_matrix(A, x) @ y = y*x.
    '''
    A.check_vector(x)
    M = np.zeros((A.dim, A.dim), dtype=object)
    M[...] = Fraction(0)
    for i, j, k, c in A.struct:
        if x[j] != 0:
            M[k, i] += x[j] * c
    return M


def killing_form(A, u, v):
    '''tr(ad u ad v)'''
    return Fraction(sum(np.diagonal(ad_matrix(A, u).dot(ad_matrix(A, v)))))


def killing_matrix(A):
    '''
    Exact m x m matrix of tr(ad basis_r ad basis_s).
    '''
    ads = [ad_matrix(A, A.basis_vector(r)) for r in range(A.dim)]
    K = np.zeros((A.dim, A.dim), dtype=object)
    for r in range(A.dim):
        for s in range(A.dim):
            K[r, s] = Fraction(np.sum(ads[r] * ads[s].T))
    return K


def killing_block_report(L, K=None):
    '''
    Per-degree diagonal blocks of the Killing matrix of a graded algebra,
    with determinants and the off-block zero count. When L was built by
    tensor_color_construct, each block is compared with c * kappa_B.
    '''
    if K is None:
        K = killing_matrix(L)
    m = L.dim
    off_block = [(r, s) for r in range(m) for s in range(m) if L.degrees[r] != L.degrees[s]]
    nonzero_off = [(r, s) for r, s in off_block if K[r, s] != 0]
    base_K = killing_matrix(L.base) if L.base is not None else None

    blocks = []
    for g in ELEMENTS:
        idx = L.homogeneous_indices(g)
        if not idx:
            continue
        block = K[np.ix_(idx, idx)]
        entry = {'degree': g.name, 'size': len(idx), 'block': block,
                 'det': det_exact(block), 'scalar': None}
        if base_K is not None and base_K.shape == block.shape:
            nz = [(r, s) for r in range(block.shape[0]) for s in range(block.shape[1]) if base_K[r, s] != 0]
            if nz:
                r, s = nz[0]
                c = block[r, s] / base_K[r, s]
                if all(block[x, y] == c * base_K[x, y] for x in range(block.shape[0]) for y in range(block.shape[1])):
                    entry['scalar'] = c
        blocks.append(entry)

    return {'algebra': L.name,
            'symmetric': bool(all(K[r, s] == K[s, r] for r in range(m) for s in range(m))),
            'off_block_entries': len(off_block),
            'off_block_nonzero': nonzero_off,
            'det': det_exact(K),
            'blocks': blocks}


def _homogeneous_split(A, v):
    parts = []
    for g in ELEMENTS:
        idx = A.homogeneous_indices(g)
        if any(v[i] != 0 for i in idx):
            w = A.zero()
            for i in idx:
                w[i] = v[i]
            parts.append(w)
    return parts


def graded_ideal_closure(A, v):
    '''
    Smallest graded ideal containing v, as a reduced basis.
    '''
    basis, _ = rref_exact(_homogeneous_split(A, v), A.dim)
    units = [A.basis_vector(j) for j in range(A.dim)]
    while True:
        spanning = list(basis)
        for w in basis:
            for u in units:
                spanning.extend(_homogeneous_split(A, A.multiply(w, u)))
                spanning.extend(_homogeneous_split(A, A.multiply(u, w)))
        new, _ = rref_exact(spanning, A.dim)
        if len(new) == len(basis):
            return new
        basis = new


def is_graded_simple(A):
    '''
    Graded simplicity by ideal closure of every homogeneous basis element.
    An algebra with zero product is reported not simple.

    :return: dict with 'simple', and on failure a 'witness' basis of a
             proper graded ideal and the generating index
    '''
    if A.has_zero_product:
        return {'algebra': A.name, 'simple': False, 'reason': 'zero product',
                'generator': None, 'witness': []}
    for i in range(A.dim):
        ideal = graded_ideal_closure(A, A.basis_vector(i))
        if len(ideal) < A.dim:
            return {'algebra': A.name, 'simple': False, 'reason': 'proper graded ideal',
                    'generator': i, 'witness': [list(w) for w in ideal]}
    return {'algebra': A.name, 'simple': True, 'reason': None,
            'generator': None, 'witness': []}


def named_algebra(name, cocycle=None):
    '''
    Build an algebra from its configuration name: sl2, sl3, sl2+sl2,
    abelian<m>, or L / L3 (the color construction over sl2 / sl3 with the
    given cocycle).
    '''
    if name == 'sl2':
        return sl2_factory()
    if name == 'sl3':
        return sln_factory(3)
    if name == 'sl2+sl2':
        return direct_sum(sl2_factory(), sl2_factory())
    if name.startswith('abelian'):
        try:
            m = int(name[len('abelian'):])
        except ValueError:
            raise ValueError('Expected abelian<m>, got %r' % name)
        return abelian_algebra(m)
    if name in ('L', 'L3'):
        if cocycle is None:
            raise ValueError('Algebra %s needs a cocycle' % name)
        B = sl2_factory() if name == 'L' else sln_factory(3)
        return tensor_color_construct(B, cocycle)
    raise ValueError('Unknown algebra %r; expected sl2, sl3, sl2+sl2, abelian<m>, L, L3 or a spec file' % name)
