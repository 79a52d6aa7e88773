#!/usr/bin/env python
# -*- coding: utf-8 -*-
'''
color_group.py
==============

The group G = Z2 + Z2 = <a> x <b>, sign tables on G x G (2-cocycles that
twist the group algebra) and skew-symmetric bicharacters (which govern the
color axioms).

Elements are written a^i b^j and stored as bit pairs (i, j). Tables are
4x4 arrays of +1/-1 indexed in the order e, a, b, ab.
'''

import itertools
from typing import NamedTuple

import numpy as np


class CocycleError(ValueError):
    '''Raised when a sign table that must be a 2-cocycle is not one.'''


class GroupElement(NamedTuple):
    '''
    a^i b^j in G = <a>_2 x <b>_2

    :param i: exponent of a (0 or 1)
    :param j: exponent of b (0 or 1)
    '''
    i: int
    j: int

    def __mul__(self, other):
        return group_mul(self, other)

    @property
    def index(self):
        return self.i + 2 * self.j

    @property
    def name(self):
        return NAMES[self.index]

    def __repr__(self):
        return self.name


NAMES = ('e', 'a', 'b', 'ab')

E  = GroupElement(0, 0)
A  = GroupElement(1, 0)
B  = GroupElement(0, 1)
AB = GroupElement(1, 1)

ELEMENTS = (E, A, B, AB)


def group_mul(x, y):
    '''
    Product in G: componentwise XOR of the exponent bits.
    '''
    return GroupElement(x.i ^ y.i, x.j ^ y.j)


def element(name_or_bits):
    '''
    Parse an element from its name ('e', 'a', 'b', 'ab'), an index 0..3 or
    an [i, j] bit pair.
    '''
    if isinstance(name_or_bits, GroupElement):
        return name_or_bits
    if isinstance(name_or_bits, str):
        if name_or_bits not in NAMES:
            raise ValueError('Unknown group element %r; expected one of %s' % (name_or_bits, NAMES))
        return ELEMENTS[NAMES.index(name_or_bits)]
    if isinstance(name_or_bits, (int, np.integer)):
        if not 0 <= name_or_bits <= 3:
            raise ValueError('Group element index must be 0..3, got %r' % (name_or_bits,))
        return ELEMENTS[int(name_or_bits)]
    try:
        i, j = name_or_bits
    except (TypeError, ValueError):
        raise ValueError('Expected a group element name, index or [i, j] pair, got %r' % (name_or_bits,))
    if i not in (0, 1) or j not in (0, 1):
        raise ValueError('Group element bits must be 0 or 1, got %r' % (name_or_bits,))
    return GroupElement(int(i), int(j))


def _freeze(table):
    arr = np.asarray(table, dtype=int)
    if arr.shape != (4, 4):
        raise ValueError('Sign tables are 4x4, got shape %s' % (arr.shape,))
    return tuple(tuple(int(v) for v in row) for row in arr)


class SignTable:
    '''
    A 4x4 table of scalars indexed by pairs of group elements.
    Immutable; shared base of Cocycle and Bicharacter.
    '''

    kind = 'table'

    def __init__(self, table, label=None):
        self.table = _freeze(table)
        self.label = label or self.kind

    def __call__(self, g, h):
        return self.table[g.index][h.index]

    def __eq__(self, other):
        return isinstance(other, SignTable) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return '%s(%s, %s)' % (type(self).__name__, self.label, list(map(list, self.table)))

    def as_array(self):
        return np.array(self.table, dtype=int)

    def to_rows(self):
        return [list(row) for row in self.table]

    def _bad_values(self):
        out = []
        for g, h in itertools.product(ELEMENTS, ELEMENTS):
            if self(g, h) not in (1, -1):
                out.append({'axiom': 'values', 'g': g.name, 'h': h.name, 'value': self(g, h)})
        return out


class Cocycle(SignTable):
    '''
    Sign table sigma on G x G twisting the group algebra, g * h = sigma(g,h) gh.

    Construction does not validate: the literal table from the product
    formula is kept as a falsification input. Use violations() or
    is_cocycle to check the axioms.
    '''

    kind = 'cocycle'

    def violations(self):
        '''
        Every violated instance of the cocycle axioms:
        values in {+1,-1}; sigma(e,g) = sigma(g,e) = 1;
        sigma(g,h) sigma(gh,k) = sigma(h,k) sigma(g,hk).
        '''
        out = self._bad_values()
        for g in ELEMENTS:
            if self(E, g) != 1:
                out.append({'axiom': 'unit', 'g': E.name, 'h': g.name, 'value': self(E, g)})
            if self(g, E) != 1 and g != E:
                out.append({'axiom': 'unit', 'g': g.name, 'h': E.name, 'value': self(g, E)})
        for g, h, k in itertools.product(ELEMENTS, ELEMENTS, ELEMENTS):
            lhs = self(g, h) * self(g * h, k)
            rhs = self(h, k) * self(g, h * k)
            if lhs != rhs:
                out.append({'axiom': 'cocycle', 'g': g.name, 'h': h.name, 'k': k.name,
                            'lhs': lhs, 'rhs': rhs})
        return out

    @property
    def is_cocycle(self):
        return not self.violations()

    def __mul__(self, other):
        '''pointwise product of two tables'''
        return Cocycle(self.as_array() * other.as_array(), label='%s*%s' % (self.label, other.label))


class Bicharacter(SignTable):
    '''
    Skew-symmetric bicharacter beta: G x G -> {+1,-1}.
    '''

    kind = 'bicharacter'

    def violations(self):
        return validate_bicharacter(self)['violations']

    @property
    def is_valid(self):
        return not self.violations()


def canonical_cocycle():
    '''
    sigma(a^i b^j, a^k b^l) = (-1)^(j*k)

    This exponent makes e, a, b, ab -> the four 2x2 matrices of the group
    ring identification an algebra isomorphism, and the tensor product with
    a Lie algebra satisfies the color axioms for beta(a,b) = -1.
    '''
    table = np.ones((4, 4), dtype=int)
    for g, h in itertools.product(ELEMENTS, ELEMENTS):
        table[g.index, h.index] = (-1) ** (g.j * h.i)
    return Cocycle(table, label='canonical')


def literal_formula_cocycle():
    '''
    The table (-1)^(j+k) read literally from the product formula.
    It is not a cocycle (sigma(b,e) = -1) and breaks color
    anticommutativity; kept as a negative fixture for the checkers.
    '''
    table = np.ones((4, 4), dtype=int)
    for g, h in itertools.product(ELEMENTS, ELEMENTS):
        table[g.index, h.index] = (-1) ** (g.j + h.i)
    return Cocycle(table, label='literal')


def trivial_cocycle():
    '''sigma = 1 everywhere: F[G] is commutative and L is an ordinary Lie algebra'''
    return Cocycle(np.ones((4, 4), dtype=int), label='trivial')


def bilinear_cocycle(M, label=None):
    '''
    sigma(g,h) = (-1)^(g^T M h) for a 2x2 bit matrix M, with g = (i, j).
    Bilinear forms over F_2 are always normalized 2-cocycles.
    '''
    M = np.asarray(M, dtype=int) % 2
    table = np.ones((4, 4), dtype=int)
    for g, h in itertools.product(ELEMENTS, ELEMENTS):
        gv = np.array([g.i, g.j])
        hv = np.array([h.i, h.j])
        table[g.index, h.index] = (-1) ** int(gv @ M @ hv % 2)
    if label is None:
        label = 'bilinear[%d%d;%d%d]' % tuple(M.ravel())
    return Cocycle(table, label=label)


def all_bilinear_cocycles():
    '''the 16 cocycles coming from bilinear forms on F_2^2'''
    out = []
    for bits in itertools.product((0, 1), repeat=4):
        out.append(bilinear_cocycle(np.array(bits).reshape(2, 2)))
    return out


def bicharacter_from_cocycle(s):
    '''
    beta(g,h) = sigma(g,h) * sigma(h,g)^-1, the commutation factor of the
    twisted group algebra: g*h = beta(g,h) h*g.

    :param s: Cocycle, must satisfy the cocycle axioms
    :return: Bicharacter
    '''
    bad = s.violations()
    if bad:
        raise CocycleError('Table %r is not a 2-cocycle (%d violations, first: %s); '
                           'it cannot define a twist' % (s.label, len(bad), bad[0]))
    table = np.ones((4, 4), dtype=int)
    for g, h in itertools.product(ELEMENTS, ELEMENTS):
        # values are +1/-1, so the inverse is the value itself
        table[g.index, h.index] = s(g, h) * s(h, g)
    return Bicharacter(table, label='beta(%s)' % s.label)


def canonical_bicharacter():
    '''beta(a,a) = beta(b,b) = 1, beta(a,b) = -1, extended bimultiplicatively'''
    return bicharacter_from_cocycle(canonical_cocycle())


def trivial_bicharacter():
    return Bicharacter(np.ones((4, 4), dtype=int), label='trivial')


def bicharacter_from_generators(aa, bb, ab):
    '''
    The bimultiplicative table with beta(a,a)=aa, beta(b,b)=bb and
    beta(a,b)=beta(b,a)=ab.
    '''
    gen = np.array([[aa, ab], [ab, bb]], dtype=int)
    table = np.ones((4, 4), dtype=int)
    for g, h in itertools.product(ELEMENTS, ELEMENTS):
        val = 1
        for x, gx in enumerate((g.i, g.j)):
            for y, hy in enumerate((h.i, h.j)):
                if gx and hy:
                    val *= gen[x, y]
        table[g.index, h.index] = val
    return Bicharacter(table, label='beta[aa=%d,bb=%d,ab=%d]' % (aa, bb, ab))


def skew_bicharacters():
    '''
    All 8 skew-symmetric +-1 bicharacters on G. Skewness forces
    beta(b,a) = beta(a,b)^-1 = beta(a,b).
    '''
    return [bicharacter_from_generators(aa, bb, ab)
            for aa, bb, ab in itertools.product((1, -1), repeat=3)]


def is_color_lie(b):
    '''
    True when beta(g,g) = 1 for every g (a color Lie algebra); otherwise
    the algebras it governs are color Lie superalgebras.
    '''
    return all(b(g, g) == 1 for g in ELEMENTS)


def validate_bicharacter(b):
    '''
    Check every bicharacter axiom instance.

    :param b: Bicharacter (or any SignTable)
    :return: dict with keys 'valid' and 'violations'; each violation names
             the axiom and the (g, h[, k]) instance
    '''
    out = b._bad_values()
    for g in ELEMENTS:
        if b(E, g) != 1:
            out.append({'axiom': 'unit', 'g': E.name, 'h': g.name, 'value': b(E, g)})
        if b(g, E) != 1 and g != E:
            out.append({'axiom': 'unit', 'g': g.name, 'h': E.name, 'value': b(g, E)})
    for g, h in itertools.product(ELEMENTS, ELEMENTS):
        if b(g, h) * b(h, g) != 1:
            out.append({'axiom': 'skew', 'g': g.name, 'h': h.name,
                        'value': b(g, h) * b(h, g)})
    for g, h, k in itertools.product(ELEMENTS, ELEMENTS, ELEMENTS):
        if b(g * h, k) != b(g, k) * b(h, k):
            out.append({'axiom': 'left-multiplicative', 'g': g.name, 'h': h.name, 'k': k.name})
        if b(g, h * k) != b(g, h) * b(g, k):
            out.append({'axiom': 'right-multiplicative', 'g': g.name, 'h': h.name, 'k': k.name})
    return {'valid': not out, 'violations': out}


def cocycle_from_table(rows, label='file'):
    return Cocycle(rows, label=label)


def bicharacter_from_table(rows, label='file'):
    return Bicharacter(rows, label=label)


def named_cocycle(name):
    '''
    Look up a cocycle by its configuration name.
    '''
    lookup = {'canonical': canonical_cocycle,
              'literal': literal_formula_cocycle,
              'trivial': trivial_cocycle}
    if name not in lookup:
        raise ValueError('Unknown cocycle %r; expected one of %s or a file' % (name, sorted(lookup)))
    return lookup[name]()
