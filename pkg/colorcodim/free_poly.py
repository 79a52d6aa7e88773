#!/usr/bin/env python
'''
free_poly.py
============

Multilinear polynomials in the absolutely free (nonassociative) algebra.

A monomial is a binary bracketing tree: a leaf is a positive int (the
variable index) and a node is a pair (left, right). The left-normed word
(v1, v2, ..., vn) is the tree (((v1, v2), v3), ..., vn).
'''

import itertools
import re
from fractions import Fraction

import numpy as np
from scipy.special import comb, factorial

from constants import EXPANSION_CAP
from algebra_core import frac, is_zero


class SizeGuardError(ValueError):
    '''Raised when a computation would exceed a configured size guard.'''


# ---- monomials ----

def is_leaf(m):
    return not isinstance(m, tuple)


def leaves(m):
    '''variables of a monomial, left to right'''
    if is_leaf(m):
        return (m,)
    return leaves(m[0]) + leaves(m[1])


def left_normed(word):
    '''[x_v1, x_v2, ..., x_vn] folded from the left'''
    word = list(word)
    if not word:
        raise ValueError('Expected a nonempty word')
    m = word[0]
    for v in word[1:]:
        m = (m, v)
    return m


def left_normed_word(m):
    '''the word of a left-normed monomial, or None if m is not left-normed'''
    word = []
    while not is_leaf(m):
        if not is_leaf(m[1]):
            return None
        word.append(m[1])
        m = m[0]
    word.append(m)
    return tuple(reversed(word))


def shapes(n):
    '''
    All bracketing shapes with n leaves (Catalan(n-1) of them), leaves
    marked 0, ordered by the size of the left factor.
    '''
    if n == 1:
        return [0]
    out = []
    for k in range(1, n):
        for left in shapes(k):
            for right in shapes(n - k):
                out.append((left, right))
    return out


def fill(shape, word):
    '''put the letters of word into the leaves of shape, left to right'''
    it = iter(word)

    def _fill(s):
        if is_leaf(s):
            return next(it)
        return (_fill(s[0]), _fill(s[1]))
    return _fill(shape)


def relabel(m, mapping):
    if is_leaf(m):
        return mapping.get(m, m)
    return (relabel(m[0], mapping), relabel(m[1], mapping))


def substitute(m, var, sub):
    '''replace the leaf var by the tree sub'''
    if is_leaf(m):
        return sub if m == var else m
    return (substitute(m[0], var, sub), substitute(m[1], var, sub))


def monomial_str(m):
    '''((1 2) (3 4)) style serialization'''
    if is_leaf(m):
        return str(m)
    return '(%s %s)' % (monomial_str(m[0]), monomial_str(m[1]))


def parse_monomial(text):
    '''
    Inverse of monomial_str; a bare list "1 3 2" or "[1, 3, 2]" is read as
    a left-normed word.
    '''
    text = text.strip()
    if text.startswith('['):
        return left_normed(int(t) for t in re.findall(r'-?\d+', text))
    tokens = re.findall(r'\(|\)|\d+', text)
    if not tokens:
        raise ValueError('Empty monomial %r' % text)
    if tokens[0] != '(' and len(tokens) > 1:
        return left_normed(int(t) for t in tokens)
    pos = 0

    def _parse():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        if tok == '(':
            left = _parse()
            right = _parse()
            if pos >= len(tokens) or tokens[pos] != ')':
                raise ValueError('Expected ")" in monomial %r' % text)
            pos += 1
            return (left, right)
        if tok == ')':
            raise ValueError('Unexpected ")" in monomial %r' % text)
        return int(tok)
    try:
        m = _parse()
    except IndexError:
        raise ValueError('Unbalanced monomial %r' % text)
    if pos != len(tokens):
        raise ValueError('Trailing tokens in monomial %r' % text)
    return m


# ---- permutations ----

def perm_sign(p):
    '''sign of a permutation given as a sequence of distinct comparables'''
    sign = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def perm_compose(s, t):
    '''(s o t)(i) = s(t(i)); permutations as tuples with p[i-1] = p(i)'''
    if len(s) != len(t):
        raise ValueError('Cannot compose permutations of sizes %d and %d' % (len(s), len(t)))
    return tuple(s[t[i] - 1] for i in range(len(t)))


def perm_inverse(s):
    out = [0] * len(s)
    for i, v in enumerate(s):
        out[v - 1] = i + 1
    return tuple(out)


# ---- polynomials ----

class MultilinearPoly:
    '''
    Rational linear combination of multilinear monomials on one variable set.

    :param terms: mapping or iterable of (monomial, coefficient)
    :param degrees: optional mapping variable -> GroupElement
    :param variables: variable set, required only for the zero polynomial
    '''

    def __init__(self, terms=(), degrees=None, variables=None):
        if isinstance(terms, dict):
            terms = terms.items()
        self.terms = {}
        vs = None if variables is None else frozenset(variables)
        for m, c in terms:
            lv = leaves(m)
            if len(set(lv)) != len(lv):
                raise ValueError('Monomial %s is not multilinear' % monomial_str(m))
            if vs is None:
                vs = frozenset(lv)
            elif frozenset(lv) != vs:
                raise ValueError('Monomial %s has variables %s, expected %s'
                                 % (monomial_str(m), sorted(lv), sorted(vs)))
            c = frac(c)
            self.terms[m] = self.terms.get(m, Fraction(0)) + c
        self.terms = {m: c for m, c in self.terms.items() if c != 0}
        self.variables = tuple(sorted(vs)) if vs is not None else ()
        self.degrees = dict(degrees) if degrees else None

    @classmethod
    def monomial(cls, m, coeff=1, degrees=None):
        return cls([(m, coeff)], degrees=degrees)

    @property
    def n(self):
        return len(self.variables)

    def is_zero(self):
        return not self.terms

    def items(self):
        return sorted(self.terms.items(), key=lambda t: monomial_str(t[0]))

    def _like(self, terms):
        return MultilinearPoly(terms, degrees=self.degrees, variables=self.variables)

    def __add__(self, other):
        if self.variables and other.variables and self.variables != other.variables:
            raise ValueError('Cannot add polynomials on different variable sets')
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return MultilinearPoly(out, degrees=self.degrees or other.degrees,
                               variables=self.variables or other.variables)

    def __neg__(self):
        return self._like({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        scalar = frac(scalar)
        return self._like({m: scalar * c for m, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, MultilinearPoly) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return 'MultilinearPoly(0)'
        return 'MultilinearPoly(%s)' % ' + '.join('%s*%s' % (c, monomial_str(m)) for m, c in self.items())

    def to_list(self):
        '''[[coefficient "num/den", monomial string], ...]'''
        return [['%d/%d' % (c.numerator, c.denominator), monomial_str(m)] for m, c in self.items()]

    @classmethod
    def from_list(cls, rows, degrees=None):
        return cls([(parse_monomial(m), Fraction(c)) for c, m in rows], degrees=degrees)


def rename(f, mapping):
    '''copy of f with variables renamed through mapping'''
    degrees = None
    if f.degrees:
        degrees = {mapping.get(v, v): g for v, g in f.degrees.items()}
    new_vars = [mapping.get(v, v) for v in f.variables]
    if len(set(new_vars)) != len(new_vars):
        raise ValueError('Renaming %s is not injective on %s' % (mapping, f.variables))
    return MultilinearPoly({relabel(m, mapping): c for m, c in f.terms.items()},
                           degrees=degrees, variables=new_vars)


def enumerate_monomials(n, shape='all'):
    '''
    :param shape: 'all' for every bracketing (Catalan(n-1) * n! monomials,
                  ordered by shape then word) or 'left-normed' for the
                  (n-1)! left-normed monomials starting with x1
    '''
    if n < 1:
        raise ValueError('Expected n >= 1, got %r' % n)
    if shape in ('left-normed', 'left-normed-first-fixed'):
        return [left_normed((1,) + w) for w in itertools.permutations(range(2, n + 1))]
    if shape != 'all':
        raise ValueError("Unknown monomial shape %r; expected 'all' or 'left-normed'" % shape)
    words = list(itertools.permutations(range(1, n + 1)))
    return [fill(s, w) for s in shapes(n) for w in words]


def monomial_count(n, shape='all'):
    if shape == 'all':
        return int(comb(2 * (n - 1), n - 1, exact=True) // n * factorial(n, exact=True))
    return int(factorial(n - 1, exact=True))


def random_poly(n, terms, seed, shape='all', num=5):
    '''random polynomial with integer coefficients in [-num, num]'''
    rng = np.random.default_rng(seed)
    pool = enumerate_monomials(n, shape)
    pick = rng.choice(len(pool), size=min(terms, len(pool)), replace=False)
    coeffs = rng.integers(-num, num + 1, size=len(pick))
    return MultilinearPoly([(pool[int(i)], int(c)) for i, c in zip(pick, coeffs)],
                           variables=range(1, n + 1))


# ---- evaluation ----

def evaluate_monomial(m, A, e):
    if is_leaf(m):
        return e[m]
    left = evaluate_monomial(m[0], A, e)
    if is_zero(left):
        return left
    return A.multiply(left, evaluate_monomial(m[1], A, e))


def _check_evaluation(f, A, e):
    for v in f.variables:
        if v not in e:
            raise ValueError('Evaluation does not assign variable %d' % v)
        A.check_vector(e[v])
        if f.degrees and v in f.degrees:
            g = f.degrees[v]
            bad = [i for i in range(A.dim) if e[v][i] != 0 and A.degrees[i] != g]
            if bad:
                raise ValueError('Variable %d has degree %s but its value has support in degree %s'
                                 % (v, g, A.degrees[bad[0]]))


def evaluate(f, A, e):
    '''
    Exact value of f at the evaluation e (variable -> vector of A).
    '''
    _check_evaluation(f, A, e)
    out = A.zero()
    for m, c in f.terms.items():
        out = out + c * evaluate_monomial(m, A, e)
    return out


def sn_act(sigma, f):
    '''
    (sigma f)(x1, ..., xn) = f(x_sigma(1), ..., x_sigma(n)): leaf i becomes
    sigma(i). f must be on the variables 1..n.
    '''
    sigma = tuple(sigma)
    if f.variables and f.variables != tuple(range(1, len(sigma) + 1)):
        raise ValueError('Permutation of size %d cannot act on variables %s' % (len(sigma), f.variables))
    mapping = {i + 1: sigma[i] for i in range(len(sigma))}
    return rename(f, mapping)


def alt_on_set(f, Y, cap=EXPANSION_CAP):
    '''
    Alt_Y f = sum over permutations sigma of Y of sgn(sigma) sigma f, expanded.
    '''
    Y = sorted(Y)
    missing = set(Y) - set(f.variables)
    if missing:
        raise ValueError('Alternation set contains variables %s not in f' % sorted(missing))
    if len(Y) > cap:
        raise SizeGuardError('Alternation over %d variables needs %d terms, cap is %d!; use alt_evaluate'
                             % (len(Y), int(factorial(len(Y), exact=True)), cap))
    out = MultilinearPoly(variables=f.variables, degrees=f.degrees)
    for p in itertools.permutations(Y):
        mapping = dict(zip(Y, p))
        out = out + perm_sign(p) * rename(f, mapping)
    return out


def alt_evaluate(f, Y, A, e, samples=None, seed=None):
    '''
    Value of Alt_Y f at e without expanding the alternation.

    With samples set, sums over that many seeded random permutations of Y
    instead of all |Y|! of them (a partial sum).
    '''
    Y = sorted(Y)
    _check_evaluation(f, A, e)
    if samples is None:
        perms = itertools.permutations(Y)
    else:
        rng = np.random.default_rng(seed)
        perms = (tuple(rng.permutation(Y)) for _ in range(samples))
    out = A.zero()
    for p in perms:
        # variable y_i of sigma f is evaluated at e[sigma(y_i)]
        e2 = dict(e)
        for y, py in zip(Y, p):
            e2[y] = e[int(py)]
        out = out + perm_sign(p) * evaluate(f, A, e2)
    return out


# ---- graded sign calculus ----

def _degree(degrees, v):
    if isinstance(degrees, dict):
        return degrees[v]
    return degrees[v - 1]


def color_sign(order, degrees, s):
    '''
    The sign lambda with
        m(g1(x)x1, ..., gn(x)xn) = g1...gn (x) lambda * m(x1, ..., xn)
    for the left-normed monomial m with the given word, obtained by folding
    the cocycle s along the product.

    :param order: left-normed word (v1, ..., vn)
    :param degrees: mapping (or list indexed by v-1) of variable degrees
    '''
    order = list(order)
    acc = _degree(degrees, order[0])
    sign = 1
    for v in order[1:]:
        g = _degree(degrees, v)
        sign *= s(acc, g)
        acc = acc * g
    return sign


def tilde_transform(f, degrees, s):
    '''
    sum a_w m_w -> sum lambda_w a_w m_w over left-normed monomials with a
    common first variable.
    '''
    first = None
    out = {}
    for m, c in f.terms.items():
        w = left_normed_word(m)
        if w is None:
            raise ValueError('tilde_transform needs left-normed monomials, got %s' % monomial_str(m))
        if first is None:
            first = w[0]
        elif w[0] != first:
            raise ValueError('tilde_transform needs a common first variable, got %d and %d' % (first, w[0]))
        out[m] = color_sign(w, degrees, s) * c
    return MultilinearPoly(out, degrees=f.degrees, variables=f.variables)
