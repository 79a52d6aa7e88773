#!/usr/bin/env python
'''
Functions to solve the linear-algebra problems behind the checks:
exact rank and determinant over the rationals (fraction-free elimination on
Python integers), exact row reduction over Fractions, and rank over a prime
field, including an incremental tracker for column batches.
'''

import math
from fractions import Fraction

import numpy as np

# largest magnitude that a float64 accumulation represents exactly
FLOAT_EXACT = 2**53
INT64_SAFE  = 2**62


def _as_object(M):
    M = np.array(M, dtype=object)
    if M.ndim == 1:
        M = M.reshape(1, -1)
    return M


def _clear_denominators(M):
    '''
    Scale every row of a rational matrix to integers.

    :param M: 2-d object array of ints / Fractions
    :return: (integer object array, list of row scale factors)
    '''
    M = _as_object(M)
    scales = []
    out = np.empty(M.shape, dtype=object)
    for r in range(M.shape[0]):
        den = 1
        for x in M[r]:
            if isinstance(x, Fraction):
                den = den * x.denominator // math.gcd(den, x.denominator)
        scales.append(den)
        out[r] = [int(Fraction(x) * den) for x in M[r]]
    return out, scales


def bareiss_rank(M):
    '''
    Rank of an integer matrix by Bareiss fraction-free elimination.

    Entries stay Python integers; every division is exact because each
    entry after step r is an (r+1)x(r+1) minor of the input.

    :param M: 2-d array-like of Python ints (copied)
    :return: rank over Q
    '''
    A = _as_object(M).copy()
    nrow, ncol = A.shape
    prev = 1
    r = 0
    for c in range(ncol):
        if r == nrow:
            break
        nz = [i for i in range(r, nrow) if A[i, c] != 0]
        if not nz:
            continue
        piv = nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        if r + 1 < nrow and c + 1 < ncol:
            A[r + 1:, c + 1:] = (A[r, c] * A[r + 1:, c + 1:]
                                 - np.outer(A[r + 1:, c], A[r, c + 1:])) // prev
        A[r + 1:, c] = 0
        prev = A[r, c]
        r += 1
    return r


def bareiss_det(M):
    '''
    Determinant of a square integer matrix by Bareiss elimination.
    '''
    A = _as_object(M).copy()
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError('Expected a square matrix, got shape %s' % (A.shape,))
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k, k] == 0:
            for i in range(k + 1, n):
                if A[i, k] != 0:
                    A[[i, k]] = A[[k, i]]
                    sign = -sign
                    break
            else:
                return 0
        A[k + 1:, k + 1:] = (A[k, k] * A[k + 1:, k + 1:]
                             - np.outer(A[k + 1:, k], A[k, k + 1:])) // prev
        prev = A[k, k]
    return sign * A[n - 1, n - 1]


def det_exact(M):
    '''
    Exact determinant of a square rational matrix.

    :param M: square array-like of ints / Fractions
    :return: Fraction
    '''
    Z, scales = _clear_denominators(M)
    d = Fraction(bareiss_det(Z))
    for s in scales:
        d /= s
    return d


def gram_bound(M):
    '''largest |entry| of M M^T that the accumulation could reach'''
    if M.size == 0:
        return 0
    m = int(np.max(np.abs(M)))
    return m * m * M.shape[1]


def gram(M):
    '''
    Exact M M^T for an integer matrix. Uses float64 BLAS when every partial
    sum is below 2^53, int64 below 2^62, and Python integers otherwise.

    :return: object array of Python ints
    '''
    if M.dtype != object:
        bound = gram_bound(M)
        if bound < FLOAT_EXACT:
            Mf = M.astype(np.float64)
            return np.rint(Mf @ Mf.T).astype(np.int64).astype(object)
        if bound < INT64_SAFE:
            Mi = M.astype(np.int64)
            return (Mi @ Mi.T).astype(object)
    Mo = M.astype(object)
    return Mo.dot(Mo.T)


class GramAccumulator:
    '''
    Accumulates M M^T for a wide integer matrix M delivered in column
    blocks, so M is never held in memory at once. rank(M) = rank(M M^T)
    over Q.

    :param nrows: number of rows of M
    '''

    def __init__(self, nrows):
        self.nrows = nrows
        self.G = np.zeros((nrows, nrows), dtype=object)
        self.columns = 0

    def add(self, block):
        block = np.asarray(block)
        if block.ndim != 2 or block.shape[0] != self.nrows:
            raise ValueError('Expected a block with %d rows, got shape %s'
                             % (self.nrows, block.shape))
        self.G = self.G + gram(block)
        self.columns += block.shape[1]

    def rank(self):
        return bareiss_rank(self.G)


def rank_exact(M):
    '''
    Rank over Q of a matrix of integers (or Fractions).

    Wide matrices are reduced to their Gram matrix first; the rank is
    certified exactly either way.

    :param M: 2-d array of ints / Fractions
    :return: integer rank
    '''
    M = np.asarray(M)
    if M.ndim == 1:
        M = M.reshape(1, -1)
    if M.size == 0:
        return 0
    if M.dtype == object and any(isinstance(x, Fraction) for x in M.flat):
        M, _ = _clear_denominators(M)
    if M.shape[0] > M.shape[1]:
        M = M.T
    if M.shape[1] > 4 * M.shape[0]:
        return bareiss_rank(gram(M))
    return bareiss_rank(M)


def rref_exact(rows, ncols=None):
    '''
    Reduced row echelon form over Q.

    :param rows: iterable of equal-length vectors of ints / Fractions
    :param ncols: vector length, needed only when rows may be empty
    :return: (list of nonzero reduced rows as Fraction object arrays, pivot columns)
    '''
    A = [np.array([Fraction(x) for x in r], dtype=object) for r in rows]
    if not A:
        return [], []
    ncols = len(A[0]) if ncols is None else ncols
    basis = []
    pivots = []
    for c in range(ncols):
        piv = None
        for i, row in enumerate(A):
            if row[c] != 0:
                piv = i
                break
        if piv is None:
            continue
        row = A.pop(piv)
        row = row / row[c]
        for t, b in enumerate(basis):
            if b[c] != 0:
                basis[t] = b - b[c] * row
        A = [a - a[c] * row if a[c] != 0 else a for a in A]
        basis.append(row)
        pivots.append(c)
    return basis, pivots


# ---- prime field ----

def mod_p(A, p):
    return np.asarray(A % p, dtype=np.int64)


def inv_mod_scalar(a, p):
    return pow(int(a) % p, p - 2, p)


def rref_mod_p(A, p):
    '''
    RREF over GF(p).

    :return: (reduced array, pivot columns)
    '''
    A = mod_p(np.array(A, dtype=np.int64), p)
    m, n = A.shape
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = mod_p(A[r] * inv_mod_scalar(A[r, c], p), p)
        fac = A[:, c].copy()
        fac[r] = 0
        A = mod_p(A - np.outer(fac, A[r]), p)
        pivots.append(c)
        r += 1
    return A, pivots


def rank_mod_p(A, p):
    '''rank of an integer matrix over GF(p)'''
    A = np.asarray(A)
    if A.size == 0:
        return 0
    if A.dtype == object:
        A = np.array([[int(x) % p for x in row] for row in A], dtype=np.int64)
    _, pivots = rref_mod_p(A, p)
    return len(pivots)


class ModpRankTracker:
    '''
    Incremental rank of a growing set of column vectors over GF(p).

    The span is stored as fully reduced rows B with B[:, pivots] = I, so a
    new vector x reduces to x - B^T x[pivots].

    :param length: vector length (number of matrix rows)
    :param p: prime, p < 2^31 so that products fit int64
    '''

    def __init__(self, length, p):
        self.length = length
        self.p = p
        self.B = np.zeros((0, length), dtype=np.int64)
        self.pivots = []

    @property
    def rank(self):
        return len(self.pivots)

    @property
    def full(self):
        return self.rank == self.length

    def add_columns(self, X):
        '''
        Add the columns of X (length x ncols) to the span.

        :return: the rank afterwards
        '''
        p = self.p
        X = mod_p(np.asarray(X, dtype=np.int64), p)
        if self.pivots:
            X = mod_p(X - mod_p(self.B.T @ X[self.pivots, :], p), p)
        for t in range(X.shape[1]):
            if self.full:
                break
            x = X[:, t]
            if self.pivots:
                x = mod_p(x - self.B.T @ x[self.pivots], p)
            nz = np.nonzero(x)[0]
            if nz.size == 0:
                continue
            q = int(nz[0])
            x = mod_p(x * inv_mod_scalar(x[q], p), p)
            if self.pivots:
                self.B = mod_p(self.B - np.outer(self.B[:, q], x), p)
            self.B = np.vstack([self.B, x])
            self.pivots.append(q)
        return self.rank
