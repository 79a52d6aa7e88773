#!/usr/bin/env python
'''
codim_engine.py
===============

Codimensions c_n(A) = dim P_n / (P_n cap Id(A)) as ranks of evaluation
matrices: one row per multilinear monomial, one column per (evaluation,
output coordinate).

Exact mode evaluates on every basis tuple, which is enough by
multilinearity, and takes the rank over Q. Randomized mode evaluates on
seeded random vectors over a prime field and only ever underestimates the
rank.
'''

import itertools
import json
import os
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy.special import factorial

from constants import (BATCH_COLUMNS, DEFAULT_PRIMES, DEFAULT_SEEDS,
                       EXACT_COLUMN_CAP, MAX_BATCHES, STABLE_WINDOW)
from color_group import ELEMENTS
from algebra_core import is_lie
from free_poly import (SizeGuardError, enumerate_monomials, is_leaf, leaves,
                       relabel)
from solver import (INT64_SAFE, GramAccumulator, ModpRankTracker, mod_p,
                    rank_exact)

GOLDENS_FILE = os.path.join(os.path.dirname(os.path.realpath(__file__)), 'goldens.json')


class NotLieError(ValueError):
    '''Raised when a Lie-only computation gets an algebra that is not Lie.'''


@dataclass
class CodimReport:
    '''
    Result of one codimension computation.
    '''
    algebra: str
    n: int
    mode: str
    value: int
    status: str
    rows: int
    columns: int
    row_shape: str = 'all'
    key: list = None
    primes: list = field(default_factory=list)
    seeds: list = field(default_factory=list)
    window: int = None
    runs: list = field(default_factory=list)
    rank_history: list = field(default_factory=list)
    components: list = field(default_factory=list)
    bound: int = None

    def __post_init__(self):
        if self.value > self.rows and not self.components:
            raise ValueError('Rank %d exceeds the %d monomial rows' % (self.value, self.rows))
        if self.bound is not None and self.value > self.bound:
            raise ValueError('c_%d = %d exceeds the bound %d' % (self.n, self.value, self.bound))

    def to_dict(self):
        return asdict(self)


# ---- monomial tensors ----

def _leaf_keys(n, key=None):
    '''per-variable degree index for a graded key, or 0 for full basis leaves'''
    if key is None:
        return {v: 0 for v in range(1, n + 1)}
    degs = graded_degrees(key)
    return {v: degs[v - 1].index for v in range(1, n + 1)}


def _tree_tensor(t, C, leaf_mats, cache):
    '''
    Positional multilinear tensor of a tree whose leaves are leaf keys:
    shape (prod of leaf basis sizes, d), rows in leaf order.
    '''
    if t in cache:
        return cache[t]
    if is_leaf(t):
        out = leaf_mats[t]
    else:
        d = C.shape[0]
        TL = _tree_tensor(t[0], C, leaf_mats, cache)
        TR = _tree_tensor(t[1], C, leaf_mats, cache)
        tmp = TL.dot(C.reshape(d, d * d)).reshape(-1, d, d)
        out = np.tensordot(tmp, TR, axes=([1], [1]))
        out = out.transpose(0, 2, 1).reshape(-1, d)
    cache[t] = out
    return out


def _row_tensor(m, n, C, leaf_mats, lkeys, cache):
    '''
    Evaluation tensor of a monomial with axes in variable order 1..n
    followed by the output coordinate.
    '''
    word = leaves(m)
    T = _tree_tensor(relabel(m, lkeys), C, leaf_mats, cache)
    sizes = [leaf_mats[lkeys[v]].shape[0] for v in word]
    T = T.reshape(sizes + [C.shape[0]])
    perm = [word.index(v) for v in range(1, n + 1)]
    return T.transpose(perm + [n])


def _integer_tensor(A, n):
    '''integer structure constants in int64 when every tensor entry fits'''
    C, _ = A.integer_structure()
    s = int(np.max(np.abs(C).sum(axis=(0, 1)))) if C.size else 0
    if s ** max(n - 1, 0) * max(s, 1) >= INT64_SAFE:
        C = C.astype(object)
    return C


def _leaf_matrices(A, C, key):
    eye = np.eye(A.dim, dtype=np.int64).astype(C.dtype)
    if key is None:
        return {0: eye}
    return {g.index: eye[A.homogeneous_indices(g), :] for g in ELEMENTS}


def _exact_rank(A, monomials, n, key=None, column_cap=EXACT_COLUMN_CAP, progress=None):
    d = A.dim
    C = _integer_tensor(A, n)
    leaf_mats = _leaf_matrices(A, C, key)
    lkeys = _leaf_keys(n, key)
    sizes = [leaf_mats[lkeys[v]].shape[0] for v in range(1, n + 1)]
    columns = int(np.prod(sizes, dtype=object)) * d
    if columns > column_cap:
        raise SizeGuardError('Exact mode for %s at n=%d needs %d coordinate columns, cap is %d; '
                             'use --mode randomized or raise the cap' % (A.name, n, columns, column_cap))
    if 0 in sizes:
        return 0, columns
    cache = {}
    tensors = [_row_tensor(m, n, C, leaf_mats, lkeys, cache) for m in monomials]
    acc = GramAccumulator(len(monomials))
    # columns sliced by the basis index of x1
    for t in range(sizes[0]):
        block = np.stack([T[t].reshape(-1) for T in tensors])
        acc.add(block)
        if progress:
            progress('exact: %s n=%d, column block %d/%d' % (A.name, n, t + 1, sizes[0]))
    return acc.rank(), columns


def _random_values(monomials, Cp, X, p):
    '''
    Values of every monomial at a batch of evaluations over GF(p).

    :param X: dict variable -> (E, d) array
    :return: (rows, E * d) array, columns grouped by evaluation
    '''
    d = Cp.shape[0]
    Cflat = Cp.reshape(d * d, d)
    cache = {}

    def _val(t):
        if is_leaf(t):
            return X[t]
        if t in cache:
            return cache[t]
        L = _val(t[0])
        R = _val(t[1])
        outer = mod_p(L[:, :, None] * R[:, None, :], p).reshape(L.shape[0], d * d)
        cache[t] = mod_p(outer @ Cflat, p)
        return cache[t]
    return np.stack([_val(m).reshape(-1) for m in monomials])


def _randomized_rank(A, monomials, n, key, seed, p, window, batch_columns, max_batches, progress=None):
    d = A.dim
    C, _ = A.integer_structure()
    Cp = mod_p(C, p)
    if key is None:
        support = {v: list(range(d)) for v in range(1, n + 1)}
    else:
        degs = graded_degrees(key)
        support = {v: A.homogeneous_indices(degs[v - 1]) for v in range(1, n + 1)}
    if any(not s for s in support.values()):
        return 0, 0, [0]
    evals = max(1, batch_columns // d)
    rng = np.random.default_rng([seed, p])
    tracker = ModpRankTracker(len(monomials), p)
    history = []
    stable = 0
    cols = 0
    for b in range(max_batches):
        X = {}
        for v in range(1, n + 1):
            x = np.zeros((evals, d), dtype=np.int64)
            x[:, support[v]] = rng.integers(0, p, size=(evals, len(support[v])))
            X[v] = x
        before = tracker.rank
        tracker.add_columns(_random_values(monomials, Cp, X, p))
        cols += evals * d
        history.append(tracker.rank)
        if progress:
            progress('randomized: %s n=%d seed=%d p=%d batch %d rank %d'
                     % (A.name, n, seed, p, b + 1, tracker.rank))
        stable = stable + 1 if tracker.rank == before else 0
        if tracker.full or stable >= window:
            break
    return tracker.rank, cols, history


def _run(A, n, monomials, row_shape, mode, key=None, seeds=None, primes=None,
         column_cap=EXACT_COLUMN_CAP, window=STABLE_WINDOW, batch_columns=BATCH_COLUMNS,
         max_batches=MAX_BATCHES, progress=None, bound=None):
    if n < 1:
        raise ValueError('Expected n >= 1, got %r' % n)
    if mode == 'exact':
        value, columns = _exact_rank(A, monomials, n, key, column_cap, progress)
        return CodimReport(algebra=A.name, n=n, mode='exact-full-basis', value=value,
                           status='exact', rows=len(monomials), columns=columns,
                           row_shape=row_shape, key=key, bound=bound)
    if mode != 'randomized':
        raise ValueError("Unknown mode %r; expected 'exact' or 'randomized'" % mode)
    seeds = list(DEFAULT_SEEDS if seeds is None else seeds)
    primes = list(DEFAULT_PRIMES if primes is None else primes)
    runs = []
    history = []
    columns = 0
    for seed, p in itertools.product(seeds, primes):
        r, cols, hist = _randomized_rank(A, monomials, n, key, seed, p, window,
                                         batch_columns, max_batches, progress)
        runs.append({'seed': seed, 'prime': p, 'rank': r, 'columns': cols})
        history.append(hist)
        columns = max(columns, cols)
    return CodimReport(algebra=A.name, n=n, mode='randomized', value=max(r['rank'] for r in runs),
                       status='lower-bound-whp', rows=len(monomials), columns=columns,
                       row_shape=row_shape, key=key, primes=primes, seeds=seeds, window=window,
                       runs=runs, rank_history=history, bound=bound)


def codim_plain(A, n, mode='exact', **kw):
    '''
    c_n(A) with all Catalan(n-1) * n! bracketings as rows.
    '''
    return _run(A, n, enumerate_monomials(n, 'all'), 'all', mode,
                bound=A.dim ** (n + 1), **kw)


def codim_lie(B, n, mode='exact', **kw):
    '''
    c_n(B) for a Lie algebra from the (n-1)! left-normed monomials with x1 first.
    '''
    if not is_lie(B):
        raise NotLieError('%s does not satisfy the Lie axioms; use codim_plain' % B.name)
    return _run(B, n, enumerate_monomials(n, 'left-normed'), 'left-normed', mode,
                bound=B.dim ** (n + 1), **kw)


# ---- graded ----

def check_key(key):
    key = [int(k) for k in key]
    if len(key) != 4 or any(k < 0 for k in key) or sum(key) < 1:
        raise ValueError('A graded key is four nonnegative counts (e, a, b, ab) with n >= 1, got %s' % key)
    return key


def graded_degrees(key):
    '''degree word for a key: k1 variables of degree e, then a, b, ab'''
    key = check_key(key)
    return [g for g, k in zip(ELEMENTS, key) for _ in range(k)]


def compositions(n, parts=4):
    '''all keys (k1, ..., k_parts) of nonnegative integers summing to n'''
    out = []
    for cut in itertools.combinations(range(n + parts - 1), parts - 1):
        prev = -1
        key = []
        for c in cut:
            key.append(c - prev - 1)
            prev = c
        key.append(n + parts - 2 - prev)
        out.append(key)
    return out


def multinomial(n, key):
    out = int(factorial(n, exact=True))
    for k in key:
        out //= int(factorial(k, exact=True))
    return out


def codim_graded_component(L, key, mode='exact', rows='left-normed', **kw):
    '''
    dim of the multilinear component with the given numbers of variables of
    degree e, a, b, ab, modulo graded identities of L.

    :param rows: 'left-normed' ((n-1)! monomials, x1 first) or 'all'
    '''
    key = check_key(key)
    n = sum(key)
    return _run(L, n, enumerate_monomials(n, rows), rows, mode, key=key, **kw)


def codim_graded_total(L, n, mode='exact', rows='left-normed', **kw):
    '''
    c_n^gr(L) = sum over keys of multinomial(n; key) * component value.
    '''
    if n < 1:
        raise ValueError('Expected n >= 1, got %r' % n)
    parts = []
    total = 0
    for key in compositions(n):
        r = codim_graded_component(L, key, mode, rows, **kw)
        w = multinomial(n, key)
        parts.append({'key': key, 'multinomial': w, 'value': r.value})
        total += w * r.value
    return CodimReport(algebra=L.name, n=n, mode=r.mode, value=total, status=r.status,
                       rows=r.rows, columns=r.columns, row_shape=rows, primes=r.primes,
                       seeds=r.seeds, window=r.window, components=parts)


def exponent_trend(A, n_max, mode='exact', kind='plain', **kw):
    '''
    Finite trend table (n, c_n, c_n^(1/n), c_(n+1)/c_n, d^(n+1)).
    No limit is claimed.
    '''
    funcs = {'plain': codim_plain, 'lie': codim_lie, 'graded': codim_graded_total}
    if kind not in funcs:
        raise ValueError('Unknown trend kind %r; expected one of %s' % (kind, sorted(funcs)))
    values = [funcs[kind](A, n, mode, **kw).value for n in range(1, n_max + 1)]
    rows = []
    for n, v in enumerate(values, start=1):
        ratio = values[n] / v if n < len(values) and v else None
        rows.append({'n': n, 'c_n': v, 'root': v ** (1.0 / n) if v else 0.0,
                     'ratio': ratio, 'bound': A.dim ** (n + 1),
                     'monotone': n == 1 or v >= values[n - 2]})
    return rows


# ---- pinned values ----

def pinned_goldens(path=GOLDENS_FILE):
    with open(path) as f:
        return json.load(f)


def check_goldens(algebras, kinds=('plain', 'lie', 'graded'), path=GOLDENS_FILE, **kw):
    '''
    Recompute every pinned value in exact mode.

    :param algebras: dict name -> algebra, keyed like the goldens file
    :return: list of mismatches (empty when all agree)
    '''
    funcs = {'plain': codim_plain, 'lie': codim_lie, 'graded': codim_graded_total}
    mismatches = []
    for name, table in pinned_goldens(path).items():
        if name not in algebras:
            continue
        for kind in kinds:
            for n, expected in sorted(table.get(kind, {}).items()):
                got = funcs[kind](algebras[name], int(n), 'exact', **kw).value
                if got != expected:
                    mismatches.append({'algebra': name, 'kind': kind, 'n': int(n),
                                       'expected': expected, 'got': got})
    return mismatches
