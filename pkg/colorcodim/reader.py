#!/usr/bin/env python
'''
Functions to read run inputs: the run configuration, algebra-spec files,
cocycle / bicharacter tables and saved witnesses.

An algebra-spec file is JSON:

    {"name": "sl2", "dim": 3,
     "degrees": [[0, 0], [0, 0], [0, 0]],
     "struct": [[1, 0, 0, "2"], [0, 1, 0, "-2"], ...]}

A cocycle file holds {"table": 4x4 array of +1/-1} (or the bare array).
'''

import json
import os
from fractions import Fraction

from algebra_core import GradedAlgebra, named_algebra
from alt_constructions import WitnessPolynomial
from color_group import (NAMES, cocycle_from_table, bicharacter_from_table,
                         named_cocycle)

DEFAULTS_FILE = os.path.join(os.path.dirname(os.path.realpath(__file__)), 'example.json')


class SpecFileError(ValueError):
    '''Raised when an input file cannot be read or fails validation.'''


def _load_json(filename):
    try:
        with open(filename, 'r') as f:
            return json.loads(f.read())
    except OSError as err:
        raise SpecFileError('Cannot read %s: %s' % (filename, err))
    except json.JSONDecodeError as err:
        raise SpecFileError('%s is not valid JSON: %s (line %d)' % (filename, err.msg, err.lineno))


def read_config(filename=None, defaults=DEFAULTS_FILE):
    '''
    Run configuration: the defaults file, updated by filename if given.

    :return: (config dict c, list of keys that were filled from the defaults)
    '''
    c = _load_json(defaults)
    filled = []
    if filename is not None:
        user = _load_json(filename)
        if not isinstance(user, dict):
            raise SpecFileError('%s must hold a JSON object' % filename)
        filled = [k for k in c if k not in user and not k.endswith('_options')]
        c.update(user)
    return c, filled


def _fraction(x, where):
    try:
        return Fraction(x)
    except (ValueError, TypeError, ZeroDivisionError):
        raise SpecFileError('%s: expected a rational "num/den" or integer, got %r' % (where, x))


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def _degree(g, where):
    if isinstance(g, str) and g in NAMES:
        return g
    if _is_int(g) and 0 <= g <= 3:
        return g
    if (isinstance(g, list) and len(g) == 2
            and all(_is_int(b) and b in (0, 1) for b in g)):
        return g
    raise SpecFileError('%s: degree should be [i, j] bits, 0..3 or a name in %s, got %r'
                        % (where, NAMES, g))


def algebra_from_spec(spec, where='algebra spec'):
    '''
    Build a GradedAlgebra from a parsed spec dict, re-checking every invariant.
    '''
    if not isinstance(spec, dict):
        raise SpecFileError('%s: expected a JSON object' % where)
    for key in ('name', 'dim', 'degrees', 'struct'):
        if key not in spec:
            raise SpecFileError('%s: missing field %r' % (where, key))
    if not _is_int(spec['dim']):
        raise SpecFileError('%s: dim should be an integer, got %r' % (where, spec['dim']))
    for key in ('degrees', 'struct'):
        if not isinstance(spec[key], list):
            raise SpecFileError('%s: %s should be a list, got %r' % (where, key, spec[key]))
    degrees = [_degree(g, '%s degree %d' % (where, n)) for n, g in enumerate(spec['degrees'])]
    struct = []
    for n, entry in enumerate(spec['struct']):
        if not isinstance(entry, list) or len(entry) != 4:
            raise SpecFileError('%s: struct entry %d should be [i, j, k, "num/den"], got %r' % (where, n, entry))
        i, j, k, c = entry
        if not all(_is_int(x) for x in (i, j, k)):
            raise SpecFileError('%s: struct entry %d has non-integer indices %r' % (where, n, entry[:3]))
        struct.append((i, j, k, _fraction(c, '%s struct entry %d' % (where, n))))
    try:
        return GradedAlgebra(spec['name'], spec['dim'], degrees, struct)
    except (ValueError, TypeError) as err:
        raise SpecFileError('%s: %s' % (where, err))


def read_algebra(filename):
    return algebra_from_spec(_load_json(filename), where=filename)


def _table(filename):
    data = _load_json(filename)
    if isinstance(data, dict):
        if 'table' not in data:
            raise SpecFileError('%s: missing field "table"' % filename)
        data = data['table']
    if (not isinstance(data, list) or len(data) != 4
            or any(not isinstance(r, list) or len(r) != 4 for r in data)):
        raise SpecFileError('%s: expected a 4x4 array of +1/-1' % filename)
    if any(v not in (1, -1) for r in data for v in r):
        raise SpecFileError('%s: table entries must be +1 or -1' % filename)
    return data


def read_cocycle(filename):
    return cocycle_from_table(_table(filename), label=os.path.basename(filename))


def read_bicharacter(filename):
    return bicharacter_from_table(_table(filename), label=os.path.basename(filename))


def read_witness(filename):
    '''a witness record, bare or inside a search-witness JSON report'''
    data = _load_json(filename)
    if isinstance(data, dict) and isinstance(data.get('result'), dict):
        data = data['result']
    try:
        return WitnessPolynomial.from_dict(data)
    except (KeyError, ValueError, TypeError) as err:
        raise SpecFileError('%s: not a witness record (%s)' % (filename, err))


def resolve_cocycle(name):
    '''a configured cocycle name, or a path to a cocycle file'''
    if os.path.isfile(name):
        return read_cocycle(name)
    try:
        return named_cocycle(name)
    except ValueError as err:
        raise SpecFileError(str(err))


def resolve_algebra(name, cocycle=None):
    '''a factory name or a path to an algebra-spec file'''
    if os.path.isfile(name):
        return read_algebra(name)
    try:
        return named_algebra(name, cocycle)
    except ValueError as err:
        raise SpecFileError(str(err))
