#!/usr/bin/env python
'''
writer.py
=========

Functions for writing reports: JSON documents, TSV tables (pandas) and an
HDF5 archive (h5py). Floats keep FLOAT_DIGITS significant digits, exact
integers are written verbatim and rationals as "num/den" strings.
'''

import json
import os
import sys
from dataclasses import is_dataclass
from fractions import Fraction

import h5py
import numpy as np
import pandas as pd

from constants import FLOAT_DIGITS
from color_group import GroupElement, SignTable


def jsonable(obj):
    '''
    Recursively convert a report to JSON-ready values.
    '''
    if isinstance(obj, GroupElement):
        return obj.name
    if isinstance(obj, SignTable):
        return obj.to_rows()
    if is_dataclass(obj) and hasattr(obj, 'to_dict'):
        return jsonable(obj.to_dict())
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        if obj.denominator == 1:
            return obj.numerator
        return '%d/%d' % (obj.numerator, obj.denominator)
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float('%.*g' % (FLOAT_DIGITS, obj))
    return obj


def dumps(report):
    return json.dumps(jsonable(report), sort_keys=True, indent=4)


def _target(out):
    if out is None:
        return sys.stdout, False
    folder = os.path.dirname(out)
    if folder and not os.path.exists(folder):
        os.makedirs(folder)
    return open(out, 'w'), True


def write_json(report, out=None):
    '''
    Write a report as JSON to the file out, or to stdout.
    '''
    f, close = _target(out)
    f.write(dumps(report) + '\n')
    if close:
        f.close()


def table_frame(rows):
    '''
    DataFrame of a list of row dicts; nested values are flattened to JSON strings.

    Parameters
    ----------
    rows: list of dict
        one dict per table row, all with the same keys
    '''
    flat = []
    for r in rows:
        r = jsonable(r)
        flat.append({k: json.dumps(v, sort_keys=True) if isinstance(v, (list, dict)) else v
                     for k, v in r.items()})
    return pd.DataFrame(flat)


def write_tsv(rows, out=None, header=None):
    '''
    Write a table as TSV. header is a list of '# key: value' comment lines
    (config, seeds, version) written before the table.
    '''
    f, close = _target(out)
    for line in header or []:
        f.write('# %s\n' % line)
    df = table_frame(rows)
    f.write(df.to_csv(sep='\t', index=False, float_format='%.{}g'.format(FLOAT_DIGITS)))
    if close:
        f.close()


def write_hdf5(tables, out, config=None, meta=None):
    '''
    Write tables into an HDF5 file: one group per table, one dataset per
    column. The run configuration is stored as a JSON attribute and each
    meta item (version, seed, seeds, primes) as its own attribute.

    Parameters
    ----------
    tables: dict
        table name -> list of row dicts
    out: str
        file name
    config: dict
        run configuration, stored on the root group
    meta: dict
        run provenance, stored on the root group
    '''
    if out is None:
        raise ValueError('HDF5 output needs an output file (--out)')
    folder = os.path.dirname(out)
    if folder and not os.path.exists(folder):
        os.makedirs(folder)
    with h5py.File(out, 'w') as f5:
        if config is not None:
            f5.attrs['config'] = json.dumps(jsonable(config), sort_keys=True)
        for key, value in (meta or {}).items():
            value = jsonable(value)
            if value is None:
                continue
            if isinstance(value, list):
                value = np.asarray(value, dtype=np.int64)
            f5.attrs[key] = value
        for name, rows in tables.items():
            grp = f5.create_group(name)
            df = table_frame(rows)
            for col in df.columns:
                data = df[col].to_numpy()
                if data.dtype == object:
                    data = np.array([str(x) for x in data], dtype=h5py.string_dtype())
                grp.create_dataset(col, data=data)


def algebra_to_spec(A):
    '''the algebra-spec document of A'''
    return {'name': A.name,
            'dim': A.dim,
            'degrees': [[g.i, g.j] for g in A.degrees],
            'struct': [[i, j, k, '%d/%d' % (c.numerator, c.denominator)] for i, j, k, c in A.struct]}


def write_algebra(A, out=None):
    f, close = _target(out)
    f.write(json.dumps(algebra_to_spec(A), indent=4) + '\n')
    if close:
        f.close()
