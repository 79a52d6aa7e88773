#!/usr/bin/env python
"""
main.py
=======
Command-line front end of ColorCodim. Loads an algebra (a factory name or
an algebra-spec file), runs one check or computation and writes a
deterministic report to stdout or --out.

Configuration is layered: example.json defaults, then an optional
--config FILE.json, then command-line flags.

Exit codes: 0 all checks pass, 1 a mathematical check failed,
2 input or usage error.
"""

import argparse
import json
import sys

from constants import VERSION
from color_group import (CocycleError, bicharacter_from_cocycle,
                         canonical_bicharacter, canonical_cocycle,
                         is_color_lie, skew_bicharacters, trivial_bicharacter,
                         validate_bicharacter)
from algebra_core import (check_color_axioms, group_ring_matrix_check,
                          is_graded_simple, killing_block_report,
                          tensor_color_construct)
from free_poly import SizeGuardError
from sym_tools import (Tableau, check_partition, hook_dim, rectangle_bound,
                       rectangle_trend, standard_tableaux)
from codim_engine import (NotLieError, check_key, codim_graded_component,
                          codim_graded_total, codim_lie, codim_plain,
                          exponent_trend)
from alt_constructions import (WitnessSearchError,
                               find_alternating_nonidentity, lemma_suite)
from reader import (SpecFileError, read_bicharacter, read_config,
                    read_witness, resolve_algebra, resolve_cocycle)
from writer import write_hdf5, write_json, write_tsv

__license__ = "MIT"
__version__ = VERSION

COMMANDS = ('axioms', 'iso-check', 'killing', 'simple-check', 'codim', 'graded-codim',
            'trend', 'lemmas', 'search-witness', 'tableaux', 'bicharacters')


def _int_list(text):
    try:
        return [int(t) for t in text.replace(' ', '').split(',') if t]
    except ValueError:
        raise argparse.ArgumentTypeError('expected comma-separated integers, got %r' % text)


def build_parser():
    parser = argparse.ArgumentParser(prog='colorcodim',
                                     description='Color Lie superalgebra identities and codimensions')
    parser.add_argument('command', choices=COMMANDS)
    parser.add_argument('--config', help='JSON run configuration')
    parser.add_argument('--algebra', help='factory name (sl2, sl3, sl2+sl2, abelian<m>, L, L3) or spec file')
    parser.add_argument('--cocycle', help='canonical, literal, trivial or a cocycle file')
    parser.add_argument('--bicharacter', help='canonical, trivial or a bicharacter file')
    parser.add_argument('--n', type=int)
    parser.add_argument('--n-max', dest='n_max', type=int)
    parser.add_argument('--mode', choices=['exact', 'randomized'])
    parser.add_argument('--kind', choices=['plain', 'lie', 'graded'])
    parser.add_argument('--rows', choices=['left-normed', 'all'])
    parser.add_argument('--key', type=_int_list, help='k1,k2,k3,k4 variables of degree e,a,b,ab')
    parser.add_argument('--seed', type=int)
    parser.add_argument('--prime', dest='primes', type=int, action='append')
    parser.add_argument('--which', choices=['all', 'bracket', 'trace', 'det', 'lift'])
    parser.add_argument('--k', type=int)
    parser.add_argument('--trials', type=int)
    parser.add_argument('--samples', type=int)
    parser.add_argument('--evaluations', type=int)
    parser.add_argument('--witness', help='saved witness file for lemmas')
    parser.add_argument('--shape', type=_int_list)
    parser.add_argument('--q', type=int)
    parser.add_argument('--k-max', dest='k_max', type=int)
    parser.add_argument('--format', choices=['tsv', 'json', 'hdf5'])
    parser.add_argument('--out')
    parser.add_argument('--verbose', action='store_true', default=None)
    return parser


def resolve_config(args):
    '''
    defaults <- --config file <- flags
    '''
    c, filled = read_config(args.config)
    for key, value in vars(args).items():
        if key in ('command', 'config') or value is None:
            continue
        c[key] = value
    if args.seed is not None:
        c['seeds'] = [args.seed, args.seed + 1, args.seed + 2]
    c['command'] = args.command
    return c, filled


class Run:
    '''
    One CLI invocation: holds the config dict c and writes the report.
    '''

    def __init__(self, c):
        self.c = c
        self.say = (lambda msg: print(msg, file=sys.stderr)) if c['verbose'] else None

    def log(self, msg):
        if self.say:
            self.say(msg)

    def engine_kw(self):
        return {'seeds': self.c['seeds'], 'primes': self.c['primes'],
                'column_cap': self.c['column_cap'], 'window': self.c['window'],
                'batch_columns': self.c['batch_columns'], 'max_batches': self.c['max_batches'],
                'progress': self.say}

    def cocycle(self):
        return resolve_cocycle(self.c['cocycle'])

    def algebra(self):
        return resolve_algebra(self.c['algebra'], self.cocycle())

    def bicharacter(self, A):
        '''
        Configured bicharacter; otherwise the one of A's cocycle, falling
        back to the canonical table when that cocycle is malformed.
        '''
        name = self.c.get('bicharacter')
        if name == 'canonical':
            return canonical_bicharacter(), None
        if name == 'trivial':
            return trivial_bicharacter(), None
        if name:
            return read_bicharacter(name), None
        if A.cocycle is not None:
            try:
                return bicharacter_from_cocycle(A.cocycle), None
            except CocycleError as err:
                return canonical_bicharacter(), str(err)
        return trivial_bicharacter(), None

    def header(self):
        c = self.c
        return ['command: %s' % c['command'],
                'version: %s' % VERSION,
                'seed: %s' % c['seed'],
                'seeds: %s' % c['seeds'],
                'primes: %s' % c['primes'],
                'config: %s' % json.dumps({k: v for k, v in sorted(c.items()) if not k.endswith('_options')},
                                          sort_keys=True)]

    def emit(self, result, rows):
        '''
        result: full report dict; rows: its table view for TSV / HDF5
        '''
        c = self.c
        report = {'command': c['command'], 'version': VERSION, 'seed': c['seed'],
                  'seeds': c['seeds'], 'primes': c['primes'],
                  'config': {k: v for k, v in c.items() if not k.endswith('_options')},
                  'result': result}
        if c['format'] == 'json':
            write_json(report, c['out'])
        elif c['format'] == 'hdf5':
            write_hdf5({c['command'].replace('-', '_'): rows}, c['out'], config=report['config'],
                       meta={k: report[k] for k in ('version', 'seed', 'seeds', 'primes')})
        else:
            write_tsv(rows, c['out'], header=self.header())

    # ---- commands ----

    def cmd_axioms(self):
        A = self.algebra()
        b, note = self.bicharacter(A)
        self.log('checking color axioms of %s with %s' % (A.name, b.label))
        rep = check_color_axioms(A, b)
        if note:
            rep['note'] = note
        rows = ([dict(kind='anticommutativity', x=v['x'], y=v['y'], z=None, defect=v['defect'])
                 for v in rep['anticommutativity']]
                + [dict(kind='jacobi', x=v['x'], y=v['y'], z=v['z'], defect=v['defect'])
                   for v in rep['jacobi']])
        if not rows:
            rows = [dict(kind='none', x=None, y=None, z=None, defect=None)]
        self.emit(rep, rows)
        return 0 if rep['violations'] == 0 else 1

    def cmd_iso_check(self):
        s = self.cocycle()
        rep = group_ring_matrix_check(s)
        rep['cocycle_violations'] = s.violations()
        self.emit(rep, rep['pairs'])
        return 0 if rep['passed'] else 1

    def cmd_killing(self):
        A = self.algebra()
        rep = killing_block_report(A)
        rows = [dict(degree=b['degree'], size=b['size'], det=b['det'], scalar=b['scalar'])
                for b in rep['blocks']]
        ok = rep['symmetric'] and not rep['off_block_nonzero'] and rep['det'] != 0 \
            and all(b['det'] != 0 for b in rep['blocks'])
        rep['passed'] = ok
        self.emit(rep, rows)
        return 0 if ok else 1

    def cmd_simple_check(self):
        A = self.algebra()
        rep = is_graded_simple(A)
        rows = [dict(algebra=rep['algebra'], simple=rep['simple'], reason=rep['reason'],
                     generator=rep['generator'], witness_dim=len(rep['witness']))]
        self.emit(rep, rows)
        return 0 if rep['simple'] else 1

    def cmd_codim(self):
        A = self.algebra()
        kind = self.c['kind']
        self.log('codim run started: %s n=%d %s %s' % (A.name, self.c['n'], kind, self.c['mode']))
        if kind == 'graded':
            return self.cmd_graded_codim()
        func = codim_lie if kind == 'lie' else codim_plain
        rep = func(A, self.c['n'], self.c['mode'], **self.engine_kw())
        self.emit(rep, [self._codim_row(rep)])
        return 0

    @staticmethod
    def _codim_row(rep):
        return dict(algebra=rep.algebra, n=rep.n, mode=rep.mode, value=rep.value,
                    status=rep.status, rows=rep.rows, columns=rep.columns, row_shape=rep.row_shape)

    def cmd_graded_codim(self):
        L = self.algebra()
        n, mode, rows_shape = self.c['n'], self.c['mode'], self.c['rows']
        if self.c.get('key'):
            rep = codim_graded_component(L, check_key(self.c['key']), mode, rows_shape, **self.engine_kw())
            self.emit(rep, [self._codim_row(rep)])
            return 0
        rep = codim_graded_total(L, n, mode, rows_shape, **self.engine_kw())
        result = rep.to_dict()
        passed = True
        if L.base is not None:
            base = codim_lie(L.base, n, mode, **self.engine_kw()).value
            result['base_value'] = base
            result['expected'] = 4 ** n * base
            passed = rep.value == 4 ** n * base
            result['identity_holds'] = passed
        self.emit(result, rep.components)
        return 0 if passed else 1

    def cmd_trend(self):
        A = self.algebra()
        rows = exponent_trend(A, self.c['n_max'], self.c['mode'], self.c['kind'], **self.engine_kw())
        passed = all(r['c_n'] <= r['bound'] and r['monotone'] for r in rows)
        self.emit({'algebra': A.name, 'rows': rows, 'passed': passed}, rows)
        return 0 if passed else 1

    def _lemma_algebras(self):
        A = self.algebra()
        if A.base is not None:
            return A.base, A
        L = tensor_color_construct(A, canonical_cocycle()) if A.is_trivially_graded else None
        return A, L

    def cmd_lemmas(self):
        B, L = self._lemma_algebras()
        witness = read_witness(self.c['witness']) if self.c.get('witness') else None
        rep = lemma_suite(B, L, which=self.c['which'], k=self.c['k'], seed=self.c['seed'],
                          trials=self.c['trials'], samples=self.c['samples'],
                          evaluations=self.c.get('evaluations'), witness=witness, progress=self.say)
        rows = [dict(check=name, passed=chk['passed']) for name, chk in sorted(rep['checks'].items())]
        self.emit(rep, rows)
        return 0 if rep['passed'] else 1

    def cmd_search_witness(self):
        B, _ = self._lemma_algebras()
        w = find_alternating_nonidentity(B, trials=self.c['trials'], seed=self.c['seed'])
        d = w.to_dict()
        self.emit(d, [dict(algebra=d['algebra'], monomial=d['monomial'], trials=d['trials'])])
        return 0

    def cmd_tableaux(self):
        shape = check_partition(self.c['shape'])
        std = standard_tableaux(shape)
        rect = rectangle_bound(self.c['q'], self.c['k'])
        trend = rectangle_trend(self.c['q'], self.c['k_max'])
        rep = {'shape': list(shape), 'hook_dim': hook_dim(shape), 'standard_count': len(std),
               'canonical': Tableau.canonical(shape).rows, 'rectangle': rect, 'trend': trend}
        passed = rep['hook_dim'] == rep['standard_count'] and all(r['holds'] for r in trend) and rect['holds']
        rep['passed'] = passed
        self.emit(rep, trend)
        return 0 if passed else 1

    def cmd_bicharacters(self):
        rows = []
        for b in skew_bicharacters():
            rows.append({'label': b.label, 'color_lie': is_color_lie(b),
                         'valid': validate_bicharacter(b)['valid'], 'table': b.to_rows()})
        self.emit({'bicharacters': rows}, rows)
        return 0 if all(r['valid'] for r in rows) else 1

    def run(self):
        return getattr(self, 'cmd_' + self.c['command'].replace('-', '_'))()


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return 0 if err.code == 0 else 2
    try:
        c, filled = resolve_config(args)
        if c['verbose']:
            print('-----------------------------------------------------------------', file=sys.stderr)
            print('<<<<<<<< ColorCodim, Version %s >>>>>>>>' % VERSION, file=sys.stderr)
            print('-----------------------------------------------------------------', file=sys.stderr)
            for key in filled:
                print("'%s' not in the config file; using the default %r" % (key, c[key]), file=sys.stderr)
        return Run(c).run()
    except WitnessSearchError as err:
        print('check failed: %s' % err, file=sys.stderr)
        return 1
    except (SpecFileError, SizeGuardError, NotLieError, CocycleError, ValueError) as err:
        print('error: %s' % err, file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(main())
