"""Command line front end: ``mintpy <command> --spec FILE --out DIR [--tol X] [--seed N] [--verbose]``.

Every run writes ``report.json`` to the output directory (plus the command's CSV and JSON artifacts) and exits with
0 on success, 1 on a malformed spec or command line, 2 when a numerical routine fails or a reported check is not
met, and 3 on I/O errors.
"""
import argparse
import sys

import numpy as np
import pandas as pd

from MIntPy.Blaschke import BPFactorizer
from MIntPy.Blaschke import BPProduct
from MIntPy.Blaschke import IllConditionedFrameException
from MIntPy.Blaschke import NoZeroException
from MIntPy.Blaschke import UnconsumedZerosException
from MIntPy.Blaschke import ZeroSearchBudgetException
from MIntPy.Blaschke import factor_out_zeros
from MIntPy.Blaschke import find_det_zeros
from MIntPy.Factorization import BoundaryPreconditionException
from MIntPy.Factorization import LogIntegrabilityException
from MIntPy.Factorization import classify_by_det
from MIntPy.Factorization import nonuniqueness_demo
from MIntPy.Factorization.nonuniqueness import FUNCTION_GAP_TOL
from MIntPy.Factorization.nonuniqueness import INTEGRATOR_GAP_MIN
from MIntPy.IO import MalformedSpecException
from MIntPy.IO import decode_complex
from MIntPy.IO import dump_document
from MIntPy.IO import emit_grid
from MIntPy.IO import encode_complex
from MIntPy.IO import encode_matrix
from MIntPy.IO import from_dict
from MIntPy.IO import function_from_dict
from MIntPy.IO import grid_columns
from MIntPy.IO import load_document
from MIntPy.IO import output_path
from MIntPy.IO import parse_grid
from MIntPy.IO import to_dict
from MIntPy.IO import write_csv
from MIntPy.MatCore import MatrixExpOverflowException
from MIntPy.MatCore import NonFiniteMatrixException
from MIntPy.MatCore import SVDConvergenceException
from MIntPy.MatCore import spectral_norm
from MIntPy.MatCore import stack_norms
from MIntPy.Potapov import InvalidRepresentationException
from MIntPy.Potapov import NegativeImaginaryPartException
from MIntPy.Potapov import PartitionBudgetException
from MIntPy.Potapov import SingularCayleyException
from MIntPy.Potapov import approximant_schedule
from MIntPy.Potapov import bp_to_repr
from MIntPy.Potapov import modified_product_error
from MIntPy.ProdInt import ConstantKernel
from MIntPy.ProdInt import DensityIntegrator
from MIntPy.ProdInt import IntegratorABC
from MIntPy.ProdInt import InvalidIntegratorException
from MIntPy.ProdInt import InvalidKernelException
from MIntPy.ProdInt import KernelABC
from MIntPy.ProdInt import NonConvergenceException
from MIntPy.ProdInt import ProductIntegrator
from MIntPy.ProdInt import StepOverflowException
from MIntPy.ProdInt import ode_integral
from MIntPy.Verification import SUITES
from MIntPy.Verification import verification_process
from MIntPy.logging_mixin import LoggingMixin

COMMANDS = ('prodint', 'ode', 'bp-factor', 'bp-detach', 'potapov-repr', 'cayley-approx', 'construct', 'classify',
            'demo-nonuniqueness', 'verify')
REQUIRED_INPUTS = {
    'prodint': ('integrator',),
    'ode': ('integrator',),
    'bp-factor': ('product',),
    'bp-detach': ('function',),
    'potapov-repr': ('product',),
    'cayley-approx': ('function',),
    'construct': ('spec',),
    'classify': ('function',),
    'demo-nonuniqueness': (),
    'verify': ('suite',)
}
CONSTRUCT_KINDS = {'pp': 'pp_inner', 'sc': 'sc_inner', 'outer': 'outer'}
ODE_METHODS = ('rk4', 'dop853')
DEFAULT_TOL = 1e-8

INPUT_EXCEPTIONS = (MalformedSpecException, AssertionError, InvalidIntegratorException, InvalidKernelException,
                    InvalidRepresentationException)
NUMERICAL_EXCEPTIONS = (NonConvergenceException, StepOverflowException, MatrixExpOverflowException,
                        NonFiniteMatrixException, SVDConvergenceException, NoZeroException,
                        IllConditionedFrameException, UnconsumedZerosException, ZeroSearchBudgetException,
                        SingularCayleyException, NegativeImaginaryPartException, PartitionBudgetException,
                        LogIntegrabilityException, BoundaryPreconditionException, np.linalg.LinAlgError)

EXIT_OK, EXIT_MALFORMED, EXIT_NUMERICAL, EXIT_IO = 0, 1, 2, 3


class JobSpec:
    """A validated CLI job.

    Attributes:
        command: One of COMMANDS.
        inputs: The command-specific JSON subtree (a dict).
        out_dir: Output directory of the artifacts.
        tol: Positive tolerance handed to the numerical routines. Default: 1e-8.
        seed: Integer seed of the randomized suites. Default: 0.
    """
    def __init__(self, command, inputs, out_dir, tol=DEFAULT_TOL, seed=0):
        if command not in COMMANDS:
            raise MalformedSpecException(f'There is no command corresponding to the name "{command}". '
                                         f'Available commands: {", ".join(COMMANDS)}.')
        if not isinstance(inputs, dict):
            raise MalformedSpecException(f'The "inputs" of a job should be a JSON object, found {inputs!r}.')
        missing = [key for key in REQUIRED_INPUTS[command] if key not in inputs]
        if len(missing) > 0:
            raise MalformedSpecException(f'The "{command}" job is missing the inputs {missing}.')
        try:
            tol, seed = float(tol), int(seed)
        except (TypeError, ValueError):
            raise MalformedSpecException(f'Expected a real tol and an integer seed, found {tol!r} and {seed!r}.')
        if not np.isfinite(tol) or tol <= 0:
            raise MalformedSpecException(f'The tolerance ({tol}) should be a positive real.')
        if command == 'verify' and inputs['suite'] not in SUITES:
            raise MalformedSpecException(f'There is no suite corresponding to the name "{inputs["suite"]}". '
                                         f'Available suites: {", ".join(sorted(SUITES))}.')
        if command == 'ode' and inputs.get('method', 'rk4') not in ODE_METHODS:
            raise MalformedSpecException(f'There is no ODE method corresponding to the name "{inputs["method"]}".')

        self.command = command
        self.inputs = inputs
        self.out_dir = out_dir
        self.tol = tol
        self.seed = seed

    @staticmethod
    def from_document(command, doc, out_dir, tol=None, seed=None):
        """Builds a job from a spec document; tol and seed given on the command line override the document's."""
        if 'command' in doc and doc['command'] != command:
            raise MalformedSpecException(f'The spec was written for the "{doc["command"]}" command, not for '
                                         f'"{command}".')
        return JobSpec(command, doc.get('inputs', {}), out_dir,
                       tol=doc.get('tol', DEFAULT_TOL) if tol is None else tol,
                       seed=doc.get('seed', 0) if seed is None else seed)

    def __repr__(self):
        return f'JobSpec(command={self.command!r}, tol={self.tol:g}, seed={self.seed})'


class JobRunner(LoggingMixin):
    """Runs CLI jobs: decodes the inputs, calls the library, writes the artifacts and the report.

    Every report holds the list of checks performed; each check names the property it measures, the identifier of
    the result it exercises, its residual and the bound the residual is held to. A job passes when all its checks pass.

    Args:
        max_concurrent_threads: Optional cap on the threads of grid emission and verification. Default: the
            MINTPY_MAX_THREADS environment variable, or 4.
        verbose: Optional boolean indicating if info logs and progress bars should be produced. Default: False.
        log_file: Optional boolean indicating if a log file should be created. Default: False.
    """
    def __init__(self, **kwds):
        self.max_concurrent_threads = kwds.get('max_concurrent_threads', None)
        self._setup_logging(**kwds)
        self._handlers = {
            'prodint': self._prodint,
            'ode': self._ode,
            'bp-factor': self._bp_factor,
            'bp-detach': self._bp_detach,
            'potapov-repr': self._potapov_repr,
            'cayley-approx': self._cayley_approx,
            'construct': self._construct,
            'classify': self._classify,
            'demo-nonuniqueness': self._demo_nonuniqueness,
            'verify': self._verify
        }

    def run(self, job):
        """Runs a job and writes report.json.

        Returns:
            The report dict, with the keys 'command', 'tol', 'seed', 'references', 'results', 'checks' and 'passed'.
            'references' lists the identifiers of the results exercised by the checks, in order of appearance.
        """
        self._info(f'Running {job}.')
        results, checks = self._handlers[job.command](job)
        references = list(dict.fromkeys(check['reference'] for check in checks))
        report = {'command': job.command, 'tol': job.tol, 'seed': job.seed, 'references': references,
                  'results': results, 'checks': checks, 'passed': all(check['passed'] for check in checks)}
        for check in checks:
            if not check['passed']:
                self._warn(f'Check "{check["check"]}" failed: residual {check["residual"]:.3e} above '
                           f'{check["bound"]:.3e}.')
        dump_document(report, output_path(job.out_dir, 'report.json'))
        self._info(f'{job.command} finished: {"passed" if report["passed"] else "failed"}.')
        return report

    """ Commands """

    def _prodint(self, job):
        E, f = self._integrator(job.inputs['integrator']), self._kernel(job.inputs.get('kernel'))
        a, b = _optional_real(job.inputs, 'a'), _optional_real(job.inputs, 'b')
        result = ProductIntegrator(tol=job.tol, test_mode=True, verbose=self.verbose).integrate(f, E, a, b)

        row = {**_entries(result.value), 'norm': spectral_norm(result.value),
               'error_certificate': result.error_certificate, 'n_cells': result.n_cells,
               'partitions_used': result.partitions_used}
        write_csv(pd.DataFrame([row]), output_path(job.out_dir, 'prodint.csv'))
        results = {'value': encode_matrix(result.value), 'error_certificate': result.error_certificate,
                   'n_cells': result.n_cells, 'partitions_used': result.partitions_used}
        checks = [
            _check('error_certificate', 'Lemma cauchycrit', 'Refinement levels agree within the tolerance.',
                   result.error_certificate, job.tol),
            _check('determinant_formula', 'Prop mintdet', 'det int exp(f dE) = exp(int f d tr E).',
                   result.det_residual, 10 * job.tol),
            _check('norm_bound', 'Prop mintest', '||int exp(f dE)|| <= exp(int |f| d|E|).', result.norm_excess,
                   10 * job.tol)
        ]
        return results, checks

    def _ode(self, job):
        E = self._integrator(job.inputs['integrator'])
        if not isinstance(E, DensityIntegrator):
            raise MalformedSpecException('The "ode" command needs a "density" integrator.')
        steps, method = int(job.inputs.get('steps', 256)), job.inputs.get('method', 'rk4')
        value = ode_integral(E.density, E.a, E.b, steps=steps, breakpoints=E.breakpoints(), vectorized=True,
                             method=method)
        product = ProductIntegrator(tol=job.tol, verbose=self.verbose).integrate(ConstantKernel(1.0), E).value
        gap = spectral_norm(value - product)

        write_csv(pd.DataFrame([{**_entries(value), 'norm': spectral_norm(value), 'product_gap': gap}]),
                  output_path(job.out_dir, 'ode.csv'))
        results = {'value': encode_matrix(value), 'method': method, 'steps': steps, 'product_gap': gap}
        checks = [_check('ode_agreement', 'Prop mintode',
                         'The solution of F\' = F A(t), F(a) = I, is the multiplicative integral.', gap,
                         max(1e-6, 100 * job.tol))]
        return results, checks

    def _bp_factor(self, job):
        B = self._typed(job.inputs['product'], BPProduct, 'bp_product')
        radii, angles = parse_grid(job.inputs.get('grid'))
        df = emit_grid(B.to_mvf(), radii, angles, output_path(job.out_dir, 'bp_factor.csv'),
                       self.max_concurrent_threads)
        dump_document(to_dict(B), output_path(job.out_dir, 'bp_product.json'))

        circle = B.evaluate_many(np.exp(1j * angles))
        defect = float(np.max(stack_norms(circle @ np.conj(np.swapaxes(circle, -1, -2)) - np.eye(B.dim))))
        zs = df['r'].to_numpy() * np.exp(1j * df['phi'].to_numpy())
        det_gap = max((abs(np.linalg.det(B(z)) - B.det(z)) / max(abs(B.det(z)), 1.0) for z in zs), default=0.0)

        results = {'n_factors': len(B), 'zeros': [encode_complex(z) for z in B.zeros],
                   'blaschke_sum': B.blaschke_sum(), 'n_rows': len(df)}
        checks = [
            _check('bp_boundary_unitarity', 'Lemma finitebp',
                   'A finite B.P. product takes unitary values on the unit circle.', defect, 1e-10),
            _check('bp_determinant', 'Lemma finitebp',
                   'det B(z) is the scalar Blaschke product of the zeros times det V.', det_gap, 1e-10)
        ]
        return results, checks

    def _bp_detach(self, job):
        A = self._function(job.inputs['function'], job.tol)
        if 'zeros' in job.inputs:
            zeros = [decode_complex(z) for z in job.inputs['zeros']]
        else:
            zeros = find_det_zeros(A, search_radius=float(job.inputs.get('search_radius', 0.95)))
            self._info(f'Found {len(zeros)} zeros of det A.')
        B, remainder = factor_out_zeros(A, zeros, verbose=self.verbose)
        radii, angles = parse_grid(job.inputs.get('grid'))
        emit_grid(remainder, radii, angles, output_path(job.out_dir, 'remainder.csv'), self.max_concurrent_threads)
        dump_document(to_dict(B), output_path(job.out_dir, 'bp_product.json'))

        zs = (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()
        gap = float(np.max(stack_norms(A.evaluate_many(zs) - B.evaluate_many(zs) @ remainder.evaluate_many(zs))))
        defects = [BPFactorizer().defect(remainder(z0)) for z0 in zeros]
        results = {'zeros': [encode_complex(z) for z in zeros], 'n_factors': len(B),
                   'ranks': [int(r) for r in B.ranks], 'reconstruction_gap': gap}
        checks = [
            _check('detach_reconstruct', 'Thm bpfactor', 'A = B R with B the detached B.P. product.', gap,
                   max(1e-7, 10 * job.tol)),
            _check('remainder_zero_free', 'Lemma detachlemma', 'det R does not vanish at the detached zeros.',
                   max(defects, default=0), 0)
        ]
        return results, checks

    def _potapov_repr(self, job):
        B = self._typed(job.inputs['product'], BPProduct, 'bp_product')
        R = bp_to_repr(B)
        dump_document(to_dict(R), output_path(job.out_dir, 'potapov_repr.json'))
        measured, bound = modified_product_error(B, R, r=float(job.inputs.get('r', 0.5)))
        if 'grid' in job.inputs:
            radii, angles = parse_grid(job.inputs['grid'])
            emit_grid(R.to_mvf(), radii, angles, output_path(job.out_dir, 'potapov_repr.csv'),
                      self.max_concurrent_threads)

        results = {'L': R.L, 'n_pieces': len(R), 'modified_product_error': measured,
                   'modified_product_bound': bound}
        checks = [
            _check('trace_normalization', 'Thm potapov', 'tr E(t) = t at every breakpoint.', R.trace_residual(), 1e-12),
            _check('modified_product_error', 'Lemma Atildelemma',
                   'The modified product approximates B within its a priori bound.', max(0.0, measured - bound), 0)
        ]
        return results, checks

    def _cayley_approx(self, job):
        A = self._function(job.inputs['function'], job.tol)
        ks = [int(k) for k in job.inputs.get('ks', (1, 2, 4, 8))]
        if len(ks) == 0 or any(k < 1 for k in ks):
            raise MalformedSpecException(f'Expected a nonempty list of positive ks, found {ks}.')
        approximants, table = approximant_schedule(A, ks, eval_radius=float(job.inputs.get('eval_radius', 0.5)),
                                                   verbose=self.verbose)
        write_csv(table, output_path(job.out_dir, 'cayley_approx.csv'))
        dump_document(to_dict(approximants[-1].cayley), output_path(job.out_dir, 'cayley_data.json'))

        excess = max(max(0.0, approximant.certificate - 1 / approximant.k) for approximant in approximants)
        results = {'ks': ks, 'errors': table['error'].tolist(), 'certificates': table['certificate'].tolist()}
        checks = [_check('cayley_certificate', 'Thm rationalapprox', '||T - T_k|| <= 1/k on the certificate disk.',
                         excess, 0)]
        return results, checks

    def _construct(self, job):
        spec = job.inputs['spec']
        kind = spec.get('type') if isinstance(spec, dict) else None
        if kind not in CONSTRUCT_KINDS.values():
            raise MalformedSpecException(f'The "construct" command builds {list(CONSTRUCT_KINDS.values())} specs, '
                                         f'found "{kind}".')
        if 'kind' in job.inputs and CONSTRUCT_KINDS.get(job.inputs['kind']) != kind:
            raise MalformedSpecException(f'The kind "{job.inputs["kind"]}" does not match the spec type "{kind}".')
        handle = function_from_dict(spec, job.tol)
        radii, angles = parse_grid(job.inputs.get('grid'))
        df = emit_grid(handle, radii, angles, output_path(job.out_dir, 'construct.csv'), self.max_concurrent_threads)

        values = _matrices(df, handle.dim)
        det_gap = float(np.max(np.abs(np.abs(np.linalg.det(values)) - df['abs_det'].to_numpy())
                               / np.maximum(df['abs_det'].to_numpy(), 1.0)))
        results = {'kind': kind, 'n_rows': len(df), 'max_norm': float(df['norm'].max()),
                   'min_abs_det': float(df['abs_det'].min())}
        checks = [_check('determinant_formula', 'Prop mintdet', 'det A matches the closed form of the spec.',
                         det_gap, max(1e-6, 100 * job.tol))]
        if kind != 'outer' or from_dict(spec).contractive:
            checks.append(_check('contractive', 'Prop mintgram', '||A(z)|| <= 1 on the disk.',
                                 max(0.0, float(df['norm'].max()) - 1), max(1e-6, 100 * job.tol)))
        if kind == 'outer':
            checks.append(_check('outer_det_zero_free', 'Thm detinnerouter', 'det A does not vanish on the disk.',
                                 float(df['abs_det'].min() <= 0), 0))
        return results, checks

    def _classify(self, job):
        A = self._function(job.inputs['function'], job.tol)
        kwds = {key: job.inputs[key] for key in ('radii', 'n_angles', 'inner_tol', 'outer_tol') if key in job.inputs}
        label, details = classify_by_det(A, return_details=True, **kwds)
        return {'label': label, **details}, []

    def _demo_nonuniqueness(self, job):
        report = nonuniqueness_demo(tol=min(job.tol, 1e-10))
        checks = [
            _check('function_gap', 'Thm fact-unique', 'Both integrators define the same function.',
                   report['function_gap'], FUNCTION_GAP_TOL),
            _check('integrator_gap', 'Thm fact-unique', 'The integrators differ.',
                   max(0.0, INTEGRATOR_GAP_MIN - report['integrator_gap']), 0)
        ]
        return report, checks

    def _verify(self, job):
        n_instances = int(job.inputs.get('n_instances', 50))
        kwds = {'tol': float(job.inputs['tol'])} if 'tol' in job.inputs else {}
        report = verification_process(job.inputs['suite'], n_instances=n_instances, seed=job.seed,
                                      max_concurrent_threads=self.max_concurrent_threads, verbose=self.verbose,
                                      **kwds)
        checks = [_check(report['suite'], report['reference'], report['proposition'], report['max_residual'],
                         report['tol'])]
        return report, checks

    """ Input decoding """

    @staticmethod
    def _typed(d, cls, kind):
        obj = from_dict(d)
        if not isinstance(obj, cls):
            raise MalformedSpecException(f'Expected a "{kind}" document.')
        return obj

    def _integrator(self, d):
        return self._typed(d, IntegratorABC, 'integrator')

    def _kernel(self, d):
        return ConstantKernel(1.0) if d is None else self._typed(d, KernelABC, 'kernel')

    @staticmethod
    def _function(d, tol):
        return function_from_dict(d, tol)


def _optional_real(inputs, key):
    if inputs.get(key) is None:
        return None
    try:
        return float(inputs[key])
    except (TypeError, ValueError):
        raise MalformedSpecException(f'Expected a real number for "{key}", found {inputs[key]!r}.')


def _check(name, reference, proposition, residual, bound):
    residual = float(residual)
    return {'check': name, 'reference': reference, 'proposition': proposition, 'residual': residual,
            'bound': float(bound), 'passed': bool(residual <= bound)}


def _entries(value):
    """The entries of a matrix keyed by the grid CSV column names."""
    names = grid_columns(value.shape[0])[2:-3]
    return dict(zip(names, np.stack([value.real, value.imag], axis=-1).ravel()))


def _matrices(df, dim):
    """Inverse of the entry columns of a grid CSV frame: a (rows, dim, dim) stack."""
    parts = df[grid_columns(dim)[2:-3]].to_numpy().reshape(len(df), dim, dim, 2)
    return parts[..., 0] + 1j * parts[..., 1]


class _ArgumentParser(argparse.ArgumentParser):
    """Parser whose usage errors exit with EXIT_MALFORMED instead of 2."""
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_MALFORMED, f'{self.prog}: error: {message}\n')


def build_parser():
    parser = _ArgumentParser(prog='mintpy', description='Multiplicative integrals and factorization of '
                                                         'contractive matrix functions on the unit disk.')
    parser.add_argument('command', help=f'The job to run: {", ".join(COMMANDS)}.')
    parser.add_argument('--spec', default=None, help='JSON spec file (schema 1). Optional for demo-nonuniqueness.')
    parser.add_argument('--out', required=True, help='Output directory; created if needed.')
    parser.add_argument('--tol', type=float, default=None, help=f'Tolerance (default: the spec\'s, or {DEFAULT_TOL}).')
    parser.add_argument('--seed', type=int, default=None,
                        help='Seed of randomized suites (default: the spec\'s, or 0).')
    parser.add_argument('--verbose', action='store_true', help='Log progress to the console.')
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code
    runner = JobRunner(verbose=args.verbose)
    try:
        doc = load_document(args.spec) if args.spec is not None else {}
        job = JobSpec.from_document(args.command, doc, args.out, tol=args.tol, seed=args.seed)
        report = runner.run(job)
    except OSError as e:
        runner._error(f'I/O error: {e}')
        return EXIT_IO
    except INPUT_EXCEPTIONS as e:
        runner._error(f'Malformed spec: {e}')
        return EXIT_MALFORMED
    except NUMERICAL_EXCEPTIONS as e:
        runner._error(f'Numerical failure ({e.__class__.__name__}): {e}')
        return EXIT_NUMERICAL
    return EXIT_OK if report['passed'] else EXIT_NUMERICAL


if __name__ == '__main__':
    sys.exit(main())
