from multiprocessing.pool import ThreadPool

import matplotlib.pyplot as plt
import numpy as np
from tqdm import tqdm

from MIntPy.IO.file_utils import max_threads
from MIntPy.logging_mixin import LoggingMixin
from .suite_abc import SuiteABC
from .matcore_suites import MatrixNormSuite
from .matcore_suites import ContractionRoutesSuite
from .matcore_suites import ExpInverseSuite
from .prodint_suites import DeterminantFormulaSuite
from .prodint_suites import SplittingSuite
from .prodint_suites import GramIdentitySuite
from .prodint_suites import NormBoundSuite
from .prodint_suites import TaylorCertificateSuite
from .prodint_suites import OdeAgreementSuite
from .prodint_suites import TelescopingSuite
from .prodint_suites import StieltjesBoundSuite
from .prodint_suites import ConjugationSuite
from .prodint_suites import CauchyCriterionSuite
from .blaschke_suites import BoundaryUnitaritySuite
from .blaschke_suites import DeterminantSuite
from .blaschke_suites import DetachReconstructSuite
from .blaschke_suites import RankInvarianceSuite
from .blaschke_suites import SubharmonicitySuite
from .potapov_suites import TraceNormalizationSuite
from .potapov_suites import ModifiedProductSuite
from .potapov_suites import CayleyRoundTripSuite
from .potapov_suites import UniformDensitySuite
from .factorization_suites import NonuniquenessSuite
from .factorization_suites import ClassificationSuite

SUITES = {suite.name: suite for suite in (
    MatrixNormSuite, ContractionRoutesSuite, ExpInverseSuite,
    DeterminantFormulaSuite, SplittingSuite, GramIdentitySuite, NormBoundSuite, TaylorCertificateSuite,
    OdeAgreementSuite, TelescopingSuite, StieltjesBoundSuite, ConjugationSuite, CauchyCriterionSuite,
    BoundaryUnitaritySuite, DeterminantSuite, DetachReconstructSuite, RankInvarianceSuite, SubharmonicitySuite,
    TraceNormalizationSuite, ModifiedProductSuite, CayleyRoundTripSuite, UniformDensitySuite,
    NonuniquenessSuite, ClassificationSuite
)}


def get_suite(suite, **kwds):
    """Returns a suite instance, given either its name (kwds are passed to its constructor) or an instance."""
    if isinstance(suite, SuiteABC):
        return suite
    if suite not in SUITES:
        raise Exception(f'There is no suite corresponding to the name "{suite}". '
                        f'Available suites: {", ".join(sorted(SUITES))}.')
    return SUITES[suite](**kwds)


def verification_process(suite, n_instances=50, seed=0, max_concurrent_threads=None, **kwds):
    """Runs a verification suite on n_instances random instances and reports how many of them pass.

    Instance i is built from its own numpy Generator seeded with seed + i, so the report does not depend on the
    number of threads. An instance whose construction or evaluation raises an exception counts as failed, with an
    infinite residual.

    Args:
        suite: A suite name (see SUITES) or an instance of SuiteABC.
        n_instances: An optional integer representing the number of random instances. Suites whose instances are not
            random are run once. Default: 50.
        seed: An optional integer representing the seed of the first instance. Default: 0.
        max_concurrent_threads: An optional integer representing the max concurrent threads to use.
            Default: the MINTPY_MAX_THREADS environment variable, or 4.
        tol: An optional float that replaces the suite tolerance (only used when suite is a name).
        verbose: A boolean indicating whether a progress bar should be shown. Default: False.
        plot: A boolean indicating whether the sorted residuals should be plotted against the tolerance.
            Default: False.
        block: A boolean indicating whether the displayed graph blocks code execution or not. Default: True.

    Returns:
        A dict with the keys 'suite', 'proposition', 'reference', 'tol', 'n_instances', 'n_passed', 'max_residual'
        and 'passed'.
    """
    assert n_instances > 0, f'The number of instances ({n_instances}) should be > 0.'
    suite = get_suite(suite, **({'tol': kwds['tol']} if 'tol' in kwds else {}))
    if not suite.randomized: n_instances = 1
    max_concurrent_threads = max_concurrent_threads or max_threads()
    assert max_concurrent_threads > 0, f'The number of threads ({max_concurrent_threads}) should be > 0.'

    runner = VerificationRunner(suite, **kwds)
    with ThreadPool(processes=min(max_concurrent_threads, n_instances)) as pool:
        _iter = pool.imap(lambda i: runner.run_instance(seed + i), range(n_instances))
        if kwds.get('verbose', False):
            _iter = tqdm(_iter, total=n_instances, desc=f'Verifying {suite.name}', position=0, leave=True)
        residuals = np.array(list(_iter), dtype=float)

    n_passed = int(np.sum(residuals <= suite.tol))
    runner._info(f'{suite.name}: {n_passed}/{n_instances} instances passed, max residual {np.max(residuals):.3e}.')
    if kwds.get('plot', False):
        _plot_residuals(suite, residuals, kwds.get('block', True))

    return {
        'suite': suite.name,
        'proposition': suite.proposition,
        'reference': suite.reference,
        'tol': suite.tol,
        'n_instances': n_instances,
        'n_passed': n_passed,
        'max_residual': float(np.max(residuals)),
        'passed': n_passed == n_instances
    }


class VerificationRunner(LoggingMixin):
    """Evaluates single instances of a suite, logging the instances that raise.

    Args:
        suite: A SuiteABC instance.
        verbose: Optional boolean indicating if info logs should be produced. Default: False.
        log_file: Optional boolean indicating if a log file should be created. Default: False.
    """
    def __init__(self, suite, **kwds):
        self.suite = suite
        self._setup_logging(**kwds)

    def run_instance(self, seed):
        """Residual of the instance built from default_rng(seed); inf when it raises or is not a number."""
        try:
            residual = float(self.suite(np.random.default_rng(seed)))
        except Exception as e:
            self._warn(f'{self.suite.name} instance with seed {seed} raised {e.__class__.__name__}: {e}')
            return np.inf
        if np.isnan(residual):
            return np.inf
        assert residual >= 0, f'The residual of {self.suite.name} ({residual}) should be >= 0.'
        return residual


def _plot_residuals(suite, residuals, block):
    fig, axes = plt.subplots(1)
    fig.suptitle(f'Residuals of {suite.name}')
    axes.set_ylabel('Residual', fontsize=12)
    axes.set_xlabel('Instance (sorted)', fontsize=12)
    axes.semilogy(np.sort(np.maximum(residuals, np.finfo(float).tiny)), '--o', label='residual')
    axes.axhline(max(suite.tol, np.finfo(float).tiny), color='r', label='tol')
    plt.legend()
    plt.show(block=block)
