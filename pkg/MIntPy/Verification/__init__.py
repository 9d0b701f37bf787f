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
from .verification_process import SUITES
from .verification_process import get_suite
from .verification_process import VerificationRunner
from .verification_process import verification_process

__all__ = [
    'SuiteABC',
    'MatrixNormSuite',
    'ContractionRoutesSuite',
    'ExpInverseSuite',
    'DeterminantFormulaSuite',
    'SplittingSuite',
    'GramIdentitySuite',
    'NormBoundSuite',
    'TaylorCertificateSuite',
    'OdeAgreementSuite',
    'TelescopingSuite',
    'StieltjesBoundSuite',
    'ConjugationSuite',
    'CauchyCriterionSuite',
    'BoundaryUnitaritySuite',
    'DeterminantSuite',
    'DetachReconstructSuite',
    'RankInvarianceSuite',
    'SubharmonicitySuite',
    'TraceNormalizationSuite',
    'ModifiedProductSuite',
    'CayleyRoundTripSuite',
    'UniformDensitySuite',
    'NonuniquenessSuite',
    'ClassificationSuite',
    'SUITES',
    'get_suite',
    'VerificationRunner',
    'verification_process'
]
