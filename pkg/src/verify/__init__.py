"""
Identity suites.

This module provides seeded verification suites, each a named set of checks
with a residual and a tolerance:
- gamma, series: Gamma identities, Dougall's sum, three-term dependence
- eigen, gram, scattering, romanovski: eigenfunction residuals and spectral data
- roundtrip, plancherel, difference, section4: the transform and its closed forms

All suites inherit from BaseSuite and are created through SuiteFactory.

Example usage:
    from src.verify import SuiteFactory

    report = SuiteFactory.create_suite('gram', seed=0).run()
    failed = [check.name for check in report.checks if not check.passed]

    suites = SuiteFactory.create_multiple_suites(['all'], seed=0)
"""

from .base_suite import BaseSuite
from .eigen_suites import EigenSuite, GramSuite, RomanovskiSuite, ScatteringSuite
from .factory import SuiteFactory
from .special_suites import GammaSuite, SeriesSuite
from .transform_suites import DifferenceSuite, PlancherelSuite, PowerTransformSuite, RoundtripSuite

__all__ = [
    'BaseSuite',
    'GammaSuite',
    'SeriesSuite',
    'EigenSuite',
    'GramSuite',
    'ScatteringSuite',
    'RomanovskiSuite',
    'RoundtripSuite',
    'PlancherelSuite',
    'DifferenceSuite',
    'PowerTransformSuite',
    'SuiteFactory',
]
