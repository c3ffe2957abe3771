"""
Factory class for creating verification suites.
"""
from typing import Dict, List

from src.models import Params

from .base_suite import BaseSuite
from .eigen_suites import EigenSuite, GramSuite, RomanovskiSuite, ScatteringSuite
from .special_suites import GammaSuite, SeriesSuite
from .transform_suites import DifferenceSuite, PlancherelSuite, PowerTransformSuite, RoundtripSuite


class SuiteFactory:
    """
    Factory class for creating identity suites by name.
    """

    _suites = {
        'gamma': GammaSuite,
        'series': SeriesSuite,
        'eigen': EigenSuite,
        'gram': GramSuite,
        'scattering': ScatteringSuite,
        'romanovski': RomanovskiSuite,
        'roundtrip': RoundtripSuite,
        'plancherel': PlancherelSuite,
        'difference': DifferenceSuite,
        'section4': PowerTransformSuite,
    }

    @classmethod
    def create_suite(cls, name: str, seed: int = None, params: Params = None, nu_max: float = None) -> BaseSuite:
        """
        Create the suite with the given name.

        Args:
            name: Suite name as listed by get_supported_types
            seed: Seed of the random draws
            params: Operator parameters for suites working at one (alpha, beta)
            nu_max: Spectral cutoff for the transform suites

        Returns:
            Suite instance

        Raises:
            ValueError: If name is not supported
        """
        if name not in cls._suites:
            supported_types = ', '.join(cls.get_supported_types())
            raise ValueError(f"Unsupported suite type: {name}. Supported types: {supported_types}")

        return cls._suites[name](seed=seed, params=params, nu_max=nu_max)

    @classmethod
    def get_supported_types(cls) -> List[str]:
        """
        Get list of supported suite names, 'all' included.

        Returns:
            List of suite names
        """
        return list(cls._suites.keys()) + ['all']

    @classmethod
    def create_multiple_suites(cls, names: List[str], seed: int = None, params: Params = None,
                               nu_max: float = None) -> Dict[str, BaseSuite]:
        """
        Create several suites; 'all' expands to every suite.

        Raises:
            ValueError: If any name is not supported
        """
        if 'all' in names:
            names = list(cls._suites.keys())
        return {name: cls.create_suite(name, seed, params, nu_max) for name in names}
