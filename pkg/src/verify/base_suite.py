"""
Base verification suite with shared functionality for all identity suites.
"""
import logging
import math
from abc import ABC, abstractmethod
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from src import settings
from src.exceptions import TransformError
from src.models import CheckResult, Params, SuiteReport
from src.utils.constants import DEFAULT_ALPHA, DEFAULT_BETA

logger = logging.getLogger(__name__)

Check = Callable[[], Tuple[float, float, str]]


class BaseSuite(ABC):
    """
    Abstract base class for identity suites.

    A suite is a named collection of checks. Each check returns
    (residual, tolerance, detail) and passes when residual <= tolerance.
    """

    def __init__(self, seed: int = None, params: Optional[Params] = None, nu_max: float = None):
        """
        Initialize the suite.

        Args:
            seed: Seed of the random draws; settings.DEFAULT_SEED by default
            params: Operator parameters for suites that work at one (alpha, beta)
            nu_max: Spectral cutoff for the transform suites
        """
        self.seed = settings.DEFAULT_SEED if seed is None else int(seed)
        self.params = params or Params(alpha=DEFAULT_ALPHA, beta=DEFAULT_BETA)
        self.nu_max = settings.NU_MAX if nu_max is None else float(nu_max)
        self.rng = np.random.default_rng(self.seed)

    @abstractmethod
    def get_suite_name(self) -> str:
        """
        Get the suite identifier.

        Returns:
            Suite name as accepted by the verify command
        """

    @abstractmethod
    def _build_checks(self) -> Dict[str, Check]:
        """
        Build the named checks of the suite.

        Returns:
            Mapping from check name to a callable returning (residual, tolerance, detail)
        """

    def _draw_params(self, alpha_max: float = 0.5, beta_max: float = 1.0) -> Params:
        alpha = float(self.rng.uniform(0.05, alpha_max))
        beta = float(self.rng.uniform(-beta_max, beta_max))
        return Params(alpha=alpha, beta=beta)

    def _draw_complex(self, re: Tuple[float, float], im: Tuple[float, float]) -> complex:
        return complex(self.rng.uniform(*re), self.rng.uniform(*im))

    @staticmethod
    def _result(name: str, residual: float, tolerance: float, detail: str = "") -> CheckResult:
        passed = bool(math.isfinite(residual) and residual <= tolerance)
        return CheckResult(name=name, passed=passed, residual=float(residual), tolerance=tolerance, detail=detail)

    def run(self) -> SuiteReport:
        """
        Run every check of the suite in name order.

        A TransformError inside a check fails that check and names the error
        in its detail.

        Returns:
            SuiteReport with one CheckResult per check
        """
        logger.info("Running suite %s with seed %d", self.get_suite_name(), self.seed)
        checks = self._build_checks()
        results: List[CheckResult] = []
        for name in sorted(checks):
            try:
                residual, tolerance, detail = checks[name]()
                result = self._result(name, residual, tolerance, detail)
            except TransformError as error:
                logger.warning("check %s raised %s: %s", name, error.name, error.message)
                result = CheckResult(name=name, passed=False, residual=float("nan"), tolerance=0.0,
                                     detail=f"{error.name}: {error.message}")
            if not result.passed:
                logger.warning("check %s failed: residual %.3g > %.3g", name, result.residual, result.tolerance)
            results.append(result)
        return SuiteReport(suite=self.get_suite_name(), seed=self.seed, checks=results)
