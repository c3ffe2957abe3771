"""
Factory class for creating eigenfunction objects.
"""
from typing import Dict, List, Optional

from src.models import Params, PhiMethod

from .base import Eigenfunction
from .phi import Phi
from .psi import Psi1, Psi2
from .romanovski import Romanovski
from .theta import Theta1, Theta2


class EigenfunctionFactory:
    """
    Factory class for creating eigenfunctions of D by family name.
    """

    _families = {
        'phi': Phi,
        'psi1': Psi1,
        'psi2': Psi2,
        'theta1': Theta1,
        'theta2': Theta2,
        'romanovski': Romanovski,
    }

    @classmethod
    def create_eigenfunction(cls, kind: str, params: Params, sigma: complex = None, t: complex = 0j,
                             k: Optional[int] = None, method: PhiMethod = PhiMethod.auto) -> Eigenfunction:
        """
        Create an eigenfunction of the given family.

        Args:
            kind: One of 'phi', 'psi1', 'psi2', 'theta1', 'theta2', 'romanovski'
            params: Operator parameters
            sigma: Spectral parameter; ignored for 'romanovski'
            t: Second label of Phi
            k: Index of the Romanovski function
            method: Evaluation path of Phi

        Returns:
            Eigenfunction instance

        Raises:
            ValueError: If kind is not supported or a required argument is missing
        """
        if kind not in cls._families:
            supported_types = ', '.join(cls._families.keys())
            raise ValueError(f"Unsupported eigenfunction type: {kind}. Supported types: {supported_types}")

        if kind == 'romanovski':
            if k is None:
                raise ValueError("the romanovski family needs an index k")
            return Romanovski(params, k)
        if sigma is None:
            raise ValueError(f"the {kind} family needs a spectral parameter sigma")
        if kind == 'phi':
            return Phi(params, sigma, t, method)
        return cls._families[kind](params, sigma)

    @classmethod
    def get_supported_types(cls) -> List[str]:
        """
        Get list of supported eigenfunction families.

        Returns:
            List of family names
        """
        return list(cls._families.keys())

    @classmethod
    def create_multiple_eigenfunctions(cls, kinds: List[str], params: Params, sigma: complex,
                                       t: complex = 0j) -> Dict[str, Eigenfunction]:
        """
        Create several continuous-spectrum eigenfunctions at one spectral point.

        Raises:
            ValueError: If any kind is not supported
        """
        return {kind: cls.create_eigenfunction(kind, params, sigma, t) for kind in kinds}
