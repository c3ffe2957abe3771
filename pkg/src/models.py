"""
Data carriers shared across the library.

All spectral data are immutable pydantic models; complex numbers are stored as
Python ``complex`` and rejected when they carry NaN or infinity.
"""
import cmath
import math
from contextlib import contextmanager
from enum import Enum
from typing import ClassVar, Dict, Iterator, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src import settings
from src.utils.constants import DEFAULT_ALPHA, DEFAULT_BETA, DEFAULT_S, DEFAULT_SIGMA, DEFAULT_T
from src.utils.helpers import nearest_integer_distance, parse_complex


def _finite(value: complex) -> complex:
    if not cmath.isfinite(value):
        raise ValueError(f"non-finite complex value {value!r}")
    return value


class SeriesStatus(str, Enum):
    converged = "converged"
    truncated = "truncated"
    regularized = "regularized"


class Sign(str, Enum):
    plus = "plus"
    minus = "minus"


class SummationMethod(str, Enum):
    euler = "euler"
    cesaro = "cesaro"


class PhiMethod(str, Enum):
    auto = "auto"
    direct = "direct"
    connection = "connection"


class Params(BaseModel):
    """Real parameters (alpha, beta) of the operator D."""

    model_config = ConfigDict(frozen=True)

    alpha: float = Field(ge=0.0, allow_inf_nan=False)
    beta: float = Field(allow_inf_nan=False)

    @property
    def mu(self) -> complex:
        return complex(self.alpha, self.beta)

    @property
    def is_degenerate(self) -> bool:
        return self.alpha == 0.0 and self.beta == 0.0

    @property
    def continuous_only(self) -> bool:
        return self.alpha <= 0.5

    def mirrored(self) -> "Params":
        """Parameters (-alpha, -beta); D is unchanged by this substitution."""
        return Params.model_construct(alpha=-self.alpha, beta=-self.beta)


class SpectralPoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    sigma: complex
    t: complex = 0j

    @field_validator("sigma", "t")
    @classmethod
    def check_finite(cls, value: complex) -> complex:
        return _finite(value)

    @property
    def on_continuous_spectrum(self) -> bool:
        return self.sigma.real == 0.0 and self.sigma.imag > 0.0


class SeriesValue(BaseModel):
    """Value of a summed series with its error bookkeeping."""

    model_config = ConfigDict(frozen=True)

    value: complex
    abs_error_estimate: float = Field(ge=0.0)
    terms_used: int = Field(ge=0)
    status: SeriesStatus


class Mat2(BaseModel):
    """A 2x2 complex matrix."""

    model_config = ConfigDict(frozen=True)

    m11: complex
    m12: complex
    m21: complex
    m22: complex

    def to_array(self) -> np.ndarray:
        return np.array([[self.m11, self.m12], [self.m21, self.m22]], dtype=complex)

    @classmethod
    def from_array(cls, array) -> "Mat2":
        a = np.asarray(array, dtype=complex)
        return cls(m11=a[0, 0], m12=a[0, 1], m21=a[1, 0], m22=a[1, 1])

    def det(self) -> complex:
        return self.m11 * self.m22 - self.m12 * self.m21

    def inverse(self) -> "Mat2":
        d = self.det()
        return Mat2(m11=self.m22 / d, m12=-self.m12 / d, m21=-self.m21 / d, m22=self.m11 / d)

    def transpose(self) -> "Mat2":
        return Mat2(m11=self.m11, m12=self.m21, m21=self.m12, m22=self.m22)

    def hermitian_defect(self) -> float:
        a = self.to_array()
        return float(np.max(np.abs(a - a.conj().T)))


class BilateralParams(BaseModel):
    """Parameters of a regularized bilateral series on the unit circle."""

    model_config = ConfigDict(frozen=True)

    UNIT_CIRCLE_TOL: ClassVar[float] = 1e-12

    upper: List[complex]
    lower: List[complex]
    z: complex = 1 + 0j

    @model_validator(mode="after")
    def check_shape(self) -> "BilateralParams":
        if len(self.upper) != len(self.lower):
            raise ValueError("upper and lower parameter lists must have equal length")
        if len(self.upper) not in (2, 3):
            raise ValueError("only p = 2 and p = 3 bilateral series are supported")
        for v in list(self.upper) + list(self.lower) + [self.z]:
            _finite(v)
        if abs(abs(self.z) - 1.0) > self.UNIT_CIRCLE_TOL:
            raise ValueError(f"|z| must equal 1, got |z| = {abs(self.z)!r}")
        return self

    @property
    def p(self) -> int:
        return len(self.upper)

    @property
    def kappa(self) -> float:
        return float((sum(self.upper) - sum(self.lower)).real)

    @property
    def exponent(self) -> complex:
        """Sum of upper minus sum of lower parameters."""
        return complex(sum(self.upper) - sum(self.lower))

    @property
    def at_one(self) -> bool:
        return abs(self.z - 1.0) <= self.UNIT_CIRCLE_TOL

    def shifted(self, t: complex) -> "BilateralParams":
        return BilateralParams(
            upper=[a + t for a in self.upper], lower=[b + t for b in self.lower], z=self.z
        )


class GammaRatioSpec(BaseModel):
    numerators: List[complex] = Field(default_factory=list)
    denominators: List[complex] = Field(default_factory=list)


class PolynomialPiece(BaseModel):
    """Polynomial sum_k c_k x^k on the half-open interval [a, b)."""

    model_config = ConfigDict(frozen=True)

    a: float
    b: float
    coefficients: List[complex]

    @model_validator(mode="after")
    def check_interval(self) -> "PolynomialPiece":
        if not (math.isfinite(self.a) and math.isfinite(self.b)) or self.a >= self.b:
            raise ValueError(f"invalid piece interval [{self.a}, {self.b}]")
        if not self.coefficients:
            raise ValueError("a piece needs at least one coefficient")
        return self


class TestFunction(BaseModel):
    """Compactly supported piecewise polynomial on the real line."""

    __test__ = False
    model_config = ConfigDict(frozen=True)

    name: str = "custom"
    pieces: List[PolynomialPiece]

    @property
    def support(self) -> Tuple[float, float]:
        if not self.pieces:
            return (0.0, 0.0)
        return (min(p.a for p in self.pieces), max(p.b for p in self.pieces))

    @property
    def breakpoints(self) -> List[float]:
        points = sorted({p.a for p in self.pieces} | {p.b for p in self.pieces})
        return points

    @property
    def is_zero(self) -> bool:
        return all(all(c == 0 for c in p.coefficients) for p in self.pieces)


class TransformSample(BaseModel):
    """
    Forward transform values on a spectral quadrature grid.

    values_t, values_s hold J f(i nu, t(nu)) and J f(i nu, s(nu)); psi_values and
    theta_values the pairings with (Psi_1, Psi_2) and (theta_1, theta_2);
    discrete_values the pairings <f, Theta^k> for alpha > 1/2; slope_jumps the
    breakpoints of f where f' jumps, with the jumps.
    """

    nu_grid: List[float]
    weights: List[float]
    t_values: List[complex]
    s_values: List[complex]
    values_t: List[complex]
    values_s: List[complex]
    psi_values: Optional[List[Tuple[complex, complex]]] = None
    theta_values: Optional[List[Tuple[complex, complex]]] = None
    discrete_values: List[complex] = Field(default_factory=list)
    slope_jumps: List[Tuple[float, complex]] = Field(default_factory=list)
    nu_min: float = 0.0
    nu_max: float
    panel_width: float

    @model_validator(mode="after")
    def check_columns(self) -> "TransformSample":
        n = len(self.nu_grid)
        lengths = {len(self.weights), len(self.t_values), len(self.s_values),
                   len(self.values_t), len(self.values_s)}
        for column in (self.psi_values, self.theta_values):
            if column is not None:
                lengths.add(len(column))
        if lengths != {n}:
            raise ValueError("all sample columns must share the grid length")
        if any(nu <= 0 for nu in self.nu_grid):
            raise ValueError("spectral grid must lie on nu > 0")
        for t, s in zip(self.t_values, self.s_values):
            d = s - t
            if abs(d.imag) < 1e-12 and abs(d.real - round(d.real)) < 1e-12:
                raise ValueError("s - t must avoid the integers on every grid point")
        return self


class CheckResult(BaseModel):
    name: str
    passed: bool
    residual: float
    tolerance: float
    detail: str = ""


class SuiteReport(BaseModel):
    suite: str
    seed: int
    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


class Command(str, Enum):
    eval = "eval"
    verify = "verify"
    transform = "transform"
    invert = "invert"
    plancherel = "plancherel"
    table = "table"


class OutputFormat(str, Enum):
    json = "json"
    csv = "csv"


class Quantity(str, Enum):
    phi = "phi"
    psi1 = "psi1"
    psi2 = "psi2"
    theta = "theta"
    delta = "delta"
    xi = "xi"
    r = "r"
    romanovski = "romanovski"
    h2star = "h2star"
    dougall = "dougall"


class GridSpec(BaseModel):
    """num equally spaced points from start to stop, both included."""

    model_config = ConfigDict(frozen=True)

    start: float
    stop: float
    num: int = Field(ge=0)

    @model_validator(mode="after")
    def check_bounds(self) -> "GridSpec":
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise ValueError("grid bounds must be finite")
        if self.start > self.stop:
            raise ValueError(f"grid start {self.start} exceeds stop {self.stop}")
        return self

    @property
    def points(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.num)


_LABELLED_COMMANDS = {Command.transform, Command.invert, Command.plancherel}


class RunConfig(BaseModel):
    """
    A fully validated CLI run.

    Complex fields accept 'RE,IM' strings; tolerances maps setting names
    (case-insensitive) to overrides applied before the run.
    """

    command: Command
    params: Params = Field(default_factory=lambda: Params(alpha=DEFAULT_ALPHA, beta=DEFAULT_BETA))
    quantity: Optional[Quantity] = None
    suite: str = "all"
    sigma: complex = DEFAULT_SIGMA
    t: complex = DEFAULT_T
    s: complex = DEFAULT_S
    k: int = Field(default=0, ge=0)
    x_grid: Optional[GridSpec] = None
    nu_grid: Optional[GridSpec] = None
    function: str = "smooth_bump"
    other_function: str = "shifted_cubic"
    upper: List[complex] = Field(default_factory=list)
    lower: List[complex] = Field(default_factory=list)
    z: complex = 1 + 0j
    nu_max: Optional[float] = Field(default=None, gt=0.0, allow_inf_nan=False)
    seed: int = Field(default_factory=lambda: settings.DEFAULT_SEED)
    tolerances: Dict[str, float] = Field(default_factory=dict)
    out: Optional[str] = None
    format: OutputFormat = OutputFormat.json
    log_level: str = Field(default_factory=lambda: settings.LOG_LEVEL)
    workers: int = Field(default=1, ge=1)

    @field_validator("sigma", "t", "s", "z", mode="before")
    @classmethod
    def parse_scalar(cls, value):
        return _finite(parse_complex(value))

    @field_validator("upper", "lower", mode="before")
    @classmethod
    def parse_list(cls, value):
        if isinstance(value, str):
            value = [part for part in value.split(";") if part.strip()]
        if not isinstance(value, (list, tuple)):
            raise ValueError(f"expected a list of complex values, got {value!r}")
        return [_finite(parse_complex(v)) for v in value]

    @field_validator("log_level")
    @classmethod
    def check_log_level(cls, value: str) -> str:
        value = value.upper()
        if value not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level {value}")
        return value

    @field_validator("tolerances")
    @classmethod
    def check_tolerances(cls, value: Dict[str, float]) -> Dict[str, float]:
        for key, override in value.items():
            current = getattr(settings, key.upper(), None)
            if not isinstance(current, (int, float)) or isinstance(current, bool):
                raise ValueError(f"unknown tolerance setting {key}")
            if not math.isfinite(override) or override <= 0:
                raise ValueError(f"tolerance {key} must be positive, got {override}")
        return value

    @model_validator(mode="after")
    def check_command(self) -> "RunConfig":
        if self.command in (Command.eval, Command.table) and self.quantity is None:
            raise ValueError(f"{self.command.value} needs a quantity")
        if self.command == Command.table:
            if self.quantity == Quantity.phi and self.x_grid is None:
                raise ValueError("a table of phi needs an x grid")
            if self.quantity == Quantity.r and self.nu_grid is None:
                raise ValueError("a table of r needs a nu grid")
            if self.quantity not in (Quantity.phi, Quantity.r):
                raise ValueError("tables are emitted for phi over x or r over nu")
        if self.command in _LABELLED_COMMANDS or self.quantity == Quantity.r:
            if nearest_integer_distance(self.s - self.t) < 1e-12:
                raise ValueError(f"precondition s − t ∉ ℤ violated: s − t = {self.s - self.t}")
        if self.quantity in (Quantity.h2star, Quantity.dougall):
            expected = 2 if self.quantity == Quantity.dougall else None
            if len(self.upper) != len(self.lower) or (expected and len(self.upper) != expected):
                raise ValueError(f"{self.quantity.value} needs matching upper and lower parameter lists")
        return self

    @contextmanager
    def tolerance_overrides(self) -> Iterator[None]:
        """
        Write the tolerance overrides into the settings module for the
        duration of the block; the previous values are restored on exit.
        """
        previous = {}
        try:
            for key, override in self.tolerances.items():
                name = key.upper()
                current = getattr(settings, name)
                previous.setdefault(name, current)
                setattr(settings, name, type(current)(override))
            yield
        finally:
            for name, value in previous.items():
                setattr(settings, name, value)
