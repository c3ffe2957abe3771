# Numerical settings, overridable through the environment
import os


def _float(name, default):
    return float(os.environ.get(name, default))


def _int(name, default):
    return int(os.environ.get(name, default))


# Series summation
SERIES_TOL = _float("BIT_SERIES_TOL", 1e-14)
SERIES_MAX_TERMS = _int("BIT_SERIES_MAX_TERMS", 20000)
HYP2F1_RADIUS = _float("BIT_HYP2F1_RADIUS", 0.75)

# Quadrature
QUAD_ABS_TOL = _float("BIT_QUAD_ABS_TOL", 1e-11)
QUAD_MAX_EVALS = _int("BIT_QUAD_MAX_EVALS", 1_000_000)

# ODE oracle
ODE_RTOL = _float("BIT_ODE_RTOL", 1e-11)
ODE_ATOL = _float("BIT_ODE_ATOL", 1e-13)

# Finite differences
FD_STEP = _float("BIT_FD_STEP", 1e-3)

# Spectral integration
NU_MAX = _float("BIT_NU_MAX", 40.0)
NU_MIN = _float("BIT_NU_MIN", 1e-3)
SIGMA_EXCLUSION = _float("BIT_SIGMA_EXCLUSION", 1e-6)

# Runs
DEFAULT_SEED = _int("BIT_SEED", 0)
LOG_LEVEL = os.environ.get("BIT_LOG_LEVEL", "WARNING")
