"""
Application constants.
"""
# Lanczos approximation, g = 7 with nine coefficients
LANCZOS_G = 7.0
LANCZOS_COEFFICIENTS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

# Argument limits for the Gamma machinery
GAMMA_MAX_ABS_ARG = 200.0
GAMMA_LOG_SPACE_THRESHOLD = 20.0
POLE_TOL = 1e-14

# Bilateral summation
BILATERAL_MIN_TERMS = 64
BILATERAL_TAIL_SAFETY = 12.0
EULER_MAX_ORDER = 14
RICHARDSON_BASE_TERMS = 64
RICHARDSON_LEVELS = 8
CESARO_SPREAD_WINDOW = 10

# Gauss hypergeometric series
HYP2F1_MAX_TERMS = 2000
TAYLOR_STEP_FRACTION = 0.5
TAYLOR_ANCHOR_RADIUS = 0.6
TAYLOR_MAX_TERMS = 600

# Quadrature
GAUSS_LEGENDRE_ORDER = 15
GAUSS_KRONROD_NODES = 21
QUAD_VEC_PANELS = 8

# Defaults for the spectral integral
DEFAULT_PANEL_WIDTH = 0.25
DEFAULT_SAMPLE_X_SCALE = 2.0

# Direct bilateral path is used for Phi when its truncation fits this budget
PHI_DIRECT_TERM_BUDGET = 5000

# Reference parameters used across suites and examples
DEFAULT_ALPHA = 0.3
DEFAULT_BETA = 0.7
DEFAULT_SIGMA = 0.4j
DEFAULT_T = 0.1 + 0j
DEFAULT_S = 0.37 + 0.2j
DISCRETE_ALPHA = 1.8
DISCRETE_BETA = 0.5

# Output
SIGNIFICANT_DIGITS = 17


# Jost solutions: the 2F1 series is summed at x >= max(JOST_START_MIN, JOST_START_FACTOR * nu)
JOST_START_MIN = 4.0
JOST_START_FACTOR = 1.0
JOST_CHUNK = 64

# Spatial panels of the sampled transform: width <= min(SAMPLE_X_PANEL_MAX, SAMPLE_X_PANEL_FACTOR / nu_max)
SAMPLE_X_PANEL_MAX = 0.1
SAMPLE_X_PANEL_FACTOR = 4.0

# A 2x2 basis matrix is used literally while cond * eps stays below this bound
BASIS_CONDITION_TOL = 1e-8

# Labels with 2 conj(sigma) this close to 0 or +-1 are poles of the difference operator
DIFFERENCE_POLE_TOL = 1e-12

# Gauss-Jacobi order for Romanovski inner products after x = tan(theta)/2
ROMANOVSKI_JACOBI_ORDER = 64
