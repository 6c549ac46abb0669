# rough_strong/core/constants.py

# ---------------------------------------------------------
# Model defaults (mirror the acceptance suite)
# ---------------------------------------------------------
DEFAULT_HURST = 0.25
DEFAULT_LAMBDA = 1.0
DEFAULT_THETA = 1.0
DEFAULT_MU = 0.0
DEFAULT_RHO = 0.0
DEFAULT_S0 = 1.0
DEFAULT_T_FINAL = 1.0
DEFAULT_SEED = 42

# ---------------------------------------------------------
# Experiment defaults
# ---------------------------------------------------------
DEFAULT_N = 64
DEFAULT_N_LIST = (16, 32, 64, 128, 256, 512)
DEFAULT_FINE_FACTOR = 64
DEFAULT_REPLICATIONS = 10_000
DEFAULT_TAU_STEPS = 21

# Joint (Cholesky) sampling is O(n^3) to precompute; refuse beyond this fine grid.
JOINT_MAX_STEPS = 4096

# Davis-Harte batches are capped at this many complex spectrum entries.
MAX_BATCH_ENTRIES = 2**22
MAX_BATCH_SIZE = 256

# ---------------------------------------------------------
# Numerical tolerances
# ---------------------------------------------------------
GL_ORDER = 16
KERNEL_RTOL = 1e-13
ORACLE_RTOL = 1e-12
CROSS_COV_RTOL = 1e-12
QUAD_ATOL = 1e-300
MAX_HALVINGS = 14
MAX_PANELS = 200_000

CHOLESKY_RECONSTRUCTION_TOL = 1e-10
CHOLESKY_JITTER = 1e-12
EIGEN_CLAMP_TOL = 1e-10

# Switch from pairwise to compensated summation in the schemes.
FSUM_THRESHOLD = 2**12

FOURIER_CHECK_TOL = 1e-7

# ---------------------------------------------------------
# CLI exit codes
# ---------------------------------------------------------
EXIT_OK = 0
EXIT_GENERIC = 1
EXIT_VALIDATION = 2
EXIT_QUADRATURE = 3
EXIT_SAMPLER = 4
EXIT_TRACTABILITY = 5

# ---------------------------------------------------------
# Serialization
# ---------------------------------------------------------
FLOAT_FORMAT = ".17g"
