"""Defaults for the aggregation pipeline that are tracked in Git."""

# Component-wise tolerance for G-type value equality and score ties.
EQUALITY_TOLERANCE = 1e-9
# Marginal weights must telescope to mu(X) within this bound.
SUM_TOLERANCE = 1e-12
# |mu(X) - 1| accepted when a rho-rule measure is generated.
NORMALIZATION_TOLERANCE = 1e-9

# Search window for the rho normalization root, and bisection precision.
RHO_LOWER_BOUND = -1.0 + 1e-9
RHO_UPPER_BOUND = 1e6
RHO_XTOL = 1e-12

# Option defaults; string values so they can be overridden from env/CLI.
DEFAULT_VALIDATION_MODE = "lenient"
DEFAULT_COMBINE_POLICY = "typewise"
DEFAULT_DISTANCE_METRIC = "l1"
DEFAULT_OUTPUT_FORMAT = "table"
# "example" reproduces the worked intuitionistic numbers; "printed" is the
# power-style formula shown next to them.
DEFAULT_INTU_SCALING = "example"
# The rho rule subtracts the interaction term unless configured otherwise.
DEFAULT_RHO_SIGN = "minus"
DEFAULT_HFE_CROSS_PRODUCT = False
DEFAULT_WORKERS = 1

# Human-readable reports round here; computations never do.
REPORT_DECIMALS = 4

# Environment variables read by RuntimeSettings.load().
ENV_NO_WARN = "HOHF_NO_WARN"
ENV_WORKERS = "HOHF_WORKERS"
ENV_LOG_LEVEL = "HOHF_LOG_LEVEL"
ENV_RHO_SIGN = "HOHF_RHO_SIGN"
ENV_INTU_SCALING = "HOHF_INTU_SCALING"
ENV_HFE_CROSS_PRODUCT = "HOHF_HFE_CROSS_PRODUCT"
DEFAULT_LOG_LEVEL = "WARNING"
