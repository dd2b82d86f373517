"""Exact representation counts by quadratic forms, with the charge and
obstruction machinery they feed.

Everything arithmetic is carried out over unbounded integers and
Fractions; floats only appear in the numeric theta-inversion check.
"""

from .qseries import QSeries, TruncationError
from .repnum import (
    ConvergenceError,
    CountInconsistencyError,
    NotPositiveDefiniteError,
    QuadForm,
    RepTable,
    ThetaCheck,
    an_form,
    brute_form_count,
    brute_squares,
    brute_squares_table,
    form_table,
    four_squares_divisor,
    nonzero_form_count,
    nonzero_form_table,
    nonzero_squares_binomial,
    nonzero_squares_table,
    parse_form_text,
    squares_table,
    squares_tables,
    theta3_series,
    theta_form_series,
    theta_form_value,
    theta_transform_check,
    three_squares_possible,
    two_squares_divisor,
)
from .gauge import (
    BundleTopology,
    ChargeExtrema,
    ExtremumCandidate,
    GridScanResult,
    HolonomyClass,
    HolonomyError,
    canonicalize_holonomy,
    charge_extrema,
    charge_grid_scan,
    charge_value,
    chern_simons,
    chern_weil_charge,
)
from .obstruct import (
    FlatDiagnostics,
    FlatSolution,
    ObstructionReport,
    flat_constraints,
    obstruction_diagonal,
    obstruction_general,
    witness_enumerate,
)

__version__ = "0.1.0"

__all__ = [
    "QSeries",
    "TruncationError",
    "ConvergenceError",
    "CountInconsistencyError",
    "NotPositiveDefiniteError",
    "QuadForm",
    "RepTable",
    "ThetaCheck",
    "an_form",
    "brute_form_count",
    "brute_squares",
    "brute_squares_table",
    "form_table",
    "four_squares_divisor",
    "nonzero_form_count",
    "nonzero_form_table",
    "nonzero_squares_binomial",
    "nonzero_squares_table",
    "parse_form_text",
    "squares_table",
    "squares_tables",
    "theta3_series",
    "theta_form_series",
    "theta_form_value",
    "theta_transform_check",
    "three_squares_possible",
    "two_squares_divisor",
    "BundleTopology",
    "ChargeExtrema",
    "ExtremumCandidate",
    "GridScanResult",
    "HolonomyClass",
    "HolonomyError",
    "canonicalize_holonomy",
    "charge_extrema",
    "charge_grid_scan",
    "charge_value",
    "chern_simons",
    "chern_weil_charge",
    "FlatDiagnostics",
    "FlatSolution",
    "ObstructionReport",
    "flat_constraints",
    "obstruction_diagonal",
    "obstruction_general",
    "witness_enumerate",
    "__version__",
]
