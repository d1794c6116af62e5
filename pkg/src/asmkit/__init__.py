"""Exact enumeration and partition-function tools for symmetric alternating sign matrices."""

from .asm import (
    AsmMatrix,
    CapExceededError,
    Statistics,
    SymmetryClass,
    ValidationReport,
    count,
    enumerate_matrices,
    genfunc_dsasm,
    genfunc_osasm,
    osasm_slice,
    statistics,
    validate,
)
from .characters import double_staircase, sp_check_zsymp, sp_direct, sp_eval
from .field import IOTA, SQRT3, ZETA, Cyclo12, PoleError, sigma, sigma_hat
from .identities import IDENTITY_IDS, CheckReport, run_all, run_check
from .laurent import LaurentPoly, lp_eval, lp_format, parse_monomials
from .linalg import SkewMatrix, det, pfaffian, pfaffian_bruteforce
from .pfaffian_formulas import partition_pfaffian, psi_values, zx_rhs
from .products import count_asm, count_osasm_even, count_osasm_odd, sp_special_value, xo_special
from .sixvertex import (
    GridGraph,
    LocalConfig,
    SixVertexConfig,
    WeightParams,
    config_to_dsasm,
    dsasm_to_config,
    osasm_partition,
    partition_direct,
    partition_specialized,
    specialized_params,
)

__version__ = "0.1.0"
