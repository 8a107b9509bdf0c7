"""Computational toolkit for excluding norm-Euclidean Galois fields of odd
prime degree under GRH: order-ell characters, least non-residues, the
exclusion criteria, GRH bound constants and a record-scanning survey."""

from .audit import ProofAuditReport, audit_q2_proof, audit_r_proof
from .bounds import (
    AnalyticConstants,
    BoundReport,
    analytic_constants,
    bach_q1_bound,
    derive_C_table,
    digamma,
    lambda_excluded_sum,
    psi_Q,
    q2_bound,
    r_bound,
    zero_sum_bound_chi,
    zero_sum_bound_K,
    zeta_log_deriv_at_2,
)
from .characters import CharValue, FieldParams, OrderEllCharacter, build_character, eval_char, is_residue
from .exclusion import (
    ExclusionVerdict,
    check_p9_special,
    check_t8_condition_1,
    check_t8_condition_2,
    check_t8_condition_3,
    check_t8_condition_4,
    check_t8_condition_5,
    evaluate_exclusion,
    theorem5_check,
    theorem26_check,
    ugly_condition_check,
)
from .modmath import is_prime_u64, mul_mod, pow_mod, primitive_root
from .nonresidue import NonResidueData, find_q1, find_q2, find_r, nonresidue_data
from .sieve import primes_in_segment
from .survey import RecordEntry, SurveyConfig, scan_records, spot_check, verify_q1_ceiling

__version__ = "0.1.0"
