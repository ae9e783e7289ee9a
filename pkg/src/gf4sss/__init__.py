"""Secret sharing schemes from linear and additive codes over GF(4)."""

from .additive_sss import (
    AdditiveScheme,
    CheaterStatus,
    analytic_access_from_enumerator,
    count_minimal_additive,
    deal_additive,
    detect_cheaters,
    pair_access_structure,
    recover_additive,
    usable_recovery,
)
from .codes import (
    Code,
    Codeword,
    WeightDistribution,
    c_cover,
    dual_code,
    is_self_dual,
    minimal_codewords,
    minimum_distance,
    parse_code,
    weight_distribution,
)
from .designs import (
    BlockMultiset,
    am_additive_report,
    am_linear_report,
    extremal_strengths,
    verify_generalized_design,
    verify_t_design,
)
from .errors import BudgetExceeded, DomainError
from .field import F4
from .linear_sss import (
    LinearScheme,
    access_structure_linear,
    deal_linear,
    find_recovery_linear,
    recover_linear,
    minimal_group_counts,
)
from .report import AccessReport, render

__all__ = [
    "AccessReport", "AdditiveScheme", "BlockMultiset", "BudgetExceeded", "CheaterStatus", "Code",
    "Codeword", "DomainError", "F4", "LinearScheme", "WeightDistribution", "access_structure_linear",
    "am_additive_report", "am_linear_report", "analytic_access_from_enumerator", "c_cover",
    "count_minimal_additive", "deal_additive", "deal_linear", "detect_cheaters", "dual_code",
    "extremal_strengths", "find_recovery_linear", "is_self_dual", "minimal_codewords",
    "minimum_distance", "pair_access_structure", "parse_code", "recover_additive", "recover_linear",
    "render", "minimal_group_counts", "usable_recovery", "verify_generalized_design", "verify_t_design",
    "weight_distribution",
]
