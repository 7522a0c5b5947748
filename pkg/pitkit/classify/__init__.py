"""分类：内传递识别、特殊对、秩 3 判据与部分线性空间"""

from ..perm.isomorphism import pairs_equivalent
from .incidence import (
    IncidenceStructure,
    PlsReport,
    parse_design,
    pg32_full,
    pg32_structure,
    read_design,
    verify_pls,
    z14_group,
    z14_structure,
)
from .pipeline import classify_group, r_transitive_off_sigma, report_for
from .pit import (
    InnatelyTransitiveMarker,
    PhiHat,
    PitDecomposition,
    cell_action_two_transitive,
    decompose,
    detect_pit,
    phi_hat,
)
from .rank3 import Rank3Criteria, rank3_criteria
from .signature import quotient_signature
from .special import (
    FailedCondition,
    OracleCandidate,
    SpecialPairVerdict,
    is_special_pair,
    oracle_special_scan,
    special_classes,
    special_r_values,
)
from .table1 import Table1Instance, line_of_quotient, multiplicative_order, table1_predicate

__all__ = [
    "FailedCondition", "IncidenceStructure", "InnatelyTransitiveMarker", "OracleCandidate",
    "PhiHat", "PitDecomposition", "PlsReport", "Rank3Criteria", "SpecialPairVerdict",
    "Table1Instance", "cell_action_two_transitive", "classify_group", "decompose",
    "detect_pit", "is_special_pair", "line_of_quotient", "multiplicative_order",
    "oracle_special_scan", "pairs_equivalent", "parse_design", "pg32_full", "pg32_structure",
    "phi_hat", "quotient_signature", "r_transitive_off_sigma", "rank3_criteria",
    "read_design", "report_for", "special_classes", "special_r_values", "table1_predicate",
    "verify_pls", "z14_group", "z14_structure",
]
