"""目录：构造配方、批量验证、数据导入与 2-传递群样本"""

from .corpus import CorpusGroup, OracleComparison, compare_with_oracle, desk_corpus
from .entries import builtin_catalog, load_catalog, select_entries
from .harness import CatalogVerifier, cross_checks, match_rows, produce_groups, run_entry, verify
from .ingest import ingest_generators, resolve_data_file
from .recipes import PlinthSetup, build_base, build_plinth, build_subgroup, set_stabilizer

__all__ = [
    "CatalogVerifier", "CorpusGroup", "OracleComparison", "PlinthSetup", "build_base",
    "build_plinth", "build_subgroup", "builtin_catalog", "compare_with_oracle", "cross_checks",
    "desk_corpus", "ingest_generators", "load_catalog", "match_rows", "produce_groups",
    "resolve_data_file", "run_entry", "select_entries", "set_stabilizer", "verify",
]
