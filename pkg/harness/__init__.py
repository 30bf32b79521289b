# harness/__init__.py
"""
Entradas y salidas del CLI: fichero de estratos, informes, fuzz, verificacion y tablas.
"""
from harness.input_file import emit_stratum, load_stratum, parse_stratum_text, save_stratum
from harness.reports import format_report, format_search, report_from_csv, report_to_csv
from harness.tables import filtration_table, format_table
from harness.fuzz import FuzzOutcome, TrialRecord, format_fuzz, run_fuzz, run_trial
from harness.verify import SuiteResult, VerifyReport, brute_norm_class, format_verify, run_verify

__all__ = [
    "emit_stratum",
    "load_stratum",
    "parse_stratum_text",
    "save_stratum",
    "format_report",
    "format_search",
    "report_from_csv",
    "report_to_csv",
    "filtration_table",
    "format_table",
    "FuzzOutcome",
    "TrialRecord",
    "format_fuzz",
    "run_fuzz",
    "run_trial",
    "SuiteResult",
    "VerifyReport",
    "brute_norm_class",
    "format_verify",
    "run_verify",
]
