"""Radial Sobolev-inequality certificates.

Thin wrapper over the compiled extension: embedding constants, equality
constructions, and JSON scenario evaluation.
"""

from ._minsupp import (
    Domain,
    __version__,
    catalog,
    domain,
    embedding_constant,
    maximize_constant,
    report_exit_code,
    run_scenario,
    run_scenario_file,
    talenti_constant,
)

__all__ = [
    "Domain",
    "__version__",
    "catalog",
    "domain",
    "embedding_constant",
    "maximize_constant",
    "report_exit_code",
    "run_scenario",
    "run_scenario_file",
    "talenti_constant",
]
