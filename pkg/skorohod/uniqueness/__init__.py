"""Conditions under which an embedding domain is unique."""
from .conditions import (UniquenessReport, VERDICTS, moment_verdict,
                         check_conditions, compare_domains)


__all__ = ["UniquenessReport", "VERDICTS", "moment_verdict",
           "check_conditions", "compare_domains"]
