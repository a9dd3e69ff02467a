"""Verification suites."""

from src.verify.suites import SUITES, SuiteContext, SuiteResult, run_suite, suite_names

__all__ = ["SUITES", "SuiteContext", "SuiteResult", "run_suite", "suite_names"]
