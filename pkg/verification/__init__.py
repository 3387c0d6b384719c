from .suites import SUITES, CheckResult, run_suite
