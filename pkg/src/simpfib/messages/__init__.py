"""Centralized message constants for the simpfib CLI.

This module provides a single source of truth for all user-facing messages,
so the commands word their diagnostics consistently.
"""

from dataclasses import dataclass


@dataclass
class VerifyMessages:
    """Messages related to the verification suites."""

    # Info messages
    RUNNING_SUITE = "Running {} up to degree {}..."
    REPORT_WRITTEN = "Report written to {}"
    SUITE_HEADER = "simpfib · {}"
    SUMMARY = "{} checks, {} failed"

    # Result messages
    ALL_PASSED = "✔ All checks passed"
    SOME_FAILED = "✘ {} check(s) failed"
    RECORD_PASSED = "✔ {} [dim {}] {}"
    RECORD_FAILED = "✘ {} [dim {}] {}"
    COUNTEREXAMPLE = "    counterexample: {}"

    # Error messages
    NEEDS_SOURCE = "✘ Pass either --group or --ses"
    BOTH_SOURCES = "✘ Pass only one of --group and --ses"


@dataclass
class SpecMessages:
    """Messages related to spec files and group descriptions."""

    FILE_NOT_FOUND = "✘ Spec file not found: {}"
    INVALID_SPEC = "✘ Invalid spec: {}"
    INVALID_SECTION = "✘ Invalid section: {}"
    UNKNOWN_EXAMPLE = "✘ Unknown example '{}'. Available: {}"
    AMBIGUOUS_EXAMPLE = "✘ Example name '{}' is ambiguous: {}"


@dataclass
class HomologyMessages:
    """Messages related to homology computations."""

    HEADER = "Homology of {} (cutoff {})"
    COMPUTING = "Computing homology of {} up to degree {}..."
    GROUP_LINE = "H_{} = {}"
    TWISTED_NEEDS_SES = "✘ --space twisted needs --ses"
    INVALID_MAX_DIM = "✘ Invalid --max-dim: {} (must be a positive integer)"


@dataclass
class DemoMessages:
    """Messages for the worked examples."""

    LIST_HEADER = "Bundled examples"
    LIST_LINE = "{:<12} {}"
    HEADER = "Example {} in degree {}"
    SEQUENCE = "Sequence: {}"
    SECTION_HEADER = "Section σ: L → G"
    SECTION_LINE = "  σ({}) = {}"
    MULTIPLICATIVE = "  σ is multiplicative"
    NOT_MULTIPLICATIVE = "  σ is not multiplicative; Φ not defined"
    SIMPLEX = "g = {}"
    ALPHA_LINE = "  level {}: α({}) = ({}, {})"
    LEADING_LINE = "  P_{} (level {}) = {}"
    PSI = "Ψ{} = {}"
    PSI_INVERSE = "Ψ⁻¹ of it = {}"
    FIBRE_BASE = "  fibre {}, base {}"
    LOOP_TWIST = "τ(l) for l = {}: {}"
    PHI = "Φ{} = {}"
    PHI_AGREES = "  Φ agrees with Ψ"
    PHI_DIFFERS = "  Φ differs from Ψ"


@dataclass
class ConfigCmdMessages:
    """Messages for the configuration command."""

    FILE_EXISTS = "{} already exists. Overwrite?"
    CANCELLED = "Cancelled."
    FILE_CREATED = "✔ Configuration file created: {}"


@dataclass
class ConfigMessages:
    """Messages related to configuration."""

    INVALID_MAX_DIM = "Invalid max_dim in [{}]: {} (must be a positive integer)"
    INVALID_OUTPUT_FORMAT = "Invalid output_format: {} (expected text or json)"
    INVALID_POSITIVE = "Invalid {}: {} (must be a positive integer)"
    INVALID_NON_NEGATIVE = "Invalid {}: {} (must be a non-negative integer)"
    LOAD_ERROR = "Warning: Error loading config file: {}"


# Singleton instances for easy access
verify = VerifyMessages()
spec = SpecMessages()
homology = HomologyMessages()
demo = DemoMessages()
config = ConfigMessages()
config_cmd = ConfigCmdMessages()


__all__ = [
    "VerifyMessages",
    "SpecMessages",
    "HomologyMessages",
    "DemoMessages",
    "ConfigMessages",
    "ConfigCmdMessages",
    "verify",
    "spec",
    "homology",
    "demo",
    "config",
    "config_cmd",
]
