"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: input problems exit 2,
resource/cap problems exit 3.
"""

from __future__ import annotations


class MonohullError(Exception):
    """Base class for all package-specific errors."""


class InputDataError(MonohullError, ValueError):
    """Invalid input data: dimension mismatches, asymmetric gram matrices,
    malformed rationals, violated catalog invariants."""


class SchemaError(InputDataError):
    """A document violated the input schema; the message names the field path."""


class DegenerateSubspaceError(MonohullError):
    """The bilinear form restricted to the requested subspace is singular."""


class ChartBoundaryError(MonohullError):
    """A graph-chart matrix had spectral norm >= 1 and lies outside the chart."""


class ResourceCapError(MonohullError):
    """An exact algorithm would exceed its configured cap and heuristics are
    disabled (or unavailable)."""


class UnsupportedModelError(MonohullError):
    """No monopole-class generation rule is known for the requested
    combination of building blocks."""
