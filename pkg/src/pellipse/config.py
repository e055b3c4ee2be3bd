"""Tolerance configuration.

A single absolute tolerance ``epsilon`` (default ``1e-9``) governs boundary
membership, zero tests on floating determinants and light-like guards; the
environment variable ``PELLIPSE_EPSILON`` overrides the default at call
time.  Functions that take an optional ``eps`` argument resolve ``None``
through :func:`resolve_epsilon`.
"""

from __future__ import annotations

import os

from .errors import DomainError

__all__ = ["DEFAULT_EPSILON", "default_epsilon", "resolve_epsilon"]

#: Package-wide default absolute tolerance.
DEFAULT_EPSILON = 1e-9

#: Environment variable consulted for a tolerance override.
ENV_VAR = "PELLIPSE_EPSILON"


def default_epsilon() -> float:
    """Return the configured default tolerance.

    Reads ``PELLIPSE_EPSILON`` from the environment on every call so tests
    and subprocesses can adjust it without re-importing the package.
    """
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return DEFAULT_EPSILON
    try:
        value = float(raw)
    except ValueError as exc:
        raise DomainError(f"{ENV_VAR} must be a positive float, got {raw!r}") from exc
    if not value > 0.0:
        raise DomainError(f"{ENV_VAR} must be positive, got {value!r}")
    return value


def resolve_epsilon(eps: float | None) -> float:
    """Return ``eps`` if given, otherwise the configured default."""
    if eps is None:
        return default_epsilon()
    value = float(eps)
    if not value > 0.0:
        raise DomainError(f"epsilon must be positive, got {eps!r}")
    return value
