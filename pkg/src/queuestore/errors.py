"""Semantic exception hierarchy for the queuestore package."""

from __future__ import annotations


class QueueStoreError(Exception):
    """Base error for this package."""


class UnstableInputs(QueueStoreError):
    """Stability condition violated: mean service/supply >= mean interarrival/demand."""


class TiltOutOfDomain(QueueStoreError):
    """Tilt coefficient lies outside the effective domain of the CGF."""


class ThetaOutOfDomain(QueueStoreError):
    """QoS exponent theta_p lies at or beyond the CGF domain boundary."""


class LengthMismatch(QueueStoreError, ValueError):
    """Paired input sequences have different lengths."""


class InsufficientTail(QueueStoreError):
    """Too few exceedances remain to fit a tail slope."""


class NotTilted(QueueStoreError):
    """Input pair is not an exponentially tilted pair at its own tail exponent."""


class CgfOverflow(QueueStoreError):
    """No usable theta range remains for the empirical CGF."""


class ConfigInvalid(QueueStoreError, ValueError):
    """Experiment config failed validation; message carries the field path."""
