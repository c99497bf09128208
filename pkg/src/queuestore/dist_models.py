"""Input distributions: analytic CGFs, sampling, and exponential tilting.

The model's input variables (interarrivals/demands ``a`` and services/supplies
``s``) are drawn from a small closed family of laws: exponential,
deterministic, two-point, and gamma.  Each law carries a closed-form cumulant
generating function

    Lambda(theta) = log E exp(theta X),

finite on an open interval containing 0, and the family is closed under
exponential tilting (reweighting the density by ``exp(beta * x)`` and
renormalizing):

    Exponential(rate)      -> Exponential(rate - beta)
    Gamma(shape, rate)     -> Gamma(shape, rate - beta)
    Deterministic(value)   -> Deterministic(value)
    TwoPoint(l, h, p)      -> TwoPoint(l, h, p') with the reweighted atom mass

Closure means a tilted pair of inputs is representable exactly, with no
numerical density ratios.  CGF values are extended reals: evaluation outside
the effective domain returns ``+inf`` rather than raising, so optimizers can
probe freely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import expit, logit

from .errors import TiltOutOfDomain

__all__ = [
    "DistributionSpec",
    "Exponential",
    "Deterministic",
    "TwoPoint",
    "Gamma",
    "cgf_eval",
    "cgf_domain",
    "mean",
    "sample",
    "tilt",
    "spec_to_node",
    "spec_from_node",
]

_INF = math.inf


def _rate_limited_cgf(theta, rate: float, scale: float):
    """Evaluate ``-scale * log1p(-theta/rate)`` for theta < rate, else +inf."""
    theta = np.asarray(theta, dtype=float)
    scalar = theta.ndim == 0
    th = np.atleast_1d(theta)
    out = np.full(th.shape, _INF)
    inside = th < rate
    out[inside] = -scale * np.log1p(-th[inside] / rate)
    return float(out[0]) if scalar else out


@dataclass(frozen=True)
class DistributionSpec:
    """Base class for the closed family of input laws."""

    # --- interface -------------------------------------------------------
    def cgf(self, theta):
        """Evaluate log E exp(theta X); ``+inf`` outside the effective domain.

        Accepts scalars or arrays and returns the same shape.
        """
        raise NotImplementedError

    def cgf_domain(self) -> tuple[float, float]:
        """Maximal open interval on which the CGF is finite."""
        raise NotImplementedError

    def mean(self) -> float:
        raise NotImplementedError

    def sample_array(self, rng: np.random.Generator, size: int) -> np.ndarray:
        raise NotImplementedError

    def tilt(self, beta: float) -> "DistributionSpec":
        """Spec of the beta-exponentially-tilted law (density weighted by e^{beta x})."""
        raise NotImplementedError

    def support_hull(self) -> tuple[float, float]:
        """Closed convex hull [lo, hi] of the support (hi may be ``inf``)."""
        raise NotImplementedError

    def boundary_atom_mass(self, x: float) -> float:
        """Probability mass at a hull endpoint ``x`` (0.0 when not an atom)."""
        return 0.0

    # --- shared helpers --------------------------------------------------
    def sample(self, rng: np.random.Generator) -> float:
        """One draw from the law; deterministic given the rng state."""
        return float(self.sample_array(rng, 1)[0])

    def _check_tilt(self, beta: float) -> None:
        lo, hi = self.cgf_domain()
        if not (lo < beta < hi):
            raise TiltOutOfDomain(
                f"beta={beta!r} outside CGF domain ({lo!r}, {hi!r}) of {self!r}"
            )


@dataclass(frozen=True)
class Exponential(DistributionSpec):
    """Exponential law with given rate (mean ``1/rate``)."""

    rate: float

    def __post_init__(self):
        if not self.rate > 0:
            raise ValueError(f"Exponential rate must be > 0, got {self.rate!r}")

    def cgf(self, theta):
        # log(rate / (rate - theta)) = -log1p(-theta/rate) for theta < rate
        return _rate_limited_cgf(theta, self.rate, 1.0)

    def cgf_domain(self):
        return (-_INF, self.rate)

    def mean(self):
        return 1.0 / self.rate

    def sample_array(self, rng, size):
        return rng.exponential(scale=1.0 / self.rate, size=size)

    def tilt(self, beta):
        self._check_tilt(beta)
        return Exponential(self.rate - beta)

    def support_hull(self):
        return (0.0, _INF)


@dataclass(frozen=True)
class Deterministic(DistributionSpec):
    """Point mass at a positive value."""

    value: float

    def __post_init__(self):
        if not self.value > 0:
            raise ValueError(f"Deterministic value must be > 0, got {self.value!r}")

    def cgf(self, theta):
        theta = np.asarray(theta, dtype=float)
        out = self.value * theta
        return out if out.ndim else float(out)

    def cgf_domain(self):
        return (-_INF, _INF)

    def mean(self):
        return self.value

    def sample_array(self, rng, size):
        return np.full(size, self.value, dtype=float)

    def tilt(self, beta):
        self._check_tilt(beta)
        return Deterministic(self.value)

    def support_hull(self):
        return (self.value, self.value)

    def boundary_atom_mass(self, x):
        return 1.0 if x == self.value else 0.0


@dataclass(frozen=True)
class TwoPoint(DistributionSpec):
    """Two-point law: ``high`` with probability ``prob_high``, else ``low``."""

    low: float
    high: float
    prob_high: float

    def __post_init__(self):
        if not self.low >= 0:
            raise ValueError(f"TwoPoint low must be >= 0, got {self.low!r}")
        if not self.high > self.low:
            raise ValueError(f"TwoPoint high must exceed low, got {self.high!r}")
        if not 0.0 < self.prob_high < 1.0:
            raise ValueError(f"TwoPoint prob_high must be in (0,1), got {self.prob_high!r}")

    def cgf(self, theta):
        theta = np.asarray(theta, dtype=float)
        p = self.prob_high
        out = np.logaddexp(
            math.log1p(-p) + theta * self.low, math.log(p) + theta * self.high
        )
        return out if out.ndim else float(out)

    def cgf_domain(self):
        return (-_INF, _INF)

    def mean(self):
        return (1.0 - self.prob_high) * self.low + self.prob_high * self.high

    def sample_array(self, rng, size):
        hits = rng.random(size) < self.prob_high
        return np.where(hits, self.high, self.low).astype(float)

    def tilt(self, beta):
        self._check_tilt(beta)
        # p' = p e^{beta h} / ((1-p) e^{beta l} + p e^{beta h}), via the logit.
        p_new = float(expit(logit(self.prob_high) + beta * (self.high - self.low)))
        return TwoPoint(self.low, self.high, p_new)

    def support_hull(self):
        return (self.low, self.high)

    def boundary_atom_mass(self, x):
        if x == self.low:
            return 1.0 - self.prob_high
        if x == self.high:
            return self.prob_high
        return 0.0


@dataclass(frozen=True)
class Gamma(DistributionSpec):
    """Gamma law with given shape and rate (mean ``shape/rate``)."""

    shape: float
    rate: float

    def __post_init__(self):
        if not self.shape > 0:
            raise ValueError(f"Gamma shape must be > 0, got {self.shape!r}")
        if not self.rate > 0:
            raise ValueError(f"Gamma rate must be > 0, got {self.rate!r}")

    def cgf(self, theta):
        return _rate_limited_cgf(theta, self.rate, self.shape)

    def cgf_domain(self):
        return (-_INF, self.rate)

    def mean(self):
        return self.shape / self.rate

    def sample_array(self, rng, size):
        return rng.gamma(shape=self.shape, scale=1.0 / self.rate, size=size)

    def tilt(self, beta):
        self._check_tilt(beta)
        return Gamma(self.shape, self.rate - beta)

    def support_hull(self):
        return (0.0, _INF)


# --- spec-level functions (thin wrappers over the methods) ----------------

def cgf_eval(spec: DistributionSpec, theta):
    """Cumulant generating function of ``spec`` at ``theta`` (extended real)."""
    return spec.cgf(theta)


def cgf_domain(spec: DistributionSpec) -> tuple[float, float]:
    return spec.cgf_domain()


def mean(spec: DistributionSpec) -> float:
    return spec.mean()


def sample(spec: DistributionSpec, rng: np.random.Generator) -> float:
    return spec.sample(rng)


def tilt(spec: DistributionSpec, beta: float) -> DistributionSpec:
    return spec.tilt(beta)


# --- serialization ---------------------------------------------------------

_KINDS = {
    "exponential": (Exponential, ("rate",)),
    "deterministic": (Deterministic, ("value",)),
    "two_point": (TwoPoint, ("low", "high", "prob_high")),
    "gamma": (Gamma, ("shape", "rate")),
}


def spec_to_node(spec: DistributionSpec) -> dict:
    """Serialize a spec to a plain ``{kind, params...}`` mapping."""
    for kind, (cls, fields) in _KINDS.items():
        if type(spec) is cls:
            node = {"kind": kind}
            node.update({f: getattr(spec, f) for f in fields})
            return node
    raise TypeError(f"unknown spec type: {type(spec).__name__}")


def spec_from_node(node: dict) -> DistributionSpec:
    """Parse a ``{kind, params...}`` mapping; unknown kinds or keys are errors."""
    if not isinstance(node, dict) or "kind" not in node:
        raise ValueError(f"distribution node must be a mapping with a 'kind': {node!r}")
    kind = node["kind"]
    if kind not in _KINDS:
        raise ValueError(f"unknown distribution kind {kind!r}")
    cls, fields = _KINDS[kind]
    extra = set(node) - {"kind", *fields}
    if extra:
        raise ValueError(f"unknown keys {sorted(extra)} for distribution kind {kind!r}")
    missing = [f for f in fields if f not in node]
    if missing:
        raise ValueError(f"missing keys {missing} for distribution kind {kind!r}")
    return cls(**{f: float(node[f]) for f in fields})
