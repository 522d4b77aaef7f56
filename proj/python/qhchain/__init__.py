"""Non-Hermitian chain toolkit: exact spectra, gauges, and collision analysis.

The heavy lifting happens in the compiled `_core` extension; structured
results cross the boundary as canonical JSON and are decoded to plain dicts
here.
"""

import json as _json

from . import _core
from ._core import (
    ComputeError,
    NonConvergence,
    UsageError,
    __version__,
)

__all__ = [
    "ComputeError",
    "NonConvergence",
    "UsageError",
    "__version__",
    "canonical_model",
    "discriminant",
    "evolve",
    "exceptional_points",
    "gauge",
    "metric2x2",
    "model_hash",
    "roccati",
    "spectrum",
    "yr",
]


def canonical_model(model):
    """Canonical JSON text of a descriptor, byte-stable across key order."""
    return _core.canonical_model(_dump(model))


def model_hash(model):
    """Content hash of the canonical descriptor text."""
    return _core.model_hash(_dump(model))


def roccati(n=4, j="1", delta=None, variant="obc"):
    """Descriptor dict for the asymmetric-hop chain."""
    return _json.loads(_core.roccati(n, str(j), _opt(delta), variant))


def yr(n=4, beta="0", t=(), bond=-1, gamma=None):
    """Descriptor dict for the uniform chain with one perturbed reverse hop."""
    return _json.loads(
        _core.yr(n, str(beta), [str(x) for x in t], bond, _opt(gamma))
    )


def spectrum(model, param=None):
    """Eigenvalues with multiplicities; exact rational values when certified."""
    return _json.loads(_core.spectrum(_dump(model), _opt(param)))


def gauge(model, param=None):
    """Diagonal-gauge report: verdict, bond ratios, site weights, certificate."""
    return _json.loads(_core.gauge(_dump(model), _opt(param)))


def discriminant(model):
    """Exact eigenvalue-collision polynomial in the model parameter."""
    return _json.loads(_core.discriminant(_dump(model)))


def exceptional_points(model):
    """Classified collision candidates of a one-parameter model."""
    return _json.loads(_core.exceptional_points(_dump(model)))


def evolve(model, psi0, times, param=None):
    """Metric-preserving time evolution of an initial state."""
    psi = [complex(v) for v in psi0]
    return _json.loads(
        _core.evolve(_dump(model), _opt(param), psi, [float(t) for t in times])
    )


def metric2x2(a, b):
    """Unit-diagonal metric and hermitization for the 2x2 swap-conjugate pair."""
    return _json.loads(_core.metric2x2(complex(a), complex(b)))


def _dump(model):
    if isinstance(model, str):
        return model
    return _json.dumps(model)


def _opt(value):
    return None if value is None else str(value)
