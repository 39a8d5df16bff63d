"""Spectral toolkit for products of Gaussian and truncated-unitary random matrices.

Exact rational moments (three independent routes), support endpoints and
densities of the limit laws, free multiplicative convolution at the moment
level, and deterministic Monte Carlo sampling of the matrix products.
"""

import json as _json
from fractions import Fraction as _Fraction

from ._core import (
    __version__,
    branch_value,
    convolve,
    density,
    density_grid,
    endpoints,
    fuss_catalan,
    moment_routes,
    moments,
    quadrature_moments,
    raney,
    sample_eigenvalues,
    simulate_json,
    verify,
    verify_factorization,
)

__all__ = [
    "__version__",
    "branch_value",
    "convolve",
    "convolve_fractions",
    "density",
    "density_grid",
    "endpoints",
    "fuss_catalan",
    "moment_fractions",
    "moment_routes",
    "moments",
    "quadrature_moments",
    "raney",
    "sample_eigenvalues",
    "simulate",
    "simulate_json",
    "verify",
    "verify_factorization",
]


def moment_fractions(r, s, a="1", n_max=10):
    """Moments 0..n_max as exact fractions.Fraction values."""
    return [_Fraction(exact) for exact, _ in moments(r, s, a, n_max)]


def convolve_fractions(factors, order=16):
    """Free multiplicative convolution moments as fractions.Fraction values."""
    return [_Fraction(v) for v in convolve(factors, order)]


def simulate(n, r, s, nu=(), trials=20, seed=0, k_max=4):
    """Run the Monte Carlo comparison and return the report as a dict."""
    return _json.loads(simulate_json(n, r, s, list(nu), trials, seed, k_max))
