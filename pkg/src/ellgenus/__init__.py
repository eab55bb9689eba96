"""Exact computation of singular elliptic genera of normal surfaces.

The package computes the elliptic genus attached to a resolved surface
singularity (or to any surface/divisor pair with simple normal
crossings) as a truncated q-series with exact rational-function
coefficients, verifies its invariance under blow-ups, and cross-checks
it against independent oracles: the stringy chi_y genus, localization
on P^1, perturbation limits and numeric theta identities.
"""

__version__ = "0.1.0"

from ellgenus.coeff import RFunc, Rational, SFunc, SPoly  # noqa: F401
from ellgenus.qseries import QSeries  # noqa: F401
