"""Curvature of parallel connections over symmetric spaces.

Modules:
    linalg       bivector/skew identification, clustered spectra, exact kernels
    liealg       exact-rational Lie algebra models (so(n), su(n), u(n), products)
    symspace     Cartan pairs, curvature operators, Condition A, space catalog
    reps         orthogonal representations and type classification
    bundles      induced curvature, reconstruction, characteristic numbers
    spherebundle scalar curvature of connection metrics on sphere bundles
    cli          command-line front end
"""

__version__ = "0.1.0"

from . import bundles, liealg, linalg, reps, spherebundle, symspace  # noqa: F401
