"""Scalar curvature of connection metrics on sphere bundles.

Everything reduces to the operator C~ = -sum_{i,j} R^E(x_i, x_j)^2 over
ordered frame pairs (i != j counted twice) and the fiber metric profile
G(r): the O'Neill term is |A|^2(ru) = (1/4) G(r)^2 <C~ u, u>, and the total
scalar curvature is s_E = s_M + s_F - |A|^2.
"""

from dataclasses import dataclass

import numpy as np

from .linalg import EPS


@dataclass(frozen=True)
class CtildeResult:
    operator: np.ndarray
    is_multiple_of_identity: bool
    constant: float
    residual: float


@dataclass(frozen=True)
class FiberMetricProfile:
    """Rotationally invariant fiber metric dr^2 + G(r)^2 dsigma^2."""
    g: callable
    s_f: float


def round_fiber_profile(k, radius=1.0):
    """Profile of a round fiber sphere S^(k-1) of the given radius."""
    s_f = (k - 1) * (k - 2) / radius ** 2
    return FiberMetricProfile(g=lambda r, a=radius: a * r, s_f=s_f)


@dataclass(frozen=True)
class ConstancyReport:
    ok: bool
    constant: float
    max_deviation: float
    samples: int


def c_tilde(bundle, tol=None) -> CtildeResult:
    tol = 10 * EPS if tol is None else tol
    k = bundle.rank
    op = np.zeros((k, k))
    n = bundle.space.m_dim
    for p, block in enumerate(bundle.blocks):
        op -= 2.0 * (block @ block)  # ordered pairs: (i,j) and (j,i)
    c = float(np.trace(op) / k) if k else 0.0
    resid = float(np.abs(op - c * np.eye(k)).max(initial=0.0))
    return CtildeResult(
        operator=op, is_multiple_of_identity=resid <= tol * max(1.0, abs(c)),
        constant=c, residual=resid,
    )


def c_of(bundle_or_ct, u):
    """C(u) = sum over ordered pairs |R^E(x_i, x_j) u|^2 = <C~ u, u>."""
    ct = bundle_or_ct if isinstance(bundle_or_ct, CtildeResult) \
        else c_tilde(bundle_or_ct)
    u = np.asarray(u, dtype=float)
    return float(u @ ct.operator @ u)


def schur_constancy_check(bundle, samples=1000, seed=0, tol=None):
    """Sample C(u) on random unit vectors and compare with tr(C~)/k."""
    tol = 10 * EPS if tol is None else tol
    ct = c_tilde(bundle, tol=tol)
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        u = rng.standard_normal(bundle.rank)
        u /= np.linalg.norm(u)
        worst = max(worst, abs(c_of(ct, u) - ct.constant))
    return ConstancyReport(
        ok=worst <= tol * max(1.0, abs(ct.constant)),
        constant=ct.constant, max_deviation=worst, samples=samples,
    )


def a_tensor_norm(bundle, r, profile, u):
    """|A|^2 at the point ru of the fiber: (1/4) G(r)^2 C(u)."""
    if r <= 0:
        raise ValueError("radius must be positive")
    u = np.asarray(u, dtype=float)
    nu = np.linalg.norm(u)
    if abs(nu - 1.0) > 1e-9:
        raise ValueError("u must be a unit vector")
    return 0.25 * profile.g(r) ** 2 * c_of(bundle, u)


def total_scalar_curvature(s_m, profile, a_norm):
    """s_E = s_M + s_F - |A|^2; no sign clamping."""
    return s_m + profile.s_f - a_norm


def base_scalar_curvature(space, curv=None):
    """Scalar curvature of the base from the curvature operator.

    s_M = 2 sum_{a<b} K(x_a, x_b) = 2 tr-like sum of the diagonal of R^M
    in the bivector basis.
    """
    from . import _exact as ex
    from . import symspace as ss
    curv = curv or ss.curvature_operator(space)
    return 2.0 * float(sum(curv.matrix[p, p] for p in range(curv.dim)))
