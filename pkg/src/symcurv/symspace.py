"""Symmetric spaces as Cartan pairs, their curvature operators, and a catalog.

The tangent space at the base point is modeled by the subspace m of a
Cartan decomposition g = h + m. All brackets and the curvature operator
on Lambda^2(m) are computed exactly over the rationals; spectra use
floats. The sign convention makes the curvature operator of the unit
sphere the identity on Lambda^2 (the (1,3) curvature tensor is then
R(X,Y)Z = -[[X,Y],Z]).
"""

import functools
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _exact as ex
from . import liealg
from .linalg import (
    EPS,
    SymmetricOperator,
    bivector_coeffs_from_skew,
    pair_index,
    skew_from_bivector_coeffs,
)


class SymSpaceError(Exception):
    pass


class NotCartanPair(SymSpaceError):
    pass


class MetricNotInvariant(SymSpaceError):
    pass


class UnknownSpace(SymSpaceError):
    pass


class ContainmentViolated(SymSpaceError):
    """span[ker, Im] escaped the kernel: impossible mathematically, so a bug."""


@dataclass(frozen=True)
class SymmetricSpaceModel:
    g: liealg.LieAlgebraModel
    h_indices: tuple
    m_indices: tuple
    metric_diag: np.ndarray  # Fractions: <X_a, X_a> for the chosen m basis
    name: str
    flat_dim: int = 0
    # reference isotropy algebra and the coordinates of each h basis element in it
    isotropy_ref: liealg.LieAlgebraModel | None = None
    h_to_ref: np.ndarray | None = None  # (len h, ref.dim) Fractions

    @property
    def m_dim(self):
        return len(self.m_indices)

    @property
    def h_dim(self):
        return len(self.h_indices)

    def ref_to_h(self):
        return ex.inverse(np.asarray(self.h_to_ref, dtype=object))


@dataclass
class CurvatureOperator:
    m_dim: int
    matrix: np.ndarray  # exact Fractions, lexicographic bivector basis
    h_coeff: np.ndarray  # (N_biv, h_dim) Fractions: [x_a, x_b] in the h basis
    kernel_basis: np.ndarray  # exact columns
    image_basis: np.ndarray  # exact columns
    _sym: SymmetricOperator | None = field(default=None, repr=False)

    @property
    def dim(self):
        return self.matrix.shape[0]

    def as_operator(self):
        if self._sym is None:
            self._sym = SymmetricOperator(ex.to_float(self.matrix))
        return self._sym

    def eigendata(self):
        return self.as_operator().eigendata()

    def spectrum(self):
        """Clustered (eigenvalue, multiplicity) pairs, ascending."""
        return [(lam, basis.shape[1]) for lam, basis in self.eigendata().pairs]


@dataclass(frozen=True)
class ConditionAReport:
    holds: bool
    dim_kernel: int
    dim_image: int
    dim_span_bracket: int
    witness: np.ndarray | None  # kernel vector outside span of brackets, floats


def _basis_vec(dim, idx):
    v = ex.fzeros(dim)
    v[idx] = ex.ONE
    return v


def make_symmetric_space(g, h_indices, metric_diag, name, flat_dim=0,
                         isotropy_ref=None, h_to_ref=None):
    """Validated Cartan pair with a diagonal Ad(h)-invariant metric on m."""
    h_indices = tuple(h_indices)
    m_indices = tuple(i for i in range(g.dim) if i not in h_indices)
    if len(h_indices) + len(m_indices) != g.dim or len(set(h_indices)) != len(h_indices):
        raise NotCartanPair("h indices do not select a subset of the basis")
    metric_diag = ex.farray(metric_diag)
    if len(metric_diag) != len(m_indices):
        raise MetricNotInvariant("metric diagonal has wrong length")
    if any(d <= 0 for d in metric_diag):
        raise MetricNotInvariant("metric diagonal must be positive")
    hset = set(h_indices)
    mset = set(m_indices)

    def check(ii, jj, allowed, relation):
        for i in ii:
            for j in jj:
                br = g.structure[i, j]
                bad = [k for k in range(g.dim) if br[k] != 0 and k not in allowed]
                if bad:
                    raise NotCartanPair(
                        f"{relation} violated by basis pair ({i}, {j})"
                    )

    check(h_indices, h_indices, hset, "[h,h] subset h")
    check(h_indices, m_indices, mset, "[h,m] subset m")
    check(m_indices, m_indices, hset, "[m,m] subset h")

    # Ad(h)-invariance of the metric: <[H,X],Y> + <X,[H,Y]> = 0 on m
    mpos = {gi: a for a, gi in enumerate(m_indices)}
    for i in h_indices:
        for a, ga in enumerate(m_indices):
            br = g.structure[i, ga]
            for gb, b in mpos.items():
                lhs = br[gb] * metric_diag[b]
                rb = g.structure[i, gb]
                lhs = lhs + rb[ga] * metric_diag[a]
                if lhs != 0:
                    raise MetricNotInvariant(
                        f"metric not ad(h)-invariant at (H={i}, X={ga}, Y={gb})"
                    )
    return SymmetricSpaceModel(
        g=g, h_indices=h_indices, m_indices=m_indices, metric_diag=metric_diag,
        name=name, flat_dim=flat_dim, isotropy_ref=isotropy_ref,
        h_to_ref=None if h_to_ref is None else np.asarray(h_to_ref, dtype=object),
    )


def _frame_bracket_h(space):
    """[x_a, x_b] in h coordinates for the orthonormal frame x_a = X_a / sqrt(d_a)."""
    g = space.g
    m = space.m_indices
    h = space.h_indices
    d = space.metric_diag
    pairs = pair_index(len(m))
    out = ex.fzeros((len(pairs), len(h)))
    for p, (a, b) in enumerate(pairs):
        br = g.bracket(_basis_vec(g.dim, m[a]), _basis_vec(g.dim, m[b]))
        scale = ex.fsqrt(Fraction(1) / (d[a] * d[b]))
        for t, gi in enumerate(h):
            out[p, t] = br[gi] * scale
    return out


def isotropy_skew(space, h_coeffs):
    """Skew matrix of ad(H)|_m in the orthonormal m frame, H given in h coords."""
    g = space.g
    m = space.m_indices
    d = space.metric_diag
    hvec = ex.fzeros(g.dim)
    for t, gi in enumerate(space.h_indices):
        hvec[gi] = h_coeffs[t]
    out = ex.fzeros((len(m), len(m)))
    for c, gc in enumerate(m):
        br = g.bracket(hvec, _basis_vec(g.dim, gc))
        for e, ge in enumerate(m):
            if br[ge] != 0:
                out[e, c] = br[ge] * ex.fsqrt(d[e] / d[c])
    return out


def curvature_operator(space) -> CurvatureOperator:
    """Exact matrix of R^M on Lambda^2(m): R^M(x_a ^ x_b) = ad([x_a, x_b])|_m."""
    n = space.m_dim
    pairs = pair_index(n)
    hc = _frame_bracket_h(space)
    mat = ex.fzeros((len(pairs), len(pairs)))
    for p in range(len(pairs)):
        skew = isotropy_skew(space, hc[p])
        mat[:, p] = bivector_coeffs_from_skew(skew)
    if not ex.is_zero(mat - mat.T):
        raise SymSpaceError("curvature operator failed exact self-adjointness")
    kernel = ex.nullspace(mat)
    img_cols = ex.column_space(mat)
    image = mat[:, img_cols] if img_cols else ex.fzeros((len(pairs), 0))
    return CurvatureOperator(
        m_dim=n, matrix=mat, h_coeff=hc, kernel_basis=kernel, image_basis=image,
    )


def isotropy_rep(space):
    """pi-hat as an AlgebraRep on the reference isotropy algebra.

    Image of the reference basis element Y_t is ad(H_t)|_m where H_t is
    the h element with ref coordinates e_t.
    """
    from .reps import AlgebraRep  # local import to avoid a cycle

    ref = space.isotropy_ref
    if ref is None or ref.dim == 0:
        src = ref if ref is not None else liealg.make_abelian(0)
        return AlgebraRep(
            source=src, images=np.zeros((src.dim, space.m_dim, space.m_dim)),
            label="tangent",
        )
    r2h = space.ref_to_h()
    images = np.zeros((ref.dim, space.m_dim, space.m_dim))
    for t in range(ref.dim):
        images[t] = ex.to_float(isotropy_skew(space, r2h[t]))
    return AlgebraRep(source=ref, images=images, label="tangent")


def condition_a(space, curv=None) -> ConditionAReport:
    """Exact-rational check of span[ker R^M, Im R^M] = ker R^M."""
    curv = curv or curvature_operator(space)
    n = space.m_dim
    ker = curv.kernel_basis
    img = curv.image_basis
    dim_ker = ker.shape[1]
    dim_img = img.shape[1]
    if dim_ker == 0:
        return ConditionAReport(True, 0, dim_img, 0, None)
    brackets = []
    for a in range(dim_ker):
        ka = skew_from_bivector_coeffs(ker[:, a], n)
        for b in range(dim_img):
            ib = skew_from_bivector_coeffs(img[:, b], n)
            brackets.append(bivector_coeffs_from_skew(ex.commutator(ka, ib)))
    if brackets:
        bmat = np.stack(brackets, axis=1)
        if ex.rank(np.concatenate([ker, bmat], axis=1)) > dim_ker:
            raise ContainmentViolated("[ker, Im] escaped ker R^M")
        dim_span = ex.rank(bmat)
    else:
        dim_span = 0
    holds = dim_span == dim_ker
    witness = None
    if not holds:
        # kernel vector orthogonal to the bracket span
        kf = ex.to_float(ker)
        if brackets:
            bf = ex.to_float(bmat)
            q, _ = np.linalg.qr(bf)
            resid = kf - q @ (q.T @ kf)
        else:
            resid = kf
        col = int(np.argmax(np.linalg.norm(resid, axis=0)))
        w = resid[:, col]
        witness = w / np.linalg.norm(w)
    return ConditionAReport(holds, dim_ker, dim_img, dim_span, witness)


def eigenspace_structure_residuals(curv):
    """Residuals of the eigenspace bracket structure of R^M.

    Returns the worst-case residuals of: (a) each nonzero eigenspace being
    closed under the bracket, (b) distinct nonzero eigenspaces commuting,
    and (c) the image being closed under the bracket. The kernel is NOT
    required to be closed and is not checked.
    """
    n = curv.m_dim
    eig = curv.eigendata()
    nonzero = [(lam, b) for lam, b in eig.pairs if abs(lam) > 10 * EPS]

    def brackets(ba, bb):
        out = []
        for i in range(ba.shape[1]):
            sa = skew_from_bivector_coeffs(ba[:, i], n)
            for j in range(bb.shape[1]):
                sb = skew_from_bivector_coeffs(bb[:, j], n)
                out.append(bivector_coeffs_from_skew(sa @ sb - sb @ sa))
        return out

    def off_span(vecs, basis):
        resid = 0.0
        for v in vecs:
            w = v - basis @ (basis.T @ v) if basis.shape[1] else v
            resid = max(resid, np.linalg.norm(w))
        return resid

    sub = 0.0
    comm = 0.0
    for i, (_, ba) in enumerate(nonzero):
        sub = max(sub, off_span(brackets(ba, ba), ba))
        for _, bb in nonzero[i + 1 :]:
            for v in brackets(ba, bb):
                comm = max(comm, np.linalg.norm(v))
    if nonzero:
        image = np.concatenate([b for _, b in nonzero], axis=1)
        closed = off_span(brackets(image, image), image)
    else:
        closed = 0.0
    return {"subalgebra": sub, "commuting": comm, "image_closed": closed}


def product_space(a, b) -> SymmetricSpaceModel:
    g = liealg.product_algebra(a.g, b.g)
    h_idx = tuple(a.h_indices) + tuple(i + a.g.dim for i in b.h_indices)
    metric = np.concatenate([a.metric_diag, b.metric_diag])
    ref_a, ref_b = a.isotropy_ref, b.isotropy_ref
    if ref_b is None or ref_b.dim == 0:
        ref, h2r = ref_a, a.h_to_ref
    elif ref_a is None or ref_a.dim == 0:
        ref, h2r = ref_b, b.h_to_ref
    else:
        ref = liealg.product_algebra(ref_a, ref_b)
        h2r = ex.fzeros((a.h_dim + b.h_dim, ref.dim))
        h2r[: a.h_dim, : ref_a.dim] = a.h_to_ref
        h2r[a.h_dim :, ref_a.dim :] = b.h_to_ref
    return make_symmetric_space(
        g, h_idx, metric, f"{a.name}x{b.name}",
        flat_dim=a.flat_dim + b.flat_dim, isotropy_ref=ref, h_to_ref=h2r,
    )


def sphere_model(n):
    """Unit round S^n as so(n+1)/so(n); curvature operator is the identity."""
    g = liealg.make_so(n + 1)
    # lexicographic pair order puts the (0, j) generators (the m part) first
    m_count = n
    h_idx = tuple(range(m_count, g.dim))
    ref = liealg.make_so(n) if n >= 2 else liealg.make_abelian(0)
    h2r = ex.feye(ref.dim)
    return make_symmetric_space(
        g, h_idx, [1] * m_count, f"S{n}", isotropy_ref=ref, h_to_ref=h2r,
    )


def _cp_basis(n):
    """Basis of su(n+1) adapted to CP^n: m first (Z_1..Z_n, W_1..W_n), then h."""
    zero = ex.fzeros((n + 1, n + 1))
    mats, labels = [], []
    for k in range(n):
        x = ex.fzeros((n + 1, n + 1))
        x[k + 1, 0] = ex.ONE
        x[0, k + 1] = -ex.ONE
        mats.append(liealg.realify(x, zero))
        labels.append(f"Z{k + 1}")
    for k in range(n):
        y = ex.fzeros((n + 1, n + 1))
        y[k + 1, 0] = ex.ONE
        y[0, k + 1] = ex.ONE
        mats.append(liealg.realify(zero, y))
        labels.append(f"W{k + 1}")
    # h = { diag(-tr A, A) : A in u(n) }
    un = liealg.make_u(n)
    for t, m in enumerate(un.matrices):
        x, y = liealg.complex_parts(m)
        bx = ex.fzeros((n + 1, n + 1))
        by = ex.fzeros((n + 1, n + 1))
        bx[1:, 1:] = x
        by[1:, 1:] = y
        bx[0, 0] = -sum(x[i, i] for i in range(n))
        by[0, 0] = -sum(y[i, i] for i in range(n))
        mats.append(liealg.realify(bx, by))
        labels.append(f"H.{un.basis_labels[t]}")
    return mats, labels, un


def cp_model(n):
    """CP^n = su(n+1)/u(n), normalized to holomorphic sectional curvature 4."""
    mats, labels, un = _cp_basis(n)
    g = liealg._from_matrices(f"su({n + 1})|cp", labels, mats, complex_n=n + 1)
    h_idx = tuple(range(2 * n, g.dim))
    base = g.inner_product[0, 0]  # uniform on m by construction
    space = make_symmetric_space(
        g, h_idx, [base] * (2 * n), f"CP{n}",
        isotropy_ref=un, h_to_ref=ex.feye(un.dim),
    )
    # rescale so that K(Z_1, W_1) = 4; sectional curvature scales as 1/c
    curv = curvature_operator(space)
    p = pair_index(2 * n).index((0, n))
    khol = curv.matrix[p, p]
    scale = khol / 4
    return make_symmetric_space(
        g, h_idx, [base * scale] * (2 * n), f"CP{n}",
        isotropy_ref=un, h_to_ref=ex.feye(un.dim),
    )


def group_model():
    """SU(2) as a symmetric space: G = SU(2) x SU(2), H the diagonal."""
    su2 = liealg.make_su(2)
    g0 = liealg.product_algebra(su2, su2)
    d = su2.dim
    p = ex.fzeros((2 * d, 2 * d))
    labels = []
    for i in range(d):  # diagonal copy spans h
        p[i, i] = ex.ONE
        p[i, d + i] = ex.ONE
        labels.append(f"D{i + 1}")
    for i in range(d):  # antidiagonal copy spans m
        p[d + i, i] = ex.ONE
        p[d + i, d + i] = -ex.ONE
        labels.append(f"A{i + 1}")
    g = liealg.change_basis(g0, p, name="su(2)+su(2)|diag", labels=labels)
    metric = [g.inner_product[d + i, d + i] for i in range(d)]
    return make_symmetric_space(
        g, tuple(range(d)), metric, "SU2_group",
        isotropy_ref=su2, h_to_ref=ex.feye(d),
    )


def flat_model(n):
    g = liealg.make_abelian(n)
    return make_symmetric_space(
        g, (), [1] * n, f"R{n}", flat_dim=n,
        isotropy_ref=liealg.make_abelian(0), h_to_ref=ex.fzeros((0, 0)),
    )


def rescale_metric(space, factor):
    """Same space with the metric on m multiplied by an exact rational factor."""
    factor = ex.frac(factor)
    return SymmetricSpaceModel(
        g=space.g, h_indices=space.h_indices, m_indices=space.m_indices,
        metric_diag=space.metric_diag * factor, name=space.name,
        flat_dim=space.flat_dim, isotropy_ref=space.isotropy_ref,
        h_to_ref=space.h_to_ref,
    )


@functools.lru_cache(maxsize=None)
def _catalog_atom(name):
    if name.startswith("S") and name[1:].isdigit():
        n = int(name[1:])
        if 2 <= n <= 8:
            return sphere_model(n)
        raise UnknownSpace(f"sphere {name} outside catalog range S2..S8")
    if name.startswith("CP") and name[2:].isdigit():
        n = int(name[2:])
        if 1 <= n <= 3:
            return cp_model(n)
        raise UnknownSpace(f"projective space {name} outside catalog range CP1..CP3")
    if name.startswith("R") and name[1:].isdigit():
        n = int(name[1:])
        if 1 <= n <= 4:
            return flat_model(n)
        raise UnknownSpace(f"flat factor {name} outside catalog range R1..R4")
    if name == "SU2_group":
        return group_model()
    raise UnknownSpace(f"unknown space {name!r}")


def catalog(name):
    """Catalog lookup; product spaces are spelled with 'x' or a multiplication sign."""
    name = name.strip().replace("×", "x")
    parts = [p.strip() for p in name.split("x")]
    if not parts or any(not p for p in parts):
        raise UnknownSpace(f"cannot parse space name {name!r}")
    space = _catalog_atom(parts[0])
    for p in parts[1:]:
        space = product_space(space, _catalog_atom(p))
    return space


def space_to_text(space):
    lines = [liealg.to_text(space.g).rstrip()]
    lines.append(f"space {space.name}")
    lines.append("h_indices " + " ".join(str(i) for i in space.h_indices))
    lines.append("metric " + " ".join(str(v) for v in space.metric_diag))
    lines.append(f"flat_dim {space.flat_dim}")
    return "\n".join(lines) + "\n"


def space_from_text(text):
    alg = liealg.from_text(text)
    name, h_idx, metric, flat = None, (), None, 0
    for raw in text.splitlines():
        parts = raw.strip().split()
        if not parts:
            continue
        if parts[0] == "space":
            name = " ".join(parts[1:])
        elif parts[0] == "h_indices":
            h_idx = tuple(int(v) for v in parts[1:])
        elif parts[0] == "metric":
            metric = [Fraction(v) for v in parts[1:]]
        elif parts[0] == "flat_dim":
            flat = int(parts[1])
    if name is None or metric is None:
        raise ValueError("missing space header")
    return make_symmetric_space(alg, h_idx, metric, name, flat_dim=flat)
