"""Induced bundle curvature, holonomy-map reconstruction, characteristic
numbers, and the parallel-bundle classifier.

The curvature of the bundle attached to a representation rho is
R^E = rho o pihat^{-1} o R^M; on basis bivectors this is rho applied to the
bracket of the corresponding orthonormal frame vectors. All the structural
facts (the bracket identity, kernel inclusion, reconstruction of rho from
the pair of curvatures) follow from that formula and are re-verified
numerically rather than trusted.
"""

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from . import _exact as ex
from . import reps as rp
from . import symspace as ss
from .linalg import (
    EPS,
    NotInImage,
    bivector_coeffs_from_skew,
    pair_index,
    skew_from_bivector_coeffs,
    solve_on_image,
)


class BundleError(Exception):
    pass


class SourceMismatch(BundleError):
    pass


class KernelNotIncluded(BundleError):
    pass


class NotHomomorphism(BundleError):
    def __init__(self, msg, residual):
        super().__init__(f"{msg} (residual {residual:.3e})")
        self.residual = residual


class UnsupportedBase(BundleError):
    pass


class UnsupportedSpace(BundleError):
    pass


@dataclass(frozen=True)
class InducedBundle:
    space: ss.SymmetricSpaceModel
    rep: rp.AlgebraRep
    blocks: np.ndarray  # (N_biv, k, k): R^E on each basis bivector
    curv: ss.CurvatureOperator = field(repr=False)

    @property
    def rank(self):
        return self.blocks.shape[1]

    def value(self, coeffs):
        """R^E applied to a bivector given by coefficients."""
        return np.tensordot(np.asarray(coeffs, dtype=float), self.blocks,
                            axes=(0, 0))


@dataclass(frozen=True)
class IdentityReport:
    ok: bool
    max_residual: float
    witness: tuple | None = None


@dataclass(frozen=True)
class RecoveredHom:
    space: ss.SymmetricSpaceModel
    image_basis: np.ndarray  # (N_biv, r): orthonormal basis of Im R^M
    images: np.ndarray  # (r, k, k): rho-hat on that basis
    hom_residual: float

    def as_rep(self):
        """rho-hat composed with the isotropy identification: a rep of the
        reference isotropy algebra."""
        space = self.space
        ref = space.isotropy_ref
        k = self.images.shape[1] if self.images.shape[0] else 0
        if ref is None or ref.dim == 0:
            return rp.trivial_rep(ref, k)
        r2h = space.ref_to_h()
        out = np.zeros((ref.dim, k, k))
        for t in range(ref.dim):
            skew = ex.to_float(ss.isotropy_skew(space, r2h[t]))
            biv = bivector_coeffs_from_skew(skew)
            coeffs = self.image_basis.T @ biv
            resid = np.linalg.norm(biv - self.image_basis @ coeffs)
            if resid > 100 * EPS * max(1.0, np.linalg.norm(biv)):
                raise NotInImage(
                    "isotropy image is not contained in Im R^M")
            out[t] = np.tensordot(coeffs, self.images, axes=(0, 0))
        return rp.AlgebraRep(ref, out, label="recovered")


def _unit_h(h_dim, idx):
    v = ex.fzeros(h_dim)
    v[idx] = ex.ONE
    return v


def induce(space, rep, curv=None) -> InducedBundle:
    """Curvature of the bundle attached to rep via R^E = rho o pihat^-1 o R^M."""
    ref = space.isotropy_ref
    ref_name = ref.name if ref is not None else None
    if rep.source.name != ref_name or rep.source.dim != (ref.dim if ref else -1):
        raise SourceMismatch(
            f"rep source {rep.source.name!r} does not match isotropy algebra "
            f"{ref_name!r} of {space.name}")
    curv = curv or ss.curvature_operator(space)
    hc = ex.to_float(curv.h_coeff)
    if space.h_dim:
        h2r = ex.to_float(space.h_to_ref)
        coeffs = hc @ h2r
    else:
        coeffs = np.zeros((hc.shape[0], rep.source.dim))
    k = rep.target_dim
    blocks = np.zeros((hc.shape[0], k, k))
    for p in range(hc.shape[0]):
        blocks[p] = rep.image(coeffs[p])
    return InducedBundle(space=space, rep=rep, blocks=blocks, curv=curv)


def bracket_identity_residual(bundle, a, b):
    """Residual of R^E[R^M a, b] = [R^E a, R^E b] for bivectors a, b."""
    n = bundle.space.m_dim
    rm = ex.to_float(bundle.curv.matrix)
    rma = skew_from_bivector_coeffs(rm @ np.asarray(a, dtype=float), n)
    sb = skew_from_bivector_coeffs(np.asarray(b, dtype=float), n)
    lhs = bundle.value(bivector_coeffs_from_skew(rma @ sb - sb @ rma))
    ra, rb = bundle.value(a), bundle.value(b)
    return float(np.abs(lhs - (ra @ rb - rb @ ra)).max(initial=0.0))


def check_bracket_identity(bundle, tol=None) -> IdentityReport:
    """Lemma-style bracket identity over all basis bivector pairs."""
    tol = 10 * EPS if tol is None else tol
    nb = bundle.blocks.shape[0]
    worst, witness = 0.0, None
    eye = np.eye(nb)
    for p in range(nb):
        for q in range(nb):
            r = bracket_identity_residual(bundle, eye[p], eye[q])
            if r > worst:
                worst, witness = r, (p, q)
    return IdentityReport(worst <= tol, worst, witness if worst > tol else None)


def check_kernel_inclusion(bundle, tol=None) -> IdentityReport:
    """ker R^M subset ker R^E, tested on the exact kernel basis."""
    tol = 10 * EPS if tol is None else tol
    ker = ex.to_float(bundle.curv.kernel_basis)
    worst, witness = 0.0, None
    for i in range(ker.shape[1]):
        r = float(np.abs(bundle.value(ker[:, i])).max(initial=0.0))
        if r > worst:
            worst, witness = r, i
    return IdentityReport(worst <= tol, worst, witness if worst > tol else None)


def recover_rho_hat(space, blocks, curv=None, tol=None) -> RecoveredHom:
    """Reconstruct rho-hat = R^E o (R^M)^{-1} on Im R^M and validate it.

    blocks is the candidate bundle curvature on basis bivectors. Raises
    KernelNotIncluded when the candidate does not kill ker R^M and
    NotHomomorphism when the reconstructed map fails to be a Lie algebra
    homomorphism on the holonomy algebra.
    """
    tol = 100 * EPS if tol is None else tol
    curv = curv or ss.curvature_operator(space)
    blocks = np.asarray(blocks, dtype=float)
    n = space.m_dim
    scale = max(1.0, np.abs(blocks).max(initial=0.0))

    def value(coeffs):
        return np.tensordot(coeffs, blocks, axes=(0, 0))

    ker = ex.to_float(curv.kernel_basis)
    for i in range(ker.shape[1]):
        if np.abs(value(ker[:, i])).max(initial=0.0) > tol * scale:
            raise KernelNotIncluded(
                f"candidate curvature does not vanish on ker R^M "
                f"(kernel vector {i})")
    img = ex.to_float(curv.image_basis)
    if img.shape[1]:
        img, _ = np.linalg.qr(img)
    op = curv.as_operator()
    images = np.zeros((img.shape[1], blocks.shape[1], blocks.shape[1]))
    for i in range(img.shape[1]):
        images[i] = value(solve_on_image(op, img[:, i]))
    # homomorphism residual on the holonomy algebra
    worst = 0.0
    for i in range(img.shape[1]):
        si = skew_from_bivector_coeffs(img[:, i], n)
        for j in range(i + 1, img.shape[1]):
            sj = skew_from_bivector_coeffs(img[:, j], n)
            br = bivector_coeffs_from_skew(si @ sj - sj @ si)
            coeffs = img.T @ br
            worst = max(worst, float(np.linalg.norm(br - img @ coeffs)))
            lhs = np.tensordot(coeffs, images, axes=(0, 0))
            rhs = images[i] @ images[j] - images[j] @ images[i]
            worst = max(worst, float(np.abs(lhs - rhs).max(initial=0.0)))
    if worst > tol * max(1.0, scale * scale):
        raise NotHomomorphism("reconstructed map is not a homomorphism", worst)
    return RecoveredHom(space=space, image_basis=img, images=images,
                        hom_residual=worst)


# ---------------------------------------------------------------------------
# characteristic numbers

@dataclass(frozen=True)
class CharClassReport:
    base: str
    rank: int
    euler: float | None
    p1: float | None
    c1: float | None = None
    c2: float | None = None
    tolerance: float = 1e-6

    def integral(self):
        vals = [v for v in (self.euler, self.p1, self.c1, self.c2)
                if v is not None]
        return all(abs(v - round(v)) <= self.tolerance for v in vals)

    def to_dict(self):
        return {
            "base": self.base, "rank": self.rank, "euler": self.euler,
            "p1": self.p1, "c1": self.c1, "c2": self.c2,
        }


def _base_geometry(space, curv):
    """(dimension, sectional curvature K) for round 2- and 4-dim bases."""
    n = space.m_dim
    if n not in (2, 4):
        raise UnsupportedBase(f"{space.name}: base must be 2- or 4-dimensional")
    mat = curv.matrix
    k = mat[0, 0]
    if not ex.is_zero(mat - k * ex.feye(mat.shape[0])) or k <= 0:
        raise UnsupportedBase(
            f"{space.name}: curvature operator is not a positive multiple "
            f"of the identity")
    return n, float(k)


_PARTS4 = (((0, 1), (2, 3), 1.0), ((0, 2), (1, 3), -1.0), ((0, 3), (1, 2), 1.0))


def _frame_form(bundle):
    pairs = pair_index(bundle.space.m_dim)
    idx = {p: i for i, p in enumerate(pairs)}

    def f(a, b):
        if a == b:
            return np.zeros((bundle.rank, bundle.rank))
        if a < b:
            return bundle.blocks[idx[(a, b)]]
        return -bundle.blocks[idx[(b, a)]]

    return f


def _complex_trace(m, jc):
    return 0.5 * (np.trace(m) - 1j * np.trace(jc @ m))


def characteristic_numbers(bundle, tolerance=1e-6) -> CharClassReport:
    """Chern-Weil numbers by density-at-a-point times volume.

    Supported bases are round 2- and 4-dimensional catalog spaces (unit or
    rescaled spheres, CP^1). Euler numbers need rank 2 over a surface and
    rank 4 over a 4-dimensional base; p1 is computed over any 4-dimensional
    base; c1 (surface) and c2 (4-dimensional base) need a complex structure.
    """
    space, rep = bundle.space, bundle.rep
    n, kappa = _base_geometry(space, bundle.curv)
    f = _frame_form(bundle)
    jc = rep.complex_structure
    euler = p1 = c1 = c2 = None
    if n == 2:
        vol = 4 * math.pi / kappa
        f12 = f(0, 1)
        if bundle.rank == 2:
            euler = f12[1, 0] * vol / (2 * math.pi)
        if jc is not None:
            tr = _complex_trace(f12, jc)
            c1 = tr.imag * vol / (2 * math.pi)
    else:
        vol = (8 * math.pi ** 2 / 3) / kappa ** 2
        trff = sum(2 * s * np.trace(f(*p) @ f(*q)) for p, q, s in _PARTS4)
        p1 = -trff * vol / (8 * math.pi ** 2)
        if bundle.rank == 4:
            pf = sum(s * (_pf4_bilinear(f(*p), f(*q))) for p, q, s in _PARTS4)
            euler = pf * vol / (4 * math.pi ** 2)
        if jc is not None:
            trcff = sum(2 * s * _complex_trace(f(*p) @ f(*q), jc)
                        for p, q, s in _PARTS4)
            trc1 = sum(2 * s * _complex_trace(f(*p), jc)
                       * _complex_trace(f(*q), jc) for p, q, s in _PARTS4)
            val = (trcff - trc1) * vol / (8 * math.pi ** 2)
            if abs(val.imag) > tolerance:
                raise BundleError("c2 density has a nonreal value")
            c2 = val.real
    return CharClassReport(base=space.name, rank=bundle.rank, euler=euler,
                           p1=p1, c1=c1, c2=c2, tolerance=tolerance)


def _pf4_bilinear(a, b):
    return _pf4_polarized(a, b) + _pf4_polarized(b, a)


def _pf4_polarized(a, b):
    return a[0, 1] * b[2, 3] - a[0, 2] * b[1, 3] + a[0, 3] * b[1, 2]


# ---------------------------------------------------------------------------
# classification

@dataclass(frozen=True)
class BundleReport:
    label: str
    rank: int
    rep_type: str
    components: tuple
    char: CharClassReport | None
    bracket_ok: bool
    kernel_ok: bool
    roundtrip_ok: bool

    def to_dict(self):
        return {
            "label": self.label, "rank": self.rank, "type": self.rep_type,
            "components": list(self.components),
            "char": None if self.char is None else self.char.to_dict(),
            "verified": {
                "bracket_identity": self.bracket_ok,
                "kernel_inclusion": self.kernel_ok,
                "reconstruction_roundtrip": self.roundtrip_ok,
            },
        }


def catalog_irreps(space, rank_bound, weight_cap=6):
    """Irreducible candidates (descriptor, rep) with real rank <= rank_bound.

    weight_cap bounds the circle weights k admitted for so(2) and u(1)/u(2)
    sources, where infinitely many irreps share each rank.
    """
    name = space.name
    out = [("trivial:1", rp.trivial_rep(space.isotropy_ref, 1))]
    if name in ("S2",):
        for k in range(1, weight_cap + 1):
            if 2 <= rank_bound:
                out.append((f"spin2:{k}", rp.spin2_irrep(k)))
    elif name == "S3":
        cands = [("su2 adjoint", ss.isotropy_rep(space).relabel("so3-fund")),
                 ("spinor:3", rp.spin_fundamental(3)),
                 ("sym2", rp.sym2_traceless(ss.isotropy_rep(space)))]
        out += [(r.label, r) for _, r in cands if r.target_dim <= rank_bound]
    elif name == "S4":
        for k1 in range(rank_bound + 1):
            for k2 in range(rank_bound + 1):
                if k1 == k2 == 0:
                    continue
                cdim = (k1 + 1) * (k2 + 1)
                rdim = cdim if (k1 + k2) % 2 == 0 else 2 * cdim
                if rdim <= rank_bound:
                    out.append((f"spin4:({k1},{k2})", rp.spin4_irrep(k1, k2)))
    elif name == "S5":
        cands = [ss.isotropy_rep(space).relabel("so5-fund"),
                 rp.spin_fundamental(5)]
        out += [(r.label, r) for r in cands if r.target_dim <= rank_bound]
    elif name == "CP1":
        for k in range(1, weight_cap + 1):
            if 2 <= rank_bound:
                out.append((f"det:(1,{k})", rp.un_det_power(1, k)))
    elif name == "CP2":
        for k in range(1, weight_cap + 1):
            if 2 <= rank_bound:
                out.append((f"det:(2,{k})", rp.un_det_power(2, k)))
        for k in range(-weight_cap, weight_cap + 1):
            if 4 <= rank_bound:
                out.append((f"fund:(2,{k})", rp.un_fundamental_twist(2, k)))
    else:
        raise UnsupportedSpace(
            f"no irrep catalog for {name}; supported: S2 S3 S4 S5 CP1 CP2")
    # drop equivalent duplicates among the irreducibles themselves
    kept = []
    for lbl, r in out:
        if not any(rp.equivalent(r, r2) for _, r2 in kept):
            kept.append((lbl, r))
    return kept


def _rep_type(rep):
    try:
        return rp.classify_type(rep).kind
    except rp.Reducible:
        return "reducible"


def classify_bundles(space, rank_bound, weight_cap=6):
    """Enumerate parallel bundles of rank <= rank_bound up to equivalence."""
    irreps = catalog_irreps(space, rank_bound, weight_cap=weight_cap)
    curv = ss.curvature_operator(space)

    candidates = []  # (tuple of labels, rep)
    def extend(start, labels, rep, dim):
        for i in range(start, len(irreps)):
            lbl, r = irreps[i]
            nd = dim + r.target_dim
            if nd > rank_bound:
                continue
            combined = r if rep is None else rp.direct_sum(rep, r)
            nl = labels + (lbl,)
            candidates.append((nl, combined))
            extend(i, nl, combined, nd)

    extend(0, (), None, 0)

    reports = []
    kept_reps = []
    for labels, rep in sorted(candidates,
                              key=lambda c: (c[1].target_dim, c[0])):
        if any(k.target_dim == rep.target_dim and rp.equivalent(k, rep)
               for k in kept_reps):
            continue
        kept_reps.append(rep)
        bundle = induce(space, rep, curv=curv)
        try:
            rec = recover_rho_hat(space, bundle.blocks, curv=curv)
            back = rec.as_rep()
            roundtrip = np.abs(back.images - _restrict_to_hol(
                space, rep, curv)).max(initial=0.0) <= 1e-8
        except (BundleError, NotInImage):
            roundtrip = False
        try:
            char = characteristic_numbers(bundle)
        except UnsupportedBase:
            char = None
        label = labels[0] if len(labels) == 1 else "sum(" + ",".join(labels) + ")"
        reports.append(BundleReport(
            label=label, rank=rep.target_dim, rep_type=_rep_type(rep),
            components=labels, char=char,
            bracket_ok=check_bracket_identity(bundle, tol=1e-8).ok,
            kernel_ok=check_kernel_inclusion(bundle, tol=1e-8).ok,
            roundtrip_ok=bool(roundtrip),
        ))
    reports.sort(key=lambda r: (r.rank, r.label))
    return reports


def _restrict_to_hol(space, rep, curv):
    """Expected reconstruction target: for the classification spaces pihat
    maps the isotropy algebra into Im R^M, so recovery should return the
    rep itself."""
    return rep.images
