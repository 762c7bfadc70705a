"""Orthogonal representations of isotropy algebras.

Complex irreducibles are stored realified: a complex k-dim rep becomes a
real 2k-dim rep carrying a complex structure J_c (multiplication by i) and,
when one exists, a structure map (the realification of an antilinear
intertwiner J with J^2 = +1 or -1). Type classification works through the
real commutant: dimension 1 = real, 2 = complex, 4 = quaternionic, anything
else = reducible.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import _exact as ex
from . import liealg
from .linalg import EPS


class RepError(Exception):
    pass


class SourceMismatch(RepError):
    pass


class Reducible(RepError):
    pass


class UnsupportedDim(RepError):
    pass


class DescriptorError(RepError):
    pass


@dataclass(frozen=True)
class AlgebraRep:
    source: liealg.LieAlgebraModel
    images: np.ndarray  # (source.dim, N, N) real
    label: str = ""
    complex_structure: np.ndarray | None = None  # J_c, J_c^2 = -I
    structure_map: np.ndarray | None = None  # realified antilinear J
    structure_sign: int = 0  # J^2 = structure_sign * I (0 if absent)

    @property
    def target_dim(self):
        return self.images.shape[1]

    def image(self, coeffs):
        coeffs = np.asarray(coeffs, dtype=float)
        return np.tensordot(coeffs, self.images, axes=(0, 0))

    def relabel(self, label):
        return AlgebraRep(self.source, self.images, label,
                          self.complex_structure, self.structure_map,
                          self.structure_sign)


@dataclass(frozen=True)
class RepType:
    kind: str  # "real" | "complex" | "quaternionic"
    commutant_dim: int
    witness: np.ndarray | None = None


@dataclass(frozen=True)
class HomReport:
    ok: bool
    max_bracket_error: float
    max_skew_error: float
    max_jc_error: float


def _realify_linear(m):
    """Complex matrix acting C^n -> real 2n x 2n in the (Re, Im) splitting."""
    a, b = m.real, m.imag
    return np.block([[a, -b], [b, a]])


def _realify_antilinear(m):
    """v -> m @ conj(v) as a real-linear map on R^{2n}."""
    a, b = m.real, m.imag
    return np.block([[a, b], [b, -a]])


def _jc(n):
    z = np.zeros((n, n))
    i = np.eye(n)
    return np.block([[z, -i], [i, z]])


def validate_homomorphism(rep, tol=None) -> HomReport:
    tol = EPS * 10 if tol is None else tol
    c = rep.source.structure_float()
    d = rep.source.dim
    bracket_err = 0.0
    for i in range(d):
        for j in range(i + 1, d):
            lhs = rep.images[i] @ rep.images[j] - rep.images[j] @ rep.images[i]
            rhs = np.tensordot(c[i, j], rep.images, axes=(0, 0))
            bracket_err = max(bracket_err, np.abs(lhs - rhs).max(initial=0.0))
    skew_err = max(
        (np.abs(m + m.T).max(initial=0.0) for m in rep.images), default=0.0
    )
    jc_err = 0.0
    if rep.complex_structure is not None:
        jc = rep.complex_structure
        jc_err = np.abs(jc @ jc + np.eye(rep.target_dim)).max()
        for m in rep.images:
            jc_err = max(jc_err, np.abs(jc @ m - m @ jc).max(initial=0.0))
    ok = max(bracket_err, skew_err, jc_err) <= tol
    return HomReport(ok, bracket_err, skew_err, jc_err)


# ---------------------------------------------------------------------------
# constructors

def trivial_rep(source, k, label=None):
    return AlgebraRep(
        source=source, images=np.zeros((source.dim, k, k)),
        label=label or f"trivial:{k}",
    )


def spin2_irrep(k):
    """Weight-k character realified: the so(2) generator maps to (k/2).J.

    The half-integral rate reflects the double cover: k = 2 is the
    tangent representation of the 2-sphere.
    """
    if k == 0:
        raise RepError("k = 0 is the trivial weight; use trivial_rep")
    so2 = liealg.make_so(2)
    img = np.array([[[0.0, -k / 2], [k / 2, 0.0]]])
    return AlgebraRep(
        source=so2, images=img, label=f"spin2:{k}", complex_structure=_jc(1),
    )


def _su2_complex(k):
    """Per-basis complex images of su(2) on degree-k polynomials.

    Basis of the space is the normalized monomial m_r = z1^r z2^(k-r) /
    sqrt(C(k,r)), r = 0..k; the action is X.p = -(dp)(Xz). Returns the
    three (k+1)x(k+1) images (one per make_su(2) basis element) and the
    antilinear structure-map matrix, m_r -> (-1)^r m_{k-r}.
    """
    su2 = liealg.make_su(2)
    images = np.zeros((3, k + 1, k + 1), dtype=complex)
    for t, mat in enumerate(su2.matrices):
        x, y = liealg.complex_parts(mat)
        xc = ex.to_float(x) + 1j * ex.to_float(y)
        a, b, c, d = xc[0, 0], xc[0, 1], xc[1, 0], xc[1, 1]
        dm = np.zeros((k + 1, k + 1), dtype=complex)
        for r in range(k + 1):
            dm[r, r] = r * a + (k - r) * d
            if r >= 1:
                dm[r - 1, r] = b * math.sqrt(r * (k - r + 1))
            if r <= k - 1:
                dm[r + 1, r] = c * math.sqrt((k - r) * (r + 1))
        images[t] = -dm
    jmat = np.zeros((k + 1, k + 1), dtype=complex)
    for r in range(k + 1):
        jmat[k - r, r] = (-1) ** r
    return su2, images, jmat


def su2_irrep(k):
    """Complex irreducible of su(2) with complex dimension k+1, realified."""
    if k < 0:
        raise RepError("k must be nonnegative")
    su2, images, jmat = _su2_complex(k)
    return AlgebraRep(
        source=su2,
        images=np.stack([_realify_linear(m) for m in images]),
        label=f"su2:{k}",
        complex_structure=_jc(k + 1),
        structure_map=_realify_antilinear(jmat),
        structure_sign=(-1) ** k,
    )


def real_form(rep, tol=None):
    """Fixed subspace of a structure map with J^2 = +1, as a rep of its own."""
    tol = EPS * 10 if tol is None else tol
    if rep.structure_map is None or rep.structure_sign != 1:
        raise RepError("rep has no structure map squaring to +1")
    j = rep.structure_map
    n = rep.target_dim
    if np.abs(j @ j - np.eye(n)).max() > tol:
        raise RepError("structure map does not square to +1")
    vals, vecs = np.linalg.eigh((j + j.T) / 2)
    q = vecs[:, vals > 0.5]
    images = np.stack([q.T @ m @ q for m in rep.images])
    resid = max(
        np.abs(m @ q - q @ (q.T @ m @ q)).max(initial=0.0) for m in rep.images
    )
    if resid > tol:
        raise RepError("fixed space of structure map is not invariant")
    return AlgebraRep(rep.source, images, label=rep.label + "|real")


@lru_cache(maxsize=1)
def _so4_split():
    """Exact maps from the su(2) basis onto the two ideals of so(4).

    Returns two 3x6 Fraction matrices P, Q: row a gives the so(4)
    coordinates of the image of su(2) basis element a. Both maps are Lie
    algebra homomorphisms, found by matching structure constants over
    signed permutations, and their images are orthogonal complements.
    """
    so4 = liealg.make_so(4)
    su2 = liealg.make_su(2)
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]

    def triple(coeff_list):
        out = ex.fzeros((3, 6))
        for r, terms in enumerate(coeff_list):
            for (i, j), c in terms:
                out[r, pairs.index((i, j))] = ex.frac(c)
        return out

    # self-dual and anti-self-dual generators, scaled to |.|^2 = 2
    u = triple([[((0, 1), 1), ((2, 3), 1)], [((0, 2), 1), ((1, 3), -1)],
                [((0, 3), 1), ((1, 2), 1)]])
    v = triple([[((0, 1), 1), ((2, 3), -1)], [((0, 2), 1), ((1, 3), 1)],
                [((0, 3), 1), ((1, 2), -1)]])

    def is_hom(m):
        for a in range(3):
            for b in range(3):
                lhs = so4.bracket(m[a], m[b])
                rhs = ex.fzeros(6)
                for c in range(3):
                    rhs = rhs + su2.structure[a, b, c] * m[c]
                if not all(x == y for x, y in zip(lhs, rhs)):
                    return False
        return True

    def find(block):
        for perm in itertools.permutations(range(3)):
            for signs in itertools.product((1, -1), repeat=3):
                m = np.stack([block[p] * ex.frac(s) for p, s in zip(perm, signs)])
                if is_hom(m):
                    return m
        raise RepError("so(4) splitting search failed")

    return find(u), find(v)


def spin4_irrep(k1, k2):
    """Irreducible of so(4) labeled by su(2) x su(2) weights (k1, k2).

    Complex dimension (k1+1)(k2+1); returned as the real form when k1+k2
    is even (structure map squares to +1) and realified otherwise.
    """
    if k1 < 0 or k2 < 0:
        raise RepError("k1, k2 must be nonnegative")
    so4 = liealg.make_so(4)
    p, q = _so4_split()
    # coordinates of each so(4) basis element along the two ideals:
    # |phi(B_a)|^2 = 2 in the trace form, so project with gram solve
    def coords(m):
        gram = ex.fzeros((3, 3))
        for a in range(3):
            for b in range(3):
                gram[a, b] = sum(
                    m[a][t] * m[b][t] * so4.inner_product[t, t] for t in range(6)
                )
        out = ex.fzeros((6, 3))
        for t in range(6):
            rhs = ex.farray([m[a][t] * so4.inner_product[t, t] for a in range(3)])
            out[t] = ex.solve(gram, rhs)
        return ex.to_float(out)

    cp, cq = coords(p), coords(q)
    _, im1, j1 = _su2_complex(k1)
    _, im2, j2 = _su2_complex(k2)
    n1, n2 = k1 + 1, k2 + 1
    images = np.zeros((6, n1 * n2, n1 * n2), dtype=complex)
    for t in range(6):
        a = np.tensordot(cp[t], im1, axes=(0, 0))
        b = np.tensordot(cq[t], im2, axes=(0, 0))
        images[t] = np.kron(a, np.eye(n2)) + np.kron(np.eye(n1), b)
    jmat = np.kron(j1, j2)
    rep = AlgebraRep(
        source=so4,
        images=np.stack([_realify_linear(m) for m in images]),
        label=f"spin4:({k1},{k2})",
        complex_structure=_jc(n1 * n2),
        structure_map=_realify_antilinear(jmat),
        structure_sign=(-1) ** (k1 + k2),
    )
    if (k1 + k2) % 2 == 0:
        return real_form(rep).relabel(rep.label)
    return rep


@lru_cache(maxsize=None)
def _gammas(n):
    """Anticommuting gamma matrices, g_i g_j + g_j g_i = -2 delta_ij."""
    s1 = np.array([[0, 1], [1, 0]], dtype=complex)
    s2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
    s3 = np.array([[1, 0], [0, -1]], dtype=complex)
    if n < 2:
        raise UnsupportedDim("need n >= 2")
    if n % 2 == 1:
        # append i times the chirality element of the even case below
        gam = list(_gammas(n - 1))
        omega = np.eye(gam[0].shape[0], dtype=complex) * (-1j) ** ((n - 1) // 2)
        for g in gam:
            omega = omega @ g
        gam.append(1j * omega)
        return tuple(gam)
    gam = [1j * s1, 1j * s2]
    while len(gam) < n:
        m = gam[0].shape[0]
        new = [np.kron(s1, g) for g in gam]
        new.append(1j * np.kron(s2, np.eye(m)))
        new.append(1j * np.kron(s3, np.eye(m)))
        gam = new
    return tuple(g.copy() for g in gam)


def spin_fundamental(n, chirality=None):
    """Spinor representation of so(n) via the Clifford construction.

    Generators go to (1/2) g_i g_j in the pair order of make_so(n). For
    even n, chirality "+" or "-" selects a half-spinor summand.
    """
    if not 3 <= n <= 8:
        raise UnsupportedDim("spin_fundamental supports 3 <= n <= 8")
    son = liealg.make_so(n)
    gam = _gammas(n)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    images = [0.5 * (gam[i] @ gam[j]) for i, j in pairs]
    label = f"spinor:{n}"
    if chirality is not None:
        if n % 2 != 0:
            raise UnsupportedDim("chiral summands exist only for even n")
        m = n // 2
        omega = np.eye(gam[0].shape[0], dtype=complex) * (-1j) ** m
        for g in gam:
            omega = omega @ g
        want = 1.0 if chirality == "+" else -1.0
        vals, vecs = np.linalg.eigh(omega.real) if np.abs(omega.imag).max() < 1e-12 \
            else np.linalg.eig(omega)
        sel = np.abs(vals - want) < 1e-9
        q = vecs[:, sel]
        images = [q.conj().T @ g @ q for g in images]
        label = f"spinor{chirality}:{n}"
    nd = images[0].shape[0]
    return AlgebraRep(
        source=son,
        images=np.stack([_realify_linear(m) for m in images]),
        label=label,
        complex_structure=_jc(nd),
    )


def exterior_power(rep, k):
    """Induced action on the k-th exterior power of the real target space."""
    n = rep.target_dim
    combos = list(itertools.combinations(range(n), k))
    pos = {c: i for i, c in enumerate(combos)}
    nd = len(combos)
    out = np.zeros((rep.source.dim, nd, nd))
    for t in range(rep.source.dim):
        m = rep.images[t]
        img = np.zeros((nd, nd))
        for ci, combo in enumerate(combos):
            for slot, idx in enumerate(combo):
                for new in range(n):
                    if m[new, idx] == 0 or new in combo and new != idx:
                        continue
                    replaced = list(combo)
                    replaced[slot] = new
                    order = np.argsort(replaced)
                    sign = _perm_sign(order)
                    img[pos[tuple(sorted(replaced))], ci] += sign * m[new, idx]
        out[t] = img
    return AlgebraRep(rep.source, out, label=f"L{k}({rep.label})")


def _perm_sign(order):
    sign = 1
    order = list(order)
    for i in range(len(order)):
        while order[i] != i:
            j = order[i]
            order[i], order[j] = order[j], order[i]
            sign = -sign
    return sign


def _sym_traceless_basis(n):
    basis = []
    for i in range(n):
        for j in range(i + 1, n):
            b = np.zeros((n, n))
            b[i, j] = b[j, i] = 1 / math.sqrt(2)
            basis.append(b)
    for k in range(1, n):
        b = np.zeros((n, n))
        b[:k, :k] = np.eye(k)
        b[k, k] = -k
        basis.append(b / math.sqrt(k * (k + 1)))
    return basis


def sym2_traceless(rep):
    """Induced action on traceless symmetric endomorphisms of the target."""
    n = rep.target_dim
    basis = _sym_traceless_basis(n)
    nd = len(basis)
    out = np.zeros((rep.source.dim, nd, nd))
    for t in range(rep.source.dim):
        m = rep.images[t]
        for ci, b in enumerate(basis):
            act = m @ b - b @ m
            for ri, r in enumerate(basis):
                out[t, ri, ci] = np.tensordot(r, act)
    return AlgebraRep(rep.source, out, label=f"S2_0({rep.label})")


def _u_complex_images(n):
    un = liealg.make_u(n)
    out = []
    for m in un.matrices:
        x, y = liealg.complex_parts(m)
        out.append(ex.to_float(x) + 1j * ex.to_float(y))
    return un, out


def un_det_power(n, k):
    """u(n) acting on C by k times the complex trace, realified."""
    un, mats = _u_complex_images(n)
    images = np.zeros((un.dim, 2, 2))
    for t, m in enumerate(mats):
        w = k * np.trace(m).imag
        images[t] = [[0.0, -w], [w, 0.0]]
    return AlgebraRep(un, images, label=f"det:({n},{k})",
                      complex_structure=_jc(1))


def un_fundamental_twist(n, k):
    """Fundamental of u(n) twisted by the k-th determinant power, realified."""
    un, mats = _u_complex_images(n)
    images = np.stack([
        _realify_linear(m + 1j * k * np.trace(m).imag * np.eye(n)) for m in mats
    ])
    return AlgebraRep(un, images, label=f"fund:({n},{k})",
                      complex_structure=_jc(n))


def direct_sum(r1, r2):
    if r1.source.name != r2.source.name or r1.source.dim != r2.source.dim:
        raise SourceMismatch(f"{r1.source.name} vs {r2.source.name}")
    n1, n2 = r1.target_dim, r2.target_dim
    images = np.zeros((r1.source.dim, n1 + n2, n1 + n2))
    images[:, :n1, :n1] = r1.images
    images[:, n1:, n1:] = r2.images
    jc = None
    if r1.complex_structure is not None and r2.complex_structure is not None:
        jc = np.zeros((n1 + n2, n1 + n2))
        jc[:n1, :n1] = r1.complex_structure
        jc[n1:, n1:] = r2.complex_structure
    return AlgebraRep(r1.source, images, label=f"sum({r1.label},{r2.label})",
                      complex_structure=jc)


def tensor(r1, r2):
    if r1.source.name != r2.source.name or r1.source.dim != r2.source.dim:
        raise SourceMismatch(f"{r1.source.name} vs {r2.source.name}")
    n1, n2 = r1.target_dim, r2.target_dim
    images = np.stack([
        np.kron(r1.images[t], np.eye(n2)) + np.kron(np.eye(n1), r2.images[t])
        for t in range(r1.source.dim)
    ])
    return AlgebraRep(r1.source, images, label=f"tensor({r1.label},{r2.label})")


def external_sum(r1, r2):
    """Rep of the product algebra acting blockwise: (X, Y) -> r1(X) + r2(Y)."""
    src = liealg.product_algebra(r1.source, r2.source)
    n1, n2 = r1.target_dim, r2.target_dim
    images = np.zeros((src.dim, n1 + n2, n1 + n2))
    images[: r1.source.dim, :n1, :n1] = r1.images
    images[r1.source.dim :, n1:, n1:] = r2.images
    return AlgebraRep(src, images, label=f"ext({r1.label},{r2.label})")


# ---------------------------------------------------------------------------
# commutant analysis

def commutant_basis(rep, tol=None):
    """Orthonormal basis (as matrices) of {C : [rho(X), C] = 0 for all X}."""
    tol = EPS * 100 if tol is None else tol
    n = rep.target_dim
    if rep.source.dim == 0:
        rows = np.zeros((1, n * n))
    else:
        rows = np.concatenate([
            np.kron(np.eye(n), m) - np.kron(m.T, np.eye(n)) for m in rep.images
        ])
    _, s, vt = np.linalg.svd(rows)
    s = np.concatenate([s, np.zeros(n * n - len(s))])
    null = vt[s <= tol * max(1.0, s.max(initial=1.0))]
    return [v.reshape(n, n) for v in null]


def hom_dim(r1, r2, tol=None):
    """Dimension of the space of intertwiners T with rho2(X) T = T rho1(X)."""
    tol = EPS * 100 if tol is None else tol
    n1, n2 = r1.target_dim, r2.target_dim
    if r1.source.dim == 0:
        return n1 * n2
    rows = np.concatenate([
        np.kron(np.eye(n1), r2.images[t]) - np.kron(r1.images[t].T, np.eye(n2))
        for t in range(r1.source.dim)
    ])
    s = np.linalg.svd(rows, compute_uv=False)
    s = np.concatenate([s, np.zeros(n1 * n2 - len(s))])
    return int((s <= tol * max(1.0, s.max(initial=1.0))).sum())


def equivalent(r1, r2, tol=None):
    """True when an invertible intertwiner exists (orthogonal targets)."""
    if r1.target_dim != r2.target_dim:
        return False
    if r1.source.dim != r2.source.dim:
        return False
    tol = EPS * 100 if tol is None else tol
    n = r1.target_dim
    if r1.source.dim == 0:
        return True
    rows = np.concatenate([
        np.kron(np.eye(n), r2.images[t]) - np.kron(r1.images[t].T, np.eye(n))
        for t in range(r1.source.dim)
    ])
    _, s, vt = np.linalg.svd(rows)
    s = np.concatenate([s, np.zeros(n * n - len(s))])
    null = vt[s <= tol * max(1.0, s.max(initial=1.0))]
    if len(null) == 0:
        return False
    # for orthogonal reps a generic combination of intertwiners is invertible
    rng = np.random.default_rng(7)
    for _ in range(8):
        t = np.tensordot(rng.standard_normal(len(null)), null, axes=(0, 0))
        t = t.reshape(n, n)
        if np.linalg.matrix_rank(t, tol=1e-8) == n:
            return True
    return False


def classify_type(rep, tol=None) -> RepType:
    """Real / complex / quaternionic classification via the commutant.

    Raises Reducible when the commutant is not one of the three division
    algebras R, C, H (detected by dimension plus definiteness of the
    squaring form on the traceless part).
    """
    comm = commutant_basis(rep, tol=tol)
    cdim = len(comm)
    n = rep.target_dim
    if cdim == 1:
        return RepType("real", 1, witness=np.eye(n))
    # traceless part of the commutant
    traceless = []
    for c in comm:
        t = c - np.trace(c) / n * np.eye(n)
        if np.abs(t).max() > 1e-10:
            traceless.append(t)
    tl = []
    if traceless:
        mat = np.stack([t.ravel() for t in traceless])
        u, s, vt = np.linalg.svd(mat)
        tl = [vt[i].reshape(n, n) for i in range(len(s))
              if s[i] > 1e-9 * s.max()]
    if cdim == 2 and len(tl) == 1:
        s = tl[0]
        s2 = s @ s
        lam = np.trace(s2) / n
        if lam < -1e-10 and np.abs(s2 - lam * np.eye(n)).max() < 1e-8:
            j = s / math.sqrt(-lam)
            return RepType("complex", 2, witness=j)
    if cdim == 4 and len(tl) == 3:
        gram = np.array([[np.trace(a @ b) for b in tl] for a in tl])
        if np.all(np.linalg.eigvalsh(gram) < -1e-10 * n):
            s = tl[0]
            lam = np.trace(s @ s) / n
            return RepType("quaternionic", 4, witness=s / math.sqrt(-lam))
    raise Reducible(f"commutant dimension {cdim} is not of division-algebra type")


def is_irreducible(rep, tol=None):
    try:
        classify_type(rep, tol=tol)
        return True
    except Reducible:
        return False


# ---------------------------------------------------------------------------
# descriptors

def _split_args(s):
    out, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [p.strip() for p in out]


def from_descriptor(desc, source=None):
    """Build a rep from a descriptor string.

    Grammar (ints may be negative where the constructor allows):
        rep      = atom | "sum(" rep { "," rep } ")" | "ext(" rep "," rep ")"
        atom     = "trivial:" int | "spin2:" int | "su2:" int
                 | "spin4:(" int "," int ")"
                 | "spinor:" int | "spinor+:" int | "spinor-:" int
                 | "det:(" int "," int ")" | "fund:(" int "," int ")"
    The optional source argument fixes the algebra for trivial factors.
    """
    desc = desc.strip()
    if desc.startswith("sum(") and desc.endswith(")"):
        parts = _split_args(desc[4:-1])
        if not parts or any(not p for p in parts):
            raise DescriptorError(f"bad sum descriptor {desc!r}")
        parsed = [None] * len(parts)
        src = source
        for i, p in enumerate(parts):
            if not p.startswith("trivial"):
                parsed[i] = from_descriptor(p, source=source)
                if src is None:
                    src = parsed[i].source
        for i, p in enumerate(parts):
            if parsed[i] is None:
                parsed[i] = from_descriptor(p, source=src)
        out = parsed[0]
        for r in parsed[1:]:
            out = direct_sum(out, r)
        return out
    if desc.startswith("ext(") and desc.endswith(")"):
        parts = _split_args(desc[4:-1])
        if len(parts) != 2:
            raise DescriptorError(f"ext takes exactly two reps: {desc!r}")
        return external_sum(from_descriptor(parts[0]), from_descriptor(parts[1]))
    if ":" not in desc:
        raise DescriptorError(f"cannot parse descriptor {desc!r}")
    name, _, params = desc.partition(":")
    name = name.strip()
    params = params.strip()

    def one_int():
        try:
            return int(params)
        except ValueError:
            raise DescriptorError(f"expected an integer parameter in {desc!r}")

    def two_ints():
        if not (params.startswith("(") and params.endswith(")")):
            raise DescriptorError(f"expected (a,b) parameters in {desc!r}")
        parts = _split_args(params[1:-1])
        if len(parts) != 2:
            raise DescriptorError(f"expected two parameters in {desc!r}")
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise DescriptorError(f"expected integer parameters in {desc!r}")

    if name == "trivial":
        k = one_int()
        if k < 0:
            raise DescriptorError("trivial rank must be nonnegative")
        return trivial_rep(source or liealg.make_abelian(0), k)
    if name == "spin2":
        return spin2_irrep(one_int())
    if name == "su2":
        return su2_irrep(one_int())
    if name == "spin4":
        return spin4_irrep(*two_ints())
    if name in ("spinor", "spinor+", "spinor-"):
        chir = None if name == "spinor" else name[-1]
        return spin_fundamental(one_int(), chirality=chir)
    if name == "det":
        return un_det_power(*two_ints())
    if name == "fund":
        return un_fundamental_twist(*two_ints())
    raise DescriptorError(f"unknown constructor {name!r}")
