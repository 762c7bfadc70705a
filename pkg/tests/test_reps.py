"""Representation constructors and type classification."""

import numpy as np
import pytest

from symcurv import liealg, reps
from symcurv import symspace as ss

ALL_REPS = [
    reps.spin2_irrep(1), reps.spin2_irrep(2), reps.spin2_irrep(-3),
    reps.su2_irrep(0), reps.su2_irrep(1), reps.su2_irrep(2),
    reps.su2_irrep(5),
    reps.spin4_irrep(1, 0), reps.spin4_irrep(1, 1), reps.spin4_irrep(2, 0),
    reps.spin4_irrep(2, 1),
    reps.spin_fundamental(3), reps.spin_fundamental(5),
    reps.spin_fundamental(4, "+"), reps.spin_fundamental(6, "-"),
    reps.un_det_power(2, 3), reps.un_fundamental_twist(2, -1),
]


@pytest.mark.parametrize("rep", ALL_REPS, ids=lambda r: r.label)
def test_homomorphism_and_skewness(rep):
    report = reps.validate_homomorphism(rep)
    assert report.ok, (rep.label, report)


def test_spin2_normalization():
    # k=2 is the tangent rep of the 2-sphere; k=1 has half the norm
    tangent = ss.isotropy_rep(ss.catalog("S2"))
    assert np.allclose(reps.spin2_irrep(2).images, tangent.images)
    assert np.isclose(np.linalg.norm(reps.spin2_irrep(1).images),
                      0.5 * np.linalg.norm(reps.spin2_irrep(2).images))


def test_spin2_k_minus_k_conjugate():
    d = np.diag([1.0, -1.0])
    for k in (1, 3, 5):
        a = reps.spin2_irrep(k).images[0]
        b = reps.spin2_irrep(-k).images[0]
        assert np.allclose(d @ a @ d, b)


def test_su2_dimensions_and_structure_map():
    for k in range(7):
        rep = reps.su2_irrep(k)
        assert rep.target_dim == 2 * (k + 1)
        j = rep.structure_map
        assert np.allclose(j @ j, (-1) ** k * np.eye(rep.target_dim))
        for m in rep.images:
            assert np.abs(j @ m - m @ j).max() < 1e-12


def test_su2_types():
    for k in range(1, 7):
        rep = reps.su2_irrep(k)
        if k % 2 == 1:
            assert reps.classify_type(rep).kind == "quaternionic"
        else:
            with pytest.raises(reps.Reducible):
                reps.classify_type(rep)
            real = reps.real_form(rep)
            assert real.target_dim == k + 1
            assert reps.classify_type(real).kind == "real"


def test_su2_2_real_form_is_adjoint():
    real = reps.real_form(reps.su2_irrep(2))
    su2 = liealg.make_su(2)
    c = su2.structure_float()
    adjoint = reps.AlgebraRep(
        su2, np.stack([c[i].T for i in range(3)]), label="ad")
    assert reps.validate_homomorphism(adjoint).ok
    assert reps.equivalent(real, adjoint)


def test_spin4_dims_and_types():
    for k1 in range(3):
        for k2 in range(3):
            if k1 == k2 == 0:
                continue
            rep = reps.spin4_irrep(k1, k2)
            cdim = (k1 + 1) * (k2 + 1)
            if (k1 + k2) % 2 == 0:
                assert rep.target_dim == cdim
                assert reps.classify_type(rep).kind == "real"
            else:
                assert rep.target_dim == 2 * cdim
                assert reps.classify_type(rep).kind == "quaternionic"


def test_spin4_11_is_tangent():
    tangent = ss.isotropy_rep(ss.catalog("S4"))
    assert reps.equivalent(reps.spin4_irrep(1, 1), tangent)


def test_spinor_dimensions():
    # complex dims 2, 4, 4, 8, 8, 16 for n = 3..8
    want = {3: 4, 4: 8, 5: 8, 6: 16, 7: 16, 8: 32}
    for n, rdim in want.items():
        assert reps.spin_fundamental(n).target_dim == rdim
    assert reps.spin_fundamental(4, "+").target_dim == 4
    assert reps.spin_fundamental(6, "+").target_dim == 8
    with pytest.raises(reps.UnsupportedDim):
        reps.spin_fundamental(9)
    with pytest.raises(reps.UnsupportedDim):
        reps.spin_fundamental(5, "+")


def test_exterior_power():
    tangent = ss.isotropy_rep(ss.catalog("S4"))
    l1 = reps.exterior_power(tangent, 1)
    assert np.allclose(l1.images, tangent.images)
    l2 = reps.exterior_power(tangent, 2)
    assert l2.target_dim == 6
    assert reps.validate_homomorphism(l2).ok
    # splits into the self-dual and anti-self-dual 3-dim summands
    assert reps.hom_dim(reps.spin4_irrep(2, 0), l2) >= 1
    assert reps.hom_dim(reps.spin4_irrep(0, 2), l2) >= 1


def test_sym2_traceless():
    fund = ss.isotropy_rep(ss.catalog("S3"))
    rep = reps.sym2_traceless(fund)
    assert rep.target_dim == 5
    assert reps.validate_homomorphism(rep).ok
    assert reps.classify_type(rep).kind == "real"


def test_tensor_clebsch_gordan():
    t = reps.tensor(reps.su2_irrep(1), reps.su2_irrep(1))
    assert t.target_dim == 16
    assert reps.validate_homomorphism(t).ok
    assert reps.hom_dim(reps.real_form(reps.su2_irrep(2)), t) > 0
    assert reps.hom_dim(reps.trivial_rep(t.source, 1), t) > 0


def test_direct_sum_and_source_mismatch():
    s = reps.direct_sum(reps.spin4_irrep(2, 0),
                        reps.trivial_rep(liealg.make_so(4), 1))
    assert s.target_dim == 4
    with pytest.raises(reps.SourceMismatch):
        reps.direct_sum(reps.spin2_irrep(1), reps.su2_irrep(1))


def test_un_constructors():
    det = reps.un_det_power(2, 2)
    assert det.target_dim == 2
    fund = reps.un_fundamental_twist(2, 1)
    assert fund.target_dim == 4
    # covering relation: X -> tr(X) I + X reproduces the CP^2 isotropy rep
    iso = ss.isotropy_rep(ss.catalog("CP2"))
    assert reps.equivalent(fund, iso)


def test_classify_invariance_under_conjugation():
    rng = np.random.default_rng(5)
    rep = reps.spin4_irrep(1, 0)
    q, _ = np.linalg.qr(rng.standard_normal((4, 4)))
    conj = reps.AlgebraRep(rep.source,
                           np.stack([q.T @ m @ q for m in rep.images]),
                           label="conj")
    assert reps.classify_type(conj).kind == "quaternionic"


def test_descriptor_grammar():
    r = reps.from_descriptor("sum(spin4:(2,0),trivial:1)")
    assert r.target_dim == 4 and r.source.name == "so(4)"
    r = reps.from_descriptor("ext(spin2:2,su2:1)")
    assert r.source.name == "so(2)+su(2)"
    for bad in ["bogus:(9", "spin4:(1)", "sum()", "spin4:1,2", "nope"]:
        with pytest.raises(reps.DescriptorError):
            reps.from_descriptor(bad)
    with pytest.raises(reps.RepError):
        reps.from_descriptor("spin2:0")
