"""Cartan pairs, curvature operators, Condition A, catalog."""

from fractions import Fraction

import numpy as np
import pytest

from symcurv import _exact as ex
from symcurv import liealg
from symcurv import symspace as ss


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_unit_sphere_curvature_identity(n):
    curv = ss.curvature_operator(ss.catalog(f"S{n}"))
    assert ex.is_zero(curv.matrix - ex.feye(curv.dim))


def test_cp2_spectrum():
    curv = ss.curvature_operator(ss.catalog("CP2"))
    assert curv.spectrum() == [(0.0, 2), (2.0, 3), (6.0, 1)]
    assert curv.kernel_basis.shape[1] == 2
    assert curv.image_basis.shape[1] == 4


def test_cp1_holomorphic_normalization():
    curv = ss.curvature_operator(ss.catalog("CP1"))
    assert curv.matrix[0, 0] == 4


def test_not_cartan_pair():
    so4 = liealg.make_so(4)
    # h = span{E12} leaves [m, m] outside h (e.g. [E13, E14] lands on E34)
    with pytest.raises(ss.NotCartanPair):
        ss.make_symmetric_space(so4, (0,), [1] * 5, "bad")


def test_metric_not_invariant():
    so4 = liealg.make_so(4)
    h = tuple(range(3, so4.dim))
    with pytest.raises(ss.MetricNotInvariant):
        ss.make_symmetric_space(so4, h, [1, 2, 3], "bad")
    with pytest.raises(ss.MetricNotInvariant):
        ss.make_symmetric_space(so4, h, [1, 1, -1], "bad")


def test_condition_a_table():
    holds = ["S2", "S4", "CP2", "S2xS2", "S2xR1", "SU2_group"]
    fails = ["R2", "S2xR2", "R1xR1"]
    for name in holds:
        assert ss.condition_a(ss.catalog(name)).holds, name
    for name in fails:
        rep = ss.condition_a(ss.catalog(name))
        assert not rep.holds and rep.witness is not None, name


def test_product_space_structure():
    p = ss.catalog("S2xS3")
    assert p.m_dim == 5
    curv = ss.curvature_operator(p)
    # mixed bivectors are flat: kernel has dim 2*3 = 6
    assert curv.kernel_basis.shape[1] == 6
    assert ss.condition_a(p, curv).holds


def test_su2_group_round():
    curv = ss.curvature_operator(ss.catalog("SU2_group"))
    assert curv.spectrum() == [(1.0, 3)]


def test_eigenspace_structure():
    for name in ["S4", "CP2", "S2xS2"]:
        curv = ss.curvature_operator(ss.catalog(name))
        res = ss.eigenspace_structure_residuals(curv)
        assert max(res.values()) < 1e-8, (name, res)


def test_rescale_metric():
    s2 = ss.rescale_metric(ss.catalog("S2"), 4)
    curv = ss.curvature_operator(s2)
    assert curv.matrix[0, 0] == Fraction(1, 4)


def test_catalog_errors():
    with pytest.raises(ss.UnknownSpace):
        ss.catalog("S9")
    with pytest.raises(ss.UnknownSpace):
        ss.catalog("CP7")
    with pytest.raises(ss.UnknownSpace):
        ss.catalog("bogus")


def test_catalog_product_grammar():
    assert ss.catalog("S2×R1").name == "S2xR1"


def test_serialization_roundtrip():
    s3 = ss.catalog("S3")
    back = ss.space_from_text(ss.space_to_text(s3))
    assert back.name == "S3"
    assert ex.is_zero(ss.curvature_operator(back).matrix
                      - ss.curvature_operator(s3).matrix)


def test_isotropy_rep_is_homomorphism():
    from symcurv import reps
    for name in ["S2", "S4", "CP2", "SU2_group", "S2xS3"]:
        rep = ss.isotropy_rep(ss.catalog(name))
        assert reps.validate_homomorphism(rep).ok, name
