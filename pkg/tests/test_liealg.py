"""Exact Lie algebra models."""

import numpy as np
import pytest

from symcurv import _exact as ex
from symcurv import liealg


def _unit(dim, i):
    v = ex.fzeros(dim)
    v[i] = ex.ONE
    return v


def test_so3_brackets():
    so3 = liealg.make_so(3)
    assert so3.basis_labels == ("E12", "E13", "E23")
    # matrix-commutator oracle: [E12, E13] = E23 in this convention
    c = so3.structure[0, 1]
    assert list(c) == [0, 0, 1]
    m12, m13 = so3.matrices[0], so3.matrices[1]
    comm = ex.commutator(m12, m13)
    assert ex.is_zero(comm - so3.matrices[2])


@pytest.mark.parametrize("alg", [
    liealg.make_so(3), liealg.make_so(4), liealg.make_so(5),
    liealg.make_su(2), liealg.make_su(3), liealg.make_u(2),
    liealg.make_abelian(3),
])
def test_validate(alg):
    rep = liealg.validate(alg)
    assert rep.ok, rep


def test_validate_catches_jacobi_failure():
    so3 = liealg.make_so(3)
    c = so3.structure.copy()
    c[0, 1, 2] = ex.frac(2)
    c[1, 0, 2] = ex.frac(-2)
    bad = liealg.LieAlgebraModel(
        name="bad", dim=3, basis_labels=so3.basis_labels, structure=c,
        inner_product=so3.inner_product)
    rep = liealg.validate(bad)
    assert not rep.ok and rep.witness is not None


def test_su2_structure():
    su2 = liealg.make_su(2)
    assert su2.dim == 3
    # trace form is 2*identity; Killing form is -8*identity
    assert ex.is_zero(su2.inner_product - 2 * ex.feye(3))
    kf = liealg.killing_form(su2)
    assert ex.is_zero(kf + 8 * ex.feye(3))


def test_realify_bracket():
    # realification preserves commutators
    su2 = liealg.make_su(2)
    for i in range(3):
        for j in range(3):
            comm = ex.commutator(su2.matrices[i], su2.matrices[j])
            want = ex.fzeros(comm.shape)
            for k in range(3):
                want = want + su2.structure[i, j, k] * su2.matrices[k]
            assert ex.is_zero(comm - want)


def test_product_algebra():
    a = liealg.make_so(3)
    b = liealg.make_su(2)
    p = liealg.product_algebra(a, b)
    assert p.dim == 6
    assert p.name == "so(3)+su(2)"
    assert liealg.validate(p).ok
    # cross brackets vanish
    assert ex.is_zero(p.bracket(_unit(6, 0), _unit(6, 4)))


def test_change_basis():
    so3 = liealg.make_so(3)
    p = ex.feye(3)
    p[0, 0] = ex.frac(2)
    alg = liealg.change_basis(so3, p, name="scaled")
    assert liealg.validate(alg).ok
    # [2*E12, E13] = 2*E23
    assert alg.structure[0, 1, 2] == 2


def test_serialization_roundtrip():
    su2 = liealg.make_su(2)
    text = liealg.to_text(su2)
    back = liealg.from_text(text)
    assert back.name == su2.name
    assert back.basis_labels == su2.basis_labels
    assert ex.is_zero(back.structure - su2.structure)
    assert ex.is_zero(back.inner_product - su2.inner_product)


def test_abelian():
    r2 = liealg.make_abelian(2)
    assert ex.is_zero(r2.structure)
    assert liealg.validate(r2).ok
    assert liealg.make_abelian(0).dim == 0
