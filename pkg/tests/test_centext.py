import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import F5
from jpgeom import catalog
from jpgeom.errors import NotCentralExtension, ZeroPartNotGenerated
from jpgeom.exactla import QQ, Matrix
from jpgeom.centext import (
    cocycle_extension,
    lambda2_quotient,
    lift_grading,
    lifted_group_map,
    quotient_by_center,
    satisfies_zero_part_condition,
    universal_extension,
    weak_universal_map,
)
from jpgeom.projgroup import GroupWord


@pytest.mark.parametrize("field", [QQ, F5])
def test_trivial_pair_extension_dims(field):
    # basis x+, E, x-: the only Jacobi triple gives -x+^x- + x+^x- = 0, so
    # <g, g> = Lambda^2 g has dim 3, and E~ is adjoined since g is not perfect
    e = catalog.get("trivial", field)
    assert lambda2_quotient(e.algebra).algebra.dim == 3
    ext = universal_extension(e.algebra, e.grading)
    assert (ext.total.dim, ext.kernel.dim) == (4, 1)
    assert ext.total.center().contains(ext.kernel)
    assert ext.lifted_grading.dims == (1, 2, 1)


@pytest.mark.parametrize("name", ["sl2", "sl3"])
def test_perfect_algebras_are_their_own_extension(name):
    e = catalog.get(name, F5)
    ext = universal_extension(e.algebra, e.grading)
    assert ext.kernel.dim == 0 and ext.total.dim == e.algebra.dim


def test_zero_part_condition():
    sl2z = catalog.get("sl2z", F5)
    assert not satisfies_zero_part_condition(sl2z.algebra, sl2z.grading)
    with pytest.raises(ZeroPartNotGenerated):
        universal_extension(sl2z.algebra, sl2z.grading)


def test_heisenberg_cocycle_extension():
    heis = cocycle_extension((1, 1), Matrix(F5, [[1]]), F5)
    l = heis.total
    xp, xm, z = l.basis_vector(0), l.basis_vector(2), l.basis_vector(3)
    assert l.bracket(xp, xm) == z
    assert l.center().dim == 1 and heis.lifted_grading.dims == (1, 2, 1)
    split = cocycle_extension((1, 1), Matrix(F5, [[0]]), F5)
    assert split.total.bracket(xp, xm) == tuple([0] * 4)


def test_weak_universality():
    triv = catalog.get("trivial", F5)
    ext = universal_extension(triv.algebra, triv.grading)
    heis = cocycle_extension((1, 1), Matrix(F5, [[1]]), F5)
    alpha = weak_universal_map(ext, heis)
    assert heis.projection @ alpha == ext.projection
    assert ext.total.is_homomorphism_to(heis.total, alpha)


def test_non_central_projection_rejected():
    triv = catalog.get("trivial", F5)
    ext = universal_extension(triv.algebra, triv.grading)
    with pytest.raises(NotCentralExtension):
        lift_grading(ext.total, ext.section_data, triv.algebra, Matrix.zeros(F5, 3, 4))


@given(a=st.integers(0, 4), b=st.integers(0, 4))
def test_lift_then_push_is_identity(a, b):
    heis = cocycle_extension((1, 1), Matrix(F5, [[1]]), F5)
    w = GroupWord.parse(f"x+:{a};dil:2;x-:{b}", heis.base_grading)
    assert lifted_group_map(heis, lifted_group_map(heis, w, "lift"), "push") == w


def test_quotient_by_center_kills_center():
    gl2 = catalog.get("gl2", F5).algebra
    quot, proj = quotient_by_center(gl2)
    assert quot.dim == 3 and quot.center().dim == 0
    assert gl2.is_homomorphism_to(quot, proj)
