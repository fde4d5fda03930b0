import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import F5, vectors
from jpgeom import catalog
from jpgeom.errors import InvalidPair, NotInvertible, NotQuasiInvertible
from jpgeom.exactla import QQ, Matrix
from jpgeom.grading import minus_filtration, plus_filtration
from jpgeom.jordan import (
    MATRIX_SIGN,
    JordanPair,
    bergman,
    check_pair,
    direct_sum_pair,
    euler_operator,
    flag_spaces_coincide,
    involution_from_jts,
    is_pair_automorphism,
    is_pair_derivation,
    is_selfdual,
    jordan_algebra_from_pair,
    jordan_inverse,
    jts_from_involution,
    pair_from_grading,
    pair_is_selfdual,
    quasi_inverse,
    rectangular_pair,
    symmetric_multiply,
    tkk,
    trivial_pair,
)
from jpgeom.projgroup import orbit_enumerate


def mat(v, r, c):
    return Matrix.from_rows(F5, [tuple(v[i * c:(i + 1) * c]) for i in range(r)], c)


@pytest.mark.parametrize("name", catalog.names())
def test_catalog_pairs_satisfy_identities(name):
    assert check_pair(catalog.get(name, F5).pair)


def test_broken_tensor_rejected():
    good = rectangular_pair(1, 1, F5)
    bad = JordanPair.build(F5, 1, 1, [[[[2]]]], [[[[3]]]], MATRIX_SIGN)
    assert check_pair(good) and not check_pair(bad)
    with pytest.raises(InvalidPair):
        tkk(bad)


@given(x=vectors(F5, 2), y=vectors(F5, 2), z=vectors(F5, 2))
def test_rectangular_triple_product(x, y, z):
    p = rectangular_pair(1, 2, F5)
    X, Y, Z = mat(x, 1, 2), mat(y, 2, 1), mat(z, 1, 2)
    assert p.T(1, x, y, z) == (X @ Y @ Z + Z @ Y @ X).flat()


@given(x=vectors(F5, 2), y=vectors(F5, 2), z=vectors(F5, 2))
def test_bergman_operator_closed_form(x, y, z):
    # B(x, y) z = (1 - xy) z (1 - yx) for rectangular matrices
    p = rectangular_pair(1, 2, F5)
    X, Y, Z = mat(x, 1, 2), mat(y, 2, 1), mat(z, 1, 2)
    expected = (Matrix.identity(F5, 1) - X @ Y) @ Z @ (Matrix.identity(F5, 2) - Y @ X)
    assert bergman(p, x, y)[0].apply(z) == expected.flat()


def test_scalar_quasi_inverse_closed_form():
    p = rectangular_pair(1, 1, F5)
    defined = 0
    for x, y in itertools.product(range(5), repeat=2):
        if (1 - x * y) % 5 == 0:
            with pytest.raises(NotQuasiInvertible):
                quasi_inverse(p, (x,), (y,))
            continue
        defined += 1
        assert quasi_inverse(p, (x,), (y,)) == (x * pow(1 - x * y, -1, 5) % 5,)
    # xy = 1 has 4 solutions in F_5
    assert defined == 25 - 4


@given(data=st.data())
def test_jordan_inverse_is_matrix_inverse(data):
    p = rectangular_pair(2, 2, F5)
    x = data.draw(vectors(F5, 4))
    X = mat(x, 2, 2)
    if not X.is_invertible():
        with pytest.raises(NotInvertible):
            jordan_inverse(p, x)
        return
    assert jordan_inverse(p, x) == X.inverse().scale(-1).flat()
    assert jordan_inverse(p, jordan_inverse(p, x), -1) == tuple(x)


@pytest.mark.parametrize("name", ["scalar", "rect12", "diag2", "trivial"])
def test_tkk_recovers_pair(name):
    pair = catalog.get(name, F5).pair
    t = tkk(pair)
    assert pair_from_grading(t.algebra, t.grading) == pair
    assert t.grading.dims[0] == pair.nplus and t.grading.dims[2] == pair.nminus


def test_tkk_dimensions():
    assert tkk(rectangular_pair(1, 1, QQ)).algebra.dim == 3
    assert tkk(trivial_pair(1, 1, QQ)).algebra.dim == 3
    assert tkk(rectangular_pair(1, 2, F5)).algebra.dim == 8


def test_euler_operator_is_a_derivation():
    for p in (rectangular_pair(1, 2, F5), trivial_pair(2, 1, F5)):
        a, b = euler_operator(p)
        assert is_pair_derivation(p, (a, b))
        # dilation: 2 on V+, 2^-1 = 3 on V-
        dil = (Matrix.identity(F5, p.nplus).scale(2), Matrix.identity(F5, p.nminus).scale(3))
        assert is_pair_automorphism(p, dil)
        assert not is_pair_automorphism(p, (dil[0], dil[0]))


def test_direct_sum_pair():
    s = direct_sum_pair(rectangular_pair(1, 1, F5), rectangular_pair(1, 2, F5))
    assert (s.nplus, s.nminus) == (3, 3) and check_pair(s)


def test_pair_json_round_trip():
    p = rectangular_pair(1, 2, QQ)
    assert JordanPair.from_json(p.to_json()) == p
    assert p.flipped().flipped().sign == p.sign


def test_selfduality_reports(sl2):
    res = is_selfdual(sl2.algebra, sl2.grading)
    assert res.status == "yes" and len(res.witnesses) == 4
    assert pair_is_selfdual(trivial_pair(1, 1, F5)).status == "no"
    assert pair_is_selfdual(rectangular_pair(1, 2, F5)).status == "no"


@pytest.mark.parametrize("name,same", [("sl2", True), ("gl2", True), ("trivial", False), ("rect12", False)])
def test_flag_spaces_predicate(name, same):
    d = catalog.get(name, F5).grading
    assert flag_spaces_coincide(d) is same


def test_jts_round_trip(sl2):
    t = jts_from_involution(sl2.algebra, sl2.grading, sl2.involution)
    assert t.is_valid()
    l, d, th = involution_from_jts(t)
    assert jts_from_involution(l, d, th) == t


def test_unital_jordan_algebra():
    p = rectangular_pair(1, 1, F5)
    e = (2,)  # Q(2) = 4 = -1
    alg = jordan_algebra_from_pair(p, e)
    assert alg.is_valid()
    assert alg.mul(e, (3,)) == (3,)


def test_symmetric_space_laws(sl2):
    th = sl2.involution
    d = sl2.grading
    points = orbit_enumerate(d, minus_filtration(d))
    checked = 0
    for x, y in itertools.product(points, repeat=2):
        try:
            mxy = symmetric_multiply(th, x, y)
        except ValueError:
            continue
        checked += 1
        assert symmetric_multiply(th, x, x) == x
        assert symmetric_multiply(th, x, mxy) == y
    assert checked > 0
    assert plus_filtration(d) in points
