import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import F5, vectors
from jpgeom import catalog
from jpgeom.errors import InvalidLieAlgebra
from jpgeom.exactla import QQ, Subspace
from jpgeom.grassmann import gl_algebra
from jpgeom.liecore import LieAlgebra, direct_sum, exp_nilpotent, subalgebra


def sl2_by_hand(field):
    return LieAlgebra.from_brackets(
        field,
        ["e", "h", "f"],
        {("e", "f"): {"h": 1}, ("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}},
    )


@pytest.mark.parametrize("field", [QQ, F5])
def test_catalog_sl2_matches_hand_table(field):
    assert catalog.get("sl2", field).algebra == sl2_by_hand(field)


def test_jacobi_violation_rejected():
    with pytest.raises(InvalidLieAlgebra):
        LieAlgebra.from_brackets(QQ, ["a", "b", "c"], {("a", "b"): {"c": 1}, ("b", "c"): {"a": 1}, ("a", "c"): {"a": 1}})


def test_duplicate_names_rejected():
    with pytest.raises(InvalidLieAlgebra):
        LieAlgebra(QQ, ["x", "x"], [[(0, 0), (0, 0)], [(0, 0), (0, 0)]])


@given(x=vectors(QQ, 3), y=vectors(QQ, 3), z=vectors(QQ, 3))
def test_bracket_identities(x, y, z):
    l = sl2_by_hand(QQ)
    assert l.bracket(x, y) == tuple(-a for a in l.bracket(y, x))
    jac = [l.bracket(x, l.bracket(y, z)), l.bracket(y, l.bracket(z, x)), l.bracket(z, l.bracket(x, y))]
    assert all(sum(t) == 0 for t in zip(*jac))


@given(x=vectors(QQ, 3), y=vectors(QQ, 3))
def test_ad_is_a_derivation(x, y):
    l = sl2_by_hand(QQ)
    assert l.ad(x).apply(y) == l.bracket(x, y)
    assert l.is_derivation(l.ad(x))


def test_centers_and_perfectness():
    assert sl2_by_hand(QQ).center().dim == 0
    assert sl2_by_hand(QQ).is_perfect()
    gl2 = gl_algebra(F5, 2)
    assert gl2.center().dim == 1
    assert gl2.derived_algebra().dim == 3


@given(t=st.integers(min_value=-3, max_value=3))
def test_exp_of_nilpotent_is_automorphism(t):
    l = sl2_by_hand(QQ)
    g = exp_nilpotent(l.ad(l.element(e=t)))
    assert l.is_automorphism(g)


def test_exp_rejects_non_nilpotent():
    l = sl2_by_hand(QQ)
    with pytest.raises(ValueError):
        exp_nilpotent(l.ad(l.element(h=1)))


def test_json_round_trip():
    for name in ("sl3", "heis", "gl2"):
        l = catalog.get(name, F5).algebra
        assert LieAlgebra.from_json(l.to_json()) == l


def test_direct_sum_and_subalgebra():
    l = sl2_by_hand(QQ)
    s = direct_sum(l, LieAlgebra.abelian(QQ, 1, "z"))
    assert s.dim == 4 and s.center().dim == 1
    borel = Subspace(QQ, 3, [l.element(e=1), l.element(h=1)])
    sub, incl = subalgebra(l, borel)
    assert sub.dim == 2
    assert sub.is_homomorphism_to(l, incl)
    with pytest.raises(InvalidLieAlgebra):
        subalgebra(l, Subspace(QQ, 3, [l.element(e=1), l.element(f=1)]))
