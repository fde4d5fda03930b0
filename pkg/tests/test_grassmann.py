import itertools

import pytest

from conftest import F5
from jpgeom.errors import InfiniteField, NotIdempotent, NotSubmodule
from jpgeom.exactla import QQ, Matrix, Subspace, gaussian_binomial
from jpgeom.grading import is_transversal, minus_filtration, plus_filtration
from jpgeom.grassmann import (
    Projector,
    RSubmodule,
    RingSpec,
    all_projectors,
    all_submodules,
    complement_translate,
    complements,
    flag_from_submodule,
    grading_from_projector,
    grass_elementary_group,
    idempotent_geometry,
    projective_line,
    projector_to_pair,
)

LINE = RingSpec(F5, 1, 2)


def brute_idempotents(n):
    out = []
    for vals in itertools.product(range(5), repeat=n * n):
        m = Matrix(F5, [vals[i * n:(i + 1) * n] for i in range(n)])
        if m @ m == m:
            out.append(m)
    return out


def test_submodule_count():
    assert len(all_submodules(LINE)) == sum(gaussian_binomial(2, r, 5) for r in range(3)) == 8


def test_projectors_are_the_idempotents():
    projs = all_projectors(LINE)
    assert {p.p for p in projs} == set(brute_idempotents(2))
    assert len(projs) == 32


def test_complements_of_a_line():
    e = all_submodules(LINE)[1]
    cs = complements(e)
    assert len(cs) == 5  # p^{r(n-r)}
    assert all(e.columns.is_complement(c.columns) for c in cs)
    base = cs[0]
    assert complement_translate(e, base, Matrix.zeros(F5, 1, 1)) == base


def test_flags_match_projector_gradings():
    for p in all_projectors(LINE):
        e, f = projector_to_pair(p)
        d = grading_from_projector(p)
        assert flag_from_submodule(e) == plus_filtration(d)
        assert flag_from_submodule(f) == minus_filtration(d)
        assert is_transversal(flag_from_submodule(e), flag_from_submodule(f))


def test_elementary_group_is_sl2():
    sl2_order = sum(1 for v in itertools.product(range(5), repeat=4) if (v[0] * v[3] - v[1] * v[2]) % 5 == 1)
    p = Projector(LINE, Matrix.diag(F5, [1, 0]))
    e, f = projector_to_pair(p)
    group = grass_elementary_group(e, f)
    assert group.order == sl2_order == 120
    assert len(group.orbit()) == 6
    assert all(group.in_parabolic(g) for g in group.unipotent(e))


def test_matrix_ring_submodules():
    # V = R = M_2(F_5): submodules are Hom(F^2, U) for U in Gr(F^2)
    ring = RingSpec(F5, 2, 1)
    subs = all_submodules(ring)
    assert len(subs) == 8
    assert [s.span.dim for s in subs[:2]] == [0, 2]


def test_non_submodule_rejected():
    ring = RingSpec(F5, 2, 1)
    one_entry = Subspace(F5, 4, [(1, 0, 0, 0)])
    with pytest.raises(NotSubmodule):
        RSubmodule.from_span(ring, one_entry)
    with pytest.raises(NotIdempotent):
        Projector(LINE, Matrix(F5, [[1, 1], [0, 0]]).scale(2))


def test_idempotent_reflection_laws():
    geom = idempotent_geometry(RingSpec(F5, 2, 1))
    idem = set(geom.idempotents)
    assert len(idem) == len(brute_idempotents(2)) == 32
    sample = sorted(idem, key=lambda m: m.rows)[::4]
    for a in sample:
        assert geom.mu(a, a) == a
        for b in sample:
            assert geom.mu(a, b) in idem
            assert geom.mu(a, geom.mu(a, b)) == b


def test_projective_line():
    pl = projective_line(RingSpec(F5))
    assert len(pl.orbit) == 6 and pl.e2.dim == 3
    assert pl.selfdual.status == "yes"


def test_enumeration_needs_finite_field():
    with pytest.raises(InfiniteField):
        all_submodules(RingSpec(QQ, 1, 2))
