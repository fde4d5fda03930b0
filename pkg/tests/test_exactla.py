import itertools
from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from conftest import F5, F7, matrices, vectors
from jpgeom.errors import DimensionMismatch, InvalidField, SingularMatrix
from jpgeom.exactla import (
    QQ,
    Field,
    Matrix,
    Subspace,
    enumerate_subspaces,
    gaussian_binomial,
    is_complement,
    nullspace,
    rref,
    solve,
    solve_vector,
)


def det_oracle(m: Matrix):
    """Leibniz expansion with Fractions; independent of the elimination code."""
    n = m.nrows
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = Fraction(sign)
        for i in range(n):
            term *= Fraction(str(m.rows[i][perm[i]]))
        total += term
    return total % m.field.p if m.field.is_prime else total


def rank_oracle(m: Matrix) -> int:
    """Largest k with a nonzero k x k minor."""
    best = 0
    for k in range(1, min(m.shape) + 1):
        for rows in itertools.combinations(range(m.nrows), k):
            for cols in itertools.combinations(range(m.ncols), k):
                if det_oracle(m.submatrix(rows, cols)) != 0:
                    best = k
                    break
            if best == k:
                break
    return best


# ---------------------------------------------------------------- fields


def test_field_parse_and_format():
    assert Field.parse("q") == QQ
    assert Field.parse("fp:5") == F5
    assert F5.parse_scalar("1/2") == 3
    assert F5.format_scalar(F5(-1)) == "4"
    assert QQ.format_scalar(QQ("6/4")) == "3/2"


@pytest.mark.parametrize("text", ["fp:2", "fp:3", "fp:4", "fp:x", "r"])
def test_field_rejects_bad_input(text):
    with pytest.raises(InvalidField):
        Field.parse(text)


def test_rational_inverse_stays_exact():
    assert QQ.inv(3) == mpq(1, 3)
    assert isinstance(QQ.inv(3), type(mpq(1)))


@given(st.integers(min_value=1, max_value=6))
def test_prime_inverse(x):
    assert F7.reduce(x * F7.inv(x)) == 1


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        F5.inv(0)


def test_field_json_round_trip():
    for f in (QQ, F5, F7):
        assert Field.from_json(f.to_json()) == f


# ---------------------------------------------------------------- matrices


@pytest.mark.parametrize("field", [QQ, F5])
@given(data=st.data())
def test_rank_matches_minor_oracle(field, data):
    m = data.draw(matrices(field, 3, 4))
    assert m.rank() == rank_oracle(m)


@pytest.mark.parametrize("field", [QQ, F5])
@given(data=st.data())
def test_inverse_iff_nonzero_determinant(field, data):
    m = data.draw(matrices(field, 3, 3))
    if det_oracle(m) == 0:
        assert not m.is_invertible()
        with pytest.raises(SingularMatrix):
            m.inverse()
    else:
        assert (m @ m.inverse()).is_identity()
        assert (m.inverse() @ m).is_identity()


@given(data=st.data())
def test_product_associative(data):
    a, b, c = (data.draw(matrices(QQ, 3, 3)) for _ in range(3))
    assert (a @ b) @ c == a @ (b @ c)


@given(data=st.data())
def test_apply_agrees_with_product(data):
    a = data.draw(matrices(F5, 3, 4))
    v = data.draw(vectors(F5, 4))
    col = Matrix.from_columns(F5, [v])
    assert a.apply(v) == (a @ col).column(0)


@pytest.mark.parametrize("field", [QQ, F7])
@given(data=st.data())
def test_rref_is_idempotent(field, data):
    m = data.draw(matrices(field, 3, 4))
    red, rank = rref(m)
    assert rref(red) == (red, rank)


@pytest.mark.parametrize("field", [QQ, F5])
@given(data=st.data())
def test_nullspace_dimension_and_membership(field, data):
    m = data.draw(matrices(field, 3, 5))
    basis = nullspace(m)
    assert len(basis) == m.ncols - m.rank()
    for v in basis:
        assert all(a == 0 for a in m.apply(v))


@given(data=st.data())
def test_solve_returns_a_solution_when_consistent(data):
    a = data.draw(matrices(QQ, 3, 3))
    x = data.draw(vectors(QQ, 3))
    b = a.apply(x)
    sol = solve_vector(a, b)
    assert sol is not None and a.apply(sol) == b


def test_solve_detects_inconsistency():
    a = Matrix(QQ, [[1, 0], [0, 0]])
    assert solve(a, Matrix(QQ, [[1], [1]])) is None


def test_shape_errors():
    with pytest.raises(DimensionMismatch):
        Matrix(QQ, [[1, 2]]) @ Matrix(QQ, [[1, 2]])
    with pytest.raises(DimensionMismatch):
        Matrix(QQ, [[1, 2], [3]])


def test_matrix_json_round_trip():
    m = Matrix(QQ, [["1/2", -3], [0, "7/5"]])
    assert Matrix.from_json(QQ, m.to_json()) == m


# ---------------------------------------------------------------- subspaces


@given(data=st.data())
def test_span_is_canonical(data):
    vs = [data.draw(vectors(F5, 4)) for _ in range(3)]
    c = data.draw(st.integers(min_value=1, max_value=4))
    shuffled = [tuple(c * a % 5 for a in vs[2]), vs[0], vs[1], tuple((a + b) % 5 for a, b in zip(vs[0], vs[1]))]
    assert Subspace(F5, 4, vs) == Subspace(F5, 4, shuffled)


@pytest.mark.parametrize("field", [QQ, F5])
@given(data=st.data())
def test_dimension_formula(field, data):
    u = Subspace(field, 4, [data.draw(vectors(field, 4)) for _ in range(2)])
    w = Subspace(field, 4, [data.draw(vectors(field, 4)) for _ in range(2)])
    meet = u & w
    assert (u + w).dim + meet.dim == u.dim + w.dim
    assert u.contains(meet) and w.contains(meet)


@given(data=st.data())
def test_quotient_coordinates_vanish_on_subspace(data):
    u = Subspace(QQ, 4, [data.draw(vectors(QQ, 4)) for _ in range(2)])
    for v in u.vectors():
        assert all(a == 0 for a in u.quotient_coordinates(v))
    assert len(u.quotient_columns()) == 4 - u.dim


def test_complement():
    e1 = Subspace(QQ, 2, [(1, 0)])
    assert is_complement(e1, Subspace(QQ, 2, [(1, 1)]))
    assert not is_complement(e1, Subspace(QQ, 2, [(2, 0)]))


def _count_spans(field: Field, n: int, k: int) -> int:
    vs = list(itertools.product(range(field.p), repeat=n))
    return len({Subspace(field, n, combo) for combo in itertools.product(vs, repeat=k) if Subspace(field, n, combo).dim == k})


@pytest.mark.parametrize("n,k", [(2, 1), (3, 1), (3, 2)])
def test_subspace_enumeration_counts(n, k):
    listed = enumerate_subspaces(F5, n, k)
    assert len(set(listed)) == len(listed) == gaussian_binomial(n, k, 5)
    if n == 2 or k == 1:
        assert len(listed) == _count_spans(F5, n, k)
