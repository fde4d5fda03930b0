"""Finite-dimensional Lie algebras given by structure constants.

Elements are coordinate tuples with respect to the algebra's basis.
"""

from __future__ import annotations

import itertools
from typing import Mapping, Sequence

from .errors import DimensionMismatch, InvalidLieAlgebra
from .exactla import (
    Field,
    Matrix,
    Subspace,
    Vector,
    commutator,
    is_zero_vector,
    lincomb,
    pivot_columns,
    rref,
    unit_vector,
    vneg,
    zero_vector,
)


class LieAlgebra:
    """A Lie algebra with basis e_0..e_{n-1} and [e_i, e_j] = c[i][j].

    Antisymmetry and the Jacobi identity are checked on all basis triples
    when the algebra is built.
    """

    def __init__(self, field: Field, basis_names: Sequence[str], c: Sequence[Sequence[Vector]]):
        n = len(basis_names)
        self.field = field
        self.dim = n
        self.basis_names = tuple(basis_names)
        if len(set(self.basis_names)) != n:
            raise InvalidLieAlgebra("basis names must be distinct")
        if len(c) != n or any(len(row) != n for row in c):
            raise InvalidLieAlgebra("structure constants must be an n x n table of vectors")
        self.c = tuple(tuple(tuple(field(a) for a in v) for v in row) for row in c)
        for row in self.c:
            for v in row:
                if len(v) != n:
                    raise InvalidLieAlgebra("bracket vector has wrong length")
        # sparse form: _sc[i][j] = [(k, coeff), ...]
        self._hash = None
        self._sc = tuple(tuple(tuple((k, a) for k, a in enumerate(v) if a != 0) for v in row) for row in self.c)
        self._validate()
        self._ad_basis = tuple(Matrix.from_columns(field, [self.c[i][j] for j in range(n)], n) if n else Matrix.zeros(field, 0, 0) for i in range(n))

    @classmethod
    def from_brackets(cls, field: Field, basis_names: Sequence[str], brackets: Mapping[tuple, Mapping]) -> "LieAlgebra":
        """Build from {(name_i, name_j): {name_k: coeff}} with antisymmetry implied."""
        names = list(basis_names)
        n = len(names)
        idx = {name: i for i, name in enumerate(names)}
        c = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
        for (a, b), value in brackets.items():
            i, j = idx[a], idx[b]
            v = [field.zero] * n
            for name, coeff in value.items():
                v[idx[name]] = field(coeff)
            c[i][j] = v
            c[j][i] = [field.neg(x) for x in v]
        return cls(field, names, c)

    @classmethod
    def from_matrices(cls, field: Field, basis_names: Sequence[str], matrices: Sequence[Matrix]) -> "LieAlgebra":
        """Matrix Lie algebra spanned by ``matrices`` under the commutator."""
        coords = MatrixCoordinates(field, matrices)
        n = len(matrices)
        c = [[coords(commutator(matrices[i], matrices[j])) for j in range(n)] for i in range(n)]
        return cls(field, basis_names, c)

    @classmethod
    def abelian(cls, field: Field, n: int, prefix: str = "x") -> "LieAlgebra":
        z = zero_vector(field, n)
        return cls(field, [f"{prefix}{i}" for i in range(n)], [[z] * n for _ in range(n)])

    def _validate(self):
        n, field = self.dim, self.field
        for i in range(n):
            if not is_zero_vector(self.c[i][i]):
                raise InvalidLieAlgebra(f"[e{i}, e{i}] != 0")
            for j in range(i + 1, n):
                if self.c[i][j] != vneg(field, self.c[j][i]):
                    raise InvalidLieAlgebra(f"antisymmetry fails for ({i}, {j})")
        for i, j, k in itertools.combinations(range(n), 3):
            acc = [0] * n
            for (a, b, cc) in ((i, j, k), (j, k, i), (k, i, j)):
                for m, x in self._sc[a][b]:
                    for t, y in self._sc[m][cc]:
                        acc[t] += x * y
            if any(field.reduce(field(0) + s) != 0 for s in acc):
                raise InvalidLieAlgebra(f"Jacobi identity fails for ({i}, {j}, {k})")

    # elements
    def zero(self) -> Vector:
        return zero_vector(self.field, self.dim)

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.field, self.dim, i)

    def element(self, coeffs: Mapping[str, object] | None = None, **kw) -> Vector:
        """Element from named coefficients, e.g. ``sl2.element(h="1/2")``."""
        coeffs = dict(coeffs or {}, **kw)
        out = [self.field.zero] * self.dim
        for name, value in coeffs.items():
            out[self.basis_names.index(name)] = self.field(value)
        return tuple(out)

    def _check(self, x: Vector):
        if len(x) != self.dim:
            raise DimensionMismatch(f"element of length {len(x)} used in algebra of dimension {self.dim}")

    def bracket(self, x: Vector, y: Vector) -> Vector:
        self._check(x)
        self._check(y)
        acc = [0] * self.dim
        xs = [(i, a) for i, a in enumerate(x) if a != 0]
        ys = [(j, b) for j, b in enumerate(y) if b != 0]
        for i, a in xs:
            row = self._sc[i]
            for j, b in ys:
                ab = a * b
                for k, cc in row[j]:
                    acc[k] += ab * cc
        red = self.field.reduce
        return tuple(red(self.field(0) + s) for s in acc)

    def ad(self, x: Vector) -> Matrix:
        self._check(x)
        n, field = self.dim, self.field
        acc = [[0] * n for _ in range(n)]
        for i, a in enumerate(x):
            if a != 0:
                sc = self._sc[i]
                for j in range(n):
                    for k, cc in sc[j]:
                        acc[k][j] += a * cc
        red, zero = field.reduce, field.zero
        return Matrix._raw(field, tuple(tuple(red(zero + v) for v in r) for r in acc), n)

    def ad_basis(self, i: int) -> Matrix:
        return self._ad_basis[i]

    # subspaces
    def span(self, *vectors: Vector) -> Subspace:
        return Subspace(self.field, self.dim, vectors)

    def full(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def center(self) -> Subspace:
        # x is central iff sum_i x_i c[i][j] = 0 for all j: stack the ad-basis columns
        rows = []
        for j in range(self.dim):
            for k in range(self.dim):
                rows.append(tuple(self.c[i][j][k] for i in range(self.dim)))
        if not rows:
            return Subspace.zero(self.field, 0)
        return Subspace.kernel(Matrix.from_rows(self.field, rows, self.dim))

    def bracket_space(self, u: Subspace, w: Subspace) -> Subspace:
        return Subspace(self.field, self.dim, [self.bracket(a, b) for a in u.vectors() for b in w.vectors()])

    def derived_algebra(self) -> Subspace:
        return self.bracket_space(self.full(), self.full())

    def is_perfect(self) -> bool:
        return self.derived_algebra().dim == self.dim

    def subalgebra_generated(self, gens: Subspace) -> Subspace:
        current = gens
        for _ in range(self.dim + 1):
            nxt = current + self.bracket_space(current, current)
            if nxt == current:
                return current
            current = nxt
        return current

    def is_subalgebra(self, u: Subspace) -> bool:
        return u.contains(self.bracket_space(u, u))

    # maps
    def is_automorphism(self, g: Matrix) -> bool:
        if g.shape != (self.dim, self.dim) or not g.is_invertible():
            return False
        cols = g.columns()
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if g.apply(self.c[i][j]) != self.bracket(cols[i], cols[j]):
                    return False
        return True

    def is_derivation(self, d: Matrix) -> bool:
        if d.shape != (self.dim, self.dim):
            return False
        cols = d.columns()
        field = self.field
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                lhs = d.apply(self.c[i][j])
                rhs = tuple(field.reduce(a + b) for a, b in zip(self.bracket(cols[i], self.basis_vector(j)), self.bracket(self.basis_vector(i), cols[j])))
                if lhs != rhs:
                    return False
        return True

    def is_homomorphism_to(self, target: "LieAlgebra", phi: Matrix) -> bool:
        """phi: self -> target given by a (target.dim x self.dim) matrix."""
        if phi.shape != (target.dim, self.dim):
            return False
        cols = phi.columns()
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if phi.apply(self.c[i][j]) != target.bracket(cols[i], cols[j]):
                    return False
        return True

    # comparisons and serialization
    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (self.field, self.basis_names, self.c) == (other.field, other.basis_names, other.c)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.dim, self.c))
        return self._hash

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, field={self.field}, basis={list(self.basis_names)})"

    def to_json(self) -> dict:
        fmt = self.field.format_scalar
        brackets = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if not is_zero_vector(self.c[i][j]):
                    brackets.append([i, j, [fmt(a) for a in self.c[i][j]]])
        return {"field": self.field.to_json(), "dim": self.dim, "basis": list(self.basis_names), "brackets": brackets}

    @classmethod
    def from_json(cls, data: dict) -> "LieAlgebra":
        field = Field.from_json(data["field"])
        n = int(data["dim"])
        names = data.get("basis") or [f"e{i}" for i in range(n)]
        if len(names) != n:
            raise InvalidLieAlgebra("basis length does not match dim")
        c = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
        for i, j, v in data.get("brackets", []):
            if not 0 <= i < j < n:
                raise InvalidLieAlgebra("brackets must list pairs i < j")
            if len(v) != n:
                raise InvalidLieAlgebra("bracket vector has wrong length")
            c[i][j] = [field.parse_scalar(str(a)) for a in v]
            c[j][i] = [field.neg(a) for a in c[i][j]]
        return cls(field, names, c)


class MatrixCoordinates:
    """Coordinates of matrices with respect to a linearly independent family."""

    def __init__(self, field: Field, matrices: Sequence[Matrix]):
        self.field = field
        flats = [m.flat() for m in matrices]
        self.n = len(flats)
        # choose rows (matrix entries) on which the family is invertible
        red, rank = rref(Matrix.from_rows(field, flats))
        if rank != self.n:
            raise InvalidLieAlgebra("basis matrices are linearly dependent")
        self.rows = pivot_columns(red)
        square = Matrix.from_columns(field, [tuple(f[r] for r in self.rows) for f in flats])
        self.inv = square.inverse()
        self.span = Subspace(field, len(flats[0]), flats)

    def __call__(self, m: Matrix) -> Vector:
        flat = m.flat()
        if not self.span.contains(flat):
            raise InvalidLieAlgebra("matrix is not in the span of the basis")
        return self.inv.apply(tuple(flat[r] for r in self.rows))


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    if a.field != b.field:
        raise InvalidLieAlgebra("direct sum of algebras over different fields")
    n, m = a.dim, b.dim
    z = a.field.zero
    c = []
    for i in range(n + m):
        row = []
        for j in range(n + m):
            if i < n and j < n:
                row.append(a.c[i][j] + (z,) * m)
            elif i >= n and j >= n:
                row.append((z,) * n + b.c[i - n][j - n])
            else:
                row.append((z,) * (n + m))
        c.append(row)
    names = list(a.basis_names) + [nm if nm not in a.basis_names else nm + "'" for nm in b.basis_names]
    return LieAlgebra(a.field, names, c)


def subalgebra(l: LieAlgebra, u: Subspace, names: Sequence[str] | None = None) -> tuple[LieAlgebra, Matrix]:
    """The subalgebra u with its RREF basis, and the inclusion matrix (l.dim x u.dim)."""
    if not l.is_subalgebra(u):
        raise InvalidLieAlgebra("subspace is not closed under the bracket")
    basis = u.vectors()
    c = [[u.coordinates(l.bracket(x, y)) for y in basis] for x in basis]
    if names is None:
        names = [_name_for(l, v) for v in basis]
        if len(set(names)) != len(names):
            names = [f"b{i}" for i in range(len(basis))]
    return LieAlgebra(l.field, names, c), u.basis_matrix()


def _name_for(l: LieAlgebra, v: Vector) -> str:
    nz = [i for i, a in enumerate(v) if a != 0]
    if len(nz) == 1 and v[nz[0]] == l.field.one:
        return l.basis_names[nz[0]]
    return "+".join(l.basis_names[i] for i in nz)


def exp_nilpotent(m: Matrix) -> Matrix:
    """exp of a matrix with m^3 = 0: 1 + m + m^2/2."""
    field = m.field
    m2 = m @ m
    if not (m2 @ m).is_zero():
        raise ValueError("exp_nilpotent needs m^3 = 0")
    return Matrix.identity(field, m.nrows) + m + m2.scale(field.inv(field(2)))


def vsum(field: Field, *vs: Vector) -> Vector:
    return lincomb(field, [field.one] * len(vs), vs, len(vs[0]))
