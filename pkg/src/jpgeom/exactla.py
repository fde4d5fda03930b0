"""Exact linear algebra over the rationals and prime fields (p >= 5).

Field elements are plain values: ``gmpy2.mpq`` for the rationals and
``int`` residues in ``[0, p)`` for prime fields.  Vectors are tuples of
field elements, matrices are immutable row-major tuples of tuples, and
subspaces are kept in reduced row echelon form so that equality of
subspaces is structural equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from gmpy2 import mpq

from .errors import DimensionMismatch, InvalidField, SingularMatrix

Vector = tuple


_ONE = mpq(1)


def _identity(x):
    return x


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % q for q in range(2, int(n**0.5) + 1))


@dataclass(frozen=True)
class Field:
    """Either the rationals (``kind="rational"``) or F_p with p >= 5."""

    kind: str = "rational"
    p: int = 0

    def __post_init__(self):
        if self.kind == "rational":
            if self.p:
                raise InvalidField("rational field takes no modulus")
        elif self.kind == "prime":
            if not _is_prime(self.p):
                raise InvalidField(f"{self.p} is not prime")
            if self.p in (2, 3):
                raise InvalidField("2 and 3 must be invertible; p must be >= 5")
        else:
            raise InvalidField(f"unknown field kind {self.kind!r}")
        # hot-path attributes; not dataclass fields, so equality is unaffected
        prime = self.kind == "prime"
        object.__setattr__(self, "is_prime", prime)
        object.__setattr__(self, "reduce", (lambda x, p=self.p: x % p) if prime else _identity)
        object.__setattr__(self, "zero", 0 if prime else mpq(0))
        object.__setattr__(self, "one", 1 if prime else mpq(1))

    @classmethod
    def rational(cls) -> "Field":
        return cls("rational")

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls("prime", p)

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Parse the CLI form ``q`` or ``fp:P``."""
        text = text.strip().lower()
        if text in ("q", "qq", "rational"):
            return cls.rational()
        if text.startswith("fp:"):
            try:
                return cls.prime(int(text[3:]))
            except ValueError:
                raise InvalidField(f"bad field {text!r}") from None
        raise InvalidField(f"bad field {text!r}")

    def __call__(self, x):
        """Coerce an int, Fraction, mpq or scalar string into the field."""
        if isinstance(x, str):
            return self.parse_scalar(x)
        if self.is_prime:
            if isinstance(x, (Fraction, type(mpq(0)))):
                return x.numerator % self.p * pow(int(x.denominator), -1, self.p) % self.p
            return int(x) % self.p
        return mpq(x)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.is_prime:
            return pow(int(x), -1, self.p)
        return _ONE / x

    def div(self, x, y):
        return self.reduce(x * self.inv(y))

    def neg(self, x):
        return (-x) % self.p if self.is_prime else -x

    def elements(self) -> list:
        if not self.is_prime:
            raise InvalidField("the rational field is infinite")
        return list(range(self.p))

    def format_scalar(self, x) -> str:
        return str(int(x)) if self.is_prime else str(mpq(x))

    def parse_scalar(self, text: str):
        text = text.strip()
        if self.is_prime:
            if "/" in text:
                num, den = text.split("/")
                return int(num) * pow(int(den), -1, self.p) % self.p
            return int(text) % self.p
        return mpq(text)

    def to_json(self) -> dict:
        if self.is_prime:
            return {"kind": "prime", "p": self.p}
        return {"kind": "rational"}

    @classmethod
    def from_json(cls, data: dict) -> "Field":
        if data.get("kind") == "prime":
            return cls.prime(int(data["p"]))
        return cls(data.get("kind", "rational"))

    def __str__(self):
        return f"F_{self.p}" if self.is_prime else "Q"


QQ = Field.rational()


def vec(field: Field, values: Iterable) -> Vector:
    return tuple(field(v) for v in values)


def zero_vector(field: Field, n: int) -> Vector:
    return (field.zero,) * n


def unit_vector(field: Field, n: int, i: int) -> Vector:
    return tuple(field.one if k == i else field.zero for k in range(n))


def vadd(field: Field, x: Vector, y: Vector) -> Vector:
    if field.is_prime:
        p = field.p
        return tuple((a + b) % p for a, b in zip(x, y))
    return tuple([a + b for a, b in zip(x, y)])


def vsub(field: Field, x: Vector, y: Vector) -> Vector:
    if field.is_prime:
        p = field.p
        return tuple((a - b) % p for a, b in zip(x, y))
    return tuple([a - b for a, b in zip(x, y)])


def vscale(field: Field, c, x: Vector) -> Vector:
    if field.is_prime:
        p = field.p
        return tuple(c * a % p for a in x)
    return tuple([c * a for a in x])


def vneg(field: Field, x: Vector) -> Vector:
    return tuple(field.neg(a) for a in x)


def is_zero_vector(x: Vector) -> bool:
    return all(a == 0 for a in x)


def lincomb(field: Field, coeffs: Sequence, vectors: Sequence[Vector], n: int) -> Vector:
    acc = [0] * n
    for c, v in zip(coeffs, vectors):
        if c == 0:
            continue
        for k, a in enumerate(v):
            if a != 0:
                acc[k] += c * a
    return tuple(field.reduce(field(0) + a) for a in acc)


class Matrix:
    """Immutable dense matrix over a Field."""

    __slots__ = ("field", "nrows", "ncols", "rows", "_hash", "_inv")

    def __init__(self, field: Field, rows: Iterable[Iterable], ncols: int | None = None):
        rows = tuple(tuple(field(a) for a in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged matrix rows")
        self._set(field, rows, ncols)

    def _set(self, field, rows, ncols):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", None)
        object.__setattr__(self, "_inv", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _raw(cls, field: Field, rows: tuple, ncols: int) -> "Matrix":
        m = object.__new__(cls)
        m._set(field, rows, ncols)
        return m

    # constructors
    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero
        return cls._raw(field, tuple((z,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls._raw(field, tuple(unit_vector(field, n, i) for i in range(n)), n)

    @classmethod
    def scalar(cls, field: Field, n: int, c) -> "Matrix":
        return cls.identity(field, n).scale(field(c))

    @classmethod
    def diag(cls, field: Field, entries: Sequence) -> "Matrix":
        n = len(entries)
        return cls(field, [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Vector], nrows: int | None = None) -> "Matrix":
        if not columns:
            return cls.zeros(field, nrows or 0, 0)
        return cls._raw(field, tuple(zip(*columns)), len(columns))

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Vector], ncols: int | None = None) -> "Matrix":
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls._raw(field, rows, ncols)

    # basic protocol
    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.field == other.field and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.shape, self.rows)))
        return self._hash

    def __repr__(self):
        fmt = self.field.format_scalar
        body = "; ".join(" ".join(fmt(a) for a in r) for r in self.rows)
        return f"Matrix[{self.nrows}x{self.ncols}]({body})"

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [tuple(c) for c in zip(*self.rows)] if self.nrows else [() for _ in range(self.ncols)]

    # arithmetic
    def _check_same(self, other: "Matrix"):
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        f = self.field
        rows = tuple(vadd(f, r, s) for r, s in zip(self.rows, other.rows))
        return Matrix._raw(f, rows, self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        f = self.field
        rows = tuple(vsub(f, r, s) for r, s in zip(self.rows, other.rows))
        return Matrix._raw(f, rows, self.ncols)

    def __neg__(self) -> "Matrix":
        return self.scale(self.field(-1))

    def scale(self, c) -> "Matrix":
        f = self.field
        c = f(c)
        return Matrix._raw(f, tuple(vscale(f, c, r) for r in self.rows), self.ncols)

    def __matmul__(self, other):
        if isinstance(other, tuple):
            return self.apply(other)
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.field.zero
        mod = self.field.p if self.field.is_prime else 0
        # sparse rows of the right factor; the matrices here are mostly zeros
        sparse = [[(j, b) for j, b in enumerate(r) if b != 0] for r in other.rows]
        rows = []
        for r in self.rows:
            acc = [zero] * other.ncols
            for k, a in enumerate(r):
                if a != 0:
                    for j, b in sparse[k]:
                        acc[j] += a * b
            rows.append(tuple(x % mod for x in acc) if mod else tuple(acc))
        return Matrix._raw(self.field, tuple(rows), other.ncols)

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.shape} matrix")
        f = self.field
        nz = [(k, a) for k, a in enumerate(v) if a != 0]
        if not nz:
            return (f.zero,) * self.nrows
        out = []
        for r in self.rows:
            acc = f.zero
            for k, a in nz:
                b = r[k]
                if b:
                    acc += b * a
            out.append(acc)
        if f.is_prime:
            p = f.p
            return tuple(x % p for x in out)
        return tuple(out)

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(self.field, tuple(tuple(c) for c in zip(*self.rows)), self.nrows) if self.nrows else Matrix.zeros(self.field, self.ncols, 0)

    def __pow__(self, k: int) -> "Matrix":
        if k < 0:
            return self.inverse() ** (-k)
        out = Matrix.identity(self.field, self.nrows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.rows for a in r)

    def is_identity(self) -> bool:
        return self.nrows == self.ncols and self == Matrix.identity(self.field, self.nrows)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def rank(self) -> int:
        return rref(self)[1]

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.nrows

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise DimensionMismatch("only square matrices are invertible")
        if self._inv is not None:
            return self._inv
        n = self.nrows
        aug = Matrix._raw(self.field, tuple(r + unit_vector(self.field, n, i) for i, r in enumerate(self.rows)), 2 * n)
        red, rank = rref(aug, ncols_limit=n)
        if rank < n:
            raise SingularMatrix("matrix is singular")
        inv = Matrix._raw(self.field, tuple(r[n:] for r in red.rows), n)
        object.__setattr__(self, "_inv", inv)
        return inv

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._raw(self.field, tuple(tuple(self.rows[i][j] for j in cols) for i in rows), len(cols))

    def hstack(self, other: "Matrix") -> "Matrix":
        return Matrix._raw(self.field, tuple(r + s for r, s in zip(self.rows, other.rows)), self.ncols + other.ncols)

    def vstack(self, other: "Matrix") -> "Matrix":
        return Matrix._raw(self.field, self.rows + other.rows, self.ncols)

    def flat(self) -> Vector:
        return tuple(a for r in self.rows for a in r)

    def trace(self):
        return self.field.reduce(sum(self.rows[i][i] for i in range(min(self.shape))))

    def to_json(self) -> list:
        fmt = self.field.format_scalar
        return [[fmt(a) for a in r] for r in self.rows]

    @classmethod
    def from_json(cls, field: Field, data: list) -> "Matrix":
        return cls(field, [[field.parse_scalar(str(a)) for a in r] for r in data])


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


def rref(m: Matrix, ncols_limit: int | None = None) -> tuple[Matrix, int]:
    """Reduced row echelon form and rank.

    ``ncols_limit`` restricts pivot search to the leading columns, which is
    what augmented-matrix inversion needs.
    """
    field = m.field
    red = field.reduce
    prime = field.is_prime
    rows = [list(r) for r in m.rows]
    limit = m.ncols if ncols_limit is None else ncols_limit
    rank = 0
    for col in range(limit):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = field.inv(rows[rank][col])
        # entries left of col are already zero in the pivot row
        head = rows[rank][:col]
        tail = rows[rank][col:]
        prow = [red(a * inv) for a in tail] if prime else [a * inv for a in tail]
        rows[rank] = head + prow
        for i in range(len(rows)):
            if i != rank:
                r = rows[i]
                c = r[col]
                if c != 0:
                    if prime:
                        r[col:] = [red(a - c * b) for a, b in zip(r[col:], prow)]
                    else:
                        r[col:] = [a - c * b if b else a for a, b in zip(r[col:], prow)]
        rank += 1
        if rank == len(rows):
            break
    return Matrix._raw(field, tuple(tuple(r) for r in rows), m.ncols), rank


def pivot_columns(echelon: Matrix) -> list[int]:
    pivots = []
    for r in echelon.rows:
        j = next((j for j, a in enumerate(r) if a != 0), None)
        if j is None:
            break
        pivots.append(j)
    return pivots


def solve(a: Matrix, b: Matrix) -> Matrix | None:
    """Pivot-variable particular solution of ``a @ x = b``; free variables are zero."""
    if a.nrows != b.nrows:
        raise DimensionMismatch(f"solve: {a.shape} vs {b.shape}")
    aug = a.hstack(b)
    red, rank = rref(aug, ncols_limit=a.ncols)
    for r in red.rows[rank:]:
        if any(x != 0 for x in r[a.ncols:]):
            return None
    pivots = pivot_columns(Matrix._raw(a.field, tuple(r[: a.ncols] for r in red.rows[:rank]), a.ncols))
    z = a.field.zero
    sol = [[z] * b.ncols for _ in range(a.ncols)]
    for i, j in enumerate(pivots):
        sol[j] = list(red.rows[i][a.ncols:])
    return Matrix._raw(a.field, tuple(tuple(r) for r in sol), b.ncols)


def solve_vector(a: Matrix, v: Vector) -> Vector | None:
    x = solve(a, Matrix.from_columns(a.field, [v]) if a.nrows else Matrix.zeros(a.field, 0, 1))
    return None if x is None else x.column(0)


def nullspace(m: Matrix) -> list[Vector]:
    """Basis of {x : m x = 0}, one vector per free column, in column order."""
    field = m.field
    red, rank = rref(m)
    pivots = pivot_columns(red)
    free = [j for j in range(m.ncols) if j not in pivots]
    basis = []
    for f in free:
        x = [field.zero] * m.ncols
        x[f] = field.one
        for i, j in enumerate(pivots):
            x[j] = field.neg(red.rows[i][f])
        basis.append(tuple(x))
    return basis


class Subspace:
    """A subspace of F^n stored as the RREF of a spanning set."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots", "_hash")

    def __init__(self, field: Field, ambient_dim: int, vectors: Iterable[Vector] = ()):
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        if vectors:
            red, rank = rref(Matrix._raw(field, tuple(vectors), ambient_dim))
            rows = red.rows[:rank]
        else:
            rows = ()
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = Matrix._raw(field, rows, ambient_dim)
        self.pivots = tuple(pivot_columns(self.basis))
        self._hash = None

    @classmethod
    def zero(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n)

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, [unit_vector(field, n, i) for i in range(n)])

    @classmethod
    def column_space(cls, m: Matrix) -> "Subspace":
        return cls(m.field, m.nrows, m.columns())

    @classmethod
    def kernel(cls, m: Matrix) -> "Subspace":
        return cls(m.field, m.ncols, nullspace(m))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def vectors(self) -> list[Vector]:
        return list(self.basis.rows)

    def key(self) -> tuple:
        return self.basis.rows

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis.rows == other.basis.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ambient_dim, self.basis.rows))
        return self._hash

    def __repr__(self):
        fmt = self.field.format_scalar
        vs = ", ".join("(" + ",".join(fmt(a) for a in r) + ")" for r in self.basis.rows)
        return f"Subspace[{self.dim}/{self.ambient_dim}]({vs})"

    def _check(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("subspaces live in different ambient spaces")

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.field, self.ambient_dim, self.vectors() + other.vectors())

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient_dim)
        # a u = b w  <=>  (a | -b) (u, w) = 0
        stacked = Matrix.from_columns(self.field, self.vectors() + [vneg(self.field, w) for w in other.vectors()])
        combos = nullspace(stacked)
        k = self.dim
        return Subspace(self.field, self.ambient_dim, [lincomb(self.field, c[:k], self.vectors(), self.ambient_dim) for c in combos])

    __and__ = intersection

    def contains(self, x) -> bool:
        if isinstance(x, Subspace):
            self._check(x)
            return all(self.contains(v) for v in x.vectors())
        return is_zero_vector(self.reduce(x))

    __contains__ = contains

    def reduce(self, v: Vector) -> Vector:
        """Subtract the unique combination of basis rows that clears the pivot entries."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length does not match ambient dimension")
        f = self.field
        out = tuple(v)
        for row, j in zip(self.basis.rows, self.pivots):
            c = out[j]
            if c != 0:
                out = vsub(f, out, vscale(f, c, row))
        return out

    def coordinates(self, v: Vector) -> Vector:
        """Coordinates of v in the RREF basis (v must lie in the subspace)."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(v[j] for j in self.pivots)

    def from_coordinates(self, c: Sequence) -> Vector:
        return lincomb(self.field, c, self.vectors(), self.ambient_dim)

    def quotient_columns(self) -> tuple[int, ...]:
        return tuple(j for j in range(self.ambient_dim) if j not in self.pivots)

    def quotient_coordinates(self, v: Vector) -> Vector:
        """Coordinates of v modulo the subspace, on the non-pivot columns."""
        r = self.reduce(v)
        return tuple(r[j] for j in self.quotient_columns())

    def basis_matrix(self) -> Matrix:
        """Basis vectors as columns (ambient_dim x dim)."""
        return Matrix.from_columns(self.field, self.vectors(), self.ambient_dim) if self.dim else Matrix.zeros(self.field, self.ambient_dim, 0)

    def image(self, m: Matrix) -> "Subspace":
        return Subspace(self.field, m.nrows, [m.apply(v) for v in self.vectors()])

    def is_complement(self, other: "Subspace") -> bool:
        return is_complement(self, other)

    def elements(self) -> Iterator[Vector]:
        """All vectors of the subspace (finite fields only)."""
        for coeffs in itertools.product(self.field.elements(), repeat=self.dim):
            yield self.from_coordinates(coeffs)


def span(field: Field, n: int, *vectors: Vector) -> Subspace:
    return Subspace(field, n, vectors)


def is_complement(u: Subspace, w: Subspace) -> bool:
    u._check(w)
    return u.dim + w.dim == u.ambient_dim and (u + w).dim == u.ambient_dim


def enumerate_subspaces(field: Field, n: int, k: int) -> list[Subspace]:
    """All k-dimensional subspaces of F_p^n, via RREF enumeration."""
    out = []
    zero, one = field.zero, field.one
    for pivots in itertools.combinations(range(n), k):
        free_slots = [(i, j) for i, pj in enumerate(pivots) for j in range(pj + 1, n) if j not in pivots]
        for values in itertools.product(field.elements(), repeat=len(free_slots)):
            rows = [[zero] * n for _ in range(k)]
            for i, pj in enumerate(pivots):
                rows[i][pj] = one
            for (i, j), x in zip(free_slots, values):
                rows[i][j] = x
            out.append(Subspace(field, n, [tuple(r) for r in rows]))
    return out


def gaussian_binomial(n: int, k: int, q: int) -> int:
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den
