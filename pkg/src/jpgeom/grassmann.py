"""Complemented submodules of V = R^m over R = M_k(F), and their flag geometry.

V is modelled as (mk) x k field matrices, flattened row-major, so that
End_R(V) is M_{mk}(F) acting by left multiplication and R acts on the
right.  Every R-submodule is Hom(F^k, U) = {A : columns of A lie in U} for
a unique column space U in F^{mk}; most computations happen on U.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import CapExceeded, DimensionMismatch, InfiniteField, NotComplementary, NotIdempotent, NotSubmodule
from .exactla import Field, Matrix, Subspace, Vector, enumerate_subspaces, unit_vector, vadd
from .grading import Filtration3, Grading, grading_from_euler, minus_filtration
from .jordan import SelfDuality, is_selfdual
from .liecore import LieAlgebra
from .projgroup import orbit_enumerate


@dataclass(frozen=True)
class RingSpec:
    field: Field
    k: int = 1
    m: int = 1

    def __post_init__(self):
        if self.k < 1 or self.m < 1:
            raise ValueError("block size and module rank must be positive")

    @property
    def n(self) -> int:
        """Size of the field matrices representing End_R(V)."""
        return self.m * self.k

    @property
    def module_dim(self) -> int:
        return self.n * self.k

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "k": self.k, "m": self.m}

    @classmethod
    def from_json(cls, data: dict) -> "RingSpec":
        return cls(Field.from_json(data["field"]), int(data["k"]), int(data["m"]))


def _as_matrix(field: Field, v: Vector, rows: int, cols: int) -> Matrix:
    return Matrix.from_rows(field, [v[i * cols:(i + 1) * cols] for i in range(rows)], cols)


def _hom_span(ring: RingSpec, columns: Subspace) -> Subspace:
    """Hom(F^k, U) inside V."""
    f, n, k = ring.field, ring.n, ring.k
    vectors = []
    for u in columns.vectors():
        for c in range(k):
            a = [[f.zero] * k for _ in range(n)]
            for r in range(n):
                a[r][c] = u[r]
            vectors.append(tuple(x for row in a for x in row))
    return Subspace(f, ring.module_dim, vectors)


def is_right_stable(ring: RingSpec, span: Subspace) -> bool:
    """Closure under right multiplication by the matrix units of R."""
    f, n, k = ring.field, ring.n, ring.k
    for a, b in itertools.product(range(k), repeat=2):
        unit = Matrix.from_rows(f, [[f.one if (i, j) == (a, b) else f.zero for j in range(k)] for i in range(k)], k)
        for v in span.vectors():
            if not span.contains((_as_matrix(f, v, n, k) @ unit).flat()):
                return False
    return True


@dataclass(frozen=True)
class Projector:
    ring: RingSpec
    p: Matrix

    def __post_init__(self):
        n = self.ring.n
        if self.p.shape != (n, n):
            raise DimensionMismatch(f"projector must be {n}x{n}")
        if self.p @ self.p != self.p:
            raise NotIdempotent("p^2 != p")

    def image(self) -> Subspace:
        return Subspace.column_space(self.p)

    def kernel(self) -> Subspace:
        return Subspace.kernel(self.p)

    def complement(self) -> "Projector":
        return Projector(self.ring, Matrix.identity(self.ring.field, self.ring.n) - self.p)

    def action_matrix(self) -> Matrix:
        """p as a field-linear map of V (left multiplication on n x k matrices)."""
        return left_multiplication(self.ring, self.p)

    def to_json(self) -> dict:
        return {"ring": self.ring.to_json(), "p": self.p.to_json()}


@dataclass(frozen=True)
class RSubmodule:
    """Hom(F^k, columns) with a projector onto it as complement certificate."""

    ring: RingSpec
    columns: Subspace
    certificate: Matrix

    def __post_init__(self):
        if self.columns.ambient_dim != self.ring.n:
            raise DimensionMismatch("column space has the wrong ambient dimension")
        cert = Projector(self.ring, self.certificate)
        if cert.image() != self.columns:
            raise NotSubmodule("certificate projector does not have this image")

    @classmethod
    def from_columns(cls, ring: RingSpec, columns: Subspace, certificate: Matrix | None = None) -> "RSubmodule":
        if certificate is None:
            f, n = ring.field, ring.n
            other = Subspace(f, n, [unit_vector(f, n, j) for j in columns.quotient_columns()])
            certificate = _projector_matrix(columns, other)
        return cls(ring, columns, certificate)

    @classmethod
    def from_span(cls, ring: RingSpec, span: Subspace, certificate: Matrix | None = None) -> "RSubmodule":
        """Validate a field subspace of V as an R-submodule."""
        if span.ambient_dim != ring.module_dim:
            raise DimensionMismatch("subspace does not live in V")
        if not is_right_stable(ring, span):
            raise NotSubmodule("subspace is not stable under the right R-action")
        f, n, k = ring.field, ring.n, ring.k
        cols = [_as_matrix(f, v, n, k).column(c) for v in span.vectors() for c in range(k)]
        columns = Subspace(f, n, cols)
        if _hom_span(ring, columns) != span:
            raise NotSubmodule("subspace is not of the form Hom(F^k, U)")
        return cls.from_columns(ring, columns, certificate)

    @property
    def span(self) -> Subspace:
        return _hom_span(self.ring, self.columns)

    @property
    def rank(self) -> int:
        return self.columns.dim

    def transform(self, g: Matrix) -> "RSubmodule":
        """g.E for g in GL_R(V), with the conjugated certificate."""
        return RSubmodule(self.ring, self.columns.image(g), g @ self.certificate @ g.inverse())

    def __eq__(self, other):
        if not isinstance(other, RSubmodule):
            return NotImplemented
        return self.ring == other.ring and self.columns == other.columns

    def __hash__(self):
        return hash(self.columns)

    def __lt__(self, other: "RSubmodule"):
        return (self.rank, self.columns.key()) < (other.rank, other.columns.key())

    def to_json(self) -> dict:
        return {"basis": self.span.basis.to_json(), "certificate": self.certificate.to_json()}


def left_multiplication(ring: RingSpec, x: Matrix) -> Matrix:
    f, n, k = ring.field, ring.n, ring.k
    cols = []
    for i in range(ring.module_dim):
        a = _as_matrix(f, unit_vector(f, ring.module_dim, i), n, k)
        cols.append((x @ a).flat())
    return Matrix.from_columns(f, cols, ring.module_dim)


def _projector_matrix(image: Subspace, kernel: Subspace) -> Matrix:
    f, n = image.field, image.ambient_dim
    if not image.is_complement(kernel):
        raise NotComplementary("subspaces are not complementary")
    if image.dim == 0:
        return Matrix.zeros(f, n, n)
    frame = Matrix.from_columns(f, image.vectors() + kernel.vectors(), n)
    keep = Matrix.diag(f, [f.one] * image.dim + [f.zero] * kernel.dim)
    return frame @ keep @ frame.inverse()


def projector_to_pair(p: Projector) -> tuple[RSubmodule, RSubmodule]:
    q = p.complement()
    return RSubmodule(p.ring, p.image(), p.p), RSubmodule(p.ring, q.image(), q.p)


def pair_to_projector(e: RSubmodule, f: RSubmodule) -> Projector:
    if e.ring != f.ring:
        raise DimensionMismatch("submodules of different modules")
    return Projector(e.ring, _projector_matrix(e.columns, f.columns))


def all_submodules(ring: RingSpec) -> list[RSubmodule]:
    """The complemented Grassmannian (every submodule of a free module over M_k(F) is complemented)."""
    if not ring.field.is_prime:
        raise InfiniteField("enumeration needs a finite field")
    out = []
    for r in range(ring.n + 1):
        out.extend(RSubmodule.from_columns(ring, u) for u in enumerate_subspaces(ring.field, ring.n, r))
    return sorted(out)


def all_projectors(ring: RingSpec) -> list[Projector]:
    """Idempotents of End_R(V), one per transversal pair (im, ker)."""
    out = []
    for e in all_submodules(ring):
        for f in complements(e):
            out.append(pair_to_projector(e, f))
    return out


def complement_translate(e: RSubmodule, f: RSubmodule, h: Matrix) -> RSubmodule:
    """The graph {w + h(w)} of h: F -> E, in the RREF column bases of f and e.

    ``h`` has shape rank(e) x rank(f); it stands for the R-linear map V/E -> E
    obtained by identifying V/E with f.
    """
    ring = e.ring
    if not e.columns.is_complement(f.columns):
        raise NotComplementary("f is not a complement of e")
    if h.shape != (e.rank, f.rank):
        raise DimensionMismatch("translation has the wrong shape")
    fld, n = ring.field, ring.n
    us, ws = e.columns.vectors(), f.columns.vectors()
    graph = []
    for i, w in enumerate(ws):
        v = w
        for j, u in enumerate(us):
            v = vadd(fld, v, tuple(fld.reduce(h.rows[j][i] * a) for a in u))
        graph.append(v)
    cols = Subspace(fld, n, graph)
    return RSubmodule(ring, cols, _projector_matrix(cols, e.columns))


def complements(e: RSubmodule) -> list[RSubmodule]:
    ring = e.ring
    if not ring.field.is_prime:
        raise InfiniteField("enumeration needs a finite field")
    base = RSubmodule(ring, Subspace.kernel(e.certificate), Matrix.identity(ring.field, ring.n) - e.certificate)
    out = []
    for values in itertools.product(ring.field.elements(), repeat=e.rank * base.rank):
        h = Matrix.from_rows(ring.field, [values[j * base.rank:(j + 1) * base.rank] for j in range(e.rank)], base.rank)
        out.append(complement_translate(e, base, h))
    return sorted(out)


# ---------------------------------------------------------------- gl_R(V)


@lru_cache(maxsize=None)
def gl_algebra(field: Field, n: int) -> LieAlgebra:
    """gl_n with matrix units E_ij in row-major order."""
    idx = lambda i, j: i * n + j  # noqa: E731
    size = n * n
    c = [[None] * size for _ in range(size)]
    for i, j, k, l in itertools.product(range(n), repeat=4):
        out = [field.zero] * size
        if j == k:
            out[idx(i, l)] += field.one
        if l == i:
            out[idx(k, j)] -= field.one
        c[idx(i, j)][idx(k, l)] = tuple(field.reduce(a) for a in out)
    return LieAlgebra(field, [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)], c)


def gl_of(ring: RingSpec) -> LieAlgebra:
    return gl_algebra(ring.field, ring.n)


def as_square(ring: RingSpec, x: Vector) -> Matrix:
    return _as_matrix(ring.field, x, ring.n, ring.n)


def adjoint_action(ring: RingSpec, g: Matrix) -> Matrix:
    """X -> g X g^-1 on flattened matrices."""
    f, n = ring.field, ring.n
    gi = g.inverse()
    cols = [(g @ as_square(ring, unit_vector(f, n * n, i)) @ gi).flat() for i in range(n * n)]
    return Matrix.from_columns(f, cols, n * n)


def grading_from_projector(p: Projector) -> Grading:
    return grading_from_euler(gl_of(p.ring), p.p.flat())


def _constraint_kernel(ring: RingSpec, constraint) -> Subspace:
    f, n = ring.field, ring.n
    cols = [constraint(as_square(ring, unit_vector(f, n * n, i))) for i in range(n * n)]
    width = len(cols[0])
    if width == 0:
        return Subspace.full(f, n * n)
    return Subspace.kernel(Matrix.from_columns(f, cols, width))


def flag_from_submodule(e: RSubmodule) -> Filtration3:
    """f1 = {X : X V in E, X E = 0}, f0 = {X : X E in E}, witnessed by the certificate."""
    ring, u = e.ring, e.columns
    f, n = ring.field, ring.n
    units = [unit_vector(f, n, j) for j in range(n)]

    def c1(x: Matrix) -> Vector:
        out = []
        for ej in units:
            out.extend(u.quotient_coordinates(x.apply(ej)))
        for b in u.vectors():
            out.extend(x.apply(b))
        return tuple(out)

    def c0(x: Matrix) -> Vector:
        out = []
        for b in u.vectors():
            out.extend(u.quotient_coordinates(x.apply(b)))
        return tuple(out)

    return Filtration3(gl_of(ring), _constraint_kernel(ring, c1), _constraint_kernel(ring, c0), e.certificate.flat())


# ---------------------------------------------------------------- elementary group


@dataclass(frozen=True, eq=False)
class GrassGroup:
    e: RSubmodule
    f: RSubmodule
    generators: tuple
    elements: tuple

    @property
    def order(self) -> int:
        return len(self.elements)

    def unipotent(self, which: RSubmodule) -> list[Matrix]:
        """U_E = 1 + f1(E), enumerated."""
        one = Matrix.identity(which.ring.field, which.ring.n)
        return [one + as_square(which.ring, x) for x in flag_from_submodule(which).f1.elements()]

    def in_parabolic(self, g: Matrix) -> bool:
        """P_E: g E = E."""
        return self.e.columns.image(g) == self.e.columns

    def in_levi(self, g: Matrix) -> bool:
        """H(E, F): g preserves both E and F."""
        return self.in_parabolic(g) and self.f.columns.image(g) == self.f.columns

    def orbit(self, seed: RSubmodule | None = None) -> list[RSubmodule]:
        seed = self.e if seed is None else seed
        seen = {}
        for g in self.elements:
            x = seed.transform(g)
            seen.setdefault(x.columns, x)
        return sorted(seen.values())


def elementary_generators(e: RSubmodule, f: RSubmodule) -> list[Matrix]:
    ring = e.ring
    one = Matrix.identity(ring.field, ring.n)
    gens = []
    for sub in (e, f):
        for b in flag_from_submodule(sub).f1.vectors():
            for c in ring.field.elements():
                if c != 0:
                    gens.append(one + as_square(ring, b).scale(c))
    return gens


def grass_elementary_group(e: RSubmodule, f: RSubmodule, cap: int = 10**6) -> GrassGroup:
    if not e.columns.is_complement(f.columns):
        raise NotComplementary("e and f are not complementary")
    if not e.ring.field.is_prime:
        raise InfiniteField("materializing the group needs a finite field")
    gens = elementary_generators(e, f)
    one = Matrix.identity(e.ring.field, e.ring.n)
    seen = {one}
    queue = deque([one])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = s @ g
            if h not in seen:
                seen.add(h)
                if len(seen) > cap:
                    raise CapExceeded(f"group exceeds {cap} elements")
                queue.append(h)
    return GrassGroup(e, f, tuple(gens), tuple(sorted(seen, key=lambda m: m.rows)))


# ---------------------------------------------------------------- idempotents of R


@dataclass(frozen=True, eq=False)
class IdempotentGeometry:
    ring: RingSpec
    idempotents: tuple

    def mu(self, e: Matrix, f: Matrix) -> Matrix:
        s = e.scale(2) - Matrix.identity(self.ring.field, self.ring.k)
        return s @ f @ s

    def to_projector(self, e: Matrix) -> Projector:
        """Idem(R) -> idempotents of End_R(R) via left multiplication."""
        p = Projector(self.ring, e)
        if p.action_matrix() != left_multiplication(self.ring, e):
            raise AssertionError("left multiplication does not match the projector action")
        return p

    def __iter__(self):
        return iter((self.idempotents, self.mu))


def idempotent_geometry(ring: RingSpec) -> IdempotentGeometry:
    if ring.m != 1:
        raise ValueError("the idempotent geometry is built on V = R")
    if not ring.field.is_prime:
        raise InfiniteField("enumeration needs a finite field")
    idem = sorted({p.p for p in all_projectors(ring)}, key=lambda m: m.rows)
    return IdempotentGeometry(ring, tuple(idem))


# ---------------------------------------------------------------- projective line


@dataclass(frozen=True, eq=False)
class ProjectiveLine:
    ring: RingSpec  # V = R + R, so m = 2
    algebra: LieAlgebra
    projector: Projector
    grading: Grading
    e2: Subspace
    orbit: tuple
    selfdual: SelfDuality
    unit: Vector  # g_1 coordinates of the identity of R


def projective_line(ring: RingSpec, cap: int | None = None) -> ProjectiveLine:
    """gl_2(R) graded by the base projector diag(1, 0) of R + R."""
    line = RingSpec(ring.field, ring.k, 2)
    f, k, n = ring.field, ring.k, line.n
    p = Projector(line, Matrix.diag(f, [f.one] * k + [f.zero] * k))
    d = grading_from_projector(p)
    gl = gl_of(line)
    strict = [unit_vector(f, n * n, i * n + j) for i in range(n) for j in range(n) if (i < k) != (j < k)]
    e2 = gl.subalgebra_generated(Subspace(f, n * n, strict))
    orbit = tuple(orbit_enumerate(d, minus_filtration(d), cap)) if f.is_prime else ()
    ident = Matrix.from_rows(f, [[f.one if (j == i + k) else f.zero for j in range(n)] for i in range(n)], n)
    unit = d.g1.coordinates(ident.flat())
    return ProjectiveLine(line, gl, p, d, e2, orbit, is_selfdual(gl, d, [unit]), unit)
