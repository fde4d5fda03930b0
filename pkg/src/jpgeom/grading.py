"""3-gradings from Euler operators, inner 3-filtrations and transversality.

A grading is stored together with its Euler element E, so every flag built
here carries a witness: an element whose plus-filtration is that flag.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property, lru_cache

from .errors import DimensionMismatch, NotTransversal, NotTripotent
from .exactla import Matrix, Subspace, Vector, is_complement, solve_vector, vneg, vsub
from .liecore import LieAlgebra, exp_nilpotent


@dataclass(frozen=True, eq=False)
class Grading:
    algebra: LieAlgebra
    euler: Vector
    d: Matrix
    pr1: Matrix
    pr0: Matrix
    prm1: Matrix

    # components are computed on first use; many gradings only need projections
    @cached_property
    def g1(self) -> Subspace:
        return Subspace.column_space(self.pr1)

    @cached_property
    def g0(self) -> Subspace:
        return Subspace.column_space(self.pr0)

    @cached_property
    def gm1(self) -> Subspace:
        return Subspace.column_space(self.prm1)

    @cached_property
    def _plus(self) -> "Filtration3":
        return Filtration3(self.algebra, self.g1, self.g1 + self.g0, self.euler)

    @cached_property
    def _minus(self) -> "Filtration3":
        return Filtration3(self.algebra, self.gm1, self.gm1 + self.g0, vneg(self.algebra.field, self.euler))

    @property
    def components(self) -> tuple[Subspace, Subspace, Subspace]:
        return (self.g1, self.g0, self.gm1)

    @property
    def projections(self) -> tuple[Matrix, Matrix, Matrix]:
        return (self.pr1, self.pr0, self.prm1)

    @property
    def dims(self) -> tuple[int, int, int]:
        return (self.g1.dim, self.g0.dim, self.gm1.dim)

    def component(self, i: int) -> Subspace:
        return {1: self.g1, 0: self.g0, -1: self.gm1}[i]

    def projection(self, i: int) -> Matrix:
        return {1: self.pr1, 0: self.pr0, -1: self.prm1}[i]

    def degree_of(self, x: Vector) -> int | None:
        """1, 0 or -1 if x is homogeneous and nonzero, else None."""
        for i in (1, 0, -1):
            if self.component(i).contains(x):
                return i
        return None

    def negated(self) -> "Grading":
        return grading_from_euler(self.algebra, vneg(self.algebra.field, self.euler))

    def __eq__(self, other):
        if not isinstance(other, Grading):
            return NotImplemented
        return self.algebra == other.algebra and self.d == other.d

    def __hash__(self):
        return hash(self.d)

    def __repr__(self):
        fmt = self.algebra.field.format_scalar
        return f"Grading(dims={self.dims}, euler=({', '.join(fmt(a) for a in self.euler)}))"

    def to_json(self) -> dict:
        fmt = self.algebra.field.format_scalar
        return {
            "euler": [fmt(a) for a in self.euler],
            "dims": list(self.dims),
            "g1": self.g1.basis.to_json(),
            "g0": self.g0.basis.to_json(),
            "g-1": self.gm1.basis.to_json(),
        }


def grading_from_euler(l: LieAlgebra, e: Vector) -> Grading:
    field = l.field
    d = l.ad(e)
    d2 = d @ d
    if d2 @ d != d:
        raise NotTripotent("ad(E)^3 != ad(E)")
    half = field.inv(field(2))
    one = Matrix.identity(field, l.dim)
    pr1 = (d + d2).scale(half)
    pr0 = one - d2
    prm1 = (d2 - d).scale(half)
    return Grading(
        algebra=l,
        euler=tuple(e),
        d=d,
        pr1=pr1,
        pr0=pr0,
        prm1=prm1,
    )


@dataclass(frozen=True, eq=False)
class Filtration3:
    """A flag f1 within f0; equality ignores the witness."""

    algebra: LieAlgebra
    f1: Subspace
    f0: Subspace
    witness: Vector = dc_field(compare=False)

    def key(self) -> tuple:
        return (self.f1.key(), self.f0.key())

    def __eq__(self, other):
        if not isinstance(other, Filtration3):
            return NotImplemented
        return self.f1 == other.f1 and self.f0 == other.f0

    def __hash__(self):
        return hash(self.key())

    def __lt__(self, other: "Filtration3"):
        return self.key() < other.key()

    def __repr__(self):
        return f"Filtration3(f1={self.f1!r}, f0={self.f0!r})"

    def transform(self, g: Matrix) -> "Filtration3":
        return Filtration3(self.algebra, self.f1.image(g), self.f0.image(g), g.apply(self.witness))

    def grading(self) -> Grading:
        return grading_from_euler(self.algebra, self.witness)

    def to_json(self) -> dict:
        fmt = self.algebra.field.format_scalar
        return {"f1": self.f1.basis.to_json(), "f0": self.f0.basis.to_json(), "witness": [fmt(a) for a in self.witness]}


def plus_filtration(g: Grading) -> Filtration3:
    return g._plus


def minus_filtration(g: Grading) -> Filtration3:
    return g._minus


def is_filtration(l: LieAlgebra, f1: Subspace, f0: Subspace) -> bool:
    if f1.ambient_dim != l.dim or f0.ambient_dim != l.dim:
        raise DimensionMismatch("flag does not live in the algebra")
    if not f0.contains(f1):
        return False
    if not l.is_subalgebra(f0):
        return False
    if l.bracket_space(f1, f1).dim != 0:
        return False
    if not f1.contains(l.bracket_space(f0, f1)):
        return False
    return f0.contains(l.bracket_space(l.full(), f1))


def _same_algebra(e: Filtration3, f: Filtration3):
    if e.algebra is not f.algebra and e.algebra != f.algebra:
        raise DimensionMismatch("filtrations of different algebras")


def is_transversal(e: Filtration3, f: Filtration3) -> bool:
    _same_algebra(e, f)
    return is_complement(e.f1, f.f0) and is_complement(f.f1, e.f0)


def _transversal_euler(e: Filtration3, f: Filtration3) -> Vector:
    """E - Z, the Euler element of the grading with flags (f, e).

    With E the witness of f, look for Z in f1 such that E - Z has no
    component in the (-1)-part of the grading defined by e's witness;
    that part has kernel e0, so the solution is unique.
    """
    if not is_transversal(e, f):
        raise NotTransversal("filtrations are not transversal")
    l = e.algebra
    big_e = f.witness
    if not f.f1.dim:
        return tuple(big_e)
    # only the (-1)-projection of e's witness grading is needed; a flag's
    # witness is an Euler element by construction, so tripotency is not rechecked
    d = l.ad(e.witness)
    prm1 = (d @ d - d).scale(l.field.inv(l.field(2)))
    lhs = prm1 @ f.f1.basis_matrix()
    rhs = prm1.apply(big_e)
    z = solve_vector(lhs, rhs)
    if z is None:
        raise NotTransversal("no Euler correction found")
    return vsub(l.field, big_e, f.f1.from_coordinates(z))


def grading_from_transversal(e: Filtration3, f: Filtration3) -> Grading:
    """The grading D with plus-filtration f and minus-filtration e."""
    out = grading_from_euler(e.algebra, _transversal_euler(e, f))
    if plus_filtration(out) != f or minus_filtration(out) != e:
        raise AssertionError("reconstructed grading does not match the flags")
    return out


@lru_cache(maxsize=64)
def _cached_euler(l: LieAlgebra, e: Filtration3, f: Filtration3, ew: Vector, fw: Vector) -> Vector:
    # flag equality ignores the algebra and the witnesses, so both are part of the key
    return _transversal_euler(e, f)


def transversal_coordinates(f: Filtration3, e: Filtration3, e2: Filtration3) -> Vector:
    """The unique x in f1 with exp(ad x).e = e2."""
    ea = _cached_euler(f.algebra, e, f, e.witness, f.witness)
    eb = _transversal_euler(e2, f)
    return vsub(f.algebra.field, ea, eb)


def same_plus_filtration(d1: Grading, d2: Grading) -> bool:
    return plus_filtration(d1) == plus_filtration(d2)


def dilation_matrix(g: Grading, r) -> Matrix:
    field = g.algebra.field
    r = field(r)
    if r == 0:
        raise ZeroDivisionError("dilation needs an invertible scalar")
    return g.pr1.scale(r) + g.pr0 + g.prm1.scale(field.inv(r))


def dilation(g: Grading, r):
    """h^(D, r) as an Automorphism carrying a one-letter word."""
    from .projgroup import Automorphism, Dilation, GroupWord

    return Automorphism(g.algebra, dilation_matrix(g, r), GroupWord((Dilation(g.algebra.field(r)),)))


def reflection_element(g: Grading) -> Matrix:
    field = g.algebra.field
    return Matrix.identity(field, g.algebra.dim) - (g.d @ g.d).scale(2)


def exp_ad_matrix(l: LieAlgebra, x: Vector) -> Matrix:
    return exp_nilpotent(l.ad(x))


def structure_map_mu(r, f1: Filtration3, f2: Filtration3, f3: Filtration3) -> Filtration3:
    """(1 - r) f1 + r f3 in the affine space of flags transversal to f2."""
    if not is_transversal(f1, f2) or not is_transversal(f3, f2):
        raise NotTransversal("structure map needs f1 and f3 transversal to f2")
    l = f1.algebra
    x = transversal_coordinates(f2, f1, f3)
    rx = tuple(l.field.reduce(l.field(r) * a) for a in x)
    return f1.transform(exp_ad_matrix(l, rx))


def structure_map_mu_by_dilation(r, f1: Filtration3, f2: Filtration3, f3: Filtration3) -> Filtration3:
    """Second route for invertible r: h^(D, r).f3 with D the grading of (f1, f2)."""
    d = grading_from_transversal(f1, f2)
    return f3.transform(dilation_matrix(d, r))


def reflection_multiply(d1: Grading, d2: Grading) -> Grading:
    """sigma(D1) D2 sigma(D1), realized by transporting the Euler element."""
    if d1.algebra != d2.algebra:
        raise DimensionMismatch("gradings of different algebras")
    sigma = reflection_element(d1)
    out = grading_from_euler(d1.algebra, sigma.apply(d2.euler))
    if out.d != sigma @ d2.d @ sigma:
        raise AssertionError("sigma is not an automorphism")
    return out


def enumerate_gradings(l: LieAlgebra, include_trivial: bool = False) -> list[Grading]:
    """All inner gradings of an algebra over a finite field, one per derivation ad(E).

    Euler elements differing by a central element give the same grading;
    only the first in enumeration order is kept.
    """
    import itertools

    seen = {}
    for coeffs in itertools.product(l.field.elements(), repeat=l.dim):
        d = l.ad(coeffs)
        if d in seen:
            continue
        if d @ d @ d != d:
            continue
        if d.is_zero() and not include_trivial:
            continue
        seen[d] = grading_from_euler(l, coeffs)
    return list(seen.values())
