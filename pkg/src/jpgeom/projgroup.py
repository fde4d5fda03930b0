"""The projective elementary group of a 3-graded Lie algebra, as matrices.

Chart convention: a point x of g_1 stands for the flag exp(ad x).f^-(D);
conversions between flags and chart points raise NotInChart when the flag
is not transversal to f^+(D).
"""

from __future__ import annotations

import itertools
import os
from collections import deque
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Callable, Iterable, Sequence, Union

from .errors import (
    CapExceeded,
    DimensionMismatch,
    InfiniteField,
    NotGraded,
    NotHomogeneous,
    NotInChart,
    NotInOmega,
    NotSurjective,
    NotTransversal,
)
from .exactla import Field, Matrix, Subspace, Vector, is_zero_vector, vadd, vneg, vscale, vsub
from .grading import (
    Filtration3,
    Grading,
    dilation_matrix,
    grading_from_euler,
    is_transversal,
    minus_filtration,
    plus_filtration,
    transversal_coordinates,
)
from .liecore import LieAlgebra, exp_nilpotent, subalgebra

DEFAULT_CAP = 10**6


# ---------------------------------------------------------------- words


@dataclass(frozen=True)
class ExpPlus:
    v: Vector


@dataclass(frozen=True)
class ExpMinus:
    w: Vector


@dataclass(frozen=True)
class Dilation:
    r: object


Letter = Union[ExpPlus, ExpMinus, Dilation]


@dataclass(frozen=True)
class GroupWord:
    """A product of generators, read left to right as a matrix product."""

    letters: tuple = ()

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def inverse(self, field: Field) -> "GroupWord":
        out = []
        for letter in reversed(self.letters):
            if isinstance(letter, ExpPlus):
                out.append(ExpPlus(vneg(field, letter.v)))
            elif isinstance(letter, ExpMinus):
                out.append(ExpMinus(vneg(field, letter.w)))
            else:
                out.append(Dilation(field.inv(letter.r)))
        return GroupWord(tuple(out))

    def to_string(self, d: Grading) -> str:
        """Compact form with coordinates in the RREF bases of g_1 and g_-1."""
        fmt = d.algebra.field.format_scalar
        parts = []
        for letter in self.letters:
            if isinstance(letter, ExpPlus):
                parts.append("x+:" + ",".join(fmt(a) for a in d.g1.coordinates(letter.v)))
            elif isinstance(letter, ExpMinus):
                parts.append("x-:" + ",".join(fmt(a) for a in d.gm1.coordinates(letter.w)))
            else:
                parts.append("dil:" + fmt(letter.r))
        return ";".join(parts)

    @classmethod
    def parse(cls, text: str, d: Grading) -> "GroupWord":
        """Parse e.g. ``"x+:1,0;x-:0,2;dil:3"``."""
        field = d.algebra.field
        letters = []
        for part in filter(None, (p.strip() for p in text.split(";"))):
            kind, _, body = part.partition(":")
            values = [field.parse_scalar(t) for t in body.split(",") if t.strip()]
            if kind == "x+":
                if len(values) != d.g1.dim:
                    raise DimensionMismatch(f"x+ needs {d.g1.dim} coordinates")
                letters.append(ExpPlus(d.g1.from_coordinates(values)))
            elif kind == "x-":
                if len(values) != d.gm1.dim:
                    raise DimensionMismatch(f"x- needs {d.gm1.dim} coordinates")
                letters.append(ExpMinus(d.gm1.from_coordinates(values)))
            elif kind == "dil":
                if len(values) != 1 or values[0] == 0:
                    raise ValueError("dil needs one invertible scalar")
                letters.append(Dilation(values[0]))
            else:
                raise ValueError(f"unknown letter {kind!r}")
        return cls(tuple(letters))

    def to_json(self, field: Field) -> list:
        fmt = field.format_scalar
        out = []
        for letter in self.letters:
            if isinstance(letter, ExpPlus):
                out.append({"exp+": [fmt(a) for a in letter.v]})
            elif isinstance(letter, ExpMinus):
                out.append({"exp-": [fmt(a) for a in letter.w]})
            else:
                out.append({"dil": fmt(letter.r)})
        return out

    @classmethod
    def from_json(cls, data: list, field: Field) -> "GroupWord":
        letters = []
        for item in data:
            if "exp+" in item:
                letters.append(ExpPlus(tuple(field.parse_scalar(a) for a in item["exp+"])))
            elif "exp-" in item:
                letters.append(ExpMinus(tuple(field.parse_scalar(a) for a in item["exp-"])))
            else:
                letters.append(Dilation(field.parse_scalar(item["dil"])))
        return cls(tuple(letters))


@dataclass(frozen=True, eq=False)
class Automorphism:
    """An automorphism of a Lie algebra; equality is matrix equality."""

    algebra: LieAlgebra
    matrix: Matrix
    word: GroupWord | None = dc_field(default=None)

    def __matmul__(self, other: "Automorphism") -> "Automorphism":
        word = self.word * other.word if self.word is not None and other.word is not None else None
        return Automorphism(self.algebra, self.matrix @ other.matrix, word)

    def __eq__(self, other):
        if not isinstance(other, Automorphism):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def inverse(self) -> "Automorphism":
        word = self.word.inverse(self.algebra.field) if self.word is not None else None
        return Automorphism(self.algebra, self.matrix.inverse(), word)

    def apply(self, x: Vector) -> Vector:
        return self.matrix.apply(x)

    def is_valid(self) -> bool:
        return self.algebra.is_automorphism(self.matrix)

    @classmethod
    def identity(cls, l: LieAlgebra) -> "Automorphism":
        return cls(l, Matrix.identity(l.field, l.dim), GroupWord())


# ---------------------------------------------------------------- generators


def _require(d: Grading, degree: int, x: Vector):
    if not d.component(degree).contains(x):
        raise NotHomogeneous(f"element is not in g_{degree}")


def exp_ad(d: Grading, sign: int, x: Vector) -> Automorphism:
    """exp(ad x) = 1 + ad x + (ad x)^2 / 2 for x in g_sign."""
    sign = 1 if sign in (1, "+") else -1
    _require(d, sign, x)
    word = GroupWord((ExpPlus(tuple(x)),)) if sign == 1 else GroupWord((ExpMinus(tuple(x)),))
    return Automorphism(d.algebra, exp_nilpotent(d.algebra.ad(x)), word)


def exp_homogeneous(d: Grading, x: Vector) -> Matrix:
    """exp(ad x) for x in g_1 or g_-1 (sign detected)."""
    if d.g1.contains(x) or d.gm1.contains(x):
        return exp_nilpotent(d.algebra.ad(x))
    raise NotHomogeneous("element is neither in g_1 nor in g_-1")


def letter_matrix(d: Grading, letter: Letter) -> Matrix:
    if isinstance(letter, ExpPlus):
        return exp_ad(d, 1, letter.v).matrix
    if isinstance(letter, ExpMinus):
        return exp_ad(d, -1, letter.w).matrix
    return dilation_matrix(d, letter.r)


def evaluate_word(w: GroupWord, d: Grading) -> Automorphism:
    m = Matrix.identity(d.algebra.field, d.algebra.dim)
    for letter in w.letters:
        m = m @ letter_matrix(d, letter)
    return Automorphism(d.algebra, m, w)


# ---------------------------------------------------------------- blocks


@lru_cache(maxsize=256)
def _frames(d: Grading) -> dict:
    """Per-degree inclusion (basis columns) and coordinate extraction data."""
    out = {}
    for i in (1, 0, -1):
        comp, pr = d.component(i), d.projection(i)
        # pr_i followed by reading off the pivot entries, as one (dim g_i x n) matrix
        out[i] = (comp.basis_matrix(), pr.submatrix(comp.pivots, range(pr.ncols)))
    return out


def block(g: Automorphism | Matrix, i: int, j: int, d: Grading) -> Matrix:
    """g_ij = pr_i o g o iota_j in the RREF bases of g_i and g_j."""
    m = g.matrix if isinstance(g, Automorphism) else g
    frames = _frames(d)
    incl, _ = frames[j]
    _, coords = frames[i]
    return coords @ (m @ incl)


def to_component_coords(d: Grading, i: int, x: Vector) -> Vector:
    return d.component(i).coordinates(x)


def from_component_coords(d: Grading, i: int, c: Sequence) -> Vector:
    comp = d.component(i)
    return comp.from_coordinates(c) if comp.dim else d.algebra.zero()


@lru_cache(maxsize=512)
def _exp_ad(l: LieAlgebra, x: Vector) -> Matrix:
    return exp_nilpotent(l.ad(x))


def _exp_plus_matrix(d: Grading, x: Vector) -> Matrix:
    _require(d, 1, x)
    return _exp_ad(d.algebra, x)


def denominator(g: Automorphism, x: Vector, d: Grading) -> Matrix:
    """d_g(x) = (exp(-ad x) g^-1)_11."""
    minus_x = vneg(d.algebra.field, x)
    return block(_exp_plus_matrix(d, minus_x) @ g.matrix.inverse(), 1, 1, d)


def codenominator(g: Automorphism, x: Vector, d: Grading) -> Matrix:
    """c_g(x) = (g exp(ad x))_{-1,-1}."""
    return block(g.matrix @ _exp_plus_matrix(d, x), -1, -1, d)


def nominator(g: Automorphism, x: Vector, d: Grading) -> Vector:
    """n_g(x) = pr_1(exp(-ad x) g^-1 E), an element of g_1."""
    minus_x = vneg(d.algebra.field, x)
    m = _exp_plus_matrix(d, minus_x) @ g.matrix.inverse()
    return d.pr1.apply(m.apply(d.euler))


def fractional_action(g: Automorphism, x: Vector, d: Grading) -> Vector:
    """g.x = d_g(x)^-1 n_g(x), defined iff d_g(x) and c_g(x) are invertible."""
    field = d.algebra.field
    minus_x = vneg(field, x)
    ginv = g.matrix.inverse()
    m = _exp_plus_matrix(d, minus_x) @ ginv
    den = block(m, 1, 1, d)
    cod = block(g.matrix @ _exp_plus_matrix(d, x), -1, -1, d)
    if not den.is_invertible() or not cod.is_invertible():
        raise NotInChart("a denominator or co-denominator is singular")
    num = d.pr1.apply(m.apply(d.euler))
    coords = den.inverse().apply(d.g1.coordinates(num))
    return from_component_coords(d, 1, coords)


def base_flags(d: Grading) -> tuple[Filtration3, Filtration3]:
    """(o^+, o^-) = (f^-(D), f^+(D))."""
    return minus_filtration(d), plus_filtration(d)


def chart_point(d: Grading, x: Vector) -> Filtration3:
    """The flag exp(ad x).f^-(D)."""
    return minus_filtration(d).transform(_exp_plus_matrix(d, x))


def chart_coordinate(d: Grading, f: Filtration3) -> Vector:
    """Inverse of chart_point on flags transversal to f^+(D)."""
    try:
        return transversal_coordinates(plus_filtration(d), minus_filtration(d), f)
    except NotTransversal:
        raise NotInChart("flag is not transversal to f^+") from None


def apply_to_filtration(g: Automorphism, f: Filtration3) -> Filtration3:
    return f.transform(g.matrix)


def flag_action_oracle(g: Automorphism, x: Vector, d: Grading) -> Vector:
    """Chart coordinate of g.exp(ad x).f^-, computed on flags only."""
    # one transform by the product instead of two in a row
    moved = minus_filtration(d).transform(g.matrix @ _exp_plus_matrix(d, x))
    return chart_coordinate(d, moved)


# ---------------------------------------------------------------- stabilizers


def stabilizer_class(g: Automorphism, d: Grading) -> str | None:
    fplus, fminus = plus_filtration(d), minus_filtration(d)
    fixes_plus = apply_to_filtration(g, fplus) == fplus
    fixes_minus = apply_to_filtration(g, fminus) == fminus
    if fixes_plus and fixes_minus:
        return "H"
    if fixes_plus:
        return "Pplus"
    if fixes_minus:
        return "Pminus"
    return None


def preserves_grading(g: Automorphism | Matrix, d: Grading) -> bool:
    m = g.matrix if isinstance(g, Automorphism) else g
    return m @ d.d == d.d @ m


def omega_decompose(g: Automorphism, d: Grading) -> tuple[Vector, Automorphism, Vector]:
    """g = exp(ad v) h exp(ad w) with v in g_1, h grading-preserving, w in g_-1."""
    field = d.algebra.field
    fplus, fminus = plus_filtration(d), minus_filtration(d)
    image = apply_to_filtration(g, fminus)
    if not is_transversal(image, fplus):
        raise NotInOmega("g.f^- is not transversal to f^+")
    v = transversal_coordinates(fplus, fminus, image)
    p = exp_ad(d, 1, vneg(field, v)) @ g
    back = apply_to_filtration(p.inverse(), fplus)
    w = vneg(field, transversal_coordinates(fminus, fplus, back))
    h = p @ exp_ad(d, -1, vneg(field, w))
    return v, Automorphism(d.algebra, h.matrix), w


# ---------------------------------------------------------------- kernels and vector fields


def canonical_kernel(f: Filtration3, e: Filtration3) -> Matrix:
    """K_{f,e}: e_1 -> g/f_0, in RREF coordinates of e_1 and quotient coordinates of f_0."""
    if f.algebra.dim != e.algebra.dim:
        raise DimensionMismatch("filtrations of different algebras")
    cols = [f.f0.quotient_coordinates(y) for y in e.f1.vectors()]
    nrows = f.algebra.dim - f.f0.dim
    if not cols:
        return Matrix.zeros(f.algebra.field, nrows, 0)
    return Matrix.from_columns(f.algebra.field, cols, nrows)


def trivialized_kernel(d: Grading, x: Vector, y: Vector) -> Matrix:
    """(exp(-ad x) exp(ad y))_11 for x in g_1, y in g_-1."""
    field = d.algebra.field
    _require(d, -1, y)
    return block(_exp_plus_matrix(d, vneg(field, x)) @ exp_nilpotent(d.algebra.ad(y)), 1, 1, d)


@dataclass(frozen=True)
class QuadraticMap:
    """v -> c + L v + q(v, v) on g_1 coordinates; q is symmetric."""

    field: Field
    constant: Vector
    linear: Matrix
    quadratic: tuple  # quadratic[a][b] is a coordinate vector

    @property
    def dim(self) -> int:
        return len(self.constant)

    def q(self, u: Vector, v: Vector) -> Vector:
        n = self.dim
        acc = [0] * n
        for a, ua in enumerate(u):
            if ua == 0:
                continue
            for b, vb in enumerate(v):
                if vb == 0:
                    continue
                coeff = ua * vb
                for k, t in enumerate(self.quadratic[a][b]):
                    acc[k] += coeff * t
        return tuple(self.field.reduce(self.field(0) + s) for s in acc)

    def __call__(self, v: Vector) -> Vector:
        f = self.field
        return vadd(f, vadd(f, self.constant, self.linear.apply(v)), self.q(v, v))

    def differential(self, x: Vector) -> Matrix:
        """h -> L h + 2 q(x, h)."""
        n = self.dim
        cols = []
        for b in range(n):
            e = tuple(self.field.one if k == b else self.field.zero for k in range(n))
            cols.append(vadd(self.field, self.linear.apply(e), vscale(self.field, 2, self.q(x, e))))
        return Matrix.from_columns(self.field, cols, n)


def _symmetric_tensor(field: Field, n: int, bilinear: Callable[[Vector, Vector], Vector]) -> tuple:
    """Symmetrized coefficient tensor of a quadratic form given by its polar map."""
    half = field.inv(field(2))
    units = [tuple(field.one if k == a else field.zero for k in range(n)) for a in range(n)]
    return tuple(
        tuple(vscale(field, half, vadd(field, bilinear(units[a], units[b]), bilinear(units[b], units[a]))) for b in range(n))
        for a in range(n)
    )


def vector_field_chart(y: Vector, d: Grading) -> QuadraticMap:
    """Trivialized vector field v -> pr_1(exp(-ad v) Y) in g_1 coordinates."""
    l, field = d.algebra, d.algebra.field
    n = d.g1.dim
    basis = d.g1.vectors()
    coords = lambda x: d.g1.coordinates(d.pr1.apply(x))  # noqa: E731
    constant = coords(y)
    lin_cols = [coords(vneg(field, l.bracket(b, y))) for b in basis]
    linear = Matrix.from_columns(field, lin_cols, n) if n else Matrix.zeros(field, 0, 0)
    half = field.inv(field(2))

    def polar(u, v):
        uu = d.g1.from_coordinates(u)
        vv = d.g1.from_coordinates(v)
        return coords(vscale(field, half, l.bracket(uu, l.bracket(vv, y))))

    return QuadraticMap(field, constant, linear, _symmetric_tensor(field, n, polar))


class DegreeOverflow(ArithmeticError):
    pass


def poly_bracket(p: QuadraticMap, q: QuadraticMap, strict: bool = True) -> QuadraticMap:
    """[p, q](x) = dp(x) q(x) - dq(x) p(x), truncated to degree 2.

    With ``strict`` the cubic part is computed and must vanish.
    """
    f = p.field
    n = p.dim
    units = [tuple(f.one if k == a else f.zero for k in range(n)) for a in range(n)]
    two = f(2)
    constant = vsub(f, p.linear.apply(q.constant), q.linear.apply(p.constant))
    lin_cols = []
    for e in units:
        col = vadd(f, p.linear.apply(q.linear.apply(e)), vscale(f, two, p.q(e, q.constant)))
        col = vsub(f, col, vadd(f, q.linear.apply(p.linear.apply(e)), vscale(f, two, q.q(e, p.constant))))
        lin_cols.append(col)
    linear = Matrix.from_columns(f, lin_cols, n) if n else Matrix.zeros(f, 0, 0)

    def quad_polar(u, v):
        # polarization of x -> L_p Q_q(x) + 2 Q_p(x, L_q x) - L_q Q_p(x) - 2 Q_q(x, L_p x)
        t1 = p.linear.apply(q.q(u, v))
        t2 = vscale(f, two, p.q(u, q.linear.apply(v)))
        t3 = q.linear.apply(p.q(u, v))
        t4 = vscale(f, two, q.q(u, p.linear.apply(v)))
        return vsub(f, vadd(f, t1, t2), vadd(f, t3, t4))

    quadratic = _symmetric_tensor(f, n, quad_polar)
    if strict:
        for a, b, c in itertools.product(range(n), repeat=3):
            # coefficient tensor of x -> 2 Q_p(x, Q_q(x)) - 2 Q_q(x, Q_p(x)), symmetrized over (a,b,c)
            acc = None
            for i, j, k in set(itertools.permutations((a, b, c))):
                term = vsub(f, p.q(units[i], q.q(units[j], units[k])), q.q(units[i], p.q(units[j], units[k])))
                acc = term if acc is None else vadd(f, acc, term)
            if not is_zero_vector(acc):
                raise DegreeOverflow("bracket of quadratic maps has a cubic part")
    return QuadraticMap(f, constant, linear, quadratic)


def quadratic_map_equal(p: QuadraticMap, q: QuadraticMap) -> bool:
    return p.constant == q.constant and p.linear == q.linear and p.quadratic == q.quadratic


# ---------------------------------------------------------------- cocycles


def cocycle_check(g1: Automorphism, g2: Automorphism, x: Vector, d: Grading, kind: str = "denominator") -> bool:
    """d_{g1 g2}(x) = d_{g2}(x) d_{g1}(g2.x), or the co-denominator analogue."""
    y = fractional_action(g2, x, d)
    fractional_action(g1 @ g2, x, d)
    if kind == "denominator":
        return denominator(g1 @ g2, x, d) == denominator(g2, x, d) @ denominator(g1, y, d)
    if kind == "codenominator":
        return codenominator(g1 @ g2, x, d) == codenominator(g1, y, d) @ codenominator(g2, x, d)
    raise ValueError(f"unknown cocycle kind {kind!r}")


def structure_pair(g: Automorphism, x: Vector, d: Grading) -> tuple[Matrix, Matrix]:
    """(d_g(x)^-1, c_g(x)), acting on g_1 and g_-1 coordinates."""
    den = denominator(g, x, d)
    cod = codenominator(g, x, d)
    if not den.is_invertible() or not cod.is_invertible():
        raise NotInChart("g.x is not defined")
    return den.inverse(), cod


# ---------------------------------------------------------------- orbits


def _cap(cap: int | None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get("JPGEOM_CAP")
    return int(env) if env else DEFAULT_CAP


def generators(d: Grading) -> list[Automorphism]:
    """exp(ad(c b)) for b in the RREF bases of g_1, g_-1 and all nonzero c."""
    field = d.algebra.field
    if not field.is_prime:
        raise InfiniteField("generator enumeration needs a finite field")
    out = []
    for sign, comp in ((1, d.g1), (-1, d.gm1)):
        for b in comp.vectors():
            for c in range(1, field.p):
                out.append(exp_ad(d, sign, vscale(field, c, b)))
    return out


def orbit_enumerate(d: Grading, seed: Filtration3, cap: int | None = None) -> list[Filtration3]:
    """BFS closure of seed under the generators, sorted by canonical key."""
    cap = _cap(cap)
    gens = [g.matrix for g in generators(d)]
    seen = {seed.key(): seed}
    queue = deque([seed])
    while queue:
        f = queue.popleft()
        for g in gens:
            h = f.transform(g)
            k = h.key()
            if k not in seen:
                seen[k] = h
                if len(seen) > cap:
                    raise CapExceeded(f"orbit exceeds cap {cap}")
                queue.append(h)
    return [seen[k] for k in sorted(seen)]


def grading_orbit(d: Grading, cap: int | None = None) -> list[Grading]:
    """Orbit of D under G, i.e. the gradings g D g^-1, sorted by derivation matrix."""
    cap = _cap(cap)
    gens = [g.matrix for g in generators(d)]
    l = d.algebra
    seen = {d.d: d.euler}
    queue = deque([d.euler])
    while queue:
        e = queue.popleft()
        for g in gens:
            e2 = g.apply(e)
            m = l.ad(e2)
            if m not in seen:
                seen[m] = e2
                if len(seen) > cap:
                    raise CapExceeded(f"orbit exceeds cap {cap}")
                queue.append(e2)
    return [grading_from_euler(l, seen[k]) for k in sorted(seen, key=lambda m: m.rows)]


def generate_group(d: Grading, cap: int | None = None, extra: Iterable[Matrix] = ()) -> list[Automorphism]:
    """All elements of G(D) (plus optional extra generators) by BFS over matrices."""
    cap = _cap(cap)
    gens = [g.matrix for g in generators(d)] + list(extra)
    ident = Matrix.identity(d.algebra.field, d.algebra.dim)
    seen = {ident}
    queue = deque([ident])
    while queue:
        m = queue.popleft()
        for g in gens:
            h = m @ g
            if h not in seen:
                seen.add(h)
                if len(seen) > cap:
                    raise CapExceeded(f"group exceeds cap {cap}")
                queue.append(h)
    return [Automorphism(d.algebra, m) for m in sorted(seen, key=lambda m: m.rows)]


# ---------------------------------------------------------------- functoriality


def _check_graded_surjection(phi: Matrix, d_src: Grading, d_tgt: Grading):
    if phi.shape != (d_tgt.algebra.dim, d_src.algebra.dim):
        raise DimensionMismatch("morphism has the wrong shape")
    if phi.rank() != d_tgt.algebra.dim:
        raise NotSurjective("morphism is not surjective")
    if not d_src.algebra.is_homomorphism_to(d_tgt.algebra, phi):
        raise NotGraded("map is not a Lie algebra homomorphism")
    for i in (1, -1):
        if not d_tgt.component(i).contains(d_src.component(i).image(phi)):
            raise NotGraded(f"g_{i} is not mapped into g'_{i}")


def induced_word_map(phi: Matrix, w: GroupWord, d_src: Grading, d_tgt: Grading) -> GroupWord:
    """Letter-wise image of a word under a surjective graded morphism."""
    _check_graded_surjection(phi, d_src, d_tgt)
    out = []
    for letter in w.letters:
        if isinstance(letter, ExpPlus):
            out.append(ExpPlus(phi.apply(letter.v)))
        elif isinstance(letter, ExpMinus):
            out.append(ExpMinus(phi.apply(letter.w)))
        else:
            out.append(Dilation(letter.r))
    return GroupWord(tuple(out))


def intertwines(phi: Matrix, g_src: Matrix, g_tgt: Matrix) -> bool:
    return g_tgt @ phi == phi @ g_src


@dataclass(frozen=True)
class InnerRestriction:
    sub: LieAlgebra
    embed: Matrix
    grading: Grading
    span: Subspace

    def restrict(self, g: Automorphism) -> Automorphism:
        cols = [self.span.coordinates(g.matrix.apply(b)) for b in self.span.vectors()]
        return Automorphism(self.sub, Matrix.from_columns(self.sub.field, cols, self.sub.dim))

    def __iter__(self):
        return iter((self.sub, self.embed, self.restrict))


def restrict_to_inner(l: LieAlgebra, d: Grading) -> InnerRestriction:
    """Restriction to g_1 + g_-1 + [g_1, g_-1] + KE."""
    u = d.g1 + d.gm1 + l.bracket_space(d.g1, d.gm1) + l.span(d.euler)
    sub, embed = subalgebra(l, u)
    sub_grading = grading_from_euler(sub, u.coordinates(d.euler))
    return InnerRestriction(sub, embed, sub_grading, u)


def matrix_coefficient(kind: str, x: Vector, g: Automorphism, y: Vector, h: Automorphism, d: Grading):
    """(exp(ad x) g exp(ad y) h)_11 for kind "q11", or its (1,0)-block applied to E for "p10"."""
    m = exp_homogeneous(d, x) @ g.matrix @ exp_homogeneous(d, y) @ h.matrix
    if kind == "q11":
        return block(m, 1, 1, d)
    if kind == "p10":
        return d.pr1.apply(m.apply(d.pr0.apply(d.euler)))
    raise ValueError(f"unknown coefficient kind {kind!r}")
