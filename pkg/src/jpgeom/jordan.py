"""Jordan pairs, triple systems and algebras.

A pair stores two trilinear tensors: ``tplus[a][b][c]`` is T+(u_a, w_b, u_c)
for basis vectors u of V+ and w of V-, and ``tminus[a][b][c]`` is
T-(w_a, u_b, w_c).  Pairs extracted from gradings follow T = -[[X, Y], Z];
the rectangular matrix pairs also come in the positive form XYZ + ZYX.
The two are related by negating both tensors, i.e. by (id, -id).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DimensionMismatch,
    InfiniteField,
    InvalidJTS,
    InvalidPair,
    Isotropic,
    NotBitransversal,
    NotInvertible,
    NotInvolution,
    NotQuasiInvertible,
    NotTransversal,
    NotUnitCandidate,
)
from .exactla import Field, Matrix, Subspace, Vector, is_zero_vector, unit_vector, vadd, vneg, vscale, vsub, zero_vector
from .grading import (
    Filtration3,
    Grading,
    dilation_matrix,
    grading_from_euler,
    grading_from_transversal,
    is_transversal,
    minus_filtration,
    plus_filtration,
    structure_map_mu,
)
from .liecore import LieAlgebra, exp_nilpotent
from .projgroup import Automorphism, orbit_enumerate

BRACKET_SIGN = "eq3.1"  # T = -[[X, Y], Z]
MATRIX_SIGN = "sec8.5"  # T = XYZ + ZYX for rectangular matrices


def _tensor(field: Field, raw, n_out: int):
    return tuple(tuple(tuple(tuple(field(a) for a in v) for v in row) for row in plane) for plane in raw)


def _trilinear(field: Field, t, x: Vector, y: Vector, z: Vector, n_out: int) -> Vector:
    acc = [0] * n_out
    xs = [(a, s) for a, s in enumerate(x) if s != 0]
    ys = [(b, s) for b, s in enumerate(y) if s != 0]
    zs = [(c, s) for c, s in enumerate(z) if s != 0]
    for a, xa in xs:
        plane = t[a]
        for b, yb in ys:
            row = plane[b]
            xy = xa * yb
            for c, zc in zs:
                coeff = xy * zc
                for k, v in enumerate(row[c]):
                    if v != 0:
                        acc[k] += coeff * v
    red = field.reduce
    return tuple(red(field(0) + s) for s in acc)


@dataclass(frozen=True, eq=False)
class JordanPair:
    field: Field
    nplus: int
    nminus: int
    tplus: tuple
    tminus: tuple
    sign: str = BRACKET_SIGN

    @classmethod
    def build(cls, field: Field, nplus: int, nminus: int, tplus, tminus, sign: str = BRACKET_SIGN) -> "JordanPair":
        tp = _tensor(field, tplus, nplus)
        tm = _tensor(field, tminus, nminus)
        shapes_ok = (
            len(tp) == nplus
            and all(len(pl) == nminus and all(len(r) == nplus and all(len(v) == nplus for v in r) for r in pl) for pl in tp)
            and len(tm) == nminus
            and all(len(pl) == nplus and all(len(r) == nminus and all(len(v) == nminus for v in r) for r in pl) for pl in tm)
        )
        if not shapes_ok:
            raise DimensionMismatch("tensor shapes do not match the pair dimensions")
        return cls(field, nplus, nminus, tp, tm, sign)

    @classmethod
    def from_functions(cls, field: Field, nplus: int, nminus: int, fplus, fminus, sign: str = BRACKET_SIGN) -> "JordanPair":
        """Tabulate T+ and T- from callables on coordinate vectors."""
        up = [unit_vector(field, nplus, i) for i in range(nplus)]
        um = [unit_vector(field, nminus, i) for i in range(nminus)]
        tp = [[[fplus(a, b, c) for c in up] for b in um] for a in up]
        tm = [[[fminus(a, b, c) for c in um] for b in up] for a in um]
        return cls.build(field, nplus, nminus, tp, tm, sign)

    def __eq__(self, other):
        if not isinstance(other, JordanPair):
            return NotImplemented
        return (self.field, self.nplus, self.nminus, self.tplus, self.tminus) == (
            other.field,
            other.nplus,
            other.nminus,
            other.tplus,
            other.tminus,
        )

    def __hash__(self):
        return hash((self.nplus, self.nminus, self.tplus, self.tminus))

    def dim(self, side: int) -> int:
        return self.nplus if side == 1 else self.nminus

    def T(self, side: int, x: Vector, y: Vector, z: Vector) -> Vector:
        if side == 1:
            return _trilinear(self.field, self.tplus, x, y, z, self.nplus)
        return _trilinear(self.field, self.tminus, x, y, z, self.nminus)

    def T_op(self, side: int, x: Vector, y: Vector) -> Matrix:
        n = self.dim(side)
        cols = [self.T(side, x, y, unit_vector(self.field, n, c)) for c in range(n)]
        return _cols(self.field, cols, n)

    def Q(self, side: int, x: Vector) -> Matrix:
        """Q(x): V-side -> V+side, v -> T(x, v, x) / 2."""
        n_out, n_in = self.dim(side), self.dim(-side)
        half = self.field.inv(self.field(2))
        cols = [vscale(self.field, half, self.T(side, x, unit_vector(self.field, n_in, b), x)) for b in range(n_in)]
        return _cols(self.field, cols, n_out)

    def flipped(self) -> "JordanPair":
        """The same pair in the other sign convention (both tensors negated)."""
        neg = lambda t: tuple(tuple(tuple(vneg(self.field, v) for v in r) for r in pl) for pl in t)  # noqa: E731
        other = MATRIX_SIGN if self.sign == BRACKET_SIGN else BRACKET_SIGN
        return JordanPair(self.field, self.nplus, self.nminus, neg(self.tplus), neg(self.tminus), other)

    def swapped(self) -> "JordanPair":
        """The opposite pair (V-, V+)."""
        return JordanPair(self.field, self.nminus, self.nplus, self.tminus, self.tplus, self.sign)

    def vectors(self, side: int):
        return [tuple(v) for v in itertools.product(self.field.elements(), repeat=self.dim(side))]

    def to_json(self) -> dict:
        fmt = self.field.format_scalar
        enc = lambda t: [[[[fmt(a) for a in v] for v in r] for r in pl] for pl in t]  # noqa: E731
        return {
            "field": self.field.to_json(),
            "dims": [self.nplus, self.nminus],
            "tplus": enc(self.tplus),
            "tminus": enc(self.tminus),
            "convention": {"sign": self.sign},
        }

    @classmethod
    def from_json(cls, data: dict) -> "JordanPair":
        field = Field.from_json(data["field"])
        nplus, nminus = data["dims"]
        dec = lambda t: [[[[field.parse_scalar(str(a)) for a in v] for v in r] for r in pl] for pl in t]  # noqa: E731
        sign = data.get("convention", {}).get("sign", BRACKET_SIGN)
        if sign not in (BRACKET_SIGN, MATRIX_SIGN):
            raise InvalidPair(f"unknown sign convention {sign!r}")
        return cls.build(field, nplus, nminus, dec(data["tplus"]), dec(data["tminus"]), sign)


def _cols(field: Field, cols: list, nrows: int) -> Matrix:
    if not cols:
        return Matrix.zeros(field, nrows, 0)
    return Matrix.from_columns(field, cols, nrows)


def _units(field: Field, n: int) -> list[Vector]:
    return [unit_vector(field, n, i) for i in range(n)]


# ---------------------------------------------------------------- identities


def pair_from_grading(l: LieAlgebra, d: Grading) -> JordanPair:
    """T(X, Y, Z) = -[[X, Y], Z] in the RREF bases of g_1 and g_-1."""
    field = l.field
    plus, minus = d.g1.vectors(), d.gm1.vectors()

    def t(basis_x, basis_y, comp):
        return [
            [[comp.coordinates(vneg(field, l.bracket(l.bracket(x, y), z))) for z in basis_x] for y in basis_y]
            for x in basis_x
        ]

    return JordanPair.build(field, len(plus), len(minus), t(plus, minus, d.g1), t(minus, plus, d.gm1), BRACKET_SIGN)


def _identity_failures(p: JordanPair, side: int):
    f = p.field
    xs, ys = _units(f, p.dim(side)), _units(f, p.dim(-side))
    for a, c in itertools.combinations_with_replacement(range(len(xs)), 2):
        for y in ys:
            if p.T(side, xs[a], y, xs[c]) != p.T(side, xs[c], y, xs[a]):
                yield ("outer symmetry", side)
    for x, y, u, v, w in itertools.product(xs, ys, xs, ys, xs):
        lhs = p.T(side, x, y, p.T(side, u, v, w))
        r1 = p.T(side, p.T(side, x, y, u), v, w)
        r2 = p.T(side, u, p.T(-side, y, x, v), w)
        r3 = p.T(side, u, v, p.T(side, x, y, w))
        if lhs != vadd(f, vsub(f, r1, r2), r3):
            yield ("five-linear identity", side)


def check_pair(p: JordanPair) -> bool:
    return not any(True for side in (1, -1) for _ in _identity_failures(p, side))


def is_pair_morphism(p: JordanPair, q: JordanPair, maps: tuple[Matrix, Matrix]) -> bool:
    a_plus, a_minus = maps
    f = p.field
    for side, a_out, a_in in ((1, a_plus, a_minus), (-1, a_minus, a_plus)):
        xs, ys = _units(f, p.dim(side)), _units(f, p.dim(-side))
        for x, y, z in itertools.product(xs, ys, xs):
            if a_out.apply(p.T(side, x, y, z)) != q.T(side, a_out.apply(x), a_in.apply(y), a_out.apply(z)):
                return False
    return True


def is_pair_automorphism(p: JordanPair, maps: tuple[Matrix, Matrix]) -> bool:
    a_plus, a_minus = maps
    if a_plus.shape != (p.nplus, p.nplus) or a_minus.shape != (p.nminus, p.nminus):
        return False
    if not (a_plus.is_invertible() and a_minus.is_invertible()):
        return False
    return is_pair_morphism(p, p, maps)


def is_pair_derivation(p: JordanPair, maps: tuple[Matrix, Matrix]) -> bool:
    a_plus, a_minus = maps
    f = p.field
    for side, a_out, a_in in ((1, a_plus, a_minus), (-1, a_minus, a_plus)):
        xs, ys = _units(f, p.dim(side)), _units(f, p.dim(-side))
        for x, y, z in itertools.product(xs, ys, xs):
            lhs = a_out.apply(p.T(side, x, y, z))
            rhs = vadd(f, vadd(f, p.T(side, a_out.apply(x), y, z), p.T(side, x, a_in.apply(y), z)), p.T(side, x, y, a_out.apply(z)))
            if lhs != rhs:
                return False
    return True


def euler_operator(p: JordanPair) -> tuple[Matrix, Matrix]:
    return Matrix.identity(p.field, p.nplus), Matrix.scalar(p.field, p.nminus, -1)


# ---------------------------------------------------------------- quadratic operators


def q_op(p: JordanPair, side: int, x: Vector) -> Matrix:
    if len(x) != p.dim(side):
        raise DimensionMismatch("vector is not on the requested side")
    return p.Q(side, x)


def bergman(p: JordanPair, x: Vector, y: Vector) -> tuple[Matrix, Matrix]:
    """(B+(x, y), B-(y, x)) with B = 1 - T(x, y) + Q(x) Q(y)."""
    if len(x) != p.nplus or len(y) != p.nminus:
        raise DimensionMismatch("bergman expects x in V+ and y in V-")
    f = p.field
    bp = Matrix.identity(f, p.nplus) - p.T_op(1, x, y) + p.Q(1, x) @ p.Q(-1, y)
    bm = Matrix.identity(f, p.nminus) - p.T_op(-1, y, x) + p.Q(-1, y) @ p.Q(1, x)
    return bp, bm


def is_quasi_invertible(p: JordanPair, x: Vector, y: Vector) -> bool:
    bp, bm = bergman(p, x, y)
    return bp.is_invertible() and bm.is_invertible()


def quasi_inverse(p: JordanPair, x: Vector, y: Vector) -> Vector:
    """x^y = B+(x, y)^-1 (x - Q+(x) y)."""
    bp, bm = bergman(p, x, y)
    if not (bp.is_invertible() and bm.is_invertible()):
        raise NotQuasiInvertible("(x, y) is not quasi-invertible")
    return bp.inverse().apply(vsub(p.field, x, p.Q(1, x).apply(y)))


def bergman_automorphism(p: JordanPair, x: Vector, y: Vector) -> tuple[Matrix, Matrix]:
    bp, bm = bergman(p, x, y)
    if not (bp.is_invertible() and bm.is_invertible()):
        raise NotQuasiInvertible("(x, y) is not quasi-invertible")
    return bp, bm.inverse()


# ---------------------------------------------------------------- TKK


@dataclass(frozen=True, eq=False)
class TKK:
    algebra: LieAlgebra
    grading: Grading
    plus_embed: Matrix
    minus_embed: Matrix
    g0_basis: tuple  # operator pairs (A, B)
    pair: JordanPair

    def __iter__(self):
        return iter((self.algebra, self.grading, (self.plus_embed, self.minus_embed)))

    def embed(self, side: int, x: Vector) -> Vector:
        return (self.plus_embed if side == 1 else self.minus_embed).apply(x)


def _flatten_pair(a: Matrix, b: Matrix) -> Vector:
    return a.flat() + b.flat()


def _unflatten_pair(field: Field, v: Vector, n: int, m: int) -> tuple[Matrix, Matrix]:
    a = Matrix.from_rows(field, [v[i * n:(i + 1) * n] for i in range(n)], n) if n else Matrix.zeros(field, 0, 0)
    off = n * n
    b = Matrix.from_rows(field, [v[off + i * m: off + (i + 1) * m] for i in range(m)], m) if m else Matrix.zeros(field, 0, 0)
    return a, b


def inner_derivations(p: JordanPair) -> list[tuple[Matrix, Matrix]]:
    """(-T+(v, w), T-(w, v)) on basis vectors."""
    f = p.field
    return [
        (-p.T_op(1, v, w), p.T_op(-1, w, v))
        for v in _units(f, p.nplus)
        for w in _units(f, p.nminus)
    ]


def tkk(p: JordanPair) -> TKK:
    """V+ + (ider + KE) + V- with [v, w] = (-T+(v, w), T-(w, v))."""
    if not check_pair(p):
        raise InvalidPair("tensors violate the Jordan pair identities")
    f = p.field
    n, m = p.nplus, p.nminus
    ambient = n * n + m * m
    gens = [_flatten_pair(a, b) for a, b in inner_derivations(p)]
    span = Subspace(f, ambient, gens)
    for _ in range(ambient + 1):
        ops = [_unflatten_pair(f, v, n, m) for v in span.vectors()]
        brackets = [_flatten_pair(a1 @ a2 - a2 @ a1, b1 @ b2 - b2 @ b1) for (a1, b1), (a2, b2) in itertools.combinations(ops, 2)]
        bigger = span + Subspace(f, ambient, brackets)
        if bigger == span:
            break
        span = bigger
    euler_flat = _flatten_pair(Matrix.identity(f, n), Matrix.scalar(f, m, -1))
    g0 = span + Subspace(f, ambient, [euler_flat])
    g0_ops = [_unflatten_pair(f, v, n, m) for v in g0.vectors()]
    k = len(g0_ops)
    dim = n + k + m

    def split(x: Vector):
        return x[:n], x[n:n + k], x[n + k:]

    def g0_matrix(c: Vector) -> tuple[Matrix, Matrix]:
        return _unflatten_pair(f, g0.from_coordinates(c) if k else zero_vector(f, ambient), n, m)

    def br(x: Vector, y: Vector) -> Vector:
        v1, d1, w1 = split(x)
        v2, d2, w2 = split(y)
        a1, b1 = g0_matrix(d1)
        a2, b2 = g0_matrix(d2)
        plus = vsub(f, a1.apply(v2), a2.apply(v1))
        minus = vsub(f, b1.apply(w2), b2.apply(w1))
        a = a1 @ a2 - a2 @ a1
        b = b1 @ b2 - b2 @ b1
        # [v1, w2] - [v2, w1]
        a = a - p.T_op(1, v1, w2) + p.T_op(1, v2, w1)
        b = b + p.T_op(-1, w2, v1) - p.T_op(-1, w1, v2)
        flat = _flatten_pair(a, b)
        if not g0.contains(flat):
            raise InvalidPair("degree-zero part is not closed")
        return plus + (g0.coordinates(flat) if k else ()) + minus

    basis = _units(f, dim)
    c = [[br(x, y) for y in basis] for x in basis]
    names = [f"u{i}" for i in range(n)] + [f"d{i}" for i in range(k)] + [f"w{i}" for i in range(m)]
    try:
        l = LieAlgebra(f, names, c)
    except Exception as exc:  # Jacobi failure means the tensors were not a Jordan pair
        raise InvalidPair(str(exc)) from exc
    euler = zero_vector(f, n) + g0.coordinates(euler_flat) + zero_vector(f, m)
    d = grading_from_euler(l, euler)
    plus_embed = _cols(f, basis[:n], dim)
    minus_embed = _cols(f, basis[n + k:], dim)
    return TKK(l, d, plus_embed, minus_embed, tuple(g0_ops), p)


# ---------------------------------------------------------------- triple systems and involutions


@dataclass(frozen=True, eq=False)
class JTS:
    field: Field
    dim: int
    t: tuple

    @classmethod
    def build(cls, field: Field, dim: int, t) -> "JTS":
        return cls(field, dim, _tensor(field, t, dim))

    def T(self, x: Vector, y: Vector, z: Vector) -> Vector:
        return _trilinear(self.field, self.t, x, y, z, self.dim)

    def as_pair(self) -> JordanPair:
        return JordanPair(self.field, self.dim, self.dim, self.t, self.t, BRACKET_SIGN)

    def is_valid(self) -> bool:
        return check_pair(self.as_pair())

    def __eq__(self, other):
        if not isinstance(other, JTS):
            return NotImplemented
        return (self.field, self.dim, self.t) == (other.field, other.dim, other.t)

    def __hash__(self):
        return hash((self.dim, self.t))


@dataclass(frozen=True, eq=False)
class Involution:
    algebra: LieAlgebra
    grading: Grading
    theta: Matrix

    def __post_init__(self):
        l, d, th = self.algebra, self.grading, self.theta
        if th.shape != (l.dim, l.dim) or not (th @ th).is_identity():
            raise NotInvolution("theta is not of order 2")
        if not l.is_automorphism(th):
            raise NotInvolution("theta is not an automorphism")
        if d.g1.image(th) != d.gm1 or d.gm1.image(th) != d.g1 or d.g0.image(th) != d.g0:
            raise NotInvolution("theta does not reverse the grading")

    def apply(self, x: Vector) -> Vector:
        return self.theta.apply(x)


def jts_from_involution(l: LieAlgebra, d: Grading, th: Involution | Matrix) -> JTS:
    """T(X, Y, Z) = -[[X, theta Y], Z] on g_1."""
    if isinstance(th, Matrix):
        th = Involution(l, d, th)
    f = l.field
    basis = d.g1.vectors()
    t = [[[d.g1.coordinates(vneg(f, l.bracket(l.bracket(x, th.apply(y)), z))) for z in basis] for y in basis] for x in basis]
    return JTS.build(f, len(basis), t)


def involution_from_jts(t: JTS) -> tuple[LieAlgebra, Grading, Involution]:
    """TKK of the polarized pair (V, V) with the swap theta(v, (A, B), w) = (w, (B, A), v)."""
    if not t.is_valid():
        raise InvalidJTS("tensor violates the triple system identities")
    result = tkk(t.as_pair())
    l, f, n = result.algebra, t.field, t.dim
    k = len(result.g0_basis)
    g0 = Subspace(f, n * n * 2, [_flatten_pair(a, b) for a, b in result.g0_basis])
    cols = []
    for i in range(l.dim):
        if i < n:
            cols.append(result.minus_embed.column(i))
        elif i < n + k:
            a, b = result.g0_basis[i - n]
            c = g0.coordinates(_flatten_pair(b, a))
            cols.append(zero_vector(f, n) + c + zero_vector(f, n))
        else:
            cols.append(result.plus_embed.column(i - n - k))
    theta = Matrix.from_columns(f, cols, l.dim)
    return l, result.grading, Involution(l, result.grading, theta)


def polarity_apply(th: Involution, f: Filtration3) -> Filtration3:
    return f.transform(th.theta)


def is_nonisotropic(th: Involution, f: Filtration3) -> bool:
    return is_transversal(polarity_apply(th, f), f)


def symmetric_multiply(th: Involution, x: Filtration3, y: Filtration3) -> Filtration3:
    """mu(x, y) = mu_{-1}(x, p(x), y)."""
    px = polarity_apply(th, x)
    if not is_transversal(x, px):
        raise Isotropic("x is isotropic")
    if not is_transversal(y, px):
        raise NotTransversal("y is not transversal to p(x)")
    return structure_map_mu(-1, x, px, y)


def polarity_grading(th: Involution, x: Filtration3) -> Grading:
    """The grading with minus-filtration x and plus-filtration theta(x)."""
    return grading_from_transversal(x, polarity_apply(th, x))


# ---------------------------------------------------------------- self-duality


def invertible(p: JordanPair, x: Vector, side: int = 1) -> bool:
    return p.nplus == p.nminus and p.Q(side, x).is_invertible()


def jordan_inverse(p: JordanPair, x: Vector, side: int = 1) -> Vector:
    """-Q(x)^-1 x; the result lies on the opposite side."""
    if not invertible(p, x, side):
        raise NotInvertible("Q(x) is not invertible")
    return vneg(p.field, p.Q(side, x).inverse().apply(x))


@dataclass(frozen=True)
class SelfDuality:
    status: str  # "yes" | "no" | "unknown"
    witnesses: tuple = ()


def pair_is_selfdual(p: JordanPair, candidates: Sequence[Vector] | None = None) -> SelfDuality:
    if p.nplus != p.nminus:
        return SelfDuality("no")
    if p.field.is_prime and candidates is None:
        found = tuple(x for x in p.vectors(1) if invertible(p, x))
        return SelfDuality("yes", found) if found else SelfDuality("no")
    if candidates is None:
        candidates = [tuple(p.field(a) for a in c) for c in itertools.product((-1, 0, 1), repeat=p.nplus)]
    found = tuple(x for x in candidates if invertible(p, x))
    return SelfDuality("yes", found) if found else SelfDuality("unknown")


def is_selfdual(l: LieAlgebra, d: Grading, candidates: Sequence[Vector] | None = None) -> SelfDuality:
    """Witnesses are g_1 coordinates of invertible elements."""
    return pair_is_selfdual(pair_from_grading(l, d), candidates)


def flag_spaces_coincide(d: Grading, cap: int | None = None) -> bool:
    """X+ = X-: the orbits of f^-(D) and f^+(D) are the same set of flags.

    Kept apart from is_selfdual on purpose: an invertible element forces
    equality, but equality alone is not known to give one.
    """
    if not d.algebra.field.is_prime:
        raise InfiniteField("orbit comparison needs a finite field")
    # two orbits are equal or disjoint, so one membership test decides it
    x_plus = set(orbit_enumerate(d, minus_filtration(d), cap))
    return plus_filtration(d) in x_plus


def bitransversal_flag(d: Grading, e_minus: Vector) -> Filtration3:
    """exp(ad e-).f^+, transversal to both base flags when Q-(e-) is invertible."""
    flag = plus_filtration(d).transform(exp_nilpotent(d.algebra.ad(e_minus)))
    if not (is_transversal(flag, plus_filtration(d)) and is_transversal(flag, minus_filtration(d))):
        raise NotBitransversal("flag is not transversal to both base flags")
    return flag


def selfdual_involution(l: LieAlgebra, d: Grading, f: Filtration3) -> Automorphism:
    """h^(D', -1) where D' is the grading of (midpoint of o+ and o- in f^T, f)."""
    o_plus, o_minus = minus_filtration(d), plus_filtration(d)
    if not (is_transversal(f, o_minus) and is_transversal(f, o_plus)):
        raise NotBitransversal("f must be transversal to both base flags")
    mid = structure_map_mu(l.field.inv(l.field(2)), o_plus, f, o_minus)
    d_mid = grading_from_transversal(mid, f)
    j = Automorphism(l, dilation_matrix(d_mid, -1))
    return j


# ---------------------------------------------------------------- Jordan algebras


@dataclass(frozen=True, eq=False)
class JordanAlgebra:
    field: Field
    dim: int
    product: tuple  # product[a][b] is a coordinate vector
    unit: Vector

    def mul(self, x: Vector, y: Vector) -> Vector:
        acc = [0] * self.dim
        for a, xa in enumerate(x):
            if xa == 0:
                continue
            for b, yb in enumerate(y):
                if yb == 0:
                    continue
                c = xa * yb
                for k, v in enumerate(self.product[a][b]):
                    acc[k] += c * v
        return tuple(self.field.reduce(self.field(0) + s) for s in acc)

    def U(self, x: Vector) -> Matrix:
        """U_x y = 2 x(xy) - x^2 y."""
        x2 = self.mul(x, x)
        cols = []
        for y in _units(self.field, self.dim):
            cols.append(vsub(self.field, vscale(self.field, 2, self.mul(x, self.mul(x, y))), self.mul(x2, y)))
        return _cols(self.field, cols, self.dim)

    def inverse(self, x: Vector) -> Vector:
        u = self.U(x)
        if not u.is_invertible():
            raise NotInvertible("U_x is not invertible")
        return u.inverse().apply(x)

    def _jordan_defect(self, x: Vector, y: Vector) -> Vector:
        x2 = self.mul(x, x)
        return vsub(self.field, self.mul(x, self.mul(x2, y)), self.mul(x2, self.mul(x, y)))

    def is_valid(self) -> bool:
        f = self.field
        units = _units(f, self.dim)
        for a, b in itertools.product(units, repeat=2):
            if self.mul(a, b) != self.mul(b, a):
                return False
        for a in units:
            if self.mul(self.unit, a) != a:
                return False
        # the Jordan identity is cubic in x; check its full polarization on basis triples
        for i, j, k in itertools.combinations_with_replacement(range(self.dim), 3):
            a, b, c = units[i], units[j], units[k]
            for y in units:
                total = zero_vector(f, self.dim)
                for subset, sign in (((a, b, c), 1), ((a, b), -1), ((a, c), -1), ((b, c), -1), ((a,), 1), ((b,), 1), ((c,), 1)):
                    x = zero_vector(f, self.dim)
                    for s in subset:
                        x = vadd(f, x, s)
                    total = vadd(f, total, vscale(f, sign, self._jordan_defect(x, y)))
                if not is_zero_vector(total):
                    return False
        return True


def jordan_algebra_from_pair(p: JordanPair | JTS, e: Vector) -> JordanAlgebra:
    """x.y = -T(x, e, y) / 2, for e with Q(e) = -id (V+ and V- identified by coordinates)."""
    if isinstance(p, JTS):
        p = p.as_pair()
    f = p.field
    if p.nplus != p.nminus or len(e) != p.nplus:
        raise NotUnitCandidate("V+ and V- must have the same dimension")
    if p.Q(1, e) != Matrix.scalar(f, p.nplus, -1):
        raise NotUnitCandidate("Q(e) is not -id")
    mhalf = f.neg(f.inv(f(2)))
    units = _units(f, p.nplus)
    prod = tuple(tuple(vscale(f, mhalf, p.T(1, x, e, y)) for y in units) for x in units)
    return JordanAlgebra(f, p.nplus, prod, tuple(e))


# ---------------------------------------------------------------- standard pairs


def rectangular_pair(p: int, q: int, field: Field, sign: str = MATRIX_SIGN) -> JordanPair:
    """V+ = M_{p,q}, V- = M_{q,p}, T(X, Y, Z) = XYZ + ZYX (or its negative)."""

    def as_mat(v, r, c):
        return Matrix.from_rows(field, [v[i * c:(i + 1) * c] for i in range(r)], c)

    def tp(x, y, z):
        X, Y, Z = as_mat(x, p, q), as_mat(y, q, p), as_mat(z, p, q)
        return (X @ Y @ Z + Z @ Y @ X).flat()

    def tm(y, x, w):
        Y, X, W = as_mat(y, q, p), as_mat(x, p, q), as_mat(w, q, p)
        return (Y @ X @ W + W @ X @ Y).flat()

    pair = JordanPair.from_functions(field, p * q, q * p, tp, tm, MATRIX_SIGN)
    if sign == BRACKET_SIGN:
        return pair.flipped()
    if sign != MATRIX_SIGN:
        raise InvalidPair(f"unknown sign convention {sign!r}")
    return pair


def trivial_pair(nplus: int, nminus: int, field: Field) -> JordanPair:
    return JordanPair.from_functions(
        field, nplus, nminus, lambda x, y, z: zero_vector(field, nplus), lambda x, y, z: zero_vector(field, nminus)
    )


def direct_sum_pair(a: JordanPair, b: JordanPair) -> JordanPair:
    f = a.field

    def t(side):
        def fn(x, y, z):
            out = []
            lo_out, lo_in = 0, 0
            for p in (a, b):
                xo = x[lo_out:lo_out + p.dim(side)]
                yi = y[lo_in:lo_in + p.dim(-side)]
                zo = z[lo_out:lo_out + p.dim(side)]
                out.extend(p.T(side, xo, yi, zo))
                lo_out += p.dim(side)
                lo_in += p.dim(-side)
            return tuple(out)

        return fn

    return JordanPair.from_functions(f, a.nplus + b.nplus, a.nminus + b.nminus, t(1), t(-1), a.sign)
