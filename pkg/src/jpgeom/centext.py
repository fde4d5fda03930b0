"""Central extensions of inner 3-graded Lie algebras.

The weakly universal extension is built from the quotient <g, g> of the
exterior square by the span of [x,y]^z + [y,z]^x + [z,x]^y.  Relations are
generated by strictly increasing basis triples only: a triple with a
repeated index gives [x,x]^z + [x,z]^x + [z,x]^x = 0 identically.  The
construction is practical up to dim(g) around 20.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import NotCentralExtension, NotTripotent, ZeroPartNotGenerated
from .exactla import Field, Matrix, Subspace, Vector, is_zero_vector, solve_vector, unit_vector, vadd, zero_vector
from .grading import Grading, grading_from_euler
from .jordan import tkk, trivial_pair
from .liecore import LieAlgebra
from .projgroup import Dilation, ExpMinus, ExpPlus, GroupWord


@dataclass(frozen=True, eq=False)
class Lambda2Quotient:
    algebra: LieAlgebra
    b_map: Matrix
    pairs: tuple  # (i, j) index pair behind each quotient basis vector
    relations: Subspace

    def project(self, wedge: Vector) -> Vector:
        return self.relations.quotient_coordinates(wedge)

    def __iter__(self):
        return iter((self.algebra, self.b_map))


def _pair_index(n: int) -> dict:
    return {pair: t for t, pair in enumerate(itertools.combinations(range(n), 2))}


def wedge(field: Field, x: Vector, y: Vector, index: dict) -> Vector:
    out = [field.zero] * len(index)
    for (i, j), t in index.items():
        out[t] = field.reduce(x[i] * y[j] - x[j] * y[i])
    return tuple(out)


def lambda2_quotient(l: LieAlgebra) -> Lambda2Quotient:
    """<g, g> with [<x,y>, <x',y'>] = <[x,y], [x',y']> and b(<x,y>) = [x,y]."""
    f, n = l.field, l.dim
    index = _pair_index(n)
    size = len(index)
    units = [l.basis_vector(i) for i in range(n)]
    relations = []
    for i, j, k in itertools.combinations(range(n), 3):
        r = wedge(f, l.c[i][j], units[k], index)
        r = vadd(f, r, wedge(f, l.c[j][k], units[i], index))
        r = vadd(f, r, wedge(f, l.c[k][i], units[j], index))
        relations.append(r)
    rel = Subspace(f, size, relations)
    # b must kill the relations (this is the Jacobi identity) for the bracket to be well defined
    pair_list = list(index)
    for r in rel.vectors():
        image = zero_vector(f, n)
        for t, coeff in enumerate(r):
            if coeff != 0:
                i, j = pair_list[t]
                image = vadd(f, image, tuple(f.reduce(coeff * a) for a in l.c[i][j]))
        if not is_zero_vector(image):
            raise AssertionError("bracket map does not vanish on the relations")
    kept = rel.quotient_columns()
    pairs = tuple(pair_list[t] for t in kept)
    images = [l.c[i][j] for i, j in pairs]
    c = [[rel.quotient_coordinates(wedge(f, images[s], images[t], index)) for t in range(len(pairs))] for s in range(len(pairs))]
    names = [f"<{l.basis_names[i]},{l.basis_names[j]}>" for i, j in pairs]
    quotient = LieAlgebra(f, names, c)
    b_map = Matrix.from_columns(f, images, n) if images else Matrix.zeros(f, n, 0)
    return Lambda2Quotient(quotient, b_map, pairs, rel)


@dataclass(frozen=True, eq=False)
class ExtensionResult:
    total: LieAlgebra
    projection: Matrix
    kernel: Subspace
    lifted_grading: Grading
    section_data: Vector  # the chosen lift of E
    base: LieAlgebra
    base_grading: Grading

    def section(self) -> Matrix:
        """Pivot-solution right inverse of the projection (total.dim x base.dim)."""
        cols = [solve_vector(self.projection, self.base.basis_vector(i)) for i in range(self.base.dim)]
        return Matrix.from_columns(self.total.field, cols, self.total.dim)

    def push_automorphism(self, g: Matrix) -> Matrix:
        """q_G(g), the automorphism of the base with q_G(g) q = q g."""
        return self.projection @ g @ self.section()

    def to_json(self) -> dict:
        return {
            "total": self.total.to_json(),
            "projection": self.projection.to_json(),
            "kernel": self.kernel.basis.to_json(),
            "euler_lift": [self.total.field.format_scalar(a) for a in self.section_data],
            "dims": {"total": self.total.dim, "kernel": self.kernel.dim, "grading": list(self.lifted_grading.dims)},
        }


def satisfies_zero_part_condition(l: LieAlgebra, d: Grading) -> bool:
    """g_0 = KE + [g_1, g_-1]."""
    return d.g0 == l.span(d.euler) + l.bracket_space(d.g1, d.gm1)


def _check_central(total: LieAlgebra, q: Matrix, base: LieAlgebra):
    if q.shape != (base.dim, total.dim) or q.rank() != base.dim:
        raise NotCentralExtension("projection is not surjective")
    if not total.is_homomorphism_to(base, q):
        raise NotCentralExtension("projection is not a homomorphism")
    if not total.center().contains(Subspace.kernel(q)):
        raise NotCentralExtension("kernel is not central")


def lift_grading(ext_total: LieAlgebra, e_hat: Vector, base: LieAlgebra, q: Matrix) -> Grading:
    """Grading of the total algebra by a lift of the base Euler element."""
    _check_central(ext_total, q, base)
    try:
        lifted = grading_from_euler(ext_total, e_hat)
    except NotTripotent as exc:
        raise NotCentralExtension("lift of E is not an Euler element") from exc
    base_grading = grading_from_euler(base, q.apply(e_hat))
    for i in (1, 0, -1):
        if not base_grading.component(i).contains(lifted.component(i).image(q)):
            raise NotCentralExtension("projection does not respect the gradings")
    return lifted


def universal_extension(l: LieAlgebra, d: Grading) -> ExtensionResult:
    if not satisfies_zero_part_condition(l, d):
        raise ZeroPartNotGenerated("g_0 is not KE + [g_1, g_-1]")
    f = l.field
    quot = lambda2_quotient(l)
    ql, b = quot.algebra, quot.b_map
    if l.is_perfect():
        total, q = ql, b
        e_hat = solve_vector(q, d.euler)
    else:
        m = ql.dim
        index = _pair_index(l.dim)
        ad_e = d.d
        act = []
        for i, j in quot.pairs:
            x, y = l.basis_vector(i), l.basis_vector(j)
            w = vadd(f, wedge(f, ad_e.apply(x), y, index), wedge(f, x, ad_e.apply(y), index))
            act.append(quot.project(w))
        # basis: the quotient basis, then E~ last
        c = []
        for s in range(m + 1):
            row = []
            for t in range(m + 1):
                if s < m and t < m:
                    row.append(ql.c[s][t] + (f.zero,))
                elif s == m and t < m:
                    row.append(act[t] + (f.zero,))
                elif s < m and t == m:
                    row.append(tuple(f.neg(a) for a in act[s]) + (f.zero,))
                else:
                    row.append(zero_vector(f, m + 1))
            c.append(row)
        total = LieAlgebra(f, list(ql.basis_names) + ["E~"], c)
        q = b.hstack(Matrix.from_columns(f, [d.euler], l.dim))
        e_hat = unit_vector(f, m + 1, m)
    kernel = Subspace.kernel(q)
    lifted = lift_grading(total, e_hat, l, q)
    return ExtensionResult(total, q, kernel, lifted, e_hat, l, d)


def cocycle_extension(dims: tuple[int, int], beta, field: Field) -> ExtensionResult:
    """Extension of the trivial-pair algebra by the cocycle beta(v+, w-) - beta(v-, w+).

    ``beta`` is an n+ x n- matrix (one central direction) or a list of them.
    """
    nplus, nminus = dims
    betas = [beta] if isinstance(beta, Matrix) else list(beta)
    betas = [b if isinstance(b, Matrix) else Matrix(field, b) for b in betas]
    s = len(betas)
    base_tkk = tkk(trivial_pair(nplus, nminus, field))
    g, dg = base_tkk.algebra, base_tkk.grading
    n = g.dim
    k = n - nplus - nminus

    def omega(x: Vector, y: Vector) -> Vector:
        xp, xm = x[:nplus], x[nplus + k:]
        yp, ym = y[:nplus], y[nplus + k:]
        out = []
        for b in betas:
            out.append(field.reduce(_bilinear(b, xp, ym) - _bilinear(b, yp, xm)))
        return tuple(out)

    units = [g.basis_vector(i) for i in range(n)]
    c = []
    for i in range(n + s):
        row = []
        for j in range(n + s):
            if i < n and j < n:
                row.append(g.c[i][j] + omega(units[i], units[j]))
            else:
                row.append(zero_vector(field, n + s))
        c.append(row)
    names = list(g.basis_names) + [f"z{i}" for i in range(s)]
    total = LieAlgebra(field, names, c)
    q = Matrix.identity(field, n).hstack(Matrix.zeros(field, n, s))
    e_hat = dg.euler + zero_vector(field, s)
    lifted = lift_grading(total, e_hat, g, q)
    return ExtensionResult(total, q, Subspace.kernel(q), lifted, e_hat, g, dg)


def _bilinear(b: Matrix, x: Vector, y: Vector):
    return sum(x[i] * b.rows[i][j] * y[j] for i in range(b.nrows) for j in range(b.ncols))


def weak_universal_map(universal: ExtensionResult, target: ExtensionResult) -> Matrix:
    """alpha: total of ``universal`` -> total of ``target`` with q_target alpha = q_universal.

    alpha(<x, y>) = [s x, s y] for any section s of q_target, and the adjoined
    grading element (if present) goes to the chosen lift of E.
    """
    sec = target.section()
    ql = lambda2_quotient(universal.base)
    tot = target.total
    cols = []
    for i, j in ql.pairs:
        cols.append(tot.bracket(sec.column(i), sec.column(j)))
    if universal.total.dim == len(ql.pairs) + 1:
        cols.append(target.section_data)
    alpha = Matrix.from_columns(tot.field, cols, tot.dim)
    if not universal.total.is_homomorphism_to(tot, alpha):
        raise AssertionError("alpha is not a homomorphism")
    if target.projection @ alpha != universal.projection:
        raise AssertionError("alpha does not commute with the projections")
    return alpha


def quotient_by_center(l: LieAlgebra) -> tuple[LieAlgebra, Matrix]:
    """g / z(g) with quotient coordinates on the non-pivot columns of z(g)."""
    z = l.center()
    cols = z.quotient_columns()
    lift = [l.basis_vector(j) for j in cols]
    c = [[z.quotient_coordinates(l.bracket(x, y)) for y in lift] for x in lift]
    quotient = LieAlgebra(l.field, [l.basis_names[j] for j in cols], c)
    proj = Matrix.from_columns(l.field, [z.quotient_coordinates(l.basis_vector(i)) for i in range(l.dim)], len(cols))
    return quotient, proj


def lifted_group_map(ext: ExtensionResult, w: GroupWord, direction: str = "push") -> GroupWord:
    """Move a word between the total algebra and the base, letter by letter.

    ``push`` applies q to each letter; ``lift`` takes the unique preimage
    inside the lifted degree +-1 parts.
    """
    q = ext.projection
    out = []
    for letter in w.letters:
        if isinstance(letter, Dilation):
            out.append(letter)
            continue
        sign = 1 if isinstance(letter, ExpPlus) else -1
        x = letter.v if sign == 1 else letter.w
        if direction == "push":
            y = q.apply(x)
        elif direction == "lift":
            comp = ext.lifted_grading.component(sign)
            coords = solve_vector(q @ comp.basis_matrix(), x)
            if coords is None:
                raise ValueError("letter does not lie in the base degree part")
            y = comp.from_coordinates(coords)
        else:
            raise ValueError(f"unknown direction {direction!r}")
        out.append(ExpPlus(y) if sign == 1 else ExpMinus(y))
    return GroupWord(tuple(out))
