"""Named example instances and their JSON manifests."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import Callable

from .errors import InvalidField, InvalidPair, SchemaError, UnknownEntry
from .exactla import QQ, Field, Matrix, Vector, zero_vector
from .grading import Grading, grading_from_euler
from .jordan import (
    BRACKET_SIGN,
    MATRIX_SIGN,
    Involution,
    JordanPair,
    check_pair,
    direct_sum_pair,
    pair_from_grading,
    rectangular_pair,
    tkk,
    trivial_pair,
)
from .liecore import LieAlgebra, direct_sum

DEFAULT_FIELD = Field.prime(5)


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    name: str
    params: dict
    algebra: LieAlgebra
    grading: Grading
    pair: JordanPair
    involution: Involution | None = None
    euler_choice: str = "trace-zero"
    claims_zero_part: bool = False
    expected: dict = dc_field(default_factory=dict)

    @property
    def field(self) -> Field:
        return self.algebra.field


def _matrix_unit(field: Field, n: int, i: int, j: int) -> Matrix:
    return Matrix.from_rows(field, [[field.one if (r, c) == (i, j) else field.zero for c in range(n)] for r in range(n)], n)


def make_sl_block(n: int, p: int, field: Field = DEFAULT_FIELD) -> CatalogEntry:
    """sl_n (or gl_n when n = 0 in the field) graded by the (p, n - p) block split.

    Basis: g_1 units E_ij (i < p <= j), then g_0 (off-diagonal units inside the
    blocks, then diagonal generators), then g_-1 units E_ji.
    """
    if not 1 <= p < n:
        raise ValueError(f"bad block split ({n}, {p})")
    q = n - p
    up = [(i, j) for i in range(p) for j in range(p, n)]
    inner = [(i, j) for i in range(n) for j in range(n) if i != j and (i < p) == (j < p)]
    use_gl = field.is_prime and n % field.p == 0
    mats = [_matrix_unit(field, n, i, j) for i, j in up]
    names = [f"E{i + 1}{j + 1}" for i, j in up]
    mats += [_matrix_unit(field, n, i, j) for i, j in inner]
    names += [f"E{i + 1}{j + 1}" for i, j in inner]
    if use_gl:
        mats += [_matrix_unit(field, n, i, i) for i in range(n)]
        names += [f"E{i + 1}{i + 1}" for i in range(n)]
    else:
        mats += [_matrix_unit(field, n, i, i) - _matrix_unit(field, n, i + 1, i + 1) for i in range(n - 1)]
        names += [f"H{i + 1}" for i in range(n - 1)]
    mats += [_matrix_unit(field, n, j, i) for i, j in up]
    names += [f"E{j + 1}{i + 1}" for i, j in up]
    if n == 2:
        names = ["e", "h", "f"]
    algebra = LieAlgebra.from_matrices(field, names, mats)
    from .liecore import MatrixCoordinates

    coords = MatrixCoordinates(field, mats)
    if use_gl:
        euler_matrix = Matrix.diag(field, [1] * p + [0] * q)
        choice = "projector"
    else:
        euler_matrix = Matrix.diag(field, [field.div(q, n)] * p + [field.div(-p, n)] * q)
        choice = "trace-zero"
    d = grading_from_euler(algebra, coords(euler_matrix))
    theta = None
    if n == 2:
        # e <-> f, h -> -h
        theta = Involution(algebra, d, Matrix(field, [[0, 0, 1], [0, -1, 0], [1, 0, 0]]))
    delta = 0 if use_gl else 1
    expected = {"dims": [p * q, p * p + q * q - delta, p * q]}
    if field == DEFAULT_FIELD:
        expected["flag_orbit"] = (5**n - 1) // 4 if p == 1 or q == 1 else None
    return CatalogEntry(
        f"sl{n}" if p == 1 else f"sl{n}-{p}",
        {"builder": "sl_block", "n": n, "p": p},
        algebra,
        d,
        pair_from_grading(algebra, d),
        theta,
        choice,
        True,
        expected,
    )


def make_rectangular_pair(p: int, q: int, field: Field = DEFAULT_FIELD, convention: str = MATRIX_SIGN) -> JordanPair:
    pair = rectangular_pair(p, q, field, convention)
    if not check_pair(pair):
        raise InvalidPair("rectangular pair failed the identities")
    return pair


def entry_from_pair(name: str, pair: JordanPair, params: dict, claims_zero_part: bool = True, expected: dict | None = None) -> CatalogEntry:
    t = tkk(pair)
    return CatalogEntry(name, params, t.algebra, t.grading, pair_from_grading(t.algebra, t.grading), None, "tkk", claims_zero_part, expected or {})


def make_trivial_pair(nplus: int = 1, nminus: int = 1, field: Field = DEFAULT_FIELD) -> CatalogEntry:
    """TKK of the zero pair: (V+ + V-) with K E acting by +-1."""
    return entry_from_pair(
        "trivial" if (nplus, nminus) == (1, 1) else f"trivial-{nplus}-{nminus}",
        trivial_pair(nplus, nminus, field),
        {"builder": "trivial_pair", "nplus": nplus, "nminus": nminus},
        True,
        {"dims": [nplus, 1, nminus]},
    )


def make_sl2z(field: Field = DEFAULT_FIELD) -> CatalogEntry:
    sl2 = make_sl_block(2, 1, field)
    l = direct_sum(sl2.algebra, LieAlgebra.abelian(field, 1, "z"))
    d = grading_from_euler(l, sl2.grading.euler + (field.zero,))
    return CatalogEntry("sl2z", {"builder": "sl2z"}, l, d, pair_from_grading(l, d), None, "trace-zero", False, {"dims": [1, 2, 1]})


def make_heisenberg(field: Field = DEFAULT_FIELD) -> CatalogEntry:
    """The trivial-pair algebra extended by the cocycle beta(v, w) = vw."""
    from .centext import cocycle_extension

    ext = cocycle_extension((1, 1), Matrix(field, [[1]]), field)
    l, d = ext.total, ext.lifted_grading
    return CatalogEntry("heis", {"builder": "heisenberg"}, l, d, pair_from_grading(l, d), None, "lift", False, {"dims": [1, 2, 1]})


def make_gl2(field: Field = DEFAULT_FIELD) -> CatalogEntry:
    """gl_2 graded by the projector diag(1, 0) (projective line over the field)."""
    from .grassmann import Projector, RingSpec, gl_of, grading_from_projector

    ring = RingSpec(field, 1, 2)
    d = grading_from_projector(Projector(ring, Matrix.diag(field, [1, 0])))
    l = gl_of(ring)
    return CatalogEntry("gl2", {"builder": "gl2"}, l, d, pair_from_grading(l, d), None, "projector", True, {"dims": [1, 2, 1]})


_BUILDERS: dict[str, Callable[[Field], CatalogEntry]] = {
    "sl2": lambda f: make_sl_block(2, 1, f),
    "sl3": lambda f: make_sl_block(3, 1, f),
    "sl3-2": lambda f: make_sl_block(3, 2, f),
    "trivial": lambda f: make_trivial_pair(1, 1, f),
    "sl2z": make_sl2z,
    "rect12": lambda f: entry_from_pair("rect12", make_rectangular_pair(1, 2, f), {"builder": "rectangular", "p": 1, "q": 2}),
    "scalar": lambda f: entry_from_pair("scalar", make_rectangular_pair(1, 1, f), {"builder": "rectangular", "p": 1, "q": 1}),
    "diag2": lambda f: entry_from_pair(
        "diag2",
        direct_sum_pair(make_rectangular_pair(1, 1, f), make_rectangular_pair(1, 1, f)),
        {"builder": "diag2"},
    ),
    "heis": make_heisenberg,
    "gl2": make_gl2,
}


def names() -> list[str]:
    return sorted(_BUILDERS)


def get(name: str, field: Field | None = None) -> CatalogEntry:
    if name not in _BUILDERS:
        raise UnknownEntry(name)
    return _BUILDERS[name](DEFAULT_FIELD if field is None else field)


def validate(entry: CatalogEntry) -> list[str]:
    """Names of the failed checks (empty when the entry is sound)."""
    from .centext import quotient_by_center, satisfies_zero_part_condition

    failures = []
    l, d = entry.algebra, entry.grading
    if d.d @ d.d @ d.d != d.d:
        failures.append("tripotency")
    if not check_pair(entry.pair):
        failures.append("pair identities")
    if pair_from_grading(l, d) != entry.pair:
        failures.append("pair matches grading")
    if entry.expected.get("dims") and list(d.dims) != list(entry.expected["dims"]):
        failures.append("grading dims")
    if entry.claims_zero_part:
        if not satisfies_zero_part_condition(l, d):
            failures.append("zero part generated")
        elif quotient_by_center(l)[0].center().dim != 0:
            failures.append("center of quotient by center")
    if entry.params.get("builder") in ("trivial_pair", "rectangular", "diag2") and l.center().dim != 0:
        failures.append("TKK center")
    return failures


# ---------------------------------------------------------------- JSON


def save(entry: CatalogEntry) -> dict:
    fmt = entry.field.format_scalar
    out = {
        "name": entry.name,
        "params": entry.params,
        "algebra": entry.algebra.to_json(),
        "euler": [fmt(a) for a in entry.grading.euler],
        "pair": entry.pair.to_json(),
        "euler_choice": entry.euler_choice,
        "claims_zero_part": entry.claims_zero_part,
        "expected": entry.expected,
    }
    if entry.involution is not None:
        out["involution"] = entry.involution.theta.to_json()
    return out


def dumps(entry: CatalogEntry) -> str:
    return json.dumps(save(entry), indent=2, sort_keys=True)


def load(data: dict | str, validate_entry: bool = True) -> CatalogEntry:
    """Rebuild an entry; SchemaError for malformed data, validator errors otherwise."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise SchemaError(str(exc)) from exc
    if not isinstance(data, dict):
        raise SchemaError("entry must be a JSON object")
    for key in ("name", "algebra", "euler"):
        if key not in data:
            raise SchemaError(f"missing key {key!r}")
    try:
        algebra = LieAlgebra.from_json(data["algebra"])
    except (KeyError, TypeError, IndexError) as exc:
        raise SchemaError(f"malformed algebra: {exc}") from exc
    f = algebra.field
    if not isinstance(data["euler"], list) or len(data["euler"]) != algebra.dim:
        raise SchemaError("euler must list one scalar per basis vector")
    euler: Vector = tuple(f.parse_scalar(str(a)) for a in data["euler"])
    grading = grading_from_euler(algebra, euler)
    derived = pair_from_grading(algebra, grading)
    if "pair" in data:
        pair = JordanPair.from_json(data["pair"])
        if pair.field != f:
            raise InvalidField("pair and algebra live over different fields")
    else:
        pair = derived
    theta = None
    if "involution" in data:
        theta = Involution(algebra, grading, Matrix.from_json(f, data["involution"]))
    entry = CatalogEntry(
        data["name"],
        data.get("params", {}),
        algebra,
        grading,
        pair,
        theta,
        data.get("euler_choice", "given"),
        bool(data.get("claims_zero_part", False)),
        data.get("expected", {}),
    )
    if validate_entry:
        failures = validate(entry)
        if failures:
            raise InvalidPair("entry failed validation: " + ", ".join(failures))
    return entry


def sl2_tkk_isomorphism(field: Field = DEFAULT_FIELD) -> tuple[CatalogEntry, CatalogEntry, Matrix]:
    """An explicit isomorphism TKK(scalar pair) -> sl_2 respecting the gradings.

    u -> e, E -> h/2, w -> c f with c fixed by matching [u, w].
    """
    sl2 = make_sl_block(2, 1, field)
    scal = get("scalar", field)
    t, s = scal.algebra, sl2.algebra
    u, w = t.basis_vector(0), t.basis_vector(t.dim - 1)
    e_t = scal.grading.euler
    uw = t.bracket(u, w)
    lam = next(uw[i] for i in range(t.dim) if e_t[i] != 0) * field.inv(next(a for a in e_t if a != 0))
    c = field.div(lam, 2)
    images = {0: s.basis_vector(0), t.dim - 1: tuple(field.reduce(c * a) for a in s.basis_vector(2))}
    cols = []
    for i in range(t.dim):
        if i in images:
            cols.append(images[i])
        else:
            # the degree-zero part of TKK(scalar) is K E
            coeff = field.div(e_t[i], 1) if e_t[i] != 0 else field.zero
            cols.append(tuple(field.reduce(field.inv(coeff) * a) for a in sl2.grading.euler) if coeff != 0 else zero_vector(field, 3))
    phi = Matrix.from_columns(field, cols, s.dim)
    if not t.is_homomorphism_to(s, phi) or not phi.is_invertible():
        raise AssertionError("constructed map is not an isomorphism")
    return scal, sl2, phi


__all__ = [
    "BRACKET_SIGN",
    "MATRIX_SIGN",
    "QQ",
    "CatalogEntry",
    "DEFAULT_FIELD",
    "dumps",
    "get",
    "load",
    "make_rectangular_pair",
    "make_sl_block",
    "make_trivial_pair",
    "names",
    "save",
    "sl2_tkk_isomorphism",
    "validate",
]
