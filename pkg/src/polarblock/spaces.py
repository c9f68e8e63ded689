"""Materialized finite classical polar spaces.

A PolarSpace carries the full singular point list (lex order, stable
indices), the generator list (canonical RREF bases, lex order), the
point/generator incidence and the generator-meets-generator relation as
bitmask rows.  Generators are enumerated level by level: a totally
singular subspace U is extended by every singular point of perp(U) \\ U,
with reduced-row-echelon canonical forms as the deduplication key.  A
pair-covering mask per subspace suppresses the redundant extensions, so
each (k+1)-space is assembled exactly once.

Supported kinds (q is the base parameter of the family; hermitian
spaces live over GF(q^2)):

    q       Q(2n,q)   parabolic, ambient 2*rank
    qminus  Q-(2n+1,q) elliptic, ambient 2*rank+1
    h       H(2n,q^2) hermitian, ambient 2*rank
    qplus3  Q+(3,q)   hyperbolic, rank 2 only
    h3      H(3,q^2)  hermitian, rank 2 only
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

import numpy as np

from .gf import GF, field_of_order
from .projective import (
    BasisSolver,
    Subspace,
    Vector,
    canonicalize,
    enumerate_pg_points,
    nullspace,
    rref,
    subspace_points,
    theta,
)
from .forms import (
    Form,
    elliptic_form,
    hermitian_form,
    hyperbolic_form,
    parabolic_form,
)

KINDS = ("q", "qminus", "qplus3", "h", "h3")

MAX_GENERATORS = 10 ** 6


class BuildError(ValueError):
    pass


class BudgetError(RuntimeError):
    """Raised when a construction would exceed its resource guard."""


def ambient_dim(kind: str, rank: int) -> int:
    if kind == "q":
        return 2 * rank
    if kind == "qminus":
        return 2 * rank + 1
    if kind == "h":
        return 2 * rank
    if kind == "qplus3":
        return 3
    if kind == "h3":
        return 3
    raise BuildError(f"unknown kind {kind!r}")


def point_count(kind: str, rank: int, q: int) -> int:
    if kind == "q":
        return (q ** (2 * rank) - 1) // (q - 1)
    if kind == "qminus":
        return (q ** (rank + 1) + 1) * (q ** rank - 1) // (q - 1)
    if kind == "qplus3":
        return (q + 1) ** 2
    if kind == "h":
        n = rank
        return (q ** (2 * n + 1) + 1) * (q ** (2 * n) - 1) // (q ** 2 - 1)
    if kind == "h3":
        return (q ** 3 + 1) * (q ** 2 + 1)
    raise BuildError(f"unknown kind {kind!r}")


def generator_count(kind: str, rank: int, q: int) -> int:
    if kind == "q":
        out = 1
        for i in range(1, rank + 1):
            out *= q ** i + 1
        return out
    if kind == "qminus":
        out = 1
        for i in range(2, rank + 2):
            out *= q ** i + 1
        return out
    if kind == "qplus3":
        return 2 * (q + 1)
    if kind == "h":
        out = 1
        for i in range(1, rank + 1):
            out *= q ** (2 * i + 1) + 1
        return out
    if kind == "h3":
        return (q ** 3 + 1) * (q + 1)
    raise BuildError(f"unknown kind {kind!r}")


def st_params(kind: str, q: int):
    """GQ order (s,t) of the rank-2 space of the given kind."""
    return {
        "q": (q, q),
        "qminus": (q, q ** 2),
        "h": (q ** 2, q ** 3),
        "qplus3": (q, 1),
        "h3": (q ** 2, q),
    }[kind]


def pencil_size(kind: str, q: int) -> int:
    """Number of generators through an (r-2)-dimensional totally singular
    subspace: t+1 for rank 2 and the cone base size t_base+1 in general."""
    return {
        "q": q + 1,
        "qminus": q ** 2 + 1,
        "h": q ** 3 + 1,
        "qplus3": 2,
        "h3": q + 1,
    }[kind]


def space_name(kind: str, rank: int, q: int) -> str:
    if kind == "q":
        return f"Q({2 * rank},{q})"
    if kind == "qminus":
        return f"Q-({2 * rank + 1},{q})"
    if kind == "h":
        return f"H({2 * rank},{q ** 2})"
    if kind == "qplus3":
        return f"Q+(3,{q})"
    if kind == "h3":
        return f"H(3,{q ** 2})"
    raise BuildError(f"unknown kind {kind!r}")


def standard_form(kind: str, rank: int, q: int) -> Form:
    if kind == "q":
        return parabolic_form(rank, field_of_order(q))
    if kind == "qminus":
        return elliptic_form(rank, field_of_order(q))
    if kind == "qplus3":
        if rank != 2:
            raise BuildError("Q+(3,q) has rank 2")
        return hyperbolic_form(2, field_of_order(q))
    if kind == "h":
        return hermitian_form(2 * rank, q)
    if kind == "h3":
        if rank != 2:
            raise BuildError("H(3,q^2) has rank 2")
        return hermitian_form(3, q)
    raise BuildError(f"unknown kind {kind!r}")


def _mask_from_bool(bits: np.ndarray) -> int:
    by = np.packbits(bits.astype(np.uint8), bitorder="little").tobytes()
    return int.from_bytes(by, "little")


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass
class SectionStructure:
    """Restriction of a polar space to a hyperplane."""

    hyperplane: Subspace
    point_indices: tuple[int, ...]
    point_mask: int
    gen_indices: tuple[int, ...]
    radical_points: tuple[int, ...]
    radical: Subspace
    label: str


class PolarSpace:
    """Fully enumerated polar space; immutable after construction."""

    def __init__(self, kind, rank, q, form, points, collinear, generators,
                 gen_points, gen_point_mask, point_gen_mask, meets):
        self.kind = kind
        self.rank = rank
        self.q = q  # base parameter; the field order is q^2 for hermitian
        self.form = form
        self.field = form.field
        self.n = form.n
        self.points = points
        self.point_index = {p: i for i, p in enumerate(points)}
        self.pts_array = np.array(points, dtype=form.field.add_table.dtype)
        self.collinear = collinear
        self.generators = generators
        self.gen_index = {g.rows: i for i, g in enumerate(generators)}
        self.gen_points = gen_points
        self.gen_point_mask = gen_point_mask
        self.point_gen_mask = point_gen_mask
        self.meets = meets
        self.num_points = len(points)
        self.num_generators = len(generators)
        self.all_points_mask = (1 << self.num_points) - 1
        self.all_gens_mask = (1 << self.num_generators) - 1
        if rank == 2:
            self.s, self.t = st_params(kind, q)
        else:
            self.s = self.t = None
        self._hash = None

    @property
    def name(self) -> str:
        return space_name(self.kind, self.rank, self.q)

    def __repr__(self):
        return (f"PolarSpace({self.name}: {self.num_points} points, "
                f"{self.num_generators} generators)")

    def points_per_generator(self) -> int:
        qf = self.field.q
        return theta(self.rank - 1, qf)

    def totally_singular_subspaces(self, dim: int) -> list[Subspace]:
        """All totally singular subspaces of the given projective
        dimension, canonically sorted (cached per dimension)."""
        if dim < -1 or dim > self.rank - 1:
            raise ValueError(f"no totally singular subspaces of dimension {dim}")
        if dim == -1:
            return [Subspace(self.field, self.n, ())]
        if not hasattr(self, "_ts_cache"):
            self._ts_cache = {}
        if dim not in self._ts_cache:
            if dim == self.rank - 1:
                self._ts_cache[dim] = list(self.generators)
            else:
                level_rows = [(p,) for p in self.points]
                level_masks = [1 << i for i in range(self.num_points)]
                for k in range(dim):
                    level_rows, level_masks = _extend_level(
                        self.field, self.points, self.point_index,
                        self.collinear, level_rows, level_masks, k)
                self._ts_cache[dim] = [Subspace(self.field, self.n, rows)
                                       for rows in level_rows]
        return self._ts_cache[dim]

    def generators_through(self, sub: Subspace) -> list[int]:
        """Indices of all generators containing the given subspace."""
        if sub.dim < 0:
            return list(range(self.num_generators))
        smask = 0
        for p in subspace_points(self.field, sub.rows):
            smask |= 1 << self.point_index[p]
        return [gi for gi in range(self.num_generators)
                if self.gen_point_mask[gi] & smask == smask]

    def content_hash(self) -> str:
        if self._hash is None:
            payload = {
                "kind": self.kind,
                "rank": self.rank,
                "q": self.q,
                "points": [list(p) for p in self.points],
                "generators": [[list(r) for r in g.rows] for g in self.generators],
            }
            blob = json.dumps(payload, separators=(",", ":")).encode()
            self._hash = hashlib.sha256(blob).hexdigest()
        return self._hash

    def stats(self) -> dict:
        per_point = self.point_gen_mask[0].bit_count() if self.num_points else 0
        return {
            "name": self.name,
            "kind": self.kind,
            "rank": self.rank,
            "q": self.q,
            "field_order": self.field.q,
            "ambient_dim": self.n,
            "points": self.num_points,
            "generators": self.num_generators,
            "s": self.s,
            "t": self.t,
            "generators_per_point": per_point,
            "points_per_generator": self.points_per_generator(),
            "hash": self.content_hash(),
        }

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "rank": self.rank,
            "q": self.q,
            "name": self.name,
            "points": [list(p) for p in self.points],
            "generators": [[list(r) for r in g.rows] for g in self.generators],
            "counts": {"points": self.num_points, "generators": self.num_generators},
            "hash": self.content_hash(),
        }


def _singular_points(form: Form) -> list[Vector]:
    all_pts = enumerate_pg_points(form.n, form.field)
    arr = np.array(all_pts, dtype=form.field.add_table.dtype)
    vals = form.eval_batch(arr)
    return [p for p, v in zip(all_pts, vals) if v == 0]


def _collinearity_masks(form: Form, points, arr: np.ndarray) -> list[int]:
    masks = []
    for p in points:
        vals = form.polarize_batch(p, arr)
        masks.append(_mask_from_bool(vals == 0))
    return masks


def _internal_hyperplane_bases(field: GF, w_rows, k: int):
    """Bases (as ambient row tuples) of the k-row subspaces of the
    (k+1)-row space spanned by w_rows."""
    add, mul = field.addl, field.mull
    out = []
    for c in enumerate_pg_points(k, field):
        kernel = nullspace(field, [c], k)
        rows = []
        for kv in kernel.rows:
            v = [0] * len(w_rows[0])
            for coef, wr in zip(kv, w_rows):
                if coef:
                    mc = mul[coef]
                    v = [add[a][mc[b]] for a, b in zip(v, wr)]
            rows.append(tuple(v))
        out.append(rref(field, rows))
    return out


def _extend_level(field: GF, points, point_index, collinear,
                  level_rows, level_masks, k: int):
    """Extend canonical k+1-row totally singular subspaces by one point.

    Every extension pair (U, P) with P in perp(U) \\ U is considered, but a
    per-subspace covering mask suppresses pairs whose span was already
    assembled, so each new subspace costs one RREF plus the enumeration of
    its k+1-row subspaces for the covering bookkeeping.
    """
    level_index = {rows: i for i, rows in enumerate(level_rows)}
    covered = [0] * len(level_rows)
    next_rows = []
    next_masks = []
    seen = set()
    for u, rows in enumerate(level_rows):
        umask = level_masks[u]
        cand = None
        for r in rows:
            m = collinear[point_index[r]]
            cand = m if cand is None else cand & m
        cand &= ~umask
        cand &= ~covered[u]
        while cand:
            low = cand & -cand
            p = low.bit_length() - 1
            w_rows = rref(field, rows + (points[p],))
            if w_rows in seen:
                covered[u] |= low
                cand &= ~covered[u]
                continue
            seen.add(w_rows)
            wmask = 0
            for wp in subspace_points(field, w_rows):
                wmask |= 1 << point_index[wp]
            next_rows.append(w_rows)
            next_masks.append(wmask)
            for sub in _internal_hyperplane_bases(field, w_rows, k + 1):
                su = level_index.get(sub)
                if su is not None and su >= u:
                    covered[su] |= wmask & ~level_masks[su]
            cand &= ~covered[u]
    order = sorted(range(len(next_rows)), key=lambda i: next_rows[i])
    return [next_rows[i] for i in order], [next_masks[i] for i in order]


def _materialize(kind: str, rank: int, q: int, form: Form,
                 max_generators: int = MAX_GENERATORS) -> PolarSpace:
    exp_pts = point_count(kind, rank, q)
    exp_gens = generator_count(kind, rank, q)
    if exp_gens > max_generators:
        raise BudgetError(
            f"{space_name(kind, rank, q)} has {exp_gens} generators, "
            f"over the guard of {max_generators}")

    field = form.field
    points = _singular_points(form)
    if len(points) != exp_pts:
        raise BuildError(
            f"{space_name(kind, rank, q)}: found {len(points)} singular "
            f"points, expected {exp_pts}")
    arr = np.array(points, dtype=field.add_table.dtype)
    collinear = _collinearity_masks(form, points, arr)
    point_index = {p: i for i, p in enumerate(points)}

    # level 0: the points themselves
    level_rows = [(p,) for p in points]
    level_masks = [1 << i for i in range(len(points))]

    for k in range(rank - 1):
        level_rows, level_masks = _extend_level(
            field, points, point_index, collinear, level_rows, level_masks, k)

    if len(level_rows) != exp_gens:
        raise BuildError(
            f"{space_name(kind, rank, q)}: enumerated {len(level_rows)} "
            f"generators, expected {exp_gens}")

    generators = [Subspace(field, form.n, rows) for rows in level_rows]
    gen_points = []
    for mask in level_masks:
        gen_points.append(tuple(_iter_bits(mask)))
    gen_point_mask = level_masks

    # maximality: no singular point outside g is collinear with all of g
    for rows, mask in zip(level_rows, level_masks):
        cand = None
        for r in rows:
            m = collinear[point_index[r]]
            cand = m if cand is None else cand & m
        if cand != mask:
            raise BuildError("non-maximal generator enumerated")

    point_gen_mask = [0] * len(points)
    for gi, pts in enumerate(gen_points):
        bit = 1 << gi
        for p in pts:
            point_gen_mask[p] |= bit
    meets = []
    for pts in gen_points:
        m = 0
        for p in pts:
            m |= point_gen_mask[p]
        meets.append(m)

    degs = {m.bit_count() for m in point_gen_mask}
    if len(degs) != 1:
        raise BuildError("generator regularity violated")
    deg = degs.pop()
    ppg = theta(rank - 1, field.q)
    if len(points) * deg != len(generators) * ppg:
        raise BuildError("point/generator double count violated")

    return PolarSpace(kind, rank, q, form, points, collinear, generators,
                      gen_points, gen_point_mask, point_gen_mask, meets)


_SPACE_CACHE: dict = {}


def build_polar_space(kind: str, rank: int, q: int,
                      max_generators: int = MAX_GENERATORS) -> PolarSpace:
    """Build (and memoize) the standard polar space of the given kind."""
    if kind not in KINDS:
        raise BuildError(f"unknown kind {kind!r}; expected one of {KINDS}")
    if rank < 1:
        raise BuildError("rank must be >= 1")
    if kind in ("qplus3", "h3") and rank != 2:
        raise BuildError(f"{kind} is a rank-2 space")
    key = (kind, rank, q)
    if key not in _SPACE_CACHE:
        form = standard_form(kind, rank, q)
        _SPACE_CACHE[key] = _materialize(kind, rank, q, form, max_generators)
    return _SPACE_CACHE[key]


def space_from_form(kind: str, rank: int, q: int, form: Form,
                    max_generators: int = MAX_GENERATORS) -> PolarSpace:
    """Materialize a polar space from an explicit (e.g. quotient) form."""
    return _materialize(kind, rank, q, form, max_generators)


# -- quotient geometry --------------------------------------------------------


class QuotientMap:
    """Projection from a singular point P onto perp(P)/P.

    to_quotient maps a totally singular subspace U with P in U inside
    perp(P) to its image; from_quotient lifts an image back to the span
    with P.  The quotient is a polar space of the same kind and rank-1.
    """

    def __init__(self, space: PolarSpace, point_idx: int,
                 max_generators: int = MAX_GENERATORS):
        self.space = space
        self.point_idx = point_idx
        self.point = space.points[point_idx]
        field = space.field
        psub = canonicalize(field, space.n, [self.point])
        perp = space.form.perp(psub)
        if not perp.contains_point(self.point):
            raise BuildError("perp(P) does not contain P; P not singular?")
        crows = []
        basis = [self.point]
        solver_rows = [self.point]
        for r in perp.rows:
            trial = rref(field, tuple(basis) + (r,))
            if len(trial) > len(basis):
                basis.append(r)
                crows.append(r)
                solver_rows.append(r)
        self.crows = tuple(crows)
        self.solver = BasisSolver(field, solver_rows)
        qform = space.form.restrict(self.crows)
        self.quotient = space_from_form(space.kind, space.rank - 1, space.q,
                                        qform, max_generators)

    def to_quotient(self, sub: Subspace) -> Subspace:
        field = self.space.field
        rows = []
        for r in sub.rows:
            x = self.solver.express(r)
            if x is None:
                raise ValueError("subspace is not contained in perp(P)")
            rows.append(x[1:])
        return canonicalize(field, len(self.crows) - 1, rows)

    def from_quotient(self, sub: Subspace) -> Subspace:
        field = self.space.field
        add, mul = field.addl, field.mull
        rows = [self.point]
        for x in sub.rows:
            v = [0] * (self.space.n + 1)
            for coef, cr in zip(x, self.crows):
                if coef:
                    mc = mul[coef]
                    v = [add[a][mc[b]] for a, b in zip(v, cr)]
            rows.append(tuple(v))
        return canonicalize(field, self.space.n, rows)


def quotient_at_point(space: PolarSpace, point_idx: int,
                      max_generators: int = MAX_GENERATORS):
    """Quotient polar space at a singular point, with the projection map."""
    if space.rank < 2:
        raise BuildError("quotient needs rank >= 2")
    if not 0 <= point_idx < space.num_points:
        raise BuildError(f"no point with index {point_idx}")
    qm = QuotientMap(space, point_idx, max_generators)
    return qm.quotient, qm


class IteratedQuotient:
    """Composition of point quotients along a basis of a totally singular
    vertex subspace V; maps subspaces through V to the quotient at V."""

    def __init__(self, space: PolarSpace, vertex: Subspace,
                 max_generators: int = MAX_GENERATORS):
        self.space = space
        self.vertex = vertex
        self.maps = []
        cur = space
        v = vertex
        while v.dim >= 0:
            p = v.rows[0]
            qm = QuotientMap(cur, cur.point_index[p], max_generators)
            self.maps.append(qm)
            v = qm.to_quotient(v)
            cur = qm.quotient
        self.quotient = cur

    def to_quotient(self, sub: Subspace) -> Subspace:
        for qm in self.maps:
            sub = qm.to_quotient(sub)
        return sub

    def from_quotient(self, sub: Subspace) -> Subspace:
        for qm in reversed(self.maps):
            sub = qm.from_quotient(sub)
        return sub


# -- hyperplane sections -------------------------------------------------------


def enumerate_hyperplanes(space: PolarSpace) -> list[Subspace]:
    """All hyperplanes of the ambient PG, sorted by canonical basis."""
    field = space.field
    hps = []
    for c in enumerate_pg_points(space.n, field):
        hps.append(nullspace(field, [c], space.n))
    hps.sort(key=lambda h: h.rows)
    return hps


def _section_label(space: PolarSpace, rad_dim: int, npts: int) -> str:
    q = space.q
    table = {}
    if space.kind == "qminus" and space.rank == 2:
        table = {
            (-1, (q ** 2 + 1) * (q + 1)): f"Q(4,{q})",
            (0, 1 + q * (q ** 2 + 1)): f"pt*Q-(3,{q})",
        }
    elif space.kind == "q" and space.rank == 2:
        table = {
            (-1, (q + 1) ** 2): f"Q+(3,{q})",
            (-1, q ** 2 + 1): f"Q-(3,{q})",
            (0, 1 + q * (q + 1)): f"pt*Q(2,{q})",
        }
    elif space.kind == "h" and space.rank == 2:
        table = {
            (-1, (q ** 2 + 1) * (q ** 3 + 1)): f"H(3,{q ** 2})",
            (0, 1 + q ** 2 * (q ** 3 + 1)): f"pt*H(2,{q ** 2})",
        }
    elif space.kind == "q" and space.rank == 3:
        table = {
            (-1, (q ** 2 + 1) * (q ** 2 + q + 1)): f"Q+(5,{q})",
            (-1, (q ** 3 + 1) * (q + 1)): f"Q-(5,{q})",
            (0, 1 + q * point_count("q", 2, q)): f"pt*Q(4,{q})",
        }
    elif space.kind == "qminus" and space.rank == 3:
        table = {
            (-1, point_count("q", 3, q)): f"Q(6,{q})",
            (0, 1 + q * point_count("qminus", 2, q)): f"pt*Q-(5,{q})",
        }
    return table.get((rad_dim, npts),
                     f"section(radical_dim={rad_dim}, points={npts})")


def hyperplane_section(space: PolarSpace, h: Subspace) -> SectionStructure:
    """Points and generators inside a hyperplane, with recognition label."""
    if h.dim != space.n - 1:
        raise ValueError("section requires a hyperplane (codimension 1)")
    field = space.field
    dual = nullspace(field, h.rows, space.n)
    if len(dual.rows) != 1:
        raise ValueError("input is not a hyperplane")
    c = dual.rows[0]
    ADD, MUL = field.add_table, field.mul_table
    acc = np.zeros(space.num_points, dtype=ADD.dtype)
    for j, cj in enumerate(c):
        if cj:
            acc = ADD[acc, MUL[cj][space.pts_array[:, j]]]
    inside = acc == 0
    pmask = _mask_from_bool(inside)
    pidx = tuple(int(i) for i in np.nonzero(inside)[0])
    gidx = tuple(gi for gi in range(space.num_generators)
                 if space.gen_point_mask[gi] & ~pmask == 0)
    rad = tuple(p for p in pidx if space.collinear[p] & pmask == pmask)
    rad_sub = canonicalize(field, space.n, [space.points[p] for p in rad]) \
        if rad else Subspace(field, space.n, ())
    if len(rad) != theta(rad_sub.dim, field.q):
        raise BuildError("section radical is not a subspace")
    label = _section_label(space, rad_sub.dim, len(pidx))
    return SectionStructure(h, pidx, pmask, gidx, rad, rad_sub, label)
