"""Deterministic builders for the catalogue of small blocking sets.

Pencils (all generators through a totally singular subspace of
codimension 1 in a generator), rulings of hyperbolic-quadric grids,
minimum covers of parabolic hyperplane sections of elliptic spaces, and
the cone examples in higher rank: a vertex subspace joined to a rank-2
base blocking structure in the quotient geometry.

Default seeds are the lexicographically least admissible objects, so
every constructor is reproducible across runs.
"""

from __future__ import annotations

from .projective import Subspace
from .forms import is_totally_singular
from .spaces import (
    IteratedQuotient,
    PolarSpace,
    SectionStructure,
    enumerate_hyperplanes,
    hyperplane_section,
    pencil_size,
)
from .analysis import BlockingSet, is_blocking, is_minimal, is_partial_spread
from . import search

CONE_ROWS = {
    ("q", "conic-pencil"): "vertex",        # pi_{n-2} over a conic base
    ("q", "qplus3-spread"): "quotient",     # pi_{n-3} over a grid ruling
    ("qminus", "elliptic-pencil"): "vertex",
    ("qminus", "q4-cover"): "quotient",     # pi_{n-3} over a Q(4,q) cover
    ("h", "hermitian-pencil"): "vertex",
}

CONE_AVOIDANCE_BOUND = {
    "conic-pencil": lambda q: q - 1,
    "qplus3-spread": lambda q: q - 1,
    "elliptic-pencil": lambda q: q * q - q,
    "q4-cover": lambda q: q * q - q,
    "hermitian-pencil": lambda q: q ** 3 - q,
}


def lex_least_ts_subspace(space: PolarSpace, dim: int) -> Subspace:
    """Lexicographically least totally singular subspace of the given
    projective dimension (first element of the canonical enumeration)."""
    return space.totally_singular_subspaces(dim)[0]


def pencil(space: PolarSpace, vertex: Subspace | None = None) -> BlockingSet:
    """All generators through a totally singular (rank-2)-dimensional
    vertex; the canonical smallest blocking set of every kind."""
    if vertex is None:
        vertex = lex_least_ts_subspace(space, space.rank - 2)
    if vertex.dim != space.rank - 2:
        raise ValueError(
            f"pencil vertex must have dimension {space.rank - 2}, "
            f"got {vertex.dim}")
    if not is_totally_singular(space.form, vertex):
        raise ValueError("pencil vertex must be totally singular")
    members = tuple(sorted(space.generators_through(vertex)))
    expect = pencil_size(space.kind, space.q)
    if len(members) != expect:
        raise AssertionError(
            f"pencil has {len(members)} generators, expected {expect}")
    bs = BlockingSet(space, members)
    if not is_blocking(space, members):
        raise AssertionError("pencil is not blocking")
    if space.rank >= 2 and not is_minimal(space, members):
        raise AssertionError("pencil is not minimal")
    return bs


def grid_rulings(space: PolarSpace, lines=None) -> tuple[list[int], list[int]]:
    """Split the line set of a Q+(3,q) grid into its two rulings.

    lines defaults to all generators (the space itself must then be the
    hyperbolic quadric); for an embedded grid pass the section's line
    indices of the ambient space.
    """
    if lines is None:
        if space.kind != "qplus3":
            raise ValueError("default line set needs a Q+(3,q) space")
        lines = list(range(space.num_generators))
    lines = sorted(lines)
    q = space.q
    if len(lines) != 2 * (q + 1):
        raise ValueError(f"a grid has {2 * (q + 1)} lines, got {len(lines)}")
    l0 = lines[0]
    fam0 = [l for l in lines
            if l == l0 or not (space.gen_point_mask[l] & space.gen_point_mask[l0])]
    fam1 = [l for l in lines if l not in fam0]
    cov = [0, 0]
    for i, fam in enumerate((fam0, fam1)):
        if len(fam) != q + 1 or not is_partial_spread(space, fam):
            raise ValueError("line set has no grid structure")
        for l in fam:
            cov[i] |= space.gen_point_mask[l]
    if cov[0] != cov[1]:
        raise ValueError("line set has no grid structure")
    for a in fam0:
        for b in fam1:
            if (space.gen_point_mask[a] & space.gen_point_mask[b]).bit_count() != 1:
                raise ValueError("line set has no grid structure")
    return fam0, fam1


def ruling_spread(space: PolarSpace, which: int = 0, lines=None) -> BlockingSet:
    """One ruling of a hyperbolic grid: q+1 pairwise disjoint lines
    partitioning the grid's points."""
    fam0, fam1 = grid_rulings(space, lines)
    members = tuple((fam0, fam1)[which])
    cov = 0
    for m in members:
        cov |= space.gen_point_mask[m]
    if lines is None and cov != space.all_points_mask:
        raise AssertionError("ruling does not partition the grid")
    return BlockingSet(space, members)


def find_section(space: PolarSpace, label: str) -> SectionStructure:
    """Lex-least hyperplane whose section carries the requested label."""
    for h in enumerate_hyperplanes(space):
        sec = hyperplane_section(space, h)
        if sec.label == label:
            return sec
    raise ValueError(f"no hyperplane section labelled {label!r} in {space.name}")


def hyperbolic_section(space: PolarSpace) -> SectionStructure:
    """Lex-least Q+(3,q) section of a parabolic rank-2 space."""
    return find_section(space, f"Q+(3,{space.q})")


def section_cover(space: PolarSpace, hyperplane: Subspace | None = None,
                  budget_nodes: int = search.DEFAULT_BUDGET_NODES,
                  budget_secs: float | None = None) -> BlockingSet:
    """A minimum cover of a nondegenerate Q(4,q) hyperplane section of an
    elliptic rank-2 space, as a blocking set of the ambient space.  For q
    even the minimum cover is a spread of the section (size q^2+1)."""
    if space.kind != "qminus" or space.rank != 2:
        raise ValueError("section covers live in Q-(5,q)")
    if hyperplane is None:
        sec = find_section(space, f"Q(4,{space.q})")
    else:
        sec = hyperplane_section(space, hyperplane)
        if sec.label != f"Q(4,{space.q})":
            raise ValueError(f"section is {sec.label}, not a nondegenerate "
                             f"Q(4,{space.q})")
    lines = [space.gen_points[g] for g in sec.gen_indices]
    res = search.min_cover(sec.point_indices, lines,
                           budget_nodes=budget_nodes, budget_secs=budget_secs)
    if not res.complete or res.optimum is None:
        raise RuntimeError("section cover search did not complete within budget")
    members = tuple(sorted(sec.gen_indices[i] for i in res.witnesses[0]))
    q = space.q
    if res.optimum < q * q + 1:
        raise AssertionError("cover beat the counting lower bound q^2+1")
    if q % 2 == 0 and res.optimum != q * q + 1:
        raise AssertionError("even q section cover should be a spread")
    bs = BlockingSet(space, members)
    if not is_blocking(space, members):
        raise AssertionError("section cover is not blocking in the ambient")
    return bs


def cone_example(space: PolarSpace, row: str,
                 vertex: Subspace | None = None) -> BlockingSet:
    """A Table-row cone example in rank >= 3: generators through a vertex
    subspace meeting a rank-<=2 base blocking structure.

    Rows: conic-pencil and qplus3-spread (parabolic spaces),
    elliptic-pencil and q4-cover (elliptic spaces), hermitian-pencil
    (hermitian spaces).
    """
    key = (space.kind, row)
    if key not in CONE_ROWS:
        raise ValueError(f"no cone row {row!r} for kind {space.kind!r}")
    if space.rank < 3:
        raise ValueError("cone examples need rank >= 3")
    mode = CONE_ROWS[key]
    if mode == "vertex":
        want = space.rank - 2
    else:
        want = space.rank - 3
    if vertex is None:
        vertex = lex_least_ts_subspace(space, want)
    if vertex.dim != want:
        raise ValueError(f"row {row!r} needs a vertex of dimension {want}, "
                         f"got {vertex.dim}")
    if not is_totally_singular(space.form, vertex):
        raise ValueError("cone vertex must be totally singular")

    if mode == "vertex":
        return pencil(space, vertex)

    iq = IteratedQuotient(space, vertex)
    quot = iq.quotient
    if space.kind == "q":
        sec = hyperbolic_section(quot)
        base = ruling_spread(quot, 0, lines=sec.gen_indices)
    else:
        base = section_cover(quot)
    members = []
    for b in base.members:
        lifted = iq.from_quotient(quot.generators[b])
        gi = space.gen_index.get(lifted.rows)
        if gi is None:
            raise AssertionError("lifted base element is not a generator")
        members.append(gi)
    members = tuple(sorted(members))
    bs = BlockingSet(space, members)
    if not is_blocking(space, members):
        raise AssertionError("cone example is not blocking")
    if not is_minimal(space, members):
        raise AssertionError("cone example is not minimal")
    return bs


def all_cone_rows(kind: str) -> list[str]:
    return [row for (k, row) in CONE_ROWS if k == kind]


def min_generators_outside_hyperplanes(space: PolarSpace, members) -> tuple[int, tuple]:
    """Least number of members avoiding a hyperplane of the cone's span.

    The cone spans its own projective space (dimension column of the
    catalogue); hyperplanes T range over that span, and the returned
    minimum is the worst case of the not-contained-in-T count, with an
    attaining dual functional in span coordinates.
    """
    from .projective import BasisSolver, enumerate_pg_points, span as span_of

    field = space.field
    total = space.generators[members[0]]
    for m in members[1:]:
        total = span_of(total, space.generators[m])
    solver = BasisSolver(field, total.rows)
    coords = []
    for m in members:
        coords.append([solver.express(r) for r in space.generators[m].rows])
    add, mul = field.addl, field.mull
    best = None
    arg = None
    for c in enumerate_pg_points(total.dim, field):
        outside = 0
        for rs in coords:
            inside = True
            for r in rs:
                acc = 0
                for cj, rj in zip(c, r):
                    if cj and rj:
                        acc = add[acc][mul[cj][rj]]
                if acc:
                    inside = False
                    break
            if not inside:
                outside += 1
        if best is None or outside < best:
            best = outside
            arg = c
    return best, arg
