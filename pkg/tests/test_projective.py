from itertools import combinations

import pytest

from polarblock.gf import make_field
from polarblock.projective import (
    BasisSolver,
    Subspace,
    canonicalize,
    empty_subspace,
    enumerate_pg_points,
    meet,
    normalize_point,
    nullspace,
    rref,
    span,
    subspace_points,
    theta,
)

F2 = make_field(2, 1)
F3 = make_field(3, 1)
F4 = make_field(2, 2)


def test_normalize_point():
    assert normalize_point(F3, (0, 2, 1)) == (0, 1, 2)
    assert normalize_point(F3, (2, 0, 1)) == (1, 0, 2)
    p = normalize_point(F4, (3, 1, 0))
    assert p[0] == 1
    with pytest.raises(ValueError):
        normalize_point(F2, (0, 0, 0))


def test_canonicalize_known_cases():
    a = canonicalize(F2, 2, [(0, 1, 0), (1, 0, 0)])
    assert a.rows == ((1, 0, 0), (0, 1, 0))
    assert a.dim == 1
    b = canonicalize(F2, 1, [(1, 1), (1, 1)])
    assert b.rows == ((1, 1),)
    assert b.dim == 0
    c = canonicalize(F2, 2, [])
    assert c.rows == () and c.dim == -1


def test_rref_idempotent_and_order_free():
    rows = [(1, 2, 0, 1), (0, 1, 1, 2), (1, 0, 1, 2)]
    r1 = rref(F3, rows)
    assert rref(F3, r1) == r1
    assert rref(F3, rows[::-1]) == r1


def test_span_meet_points_and_lines():
    p = canonicalize(F2, 3, [(1, 0, 0, 0)])
    q = canonicalize(F2, 3, [(0, 1, 0, 0)])
    l = span(p, q)
    assert l.dim == 1
    assert meet(p, q).dim == -1
    assert meet(l, l).rows == l.rows


def test_skew_lines_dimension_identity():
    l1 = canonicalize(F2, 3, [(1, 0, 0, 0), (0, 1, 0, 0)])
    l2 = canonicalize(F2, 3, [(0, 0, 1, 0), (0, 0, 0, 1)])
    assert span(l1, l2).dim == 3
    assert meet(l1, l2).dim == -1
    assert l1.dim + l2.dim == span(l1, l2).dim + meet(l1, l2).dim


def test_meet_against_bruteforce():
    # every pair of planes of PG(3,2): meet = common points
    pts = enumerate_pg_points(3, F2)
    planes = []
    for c in enumerate_pg_points(3, F2):
        planes.append(nullspace(F2, [c], 3))
    for a, b in combinations(planes, 2):
        m = meet(a, b)
        common = {p for p in pts if a.contains_point(p) and b.contains_point(p)}
        assert set(subspace_points(F2, m.rows)) == common
        assert a.dim + b.dim == span(a, b).dim + m.dim


def test_pg_point_counts_and_order():
    assert len(enumerate_pg_points(2, F2)) == 7
    assert len(enumerate_pg_points(4, F2)) == 31
    assert len(enumerate_pg_points(2, F3)) == 13
    pts = enumerate_pg_points(3, F4)
    assert len(pts) == theta(3, 4) == 85
    assert pts == sorted(pts)
    assert len(set(pts)) == len(pts)


def test_subspace_points_normalized_and_counted():
    sub = canonicalize(F3, 3, [(1, 0, 2, 1), (0, 1, 1, 0)])
    pts = subspace_points(F3, sub.rows)
    assert len(pts) == theta(1, 3) == 4
    for p in pts:
        assert normalize_point(F3, p) == p
        assert sub.contains_point(p)


def test_nullspace():
    ker = nullspace(F3, [(1, 1, 1)], 2)
    assert ker.dim == 1
    for p in subspace_points(F3, ker.rows):
        assert sum(p) % 3 == 0


def test_containment_and_ordering():
    l = canonicalize(F2, 3, [(1, 0, 0, 0), (0, 1, 0, 0)])
    p = canonicalize(F2, 3, [(1, 1, 0, 0)])
    assert l.contains(p)
    assert p <= l
    assert not l <= p


def test_empty_and_ambient_mismatch():
    e = empty_subspace(F2, 3)
    assert e.dim == -1
    with pytest.raises(ValueError):
        canonicalize(F2, 3, [(1, 0, 0)])
    a = canonicalize(F2, 2, [(1, 0, 0)])
    b = canonicalize(F2, 3, [(1, 0, 0, 0)])
    with pytest.raises(ValueError):
        span(a, b)


def test_basis_solver_roundtrip():
    rows = [(1, 0, 2, 1), (0, 1, 1, 0), (0, 0, 1, 1)]
    solver = BasisSolver(F3, rows)
    add, mul = F3.addl, F3.mull
    for coeffs in [(1, 0, 0), (0, 2, 1), (2, 1, 2), (1, 1, 1)]:
        v = [0, 0, 0, 0]
        for c, r in zip(coeffs, rows):
            v = [add[x][mul[c][y]] for x, y in zip(v, r)]
        assert solver.express(tuple(v)) == coeffs
    assert solver.express((1, 1, 0, 0)) is None
    with pytest.raises(ValueError):
        BasisSolver(F3, [(1, 0, 0, 0), (2, 0, 0, 0)])


def test_subspace_hashable_as_key():
    a = canonicalize(F2, 2, [(1, 0, 0), (0, 1, 0)])
    b = canonicalize(F2, 2, [(0, 1, 0), (1, 0, 0)])
    assert a == b
    assert len({a, b}) == 1
    assert a.to_json() == [[1, 0, 0], [0, 1, 0]]
