import pytest

from polarblock.spaces import build_polar_space, pencil_size
from polarblock.projective import canonicalize
from polarblock import analysis as A
from polarblock import constructions as C


def test_pencil_sizes_per_kind():
    cases = [("q", 2, 2, 3), ("q", 2, 3, 4), ("qminus", 2, 2, 5),
             ("qminus", 2, 3, 10), ("h", 2, 2, 9), ("qplus3", 2, 2, 2),
             ("h3", 2, 2, 3), ("q", 3, 2, 3), ("qminus", 3, 2, 5)]
    for kind, rank, q, size in cases:
        sp = build_polar_space(kind, rank, q)
        p = C.pencil(sp)
        assert p.size == size == pencil_size(kind, q)
        assert p.delta == 0
        assert A.is_blocking(sp, p.members)
        assert A.is_minimal(sp, p.members)


def test_pencil_rejects_bad_vertex():
    sp = build_polar_space("q", 3, 2)
    pt = canonicalize(sp.field, sp.n, [sp.points[0]])
    with pytest.raises(ValueError):
        C.pencil(sp, pt)  # needs a line, not a point
    nonsing = canonicalize(sp.field, sp.n, [(1, 0, 0, 0, 0, 0, 0)])
    with pytest.raises(ValueError):
        C.pencil(build_polar_space("q", 2, 2),
                 canonicalize(sp.field, 4, [(1, 0, 0, 0, 0)]))


def test_pencil_deterministic_seed():
    sp = build_polar_space("qminus", 2, 2)
    assert C.pencil(sp).members == C.pencil(sp).members
    assert C.lex_least_ts_subspace(sp, 0).rows == \
        C.lex_least_ts_subspace(sp, 0).rows


def test_rulings_grid_structure():
    sp = build_polar_space("qplus3", 2, 2)
    fam0, fam1 = C.grid_rulings(sp)
    assert len(fam0) == len(fam1) == 3
    r0 = C.ruling_spread(sp, 0)
    assert A.is_spread(sp, r0.members)
    # opposite rulings meet pairwise in exactly one point
    for a in fam0:
        for b in fam1:
            common = sp.gen_point_mask[a] & sp.gen_point_mask[b]
            assert common.bit_count() == 1


def test_embedded_ruling_is_minimal_blocking():
    sp = build_polar_space("q", 2, 2)
    sec = C.hyperbolic_section(sp)
    emb = C.ruling_spread(sp, 0, lines=sec.gen_indices)
    assert A.is_blocking(sp, emb.members)
    assert A.is_minimal(sp, emb.members)
    assert A.classify(sp, emb.members).label == "SubGQSpread"
    other = C.ruling_spread(sp, 1, lines=sec.gen_indices)
    assert set(other.members).isdisjoint(emb.members)


def test_ruling_rejects_non_grid():
    sp = build_polar_space("q", 2, 2)
    # lines 0..5 of Q(4,2) happen to be a genuine embedded grid
    fam0, fam1 = C.grid_rulings(sp, lines=list(range(6)))
    assert len(fam0) == len(fam1) == 3
    with pytest.raises(ValueError):
        C.grid_rulings(sp, lines=[0, 1, 2, 3, 4, 6])
    with pytest.raises(ValueError):
        C.grid_rulings(sp, lines=list(range(5)))
    with pytest.raises(ValueError):
        C.grid_rulings(sp)  # not a Q+(3,q) space


def test_section_cover_q2():
    sp = build_polar_space("qminus", 2, 2)
    cov = C.section_cover(sp)
    assert cov.size == 5  # q even: a spread of the section
    assert A.is_blocking(sp, cov.members)
    assert A.is_minimal(sp, cov.members)
    assert A.is_partial_spread(sp, cov.members)
    assert A.classify(sp, cov.members).label == "CoverOfSectionQ4"


def test_section_cover_q3():
    sp = build_polar_space("qminus", 2, 3)
    cov = C.section_cover(sp)
    assert cov.size == 11  # exact minimum cover of Q(4,3), regression anchor
    assert cov.size >= sp.q ** 2 + 1
    assert A.is_blocking(sp, cov.members)
    assert not A.is_partial_spread(sp, cov.members)  # no spread for odd q


def test_section_cover_needs_elliptic():
    sp = build_polar_space("q", 2, 2)
    with pytest.raises(ValueError):
        C.section_cover(sp)


@pytest.mark.parametrize("kind,rank,row,label", [
    ("q", 3, "conic-pencil", "ConeOverConicPencil"),
    ("q", 3, "qplus3-spread", "ConeOverQplus3Spread"),
    ("qminus", 3, "elliptic-pencil", "ConeOverEllipticPencil"),
    ("qminus", 3, "q4-cover", "ConeOverQ4Cover"),
])
def test_cone_examples_roundtrip_rank3(kind, rank, row, label):
    sp = build_polar_space(kind, rank, 2)
    bs = C.cone_example(sp, row)
    assert A.is_blocking(sp, bs.members)
    assert A.is_minimal(sp, bs.members)
    assert bs.size == pencil_size(kind, 2)
    assert A.classify(sp, bs.members).label == label


def test_cone_rejects_bad_row_and_rank():
    sp = build_polar_space("q", 3, 2)
    with pytest.raises(ValueError):
        C.cone_example(sp, "hermitian-pencil")
    with pytest.raises(ValueError):
        C.cone_example(build_polar_space("q", 2, 2), "conic-pencil")
    pt = canonicalize(sp.field, sp.n, [sp.points[0]])
    with pytest.raises(ValueError):
        C.cone_example(sp, "conic-pencil", pt)  # wrong vertex dimension


def test_cone_vertex_in_every_member():
    sp = build_polar_space("qminus", 3, 2)
    bs = C.cone_example(sp, "q4-cover")
    v = sp.generators[bs.members[0]]
    from polarblock.projective import meet

    for m in bs.members[1:]:
        v = meet(v, sp.generators[m])
    assert v.dim == sp.rank - 3


def test_cone_avoidance_bounds_quadric_cones():
    cases = [("q", "conic-pencil"), ("q", "qplus3-spread"),
             ("qminus", "elliptic-pencil"), ("qminus", "q4-cover")]
    for kind, row in cases:
        sp = build_polar_space(kind, 3, 2)
        bs = C.cone_example(sp, row)
        got, _ = C.min_generators_outside_hyperplanes(sp, bs.members)
        assert got >= C.CONE_AVOIDANCE_BOUND[row](2), (kind, row, got)


def test_table1_sizes():
    # sizes follow the base-set column: q+1, q+1, q^2+1, q^2+1, q^3+1
    s6 = build_polar_space("q", 3, 2)
    s7 = build_polar_space("qminus", 3, 2)
    assert C.cone_example(s6, "conic-pencil").size == 3
    assert C.cone_example(s6, "qplus3-spread").size == 3
    assert C.cone_example(s7, "elliptic-pencil").size == 5
    assert C.cone_example(s7, "q4-cover").size == 5


def test_find_section_missing():
    sp = build_polar_space("q", 2, 2)
    with pytest.raises(ValueError):
        C.find_section(sp, "H(3,4)")
