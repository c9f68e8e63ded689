from itertools import combinations

import pytest

from polarblock.spaces import build_polar_space, quotient_at_point
from polarblock import analysis as A
from polarblock import constructions as C


def pencil_through_point(space, p):
    return tuple(g for g in range(space.num_generators)
                 if (space.point_gen_mask[p] >> g) & 1)


def test_blocking_basics():
    sp = build_polar_space("q", 2, 2)
    assert A.is_blocking(sp, range(sp.num_generators))
    assert not A.is_blocking(sp, [])
    pen = pencil_through_point(sp, 0)
    assert A.is_blocking(sp, pen)
    assert A.is_minimal(sp, pen)
    assert A.essential_members(sp, pen) == pen


def test_full_line_set_not_minimal():
    sp = build_polar_space("q", 2, 2)
    allg = tuple(range(sp.num_generators))
    assert A.is_blocking(sp, allg)
    assert A.essential_members(sp, allg) == ()
    assert not A.is_minimal(sp, allg)


def test_spread_blocking_but_not_minimal_on_q42():
    # a spread of Q(4,2): every outside line meets exactly 3 members, so no
    # member is essential, yet no member can be removed
    import polarblock.search as S

    sp = build_polar_space("q", 2, 2)
    cov = S.min_cover_of_space(sp)
    spread = cov.witnesses[0]
    assert A.is_spread(sp, spread)
    assert A.is_blocking(sp, spread)
    assert not A.is_minimal(sp, spread)
    assert A.minimize_blocking_set(sp, spread) == tuple(sorted(spread))


def test_validate_members_errors():
    sp = build_polar_space("q", 2, 2)
    with pytest.raises(ValueError):
        A.validate_members(sp, [1, 1])
    with pytest.raises(ValueError):
        A.validate_members(sp, [99])


def test_coverage_profile_pencil_q52():
    sp = build_polar_space("qminus", 2, 2)
    pen = pencil_through_point(sp, 0)
    prof = A.coverage_profile(sp, pen)
    assert prof.num_covered == 5 * 3 - 4 == 11
    assert prof.W == sp.t
    assert len(prof.holes) == 16
    assert prof.w[0] == sp.t + 1
    # blocking iff b_0 = b~_0 = 0: independent code paths agree
    assert (prof.b.get(0, 0) == 0) == A.is_blocking(sp, pen)
    assert (prof.b_tilde.get(0, 0) == 0) == A.is_blocking(sp, pen)
    some = (0, 1)
    prof2 = A.coverage_profile(sp, some)
    assert (prof2.b.get(0, 0) == 0) == A.is_blocking(sp, some)
    assert (prof2.b_tilde.get(0, 0) == 0) == A.is_blocking(sp, some)


def test_coverage_profile_spread():
    import polarblock.search as S

    sp = build_polar_space("q", 2, 2)
    spread = S.min_cover_of_space(sp).witnesses[0]
    prof = A.coverage_profile(sp, spread)
    assert prof.W == 0
    assert prof.holes == ()


def test_higher_rank_profile_restricted():
    sp = build_polar_space("q", 3, 2)
    pen = C.pencil(sp)
    prof = A.coverage_profile(sp, pen.members)
    assert prof.b is None and prof.b_tilde is None
    ppg = sp.points_per_generator()
    assert prof.num_covered == pen.size * ppg - prof.W


def test_identities_pencils_and_spreads():
    for kind, q in [("q", 2), ("q", 3), ("qminus", 2), ("qminus", 3)]:
        sp = build_polar_space(kind, 2, q)
        rep = A.check_coverage_identities(sp, C.pencil(sp).members)
        assert rep.applicable and rep.all_ok, (kind, q, rep.items)
    # spreads have delta > 0 on Q(4,2); cover-spreads of Q-(5,2) have delta 0
    sp = build_polar_space("qminus", 2, 2)
    cov = C.section_cover(sp)
    rep = A.check_coverage_identities(sp, cov.members)
    assert rep.applicable and rep.all_ok
    assert len(A.coverage_profile(sp, cov.members).holes) > 0


def test_identities_not_applicable_gate():
    sp = build_polar_space("q", 2, 2)  # s-1 = 1, so delta must be 0
    import polarblock.search as S

    spread = S.min_cover_of_space(sp).witnesses[0]  # size 5, delta 2
    rep = A.check_coverage_identities(sp, spread)
    assert not rep.applicable
    assert "not applicable" in rep.reason
    sp3 = build_polar_space("q", 3, 2)
    rep3 = A.check_coverage_identities(sp3, C.pencil(sp3).members)
    assert not rep3.applicable  # rank-2 notion only


def test_gq_axioms_pass_and_fail():
    sp = build_polar_space("q", 2, 2)
    res = A.check_gq_axioms(range(sp.num_points), sp.gen_points)
    assert res.ok and res.order == (2, 2)
    bad = A.check_gq_axioms(range(9), [(0, 1, 2), (3, 4, 5), (6, 7, 8),
                                       (0, 3, 6), (1, 4, 7)])
    assert not bad.ok and "degrees" in bad.failure
    # two points on two common lines
    dup = A.check_gq_axioms(range(4), [(0, 1), (0, 1), (2, 3), (2, 3)])
    assert not dup.ok
    # a projective plane fails the unique-collinear-pair axiom
    fano = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6),
            (2, 3, 6), (2, 4, 5)]
    res = A.check_gq_axioms(range(7), fano)
    assert not res.ok and "unique-collinear-pair" in res.failure


def test_partial_spread_predicates():
    sp = build_polar_space("qplus3", 2, 2)
    fam0, fam1 = C.grid_rulings(sp)
    assert A.is_partial_spread(sp, fam0)
    assert A.is_spread(sp, fam0)
    assert A.is_maximal_partial_spread(sp, fam0)
    pen = pencil_through_point(sp, 0)
    assert not A.is_partial_spread(sp, pen)
    assert A.is_partial_spread(sp, fam0[:2])
    assert not A.is_maximal_partial_spread(sp, fam0[:2])


def test_spread_cover_blocking_chain():
    import polarblock.search as S

    for kind, q in [("q", 2), ("qplus3", 2)]:
        sp = build_polar_space(kind, 2, q)
        spread = S.min_cover_of_space(sp).witnesses[0]
        if A.is_spread(sp, spread):
            assert A.is_cover(sp, spread)
        assert A.is_cover(sp, spread)
        assert A.is_blocking(sp, spread)


def test_classify_requires_minimal_blocking():
    sp = build_polar_space("q", 2, 2)
    with pytest.raises(ValueError):
        A.classify(sp, [0])
    allg = tuple(range(sp.num_generators))
    with pytest.raises(ValueError):
        A.classify(sp, allg)


def test_classify_known_examples():
    sp = build_polar_space("q", 2, 2)
    sec = C.hyperbolic_section(sp)
    ruling = C.ruling_spread(sp, 0, lines=sec.gen_indices)
    cls = A.classify(sp, ruling.members)
    assert cls.label == "SubGQSpread"
    assert cls.details["order"] == (2, 1)
    assert A.verify_classification(sp, ruling.members, cls)

    s5 = build_polar_space("qminus", 2, 2)
    cov = C.section_cover(s5)
    cls5 = A.classify(s5, cov.members)
    assert cls5.label == "CoverOfSectionQ4"
    assert A.verify_classification(s5, cov.members, cls5)

    s6 = build_polar_space("q", 3, 2)
    cone = C.cone_example(s6, "conic-pencil")
    cls6 = A.classify(s6, cone.members)
    assert cls6.label == "ConeOverConicPencil"
    assert cls6.vertex.dim == 1
    assert A.verify_classification(s6, cone.members, cls6)


def test_verify_classification_rejects_wrong_witness():
    sp = build_polar_space("q", 2, 2)
    pen = pencil_through_point(sp, 0)
    cls = A.classify(sp, pen)
    wrong = A.Classification("Pencil", vertex=sp.generators[0])
    assert not A.verify_classification(sp, pen, wrong)
    assert A.verify_classification(sp, pen, cls)


def test_project_blocking_set_oracle():
    sp = build_polar_space("q", 3, 2)
    cone = C.cone_example(sp, "qplus3-spread")
    prof = A.coverage_profile(sp, cone.members)
    hole = prof.holes[0]
    qspace, proj, _ = A.project_blocking_set(sp, cone.members, hole)
    assert A.is_blocking(qspace, proj)
    assert len(proj) <= cone.size
    covered_point = next(iter(A.coverage_profile(sp, cone.members).w))
    with pytest.raises(ValueError):
        A.project_blocking_set(sp, cone.members, covered_point)


def test_thresholds_known_values():
    th = A.theorem_threshold("qminus", 2)
    assert th.max_delta == 0 and abs(th.value - 0.5) < 1e-12
    th4 = A.theorem_threshold("qminus", 4)
    assert th4.max_delta == 1
    assert A.theorem_threshold("h", 5).max_delta == 1  # delta < 2
    assert A.theorem_threshold("h", 2).max_delta < 0   # no claim at q = 2
    assert A.theorem_threshold("q", 2, rank=3).max_delta == 0
    assert A.theorem_threshold("q", 3, rank=3).max_delta == 0
    th_r2 = A.theorem_threshold("q", 3, rank=2)
    assert th_r2.max_delta == 1  # Prop: delta < eps = 2
    assert A.theorem_threshold("q", 5, rank=3, epsilon=3).max_delta == 1
    with pytest.raises(ValueError):
        A.theorem_threshold("w", 2)


def test_spread_size_gate():
    assert A.spread_size_gate("q", 2) == 4
    assert A.spread_size_gate("qminus", 2) == 6


def test_delta_of():
    sp = build_polar_space("h", 2, 2)
    assert A.delta_of(sp, 9) == 0
    assert A.delta_of(sp, 12) == 3


def test_blocking_monotone():
    sp = build_polar_space("q", 2, 2)
    pen = list(pencil_through_point(sp, 0))
    for extra in range(sp.num_generators):
        if extra not in pen:
            assert A.is_blocking(sp, pen + [extra])


def test_quotient_of_section_cover_blocks():
    # any blocking set projected from any hole blocks the quotient
    sp = build_polar_space("qminus", 2, 2)
    cov = C.section_cover(sp)
    prof = A.coverage_profile(sp, cov.members)
    for hole in prof.holes[:5]:
        qspace, proj, _ = A.project_blocking_set(sp, cov.members, hole)
        assert A.is_blocking(qspace, proj)
