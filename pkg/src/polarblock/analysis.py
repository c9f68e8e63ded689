"""Verification and classification of generator blocking sets.

Everything here is a pure function over an immutable PolarSpace: blocking
and minimality checks, the coverage bookkeeping (covered-point weights
w(P), excess W, per-hole line histograms b_i(X), the global histograms
b_i and b~_i), the identity/inequality battery on those quantities for
rank-2 spaces, projection of a blocking set from a hole into the quotient
geometry, the generalized-quadrangle axiom checker, partial-spread
predicates, the catalogue classifier and the delta-thresholds under which
the classification theorems apply.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import isqrt

import numpy as np

from .projective import Subspace, canonicalize, meet, span
from .spaces import (
    IteratedQuotient,
    PolarSpace,
    hyperplane_section,
    pencil_size,
    quotient_at_point,
)

LABEL_PENCIL = "Pencil"
LABEL_SUBGQ_SPREAD = "SubGQSpread"
LABEL_COVER_Q4 = "CoverOfSectionQ4"
LABEL_CONE_CONIC = "ConeOverConicPencil"
LABEL_CONE_QPLUS3 = "ConeOverQplus3Spread"
LABEL_CONE_ELLIPTIC = "ConeOverEllipticPencil"
LABEL_CONE_Q4COVER = "ConeOverQ4Cover"
LABEL_CONE_HERMITIAN = "ConeOverHermitianPencil"
LABEL_UNKNOWN = "Unknown"

_CONE_PENCIL_LABELS = {
    "q": LABEL_CONE_CONIC,
    "qminus": LABEL_CONE_ELLIPTIC,
    "h": LABEL_CONE_HERMITIAN,
}


def members_mask(members) -> int:
    m = 0
    for i in members:
        m |= 1 << i
    return m


def validate_members(space: PolarSpace, members) -> tuple[int, ...]:
    raw = [int(m) for m in members]
    out = tuple(sorted(set(raw)))
    if len(out) != len(raw):
        raise ValueError("duplicate generator indices in blocking set")
    for m in out:
        if not 0 <= m < space.num_generators:
            raise ValueError(f"generator index {m} out of range")
    return out


def delta_of(space: PolarSpace, size: int) -> int:
    """Size excess over the pencil size t_base+1 of the space's kind."""
    return size - pencil_size(space.kind, space.q)


@dataclass
class BlockingSet:
    """An ordered set of generator indices into a polar space."""

    space: PolarSpace
    members: tuple[int, ...]

    def __post_init__(self):
        self.members = validate_members(self.space, self.members)

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def delta(self) -> int:
        return delta_of(self.space, self.size)

    def mask(self) -> int:
        return members_mask(self.members)

    def is_blocking(self) -> bool:
        return is_blocking(self.space, self.members)

    def is_minimal(self) -> bool:
        return is_minimal(self.space, self.members)

    def to_json(self) -> dict:
        sp = self.space
        return {
            "space": {"kind": sp.kind, "rank": sp.rank, "q": sp.q,
                      "hash": sp.content_hash()},
            "members": list(self.members),
        }


def is_blocking(space: PolarSpace, members) -> bool:
    """Every generator of the space meets some member non-trivially."""
    hit = 0
    for m in members:
        hit |= space.meets[m]
    return hit == space.all_gens_mask


def essential_members(space: PolarSpace, members) -> tuple[int, ...]:
    """Members pi for which some outside generator meets pi and no other
    member."""
    members = validate_members(space, members)
    lmask = members_mask(members)
    essential = 0
    for g in range(space.num_generators):
        if (1 << g) & lmask:
            continue
        hits = space.meets[g] & lmask
        if hits and hits & (hits - 1) == 0:
            essential |= hits
    return tuple(i for i in members if (1 << i) & essential)


def is_minimal(space: PolarSpace, members) -> bool:
    members = validate_members(space, members)
    return len(essential_members(space, members)) == len(members)


def minimize_blocking_set(space: PolarSpace, members) -> tuple[int, ...]:
    """Strip removable members, lex-least first, while blocking survives.

    The result is inclusion-minimal; when every survivor is essential it
    is minimal in the catalogue sense as well.
    """
    cur = list(validate_members(space, members))
    if not is_blocking(space, cur):
        raise ValueError("input set is not blocking")
    changed = True
    while changed:
        changed = False
        for i, m in enumerate(cur):
            trial = cur[:i] + cur[i + 1:]
            if trial and is_blocking(space, trial):
                cur = trial
                changed = True
                break
    return tuple(cur)


# -- coverage bookkeeping ------------------------------------------------------


@dataclass
class CoverageProfile:
    members: tuple[int, ...]
    covered_mask: int
    num_covered: int
    w: dict[int, int]              # covered point index -> multiplicity
    W: int                         # sum of (w(P)-1)
    holes: tuple[int, ...]
    b: dict[int, int] | None          # rank 2 only
    b_tilde: dict[int, int] | None    # rank 2 only
    hole_histograms: dict[int, dict[int, int]] | None  # rank 2 only


def coverage_profile(space: PolarSpace, members) -> CoverageProfile:
    members = validate_members(space, members)
    lmask = members_mask(members)
    covered = 0
    w: dict[int, int] = {}
    for m in members:
        for p in space.gen_points[m]:
            w[p] = w.get(p, 0) + 1
        covered |= space.gen_point_mask[m]
    W = sum(v - 1 for v in w.values())
    num_covered = covered.bit_count()
    ppg = space.points_per_generator()
    if num_covered != len(members) * ppg - W:
        raise AssertionError("coverage count identity violated")
    holes = tuple(p for p in range(space.num_points) if not (covered >> p) & 1)

    b = b_tilde = hole_hist = None
    if space.rank == 2:
        b = {}
        b_tilde = {}
        for g in range(space.num_generators):
            if (1 << g) & lmask:
                continue
            i = (space.meets[g] & lmask).bit_count()
            b[i] = b.get(i, 0) + 1
            j = (space.gen_point_mask[g] & covered).bit_count()
            b_tilde[j] = b_tilde.get(j, 0) + 1
        hole_hist = {}
        for x in holes:
            hist: dict[int, int] = {}
            gm = space.point_gen_mask[x]
            while gm:
                low = gm & -gm
                g = low.bit_length() - 1
                gm ^= low
                i = (space.meets[g] & lmask).bit_count()
                hist[i] = hist.get(i, 0) + 1
            hole_hist[x] = hist
    return CoverageProfile(members, covered, num_covered, w, W, holes,
                           b, b_tilde, hole_hist)


@dataclass
class CheckItem:
    ok: bool
    detail: str = ""


@dataclass
class IdentityReport:
    applicable: bool
    reason: str
    delta: int
    items: dict[str, CheckItem] = dc_field(default_factory=dict)

    @property
    def all_ok(self) -> bool:
        return self.applicable and all(i.ok for i in self.items.values())


def check_coverage_identities(space: PolarSpace, members) -> IdentityReport:
    """The identity/inequality battery for rank-2 blocking sets with
    delta < s-1: per-hole line histogram identity and perp bound, the
    meet bound delta+1 with its histogram consequences, the b~ vs b
    comparison, the global counting inequality, and the pencil bound at
    points not fully surrounded by members."""
    members = validate_members(space, members)
    if space.rank != 2:
        return IdentityReport(False, "histogram checks are defined on rank-2 spaces",
                              delta_of(space, len(members)))
    if not is_blocking(space, members):
        return IdentityReport(False, "set is not blocking", delta_of(space, len(members)))
    s, t = space.s, space.t
    delta = len(members) - (t + 1)
    if delta >= s - 1:
        return IdentityReport(False, f"delta = {delta} >= s-1 = {s - 1}: not applicable",
                              delta)
    prof = coverage_profile(space, members)
    lmask = members_mask(members)
    items: dict[str, CheckItem] = {}

    # (a) per hole X: sum_i b_i(X)(i-1) = delta and sum over X-perp of (w-1) <= delta
    ok = True
    detail = ""
    for x in prof.holes:
        tot = sum(h * (i - 1) for i, h in prof.hole_histograms[x].items())
        if tot != delta:
            ok = False
            detail = f"hole {x}: sum b_i(X)(i-1) = {tot} != {delta}"
            break
    items["a_hole_identity"] = CheckItem(ok, detail or f"{len(prof.holes)} holes checked")
    ok = True
    detail = ""
    for x in prof.holes:
        acc = 0
        pm = space.collinear[x] & prof.covered_mask
        while pm:
            low = pm & -pm
            acc += prof.w[low.bit_length() - 1] - 1
            pm ^= low
        if acc > delta:
            ok = False
            detail = f"hole {x}: sum (w-1) over perp = {acc} > {delta}"
            break
    items["a_perp_bound"] = CheckItem(ok, detail)

    # (b) a line not contained in M meets at most delta+1 members;
    #     histogram consequences b_0 = b~_0 = 0 and zeros strictly between
    #     delta+1 and s+1
    ok = True
    detail = ""
    for g in range(space.num_generators):
        if (1 << g) & lmask:
            continue
        if space.gen_point_mask[g] & ~prof.covered_mask:
            hits = (space.meets[g] & lmask).bit_count()
            if hits > delta + 1:
                ok = False
                detail = f"line {g} (not in M) meets {hits} > delta+1 members"
                break
    items["b_meet_bound"] = CheckItem(ok, detail)
    bad = [i for i in range(delta + 2, s + 1)
           if prof.b.get(i, 0) or prof.b_tilde.get(i, 0)]
    ok = not prof.b.get(0, 0) and not prof.b_tilde.get(0, 0) and not bad
    items["b_histograms"] = CheckItem(
        ok, "" if ok else f"nonzero histogram entries: b0={prof.b.get(0, 0)} "
                          f"b~0={prof.b_tilde.get(0, 0)} middle={bad}")

    # (c) sum_{i=2}^{delta+1} b~_i (i-1) <= same sum for b_i
    lhs = sum(prof.b_tilde.get(i, 0) * (i - 1) for i in range(2, delta + 2))
    rhs = sum(prof.b.get(i, 0) * (i - 1) for i in range(2, delta + 2))
    items["c_tilde_le_b"] = CheckItem(lhs <= rhs, f"{lhs} <= {rhs}")

    # (e) (s-delta) sum_{i=1}^{delta+1} b_i (i-1) <= (st-t-delta)(s+1)delta + W delta
    lhs = (s - delta) * sum(prof.b.get(i, 0) * (i - 1) for i in range(1, delta + 2))
    rhs = (s * t - t - delta) * (s + 1) * delta + prof.W * delta
    items["e_global_bound"] = CheckItem(lhs <= rhs, f"{lhs} <= {rhs}")

    # (f) a point with a non-member line lies on <= delta+1 members, and
    #     fewer than t/s + 1 of its non-member lines are inside M
    ok = True
    detail = ""
    ok2 = True
    detail2 = ""
    for p in range(space.num_points):
        in_l = (space.point_gen_mask[p] & lmask).bit_count()
        if in_l == t + 1:
            continue
        if in_l > delta + 1:
            ok = False
            detail = f"point {p} lies on {in_l} > delta+1 members"
        full = 0
        gm = space.point_gen_mask[p] & ~lmask
        while gm:
            low = gm & -gm
            g = low.bit_length() - 1
            gm ^= low
            if space.gen_point_mask[g] & ~prof.covered_mask == 0:
                full += 1
        if full * s >= t + s:  # full < t/s + 1
            ok2 = False
            detail2 = f"point {p} has {full} fully covered non-member lines"
    items["f_pencil_bound"] = CheckItem(ok, detail)
    items["f_covered_lines"] = CheckItem(ok2, detail2)

    return IdentityReport(True, "", delta, items)


# -- projection from a hole ----------------------------------------------------


def project_blocking_set(space: PolarSpace, members, hole: int):
    """Project a blocking set from one of its holes into the quotient.

    Each member g maps to the span of the hole with g meet perp(hole),
    taken in the quotient geometry; duplicates merge.  Returns (quotient
    space, projected member indices, quotient map).
    """
    members = validate_members(space, members)
    if space.point_gen_mask[hole] & members_mask(members):
        raise ValueError(f"point {hole} is covered; not a hole")
    qspace, qm = quotient_at_point(space, hole)
    field = space.field
    hsub = canonicalize(field, space.n, [space.points[hole]])
    hperp = space.form.perp(hsub)
    out = set()
    for m in members:
        cut = meet(space.generators[m], hperp)
        lifted = span(cut, hsub)
        img = qm.to_quotient(lifted)
        gi = qspace.gen_index.get(img.rows)
        if gi is None:
            raise AssertionError("projected member is not a quotient generator")
        out.add(gi)
    projected = tuple(sorted(out))
    if not is_blocking(qspace, projected):
        raise AssertionError("projection from a hole failed to block the quotient")
    return qspace, projected, qm


# -- GQ axioms -----------------------------------------------------------------


@dataclass
class GQCheckResult:
    ok: bool
    order: tuple[int, int] | None
    failure: str | None = None
    witness: tuple | None = None


def check_gq_axioms(points, lines) -> GQCheckResult:
    """Check the generalized-quadrangle axioms on an abstract incidence
    structure; returns the order (s,t) or the first violated axiom."""
    pts = list(points)
    index = {p: i for i, p in enumerate(pts)}
    npts = len(pts)
    lns = [tuple(sorted(index[p] for p in l)) for l in lines]
    if not pts or not lns:
        return GQCheckResult(False, None, "empty point or line set", ())
    sizes = {len(set(l)) for l in lns}
    if len(sizes) != 1:
        return GQCheckResult(False, None, "line sizes not constant",
                             (sorted(sizes),))
    s = sizes.pop() - 1
    if s < 1:
        return GQCheckResult(False, None, "lines must have at least 2 points", ())
    deg = [0] * npts
    for l in lns:
        for p in l:
            deg[p] += 1
    if len(set(deg)) != 1:
        return GQCheckResult(False, None, "point degrees not constant",
                             (min(deg), max(deg)))
    t = deg[0] - 1
    if t < 1:
        return GQCheckResult(False, None, "points must lie on at least 2 lines", ())
    seen_pairs = set()
    for li, l in enumerate(lns):
        for a in range(len(l)):
            for bj in range(a + 1, len(l)):
                pair = (l[a], l[bj])
                if pair in seen_pairs:
                    return GQCheckResult(False, None,
                                         "two points on two common lines", pair)
                seen_pairs.add(pair)
    adj = np.zeros((npts, npts), dtype=bool)
    for l in lns:
        ix = np.array(l)
        adj[np.ix_(ix, ix)] = True
    inc = np.zeros((len(lns), npts), dtype=bool)
    for li, l in enumerate(lns):
        inc[li, list(l)] = True
    for li, l in enumerate(lns):
        col = adj[list(l)].sum(axis=0)
        off = ~inc[li]
        bad = np.nonzero(off & (col != 1))[0]
        if len(bad):
            x = int(bad[0])
            return GQCheckResult(False, None,
                                 "unique-collinear-pair axiom violated",
                                 (pts[x], tuple(pts[p] for p in l), int(col[x])))
    return GQCheckResult(True, (s, t))


# -- partial spreads -----------------------------------------------------------


def is_partial_spread(space: PolarSpace, members) -> bool:
    members = validate_members(space, members)
    acc = 0
    for m in members:
        pm = space.gen_point_mask[m]
        if acc & pm:
            return False
        acc |= pm
    return True


def is_spread(space: PolarSpace, members) -> bool:
    members = validate_members(space, members)
    acc = 0
    for m in members:
        pm = space.gen_point_mask[m]
        if acc & pm:
            return False
        acc |= pm
    return acc == space.all_points_mask


def is_cover(space: PolarSpace, members) -> bool:
    acc = 0
    for m in validate_members(space, members):
        acc |= space.gen_point_mask[m]
    return acc == space.all_points_mask


def is_maximal_partial_spread(space: PolarSpace, members) -> bool:
    """Partial spread not extendable by any generator; equivalently a
    partial spread that is also a blocking set."""
    return is_partial_spread(space, members) and is_blocking(space, members)


# -- classification ------------------------------------------------------------


@dataclass
class Classification:
    label: str
    vertex: Subspace | None = None
    base: "Classification | None" = None
    details: dict = dc_field(default_factory=dict)

    def to_json(self):
        out = {"label": self.label, "details": dict(self.details)}
        if self.vertex is not None:
            out["vertex"] = self.vertex.to_json()
        if self.base is not None:
            out["base"] = self.base.to_json()
        return out


def _classify_rank2(space: PolarSpace, members) -> Classification:
    s, t = space.s, space.t
    field = space.field
    # cover of a nondegenerate parabolic hyperplane section (elliptic ambient)
    if space.kind == "qminus":
        h = space.generators[members[0]]
        for m in members[1:]:
            h = span(h, space.generators[m])
        if h.dim == space.n - 1:
            sec = hyperplane_section(space, h)
            if sec.label == f"Q(4,{space.q})":
                cov = 0
                for m in members:
                    cov |= space.gen_point_mask[m]
                if cov & sec.point_mask == sec.point_mask:
                    return Classification(
                        LABEL_COVER_Q4, details={
                            "hyperplane": h.to_json(),
                            "section_points": len(sec.point_indices),
                        })
    # spread of the subquadrangle induced on the covered points
    if t % s == 0 and t >= s:
        prof = coverage_profile(space, members)
        gprime = [g for g in range(space.num_generators)
                  if space.gen_point_mask[g] & ~prof.covered_mask == 0]
        mpts = [p for p in range(space.num_points)
                if (prof.covered_mask >> p) & 1]
        res = check_gq_axioms(mpts, [space.gen_points[g] for g in gprime])
        if res.ok and res.order == (s, t // s):
            if (set(members) <= set(gprime)
                    and is_partial_spread(space, members)
                    and prof.W == 0 and prof.num_covered == len(members) * (s + 1)):
                return Classification(
                    LABEL_SUBGQ_SPREAD,
                    details={"order": res.order, "sub_lines": len(gprime)})
    return Classification(LABEL_UNKNOWN)


def classify(space: PolarSpace, members) -> Classification:
    """Match a minimal blocking set against the catalogue of small
    examples; non-Unknown results carry an independently verified witness."""
    members = validate_members(space, members)
    if not is_blocking(space, members):
        raise ValueError("classify requires a blocking set")
    if not is_minimal(space, members):
        raise ValueError("classify requires a minimal blocking set")

    v = space.generators[members[0]]
    for m in members[1:]:
        v = meet(v, space.generators[m])

    result = Classification(LABEL_UNKNOWN)
    if v.dim == space.rank - 2:
        thru = space.generators_through(v)
        if (len(members) == pencil_size(space.kind, space.q)
                and list(members) == sorted(thru)):
            if space.rank == 2:
                result = Classification(LABEL_PENCIL, vertex=v)
            else:
                label = _CONE_PENCIL_LABELS.get(space.kind, LABEL_UNKNOWN)
                result = Classification(label, vertex=v)
    elif space.rank == 2:
        result = _classify_rank2(space, members)
    elif v.dim == space.rank - 3:
        iq = IteratedQuotient(space, v)
        qspace = iq.quotient
        imgs = set()
        for m in members:
            img = iq.to_quotient(space.generators[m])
            gi = qspace.gen_index.get(img.rows)
            if gi is None:
                return Classification(LABEL_UNKNOWN)
            imgs.add(gi)
        proj = tuple(sorted(imgs))
        if len(proj) == len(members) and is_blocking(qspace, proj) \
                and is_minimal(qspace, proj):
            base = _classify_rank2(qspace, proj)
            if base.label == LABEL_SUBGQ_SPREAD and space.kind == "q":
                result = Classification(LABEL_CONE_QPLUS3, vertex=v, base=base)
            elif base.label == LABEL_COVER_Q4 and space.kind == "qminus":
                result = Classification(LABEL_CONE_Q4COVER, vertex=v, base=base)

    if result.label != LABEL_UNKNOWN:
        if not verify_classification(space, members, result):
            raise AssertionError(
                f"witness for label {result.label} failed re-verification")
    return result


def verify_classification(space: PolarSpace, members, cls: Classification) -> bool:
    """Independent re-check of a classification witness."""
    members = validate_members(space, members)
    label = cls.label
    if label == LABEL_UNKNOWN:
        return True
    if label in (LABEL_PENCIL, *[l for l in _CONE_PENCIL_LABELS.values()]):
        v = cls.vertex
        if v is None or v.dim != space.rank - 2:
            return False
        from .forms import is_totally_singular

        if not is_totally_singular(space.form, v):
            return False
        thru = sorted(space.generators_through(v))
        return (list(members) == thru
                and len(members) == pencil_size(space.kind, space.q))
    if label == LABEL_SUBGQ_SPREAD:
        s, t = space.s, space.t
        acc = 0
        for m in members:
            pm = space.gen_point_mask[m]
            if acc & pm:
                return False
            acc |= pm
        gprime = [g for g in range(space.num_generators)
                  if space.gen_point_mask[g] & ~acc == 0]
        mpts = [p for p in range(space.num_points) if (acc >> p) & 1]
        res = check_gq_axioms(mpts, [space.gen_points[g] for g in gprime])
        return bool(res.ok and res.order == (s, t // s)
                    and set(members) <= set(gprime)
                    and len(mpts) == len(members) * (s + 1))
    if label == LABEL_COVER_Q4:
        rows = tuple(tuple(r) for r in cls.details["hyperplane"])
        h = canonicalize(space.field, space.n, rows)
        sec = hyperplane_section(space, h)
        if sec.label != f"Q(4,{space.q})":
            return False
        if not set(members) <= set(sec.gen_indices):
            return False
        cov = 0
        for m in members:
            cov |= space.gen_point_mask[m]
        return cov & sec.point_mask == sec.point_mask
    if label in (LABEL_CONE_QPLUS3, LABEL_CONE_Q4COVER):
        v = cls.vertex
        if v is None or v.dim != space.rank - 3:
            return False
        for m in members:
            if not space.generators[m].contains(v):
                return False
        iq = IteratedQuotient(space, v)
        qspace = iq.quotient
        imgs = set()
        for m in members:
            gi = qspace.gen_index.get(iq.to_quotient(space.generators[m]).rows)
            if gi is None:
                return False
            imgs.add(gi)
        proj = tuple(sorted(imgs))
        if len(proj) != len(members):
            return False
        base = cls.base
        if base is None:
            return False
        expected = (LABEL_SUBGQ_SPREAD if label == LABEL_CONE_QPLUS3
                    else LABEL_COVER_Q4)
        if base.label != expected:
            return False
        fresh = _classify_rank2(qspace, proj)
        return fresh.label == expected
    return False


# -- thresholds ----------------------------------------------------------------


@dataclass
class Threshold:
    kind: str
    q: int
    max_delta: int           # largest admissible delta; -1 if none
    description: str
    value: float | None = None
    epsilon: int | None = None
    epsilon_exists: bool | None = None
    epsilon_source: str | None = None

    def admissible(self, delta: int) -> bool:
        return 0 <= delta <= self.max_delta


def theorem_threshold(kind: str, q: int, rank: int = 3,
                      epsilon="auto") -> Threshold:
    """Largest delta for which the classification theorems apply.

    kind 'qminus': delta <= (3q - sqrt(5q^2+2q+1))/2 (any rank >= 2).
    kind 'h':      delta < q-3 (any rank >= 2; empty for q <= 3).
    kind 'q':      rank >= 3: delta < min((q-1)/2, eps); rank 2: delta < eps,
                   with eps the excess of the smallest non-trivial plane
                   blocking set (oracle-searched for q <= 9, prime formula
                   beyond, unbounded when no non-trivial set exists).
    """
    if kind == "qminus":
        d = 5 * q * q + 2 * q + 1
        md = -1
        delta = 0
        while 3 * q - 2 * delta >= 0 and (3 * q - 2 * delta) ** 2 >= d:
            md = delta
            delta += 1
        r = isqrt(d)
        value = (3 * q - (r if r * r == d else d ** 0.5)) / 2
        return Threshold(kind, q, md,
                         "delta <= (3q - sqrt(5q^2+2q+1))/2", value)
    if kind == "h":
        return Threshold(kind, q, q - 4, "delta < q-3", float(q - 3))
    if kind == "q":
        eps_val, eps_exists, source = _resolve_epsilon(q, epsilon)
        if rank >= 3:
            md = (q - 2) // 2
            desc = "delta < min((q-1)/2, eps)"
        else:
            md = None
            desc = "delta < eps"
        if eps_exists:
            md = eps_val - 1 if md is None else min(md, eps_val - 1)
        elif md is None:
            # no non-trivial plane blocking set and no (q-1)/2 term at rank 2:
            # only delta = 0 is covered (by the t+1 theorem)
            md = 0
        return Threshold(kind, q, md, desc, None, eps_val, eps_exists, source)
    raise ValueError(f"threshold kinds are 'q', 'qminus', 'h'; got {kind!r}")


def _resolve_epsilon(q: int, epsilon):
    if epsilon == "auto":
        from .search import smallest_nontrivial_pg2

        res = smallest_nontrivial_pg2(q)
        return res.epsilon, res.exists, res.source
    if epsilon is None:
        return None, False, "caller"
    return int(epsilon), True, "caller"


def spread_size_gate(kind: str, q: int, rank: int = 3, epsilon="auto") -> int:
    """Integer lower bound on maximal partial spread sizes implied by the
    rank >= 3 classification: pencil/cone examples are never partial
    spreads, so sizes at admissible delta are excluded."""
    th = theorem_threshold(kind, q, rank, epsilon)
    return pencil_size(kind, q) + th.max_delta + 1
