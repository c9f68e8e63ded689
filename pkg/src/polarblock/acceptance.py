"""The acceptance suite: one callable per criterion, shared by the CLI
`accept` subcommand and by tests/test_acceptance.py.

Each criterion returns pass/fail/skip with a detail line; the runner adds
wall time and enforces the stated per-criterion time limits.  Skips only
arise from the generator budget guard, never silently.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import analysis, constructions, search
from .analysis import (
    LABEL_CONE_CONIC,
    LABEL_CONE_ELLIPTIC,
    LABEL_CONE_HERMITIAN,
    LABEL_CONE_Q4COVER,
    LABEL_CONE_QPLUS3,
    LABEL_COVER_Q4,
    LABEL_PENCIL,
    LABEL_SUBGQ_SPREAD,
)
from .spaces import BudgetError, build_polar_space, st_params

RNG_SEED = 20110811

ROW_LABEL = {
    "conic-pencil": LABEL_CONE_CONIC,
    "qplus3-spread": LABEL_CONE_QPLUS3,
    "elliptic-pencil": LABEL_CONE_ELLIPTIC,
    "q4-cover": LABEL_CONE_Q4COVER,
    "hermitian-pencil": LABEL_CONE_HERMITIAN,
}

ROW_BASE_NAME = {
    "conic-pencil": "Q(2,2)",
    "qplus3-spread": "Q+(3,2)",
    "elliptic-pencil": "Q-(3,2)",
    "q4-cover": "Q(4,2)",
    "hermitian-pencil": "H(2,4)",
}


@dataclass
class CriterionResult:
    cid: int
    title: str
    status: str  # pass | fail | skip
    detail: str
    seconds: float = 0.0
    limit: float | None = None

    @property
    def ok(self) -> bool:
        return self.status != "fail"


_examples: dict = {}


def _space(kind, rank, q):
    return build_polar_space(kind, rank, q)


def _example(kind, rank, q, row):
    key = (kind, rank, q, row)
    if key not in _examples:
        sp = _space(kind, rank, q)
        _examples[key] = constructions.cone_example(sp, row)
    return _examples[key]


def _fail(cid, title, detail):
    return CriterionResult(cid, title, "fail", detail)


def _ok(cid, title, detail):
    return CriterionResult(cid, title, "pass", detail)


def criterion_1():
    """Counting identities |P| = (st+1)(s+1), |G| = (st+1)(t+1)."""
    cid, title = 1, "GQ counting identities at q in {2,3}"
    checked = []
    for kind in ("q", "qminus", "h"):
        for q in (2, 3):
            sp = _space(kind, 2, q)
            s, t = st_params(kind, q)
            if sp.num_points != (s * t + 1) * (s + 1):
                return _fail(cid, title, f"{sp.name}: {sp.num_points} points")
            if sp.num_generators != (s * t + 1) * (t + 1):
                return _fail(cid, title, f"{sp.name}: {sp.num_generators} generators")
            checked.append(f"{sp.name}={sp.num_points}/{sp.num_generators}")
    return _ok(cid, title, "; ".join(checked))


def criterion_2():
    """GQ axiom suite with the expected orders."""
    cid, title = 2, "GQ axioms and orders for the five rank-2 families"
    expects = []
    for q in (2, 3):
        expects += [
            (("q", 2, q), (q, q)),
            (("qminus", 2, q), (q, q ** 2)),
            (("h", 2, q), (q ** 2, q ** 3)),
            (("qplus3", 2, q), (q, 1)),
            (("h3", 2, q), (q ** 2, q)),
        ]
    got = []
    for (kind, rank, q), want in expects:
        sp = _space(kind, rank, q)
        res = analysis.check_gq_axioms(range(sp.num_points), sp.gen_points)
        if not res.ok or res.order != want:
            return _fail(cid, title,
                         f"{sp.name}: got {res.order} ({res.failure}), want {want}")
        got.append(f"{sp.name}:{res.order}")
    return _ok(cid, title, "; ".join(got))


def criterion_3():
    """Minimum blocking size is t+1 on Q(4,q) and every minimum minimal
    set is a pencil or a regulus, exhaustively for q = 2, 3."""
    cid, title = 3, "Q(4,2)/Q(4,3): minimum = t+1, all minimal minima classified"
    lines = []
    for q in (2, 3):
        sp = _space("q", 2, q)
        res = search.min_blocking(sp)
        if not res.complete:
            return _fail(cid, title, f"{sp.name}: search incomplete")
        if res.optimum != sp.t + 1:
            return _fail(cid, title, f"{sp.name}: optimum {res.optimum} != {sp.t + 1}")
        mins = search.minimum_minimal_blocking_sets(sp, res)
        census: dict[str, int] = {}
        for w in mins:
            census[analysis.classify(sp, w).label] = \
                census.get(analysis.classify(sp, w).label, 0) + 1
        bad = set(census) - {LABEL_PENCIL, LABEL_SUBGQ_SPREAD}
        if bad:
            return _fail(cid, title, f"{sp.name}: unexpected labels {bad}")
        lines.append(f"{sp.name}: optimum {res.optimum}, census {census}")
    return _ok(cid, title, "; ".join(lines))


def criterion_4():
    """Exhaustive classification of size-(q^2+1) minimal sets on Q-(5,2)."""
    cid, title = 4, "Q-(5,2): delta threshold 0, all size-5 minimal sets classified"
    sp = _space("qminus", 2, 2)
    th = analysis.theorem_threshold("qminus", 2)
    if th.max_delta != 0:
        return _fail(cid, title, f"threshold admits delta up to {th.max_delta}")
    er = search.enumerate_minimal(sp, sp.t + 1 + th.max_delta)
    if not er.complete:
        return _fail(cid, title, "enumeration incomplete")
    census: dict[str, int] = {}
    for w in er.sets:
        if len(w) != 5:
            return _fail(cid, title, f"minimal set of size {len(w)} below 5")
        label = analysis.classify(sp, w).label
        census[label] = census.get(label, 0) + 1
    bad = set(census) - {LABEL_PENCIL, LABEL_COVER_Q4}
    if bad:
        return _fail(cid, title, f"unexpected labels {bad}")
    return _ok(cid, title, f"{len(er.sets)} minimal sets, census {census}")


def criterion_5():
    """Exhaustive classification of size-(q+1) minimal sets on Q(6,2)."""
    cid, title = 5, "Q(6,2): all size-3 minimal sets are the two cone examples"
    sp = _space("q", 3, 2)
    th = analysis.theorem_threshold("q", 2, rank=3)
    if th.max_delta != 0:
        return _fail(cid, title, f"threshold admits delta up to {th.max_delta}")
    er = search.enumerate_minimal(sp, 3)
    if not er.complete:
        return _fail(cid, title, "enumeration incomplete")
    census: dict[str, int] = {}
    for w in er.sets:
        label = analysis.classify(sp, w).label
        census[label] = census.get(label, 0) + 1
    bad = set(census) - {LABEL_CONE_CONIC, LABEL_CONE_QPLUS3}
    if bad:
        return _fail(cid, title, f"unexpected labels {bad}")
    return _ok(cid, title, f"{len(er.sets)} minimal sets, census {census}")


CONE_SPACES = [
    ("q", 3, 2, ("conic-pencil", "qplus3-spread")),
    ("qminus", 3, 2, ("elliptic-pencil", "q4-cover")),
    ("h", 3, 2, ("hermitian-pencil",)),
    ("q", 4, 2, ("conic-pencil", "qplus3-spread")),
]


def criterion_6():
    """Catalogue round-trip: every cone example classifies as its own row."""
    cid, title = 6, "Cone example round-trip at ranks 3 and 4 (q = 2)"
    lines = []
    skipped = []
    for kind, rank, q, rows in CONE_SPACES:
        t0 = time.monotonic()
        try:
            sp = _space(kind, rank, q)
        except BudgetError as e:
            skipped.append(f"{kind} rank {rank}: {e}")
            continue
        for row in rows:
            bs = _example(kind, rank, q, row)
            if not analysis.is_blocking(sp, bs.members):
                return _fail(cid, title, f"{sp.name} {row}: not blocking")
            if not analysis.is_minimal(sp, bs.members):
                return _fail(cid, title, f"{sp.name} {row}: not minimal")
            label = analysis.classify(sp, bs.members).label
            if label != ROW_LABEL[row]:
                return _fail(cid, title,
                             f"{sp.name} {row}: classified {label}")
        dt = time.monotonic() - t0
        if dt > 120:
            return _fail(cid, title, f"{sp.name}: {dt:.0f}s over the 120s budget")
        lines.append(f"{sp.name} ok ({dt:.0f}s)")
    detail = "; ".join(lines)
    if skipped:
        detail += " | skipped(budget): " + "; ".join(skipped)
        return CriterionResult(cid, title, "skip", detail)
    return _ok(cid, title, detail)


def _rank2_examples():
    out = []
    for q in (2, 3):
        sp = _space("q", 2, q)
        out.append((sp, "pencil", constructions.pencil(sp).members))
        sec = constructions.hyperbolic_section(sp)
        out.append((sp, "ruling",
                    constructions.ruling_spread(sp, 0, lines=sec.gen_indices).members))
        se = _space("qminus", 2, q)
        out.append((se, "pencil", constructions.pencil(se).members))
        out.append((se, "section-cover", constructions.section_cover(se).members))
        sh = _space("h", 2, q)
        out.append((sh, "pencil", constructions.pencil(sh).members))
    sp = _space("qplus3", 2, 2)
    out.append((sp, "pencil", constructions.pencil(sp).members))
    sp = _space("h3", 2, 2)
    out.append((sp, "pencil", constructions.pencil(sp).members))
    return out


def criterion_7():
    """Coverage identity battery on constructed rank-2 examples plus 100
    random minimized blocking sets of Q(4,3)."""
    cid, title = 7, "Rank-2 coverage identities (constructed + randomized)"
    ran = 0
    not_applicable = 0
    for sp, name, members in _rank2_examples():
        rep = analysis.check_coverage_identities(sp, members)
        if not rep.applicable:
            not_applicable += 1
            continue
        if not rep.all_ok:
            bad = [k for k, v in rep.items.items() if not v.ok]
            return _fail(cid, title, f"{sp.name} {name}: failed {bad}")
        ran += 1
    sp = _space("q", 2, 3)
    rng = np.random.default_rng(RNG_SEED)
    rand_applicable = 0
    for _ in range(100):
        members = search.greedy_then_minimize(sp, rng)
        rep = analysis.check_coverage_identities(sp, members)
        if not rep.applicable:
            continue
        rand_applicable += 1
        if not rep.all_ok:
            bad = [k for k, v in rep.items.items() if not v.ok]
            return _fail(cid, title,
                         f"random set {sorted(members)}: failed {bad}")
    return _ok(cid, title,
               f"{ran} constructed examples pass ({not_applicable} not applicable); "
               f"{rand_applicable}/100 random sets applicable, all pass")


def criterion_8():
    """Hyperplane-avoidance counts of the five cone covers."""
    cid, title = 8, "Cone covers avoid every hyperplane of their span enough"
    rows = [("q", 3, 2, "conic-pencil"), ("q", 3, 2, "qplus3-spread"),
            ("qminus", 3, 2, "elliptic-pencil"), ("qminus", 3, 2, "q4-cover"),
            ("h", 3, 2, "hermitian-pencil")]
    lines = []
    skipped = []
    for kind, rank, q, row in rows:
        try:
            bs = _example(kind, rank, q, row)
        except BudgetError as e:
            skipped.append(f"{row}: {e}")
            continue
        sp = _space(kind, rank, q)
        got, _ = constructions.min_generators_outside_hyperplanes(sp, bs.members)
        bound = constructions.CONE_AVOIDANCE_BOUND[row](q)
        if got < bound:
            return _fail(cid, title,
                         f"{sp.name} {row} (base {ROW_BASE_NAME[row]}): "
                         f"min outside = {got} < {bound}")
        lines.append(f"{row}: {got} >= {bound}")
    detail = "; ".join(lines)
    if skipped:
        return CriterionResult(cid, title, "skip",
                               detail + " | skipped(budget): " + "; ".join(skipped))
    return _ok(cid, title, detail)


def criterion_9():
    """Plane blocking-set oracle at q = 2 and q = 3."""
    cid, title = 9, "Smallest non-trivial plane blocking sets (q = 2, 3)"
    r2 = search.smallest_nontrivial_pg2(2)
    if r2.exists is not False:
        return _fail(cid, title, f"q=2: expected none, got {r2}")
    r3 = search.smallest_nontrivial_pg2(3)
    if r3.size != 6 or r3.epsilon != 2:
        return _fail(cid, title, f"q=3: expected size 6, got {r3.size}")
    return _ok(cid, title, "q=2: none exists; q=3: size 6 (epsilon 2 = (q+1)/2)")


def criterion_10():
    """Projection from sampled holes yields quotient blocking sets."""
    cid, title = 10, "Hole projections block the quotient (50 holes/space)"
    total = 0
    skipped = []
    for kind, rank, q, rows in CONE_SPACES:
        try:
            sp = _space(kind, rank, q)
        except BudgetError as e:
            skipped.append(f"{kind} rank {rank}: {e}")
            continue
        for row in rows:
            bs = _example(kind, rank, q, row)
            prof = analysis.coverage_profile(sp, bs.members)
            holes = list(prof.holes)
            step = max(1, len(holes) // 50)
            sample = holes[::step][:50]
            for x in sample:
                qspace, proj, _ = analysis.project_blocking_set(sp, bs.members, x)
                if not analysis.is_blocking(qspace, proj):
                    return _fail(cid, title, f"{sp.name} {row} hole {x}")
                if len(proj) > bs.size:
                    return _fail(cid, title,
                                 f"{sp.name} {row} hole {x}: projection grew")
                total += 1
    detail = f"{total} projections verified"
    if skipped:
        return CriterionResult(cid, title, "skip",
                               detail + " | skipped(budget): " + "; ".join(skipped))
    return _ok(cid, title, detail)


def criterion_11():
    """H(4,4) facts: the pencil verifies; the exact search is budgeted and
    incompleteness is an allowed, flagged outcome."""
    cid, title = 11, "H(4,4): pencil verifies; budgeted exact search"
    sp = _space("h", 2, 2)
    p = constructions.pencil(sp)
    if p.size != 9:
        return _fail(cid, title, f"pencil size {p.size} != 9")
    if not analysis.is_blocking(sp, p.members) or not analysis.is_minimal(sp, p.members):
        return _fail(cid, title, "pencil failed verification")
    res = search.min_blocking(sp, budget_nodes=2_000_000, budget_secs=45)
    if res.complete:
        if res.optimum is None or res.optimum > 9:
            return _fail(cid, title, f"complete search reported {res.optimum}")
        return _ok(cid, title, f"pencil ok; search complete, optimum {res.optimum}")
    return _ok(cid, title,
               f"pencil ok; search incomplete after {res.nodes} nodes "
               f"(allowed outcome, upper bound {res.optimum})")


CRITERIA = [
    (criterion_1, 5.0),
    (criterion_2, 30.0),
    (criterion_3, 60.0),
    (criterion_4, 120.0),
    (criterion_5, 300.0),
    (criterion_6, None),   # enforced per space inside
    (criterion_7, None),
    (criterion_8, 60.0),
    (criterion_9, 60.0),
    (criterion_10, 120.0),
    (criterion_11, None),  # budgeted internally
]


def run_acceptance() -> list[CriterionResult]:
    out = []
    for func, limit in CRITERIA:
        t0 = time.monotonic()
        try:
            res = func()
        except BudgetError as e:
            res = CriterionResult(0, func.__name__, "skip", str(e))
        res.seconds = time.monotonic() - t0
        res.limit = limit
        if limit is not None and res.seconds > limit and res.status == "pass":
            res.status = "fail"
            res.detail += f" | exceeded time limit: {res.seconds:.1f}s > {limit:.0f}s"
        out.append(res)
    return out


def format_table(results: list[CriterionResult]) -> str:
    lines = []
    width = max(len(r.title) for r in results)
    for r in results:
        mark = {"pass": "PASS", "fail": "FAIL", "skip": "SKIP"}[r.status]
        lim = f"/{r.limit:.0f}s" if r.limit else ""
        lines.append(f"[{mark}] {r.cid:>2}. {r.title:<{width}} "
                     f"({r.seconds:.1f}s{lim})")
        lines.append(f"        {r.detail}")
    npass = sum(r.status == "pass" for r in results)
    nfail = sum(r.status == "fail" for r in results)
    nskip = sum(r.status == "skip" for r in results)
    lines.append(f"summary: {npass} pass, {nfail} fail, {nskip} skip")
    return "\n".join(lines)
