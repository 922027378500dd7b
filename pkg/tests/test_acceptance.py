"""Acceptance criteria 1-7, each at its stated size and tolerance (zero discrepancies)."""

import itertools
import random

from cliffblend.blendcore import (
    FinitePartition,
    all_partitions,
    blend_from_seed,
    enumerate_blends,
    is_blend,
    random_partition,
    seed_from_blend,
    seeds_equivalent,
    verify_subset_property,
)
from cliffblend.cliffordlike import (
    ParallelismDescriptor,
    build_parallelism,
    class_line,
    descriptors_equal,
    ds_check,
    ds_property_scan,
    is_triangle,
    triviality_scan,
)
from cliffblend.doublespace import (
    LEFT,
    RIGHT,
    Side,
    common_lines,
    conjugation_certificate,
    is_line_stabilized,
    is_parallel,
    lr_equivalent,
    parallel_multiplier_oracle,
    subfield_square,
    transversal,
    two_sided_multipliers,
)
from cliffblend.exactnum import brute_force_isotropy, is_division, same_square_class
from cliffblend.projgeom import (
    Point,
    incident,
    join,
    left_multiply,
    line_from_span,
    meet,
    polar_line,
    random_line,
    random_line_through_one,
    random_quaternion,
    right_multiply,
)
from cliffblend.quat import HAMILTON, AlgebraSpec
from oracles import equivalent_pair, sympy_rank

H = HAMILTON
one, i, j, k = H.basis()


def report(name, failures, checked):
    print(f"\n[{name}] checked={checked} failures={len(failures)}")
    for f in failures[:5]:
        print("   ", f)
    assert not failures, failures[:5]


def test_criterion_1_blend_completeness():
    parts = list(all_partitions(5))
    assert len(parts) == 52
    seeds = [frozenset(s) for r in range(6) for s in itertools.combinations(range(5), r)]
    failures, checked = [], 0
    for p1, p2 in itertools.product(parts, repeat=2):
        checked += 1
        brute = {p3 for p3 in parts if is_blend(p3, p1, p2)}
        if enumerate_blends(p1, p2) != brute:
            failures.append(("enumerate", p1, p2))
        for p3 in brute:
            if blend_from_seed(seed_from_blend(p3, p1, p2), p1, p2) != p3:
                failures.append(("round-trip", p1, p2, p3))
        generated = [blend_from_seed(s, p1, p2) for s in seeds]
        for a, b in itertools.combinations(range(len(seeds)), 2):
            if seeds_equivalent(seeds[a], seeds[b], p1, p2) != (generated[a] == generated[b]):
                failures.append(("seeds", p1, p2, seeds[a], seeds[b]))
    assert checked == 2704
    report("criterion 1", failures, checked)


def _pairwise_triple(rng):
    """Random triple; most draws build P3 from (pieces of) P1- and P2-blocks."""
    n = rng.randint(2, 8)
    # distinct P1 and P2 with at least two labels each
    k = rng.randint(2, n)
    while True:
        p1, p2 = (FinitePartition.from_labels([rng.randrange(k) for _ in range(n)]) for _ in range(2))
        if p1 != p2:
            break
    if rng.random() < 0.3:
        return p1, p2, random_partition(n, rng)
    labels, nxt, flip = [None] * n, 0, rng.randrange(2)
    for x in rng.sample(range(n), n):
        if labels[x] is None:
            block = (p1, p2)[(nxt + flip) % 2].block_of(x)
            keep = 1.0 if rng.random() < 0.6 else 0.5
            for y in block:
                if labels[y] is None and (y == x or rng.random() < keep):
                    labels[y] = nxt
            nxt += 1
    return p1, p2, FinitePartition.from_labels(labels)


def test_criterion_2_subset_property():
    rng = random.Random(2026)
    failures, satisfied, drawn, nontrivial = [], 0, 0, 0
    while satisfied < 1000:
        drawn += 1
        p1, p2, p3 = _pairwise_triple(rng)
        verdict = verify_subset_property(p1, p2, p3)
        if not verdict.hypothesis_holds:
            continue
        satisfied += 1
        nontrivial += not (p3.refines(p1) or p3.refines(p2))
        if not verdict.conclusion_holds:
            failures.append((p1, p2, p3, verdict.violations))
    print(f"\n[criterion 2] drawn={drawn} mixed-side P3={nontrivial}")
    # the two-point remark: hypothesis holds, yet P3 is not a blend
    one_block = FinitePartition(2, ((0, 1),))
    discrete = FinitePartition.discrete(2)
    v = verify_subset_property(one_block, one_block, discrete)
    if not (v.hypothesis_holds and v.conclusion_holds and not is_blend(discrete, one_block, one_block)):
        failures.append(("two-point remark", v))
    report("criterion 2", failures, satisfied)


def _six_way(m1, m2):
    v = same_square_class(subfield_square(m1), subfield_square(m2))
    cert = conjugation_certificate(transversal(m1, LEFT), transversal(m2, RIGHT))
    vi = cert is not None and cert.verify()
    common = common_lines(m1, m2)
    iii = bool(common)
    mult = two_sided_multipliers(m1, m2)
    ii = mult is not None and left_multiply(mult.e1, m1) == right_multiply(m2, mult.e2)
    i_ = bool(lr_equivalent(m1, m2))
    problems = []
    if len({v, vi, iii, ii, i_}) != 1:
        problems.append(("disagree", dict(v=v, vi=vi, iii=iii, ii=ii, i=i_)))
    if iii:
        m = next(iter(common))
        if common != {m, polar_line(m)} or len(common) != 2:
            problems.append(("iv shape", common))
        for x in common:
            # membership checked with the independent multiplier oracle
            c = parallel_multiplier_oracle(m1, x, LEFT)
            d = parallel_multiplier_oracle(m2, x, RIGHT)
            if c is None or d is None or left_multiply(c, m1) != x or right_multiply(m2, d) != x:
                problems.append(("iv membership", x))
    return v, problems


def test_criterion_3_equivalence_six_way():
    failures, checked = [], 0
    for algebra in (AlgebraSpec(-1, -1), AlgebraSpec(-1, -3)):
        rng = random.Random(f"criterion3:{algebra}")
        equivalent = 0
        for t in range(200):
            if t % 2:
                m1, m2 = equivalent_pair(algebra, rng)
            else:
                m1, m2 = random_line(algebra, rng), random_line(algebra, rng)
            verdict, problems = _six_way(m1, m2)
            equivalent += verdict
            failures += [(str(algebra), t, p) for p in problems]
            checked += 1
        print(f"\n[criterion 3] {algebra}: equivalent pairs {equivalent}/200")
        assert 100 <= equivalent < 200
    report("criterion 3", failures, checked)


def test_criterion_4_self_common_lines_and_stabilisers():
    rng = random.Random(404)
    failures = []
    for _ in range(100):
        n = random_line(H, rng)
        perp = polar_line(n)
        if common_lines(n, n) != {n, perp} or n == perp:
            failures.append(("common", n))
    members = 0
    for t in range(100):
        line = random_line_through_one(H, rng)
        perp = polar_line(line)
        kind = t % 3
        if kind == 0:
            u = line.rows[0] * rng.randint(-5, 5) + line.rows[1] * rng.randint(1, 5)
        elif kind == 1:
            u = perp.rows[0] * rng.randint(-5, 5) + perp.rows[1] * rng.randint(1, 5)
        else:
            u = random_quaternion(H, rng)
        member = line.contains(u) or perp.contains(u)
        members += member
        if is_line_stabilized(line, u) != member:
            failures.append(("stabiliser", line, u))
    print(f"\n[criterion 4] stabiliser members {members}/100")
    report("criterion 4", failures, 200)


def test_criterion_5_double_space_axiom():
    left, right = ParallelismDescriptor.left(), ParallelismDescriptor.right()
    failures = []
    summary = ds_property_scan(left, right, 100, 42)
    if summary.holds != 100 or summary.counterexample is not None:
        failures.append(("left/right scan", summary.holds))
    hand = ds_check(Point(one), Point(i), Point(j), left, right)
    if not (hand.holds and hand.common == Point(k)
            and hand.m1 == line_from_span(j, k) and hand.m2 == line_from_span(i, k)):
        failures.append(("hand instance", hand))
    blend = ParallelismDescriptor.blend({-1})
    scan = ds_property_scan(blend, blend, 500, 42)
    cex = scan.counterexample
    if cex is None:
        failures.append(("no counterexample within 500 trials",))
    else:
        p0, p1, p2 = cex.triangle
        ok = (
            is_triangle(p0, p1, p2)
            and cex.m1 == class_line(blend, join(p0, p1), p2)
            and cex.m2 == class_line(blend, join(p0, p2), p1)
            and incident(p2, cex.m1) and incident(p1, cex.m2)
            and sympy_rank([q.coords for q in cex.m1.rows + cex.m2.rows]) == 4
            and meet(cex.m1, cex.m2) is None
        )
        if not ok:
            failures.append(("counterexample does not re-verify", cex))
        print(f"\n[criterion 5] blend counterexample at trial {scan.counterexample_trial}: "
              f"{' '.join(map(str, cex.triangle))}")
    report("criterion 5", failures, 601)


def test_criterion_6_many_clifford_like_parallelisms():
    failures = []
    found = triviality_scan(3)
    if not {-1, -2, -3, -5, -6} <= found:
        failures.append(("scan", sorted(found)))
    p1 = build_parallelism([line_from_span(one, i)])
    p2 = build_parallelism([line_from_span(one, i + j)])
    if p1.chooser != {-1} or p2.chooser != {-2}:
        failures.append(("build", p1, p2))
    cmp = descriptors_equal(p1, p2)
    w = cmp.witness
    if cmp.equal or w is None:
        failures.append(("compare", cmp))
    else:
        if not (incident(w.point, w.line1) and incident(w.point, w.line2) and w.line1 != w.line2):
            failures.append(("witness", w))
        if w.line1 != class_line(p1, w.line, w.point) or w.line2 != class_line(p2, w.line, w.point):
            failures.append(("witness lines", w))
        print(f"\n[criterion 6] invariants {sorted(found, key=abs)}; witness M={w.line} p={w.point}")
    report("criterion 6", failures, 3)


def test_criterion_7_oracle_cross_checks():
    rng = random.Random(77)
    failures = []
    for side in Side:
        parallel = 0
        for t in range(200):
            m = random_line(H, rng)
            if t % 2:
                c = random_quaternion(H, rng)
                n = left_multiply(c, m) if side is LEFT else right_multiply(m, c)
            else:
                n = random_line(H, rng)
            oracle = parallel_multiplier_oracle(m, n, side)
            verdict = is_parallel(m, n, side)
            parallel += verdict
            if verdict != (oracle is not None):
                failures.append(("parallel", side, m, n))
        assert parallel >= 100
    pairs = 0
    for a, b in itertools.product([x for x in range(-10, 11) if x], repeat=2):
        pairs += 1
        witness = brute_force_isotropy(a, b, 64)
        if is_division(a, b) != (witness is None):
            failures.append(("division", a, b, witness))
    assert pairs == 400
    report("criterion 7", failures, 400 + pairs)
