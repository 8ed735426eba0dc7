import random

import pytest

from gsplines import (
    Automorphism,
    BudgetExceeded,
    EdgeLabeledGraph,
    Ideal,
    MoreThanTwoSides,
    PastingDecomposition,
    NotACutVertex,
    PastingEquationFails,
    Ring,
    Verdict,
    brute_force_udp,
    build_pasted_spline,
    check_pasting_equation,
    cut_decompositions,
    find_cut_decomposition,
    ideal_subset,
    ideal_sum,
    paths_intersection_ideal,
    verify_non_udp_witness,
)
from gsplines.automorphism import apply_automorphism, image_ideal
from gsplines.ideals import PrimeReduction
from gsplines.udp import compare_differences, enumerate_splines

from conftest import Z, ZX, load, random_connected, to_graph
from oracles import difference_sets, splines_mod


def test_cut_decompositions():
    dec = find_cut_decomposition(load("bowtie.json"), "z")
    assert {dec.side1, dec.side2} == {("u", "a", "z"), ("z", "b", "w")}
    dec = find_cut_decomposition(load("zx_counterexample.json"), "z")
    assert {dec.side1, dec.side2} == {("u", "a", "b", "z"), ("z", "c", "d", "w")}
    with pytest.raises(NotACutVertex):
        find_cut_decomposition(load("cycle11.json"), "a2")
    star = EdgeLabeledGraph(Z, ["c", "x", "y", "t"], [("c", "x", 1), ("c", "y", 1), ("c", "t", 1)])
    with pytest.raises(MoreThanTwoSides):
        find_cut_decomposition(star, "c")
    assert [d.cut for d in cut_decompositions(load("path10.json"))] == ["u", "v1", "v2", "v3", "v4", "v5", "w", "q1"]


def test_bowtie_holds():
    G = load("bowtie.json")
    check = check_pasting_equation(G, find_cut_decomposition(G, "z"), "u", "w")
    assert check.verdict == "holds"
    assert check.lhs == Ideal(Z, [1])
    assert (check.rhs_u_side, check.rhs_w_side) == (Ideal(Z, [2]), Ideal(Z, [3]))
    rho = build_pasted_spline(G, find_cut_decomposition(G, "z"), "u", "w", 1)
    assert rho.check().valid and rho.difference("u", "w") == Z(1)


def test_pasted_example_and_zero_target():
    G = load("pasted.json")
    dec = find_cut_decomposition(G, "z")
    rho = build_pasted_spline(G, dec, "u", "w", 38)
    assert rho.check().valid and rho.difference("u", "w") == Z(38)
    rho = build_pasted_spline(G, dec, "u", "w", 0)
    assert rho.check().valid and rho.difference("u", "w") == Z(0)
    # the cut vertex itself may be one end of the pair
    rho = build_pasted_spline(G, dec, "z", "w", 20)
    assert rho.check().valid and rho.difference("z", "w") == Z(20)


def test_tree_pairs_hold():
    G = load("tree.json")
    for dec in cut_decompositions(G):
        for a in dec.side1:
            for b in dec.side2:
                if dec.cut not in (a, b):
                    assert check_pasting_equation(G, dec, a, b).verdict == "holds"


def test_polynomial_counterexample_fails():
    G = load("zx_counterexample.json")
    dec = find_cut_decomposition(G, "z")
    check = check_pasting_equation(G, dec, "u", "w")
    assert check.verdict == "fails"
    assert check.witness == ZX("x+3")
    assert isinstance(check.certificates[0].certificate, PrimeReduction)
    assert check.certificates[0].recheck()
    with pytest.raises(PastingEquationFails):
        build_pasted_spline(G, dec, "u", "w", ZX("x+3"))


def test_witness_outcomes():
    G = load("zx_counterexample.json")
    report = verify_non_udp_witness(G, "u", "w", ZX("x+3"))
    assert report.outcome == "confirmed"
    assert [m.verdict for _, m in report.path_checks] == [Verdict.YES] * 4
    assert all(m.recheck() for _, m in report.path_checks)
    assert report.rhs_check.verdict is Verdict.NO and report.rhs_check.certificate.p == 2
    assert verify_non_udp_witness(G, "u", "w", ZX(6)).outcome == "unconfirmed"
    assert verify_non_udp_witness(G, "u", "w", ZX(0)).outcome == "rejected"
    assert verify_non_udp_witness(G, "u", "w", ZX("x")).outcome == "rejected"


def test_witness_stable_under_mirror():
    G, H = load("zx_counterexample.json"), load("zx_mirror.json")
    phi = Automorphism(-1, 0)
    image = apply_automorphism(phi, ZX("x+3"))
    assert image == ZX("-x+3")
    before = verify_non_udp_witness(G, "u", "w", ZX("x+3"))
    after = verify_non_udp_witness(H, "U", "W", image)
    assert before.outcome == after.outcome == "confirmed"
    assert [m.verdict for _, m in after.path_checks] == [Verdict.YES] * 4
    assert after.rhs == image_ideal(phi, before.rhs)


def test_enumeration_matches_oracle():
    rng = random.Random(7)
    for _ in range(20):
        m = rng.randint(2, 7)
        vertices, edges = random_connected(rng, rng.randint(2, 5), list(range(m)))
        G = to_graph(Ring.mod(m), vertices, edges)
        rows = {tuple(r) for r in enumerate_splines(G).tolist()}
        assert rows == set(splines_mod(vertices, edges, m))


def test_brute_force_reports():
    R = Ring.mod(6)
    cyc = EdgeLabeledGraph(R, ["a", "b", "c", "d"], [("a", "b", 2), ("b", "c", 3), ("c", "d", 4), ("d", "a", 0)])
    assert brute_force_udp(cyc).verdict == "holds"
    one = EdgeLabeledGraph(Ring.mod(12), ["a", "b"], [("a", "b", 8)])
    (pair,) = brute_force_udp(one).pairs
    assert pair.achievable == (0, 4, 8)
    with pytest.raises(BudgetExceeded):
        brute_force_udp(cyc, budget=100)


def test_achieved_sets_match_oracle_on_pasted_triangles():
    R = Ring.mod(4)
    G = EdgeLabeledGraph(R, ["u", "a", "z", "b", "w"], [
        ("u", "a", 2), ("a", "z", 2), ("u", "z", 0), ("z", "b", 1), ("b", "w", 2), ("z", "w", 2)])
    expected = difference_sets(list(G.vertices), {(a, b): I.generator.payload for a, b, I in G.edges()}, 4)
    for p in brute_force_udp(G).pairs:
        assert set(p.achievable) == expected[G.position(p.u), G.position(p.w)]


def test_missing_difference_becomes_the_witness():
    R = Ring.mod(12)
    report = compare_differences("u", "w", Ideal(R, [4]), {0, 8})
    assert report.verdict == "fails" and report.witness == 4
    assert report.expected == (0, 4, 8)
    assert compare_differences("u", "w", Ideal(R, [0]), {0}).verdict == "holds"


def test_parallel_enumeration_is_deterministic():
    R = Ring.mod(6)
    G = to_graph(R, *random_connected(random.Random(3), 5, list(range(6))))
    assert brute_force_udp(G, jobs=1) == brute_force_udp(G, jobs=3)


@pytest.mark.parametrize("seed", range(30))
def test_rhs_always_inside_lhs_and_triangle_containment(seed):
    rng = random.Random(seed)
    labels = list(range(1, 13))
    v1, e1 = random_connected(rng, rng.randint(2, 4), labels)
    v2, e2 = random_connected(rng, rng.randint(2, 4), labels)
    # paste the two graphs at v1[0] ~ v2[0]
    v2 = ["z" if v == v2[0] else v + "'" for v in v2]
    ren = {old: new for old, new in zip([f"v{i}" for i in range(len(v2))], v2)}
    e2 = {(ren[a], ren[b]): d for (a, b), d in e2.items()}
    v1 = ["z" if v == "v0" else v for v in v1]
    e1 = {(("z" if a == "v0" else a), ("z" if b == "v0" else b)): d for (a, b), d in e1.items()}
    G = to_graph(Z, v1 + v2[1:], {**e1, **e2})
    # z may also be a cut vertex inside one side, so group the sides by hand
    dec = PastingDecomposition("z", tuple(v1), tuple(v2))
    for a in v1[1:]:
        for b in v2[1:]:
            check = check_pasting_equation(G, dec, a, b)
            assert ideal_subset(check.rhs, check.lhs) is Verdict.YES
    verts = list(G.vertices)
    for _ in range(10):
        u, v, w = rng.sample(verts, 3)
        small = paths_intersection_ideal(G, v, w)
        big = ideal_sum(paths_intersection_ideal(G, u, v), paths_intersection_ideal(G, u, w))
        assert ideal_subset(small, big) is Verdict.YES


@pytest.mark.parametrize("seed", range(25))
def test_two_triangles_over_z12_agree(seed):
    rng = random.Random(40 + seed)
    R = Ring.mod(12)
    d = [rng.randrange(12) for _ in range(6)]
    G = EdgeLabeledGraph(R, ["u", "a", "z", "b", "w"], [
        ("u", "a", d[0]), ("a", "z", d[1]), ("u", "z", d[2]), ("z", "b", d[3]), ("b", "w", d[4]), ("z", "w", d[5])])
    dec = find_cut_decomposition(G, "z")
    report = {(p.u, p.w): p.verdict for p in brute_force_udp(G).pairs}
    for a in ("u", "a"):
        for b in ("b", "w"):
            assert report[a, b] == check_pasting_equation(G, dec, a, b).verdict
