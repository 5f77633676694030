import random

import pytest

from positroids import perm, plabic, seeds, shapes
from conftest import golden_gr25_graph, random_skew_pair


def label_names(labels):
    return sorted("".join(str(i) for i in sorted(l)) for l in labels)


# ---------------------------------------------------------------------------
# faces
# ---------------------------------------------------------------------------

def test_faces_lollipop():
    G = plabic.lollipop_graph(2, 5)
    fc = plabic.faces(G)
    assert len(fc) == 1
    assert fc.faces[0].boundary


def test_faces_goldens(gr25_graph, gr37_graph):
    fc25 = plabic.faces(gr25_graph)
    assert len(fc25) == 7
    assert len(fc25.boundary_indices()) == 5
    assert len(plabic.faces(gr37_graph)) == 10


def test_faces_euler_violation_detected():
    G = golden_gr25_graph()
    # swap two entries in one rotation: the embedding data goes inconsistent
    rot = dict(G.rot)
    rot[3] = (8, 7, 12, 3)
    bad = plabic.PlabicGraph(G.boundary_order, G.labels, G.colors, G.edges, rot)
    with pytest.raises(plabic.PlabicError):
        plabic.faces(bad)


def test_bridge_graph_face_count():
    x = (3, 5, 1, 2, 4)
    G = plabic.lollipop_graph(2, 5)
    counts = [len(plabic.faces(G))]
    for i in perm.columnar_expression(x, 2):
        G = plabic.add_bridge(G, i, i + 1)
        counts.append(len(plabic.faces(G)))
    assert counts == [1, 2, 3, 4, 5, 6]


# ---------------------------------------------------------------------------
# trips
# ---------------------------------------------------------------------------

def test_trips_goldens(gr25_graph, gr37_graph):
    _, sigma = plabic.trips(gr25_graph)
    assert sigma.perm == (3, 4, 5, 1, 2)
    assert not sigma.white_fixed
    _, sigma = plabic.trips(gr37_graph)
    assert sigma.perm == (2, 4, 6, 7, 1, 3, 5)


def test_trips_lollipops():
    G = plabic.lollipop_graph(2, 5)
    _, sigma = plabic.trips(G)
    assert sigma.perm == perm.identity(5)
    assert sigma.white_fixed == frozenset({1, 2})


def test_bridge_graph_trip_permutation():
    for k, n, x in ((2, 5, (3, 5, 1, 2, 4)), (3, 7, (3, 5, 7, 1, 2, 4, 6))):
        G = plabic.bridge_graph(k, n, x)
        _, sigma = plabic.trips(G)
        assert sigma.perm == perm.inverse(x)
        assert all(f <= k for f in sigma.white_fixed)


def test_bridge_graph_identity_is_lollipop():
    G = plabic.bridge_graph(2, 5, perm.identity(5))
    assert len(G.edges) == 5
    assert len(plabic.faces(G)) == 1


# ---------------------------------------------------------------------------
# face labelings
# ---------------------------------------------------------------------------

def test_source_labels_gr25(gr25_graph):
    lab = plabic.face_labeling(gr25_graph, "source")
    assert label_names(lab.labels) == ["12", "15", "23", "24", "25", "34", "45"]
    # placement: the two internal faces carry 25 and 24, and the boundary
    # face across each arc (p, p+1) carries the drawn label
    internals = [lab.labels[i] for i, f in enumerate(lab.faces.faces) if not f.boundary]
    assert sorted(map(sorted, internals)) == [[2, 4], [2, 5]]
    arcs = _arc_label_map(gr25_graph, lab)
    assert arcs == {
        (1, 2): frozenset({1, 5}),
        (2, 3): frozenset({1, 2}),
        (3, 4): frozenset({2, 3}),
        (4, 5): frozenset({3, 4}),
        (5, 1): frozenset({4, 5}),
    }


def _arc_label_map(G, lab):
    out = {}
    for p in range(G.n):
        arc_dart = (("arc", p), 1)  # counterclockwise arc dart borders the interior face
        idx = lab.faces.face_of.get(arc_dart)
        a = G.labels[G.boundary_order[p]]
        b = G.labels[G.boundary_order[(p + 1) % G.n]]
        out[(a, b)] = lab.labels[idx]
    return out


def test_target_labels_gr37(gr37_graph):
    lab = plabic.face_labeling(gr37_graph, "target")
    assert label_names(lab.labels) == sorted(
        ["235", "135", "356", "357", "345", "456", "567", "167", "137", "157"]
    )
    # in a reduced graph of type pi with k antiexcedances all labels have size k
    assert {len(l) for l in lab.labels} == {3}


def test_single_white_lollipop_n1():
    G = plabic.lollipop_graph(1, 1)
    lab = plabic.face_labeling(G, "target")
    assert lab.labels == (frozenset({1}),)


def test_bridge_labels_match_necklace_by_position():
    # target labels of boundary faces = Grassmann necklace entries, J_i on the
    # face across the arc (i-1, i)
    for k, n, x in ((2, 5, (3, 5, 1, 2, 4)), (3, 7, (3, 5, 7, 1, 2, 4, 6)), (2, 6, (2, 6, 1, 3, 4, 5))):
        G = plabic.bridge_graph(k, n, x)
        lab = plabic.face_labeling(G, "target")
        _, sigma = plabic.trips(G)
        neck = perm.grassmann_necklace(sigma)
        arcs = _arc_label_map(G, lab)
        for (a, b), label in arcs.items():
            assert label == neck[b - 1], (a, b)


def test_bridge_labels_are_rectangles():
    k, n, x = 2, 5, (3, 5, 1, 2, 4)
    G = plabic.bridge_graph(k, n, x)
    lab = plabic.face_labeling(G, "target")
    lam = shapes.from_vert_ne(x[:k], k, n)
    expected = {shapes.rect_vert_ne(r, c, k, n) for (r, c) in shapes.boxes(lam)}
    expected.add(frozenset(range(1, k + 1)))
    assert set(lab.labels) == expected
    # boundary faces carry the lambda-frozen rectangles and [k]
    boundary_labels = {lab.labels[i] for i in lab.faces.boundary_indices()}
    frozen_rects = {
        shapes.rect_vert_ne(r, c, k, n)
        for (r, c) in shapes.boxes(lam)
        if shapes.is_lambda_frozen(lam, (r, c))
    }
    assert boundary_labels == frozen_rects | {frozenset(range(1, k + 1))}


def test_relabel_boundary():
    G = plabic.bridge_graph(2, 5, (3, 5, 1, 2, 4))
    assert plabic.relabel_boundary(G, perm.identity(5)) == G
    u = perm.parabolic_longest(2, 5)
    H = plabic.relabel_boundary(G, u)
    labG = plabic.face_labeling(G, "target")
    labH = plabic.face_labeling(H, "target")
    assert set(labH.labels) == {frozenset(u[i - 1] for i in l) for l in labG.labels}


def test_mirror_involution_and_labels():
    G = plabic.bridge_graph(2, 5, (3, 5, 1, 2, 4))
    assert plabic.mirror(plabic.mirror(G)) == G
    M = plabic.mirror(G)
    _, sG = plabic.trips(G)
    _, sM = plabic.trips(M)
    assert sM.perm == perm.inverse(sG.perm)
    assert set(plabic.face_labeling(M, "source").labels) == set(
        plabic.face_labeling(G, "target").labels
    )


def test_mirror_reverses_dual_quiver(gr25_graph):
    S = seeds.seed_from_graph(gr25_graph, "target")
    SM = seeds.seed_from_graph(plabic.mirror(gr25_graph), "source")
    assert seeds.seeds_equal(S, SM, up_to_arrow_reversal=True)
    assert not seeds.seeds_equal(S, SM, up_to_arrow_reversal=False)


# ---------------------------------------------------------------------------
# dual quiver
# ---------------------------------------------------------------------------

def test_dual_quiver_gr25(gr25_graph):
    S = seeds.seed_from_graph(gr25_graph, "source")
    def nm(l):
        return "".join(str(i) for i in sorted(l))
    arrows = sorted((nm(s), nm(t)) for s, t in S.quiver.arrows)
    assert arrows == sorted(
        [("25", "15"), ("25", "24"), ("45", "25"), ("12", "25"),
         ("24", "45"), ("24", "23"), ("34", "24")]
    )


def test_dual_quiver_single_face():
    G = plabic.lollipop_graph(2, 5)
    Q, fc = plabic.dual_quiver(G)
    assert len(Q.frozen) == 1
    assert not Q.arrows
    assert all(Q.frozen.values())


# ---------------------------------------------------------------------------
# moves
# ---------------------------------------------------------------------------

def test_insert_remove_degree2_inverse_pair():
    G = golden_gr25_graph()
    H = plabic.insert_degree2_pair(G, 6)
    assert len(H.colors) == len(G.colors) + 2
    _, s = plabic.trips(H)
    assert s.perm == (3, 4, 5, 1, 2)
    new_vertex = max(H.colors)
    back = plabic.remove_degree2_pair(H, new_vertex - 1)
    _, s2 = plabic.trips(back)
    assert s2.perm == (3, 4, 5, 1, 2)
    assert len(back.colors) == len(G.colors)


def test_m2_m3_preserve_trip_permutation():
    G = plabic.bridge_graph(3, 7, (3, 5, 7, 1, 2, 4, 6))
    _, before = plabic.trips(G)
    for eid in list(G.edges)[:6]:
        H = plabic.insert_degree2_pair(G, eid)
        _, after = plabic.trips(H)
        assert after == before
        assert set(plabic.face_labeling(H, "target").labels) == set(
            plabic.face_labeling(G, "target").labels
        )


def test_square_move_golden(gr25_graph):
    H = plabic.square_move(gr25_graph, {2, 4})
    _, sigma = plabic.trips(H)
    assert sigma.perm == (3, 4, 5, 1, 2)
    # the moved face label obeys the three-term exchange: 24 -> 13
    labels = set(plabic.face_labeling(H, "target").labels)
    assert frozenset({1, 3}) in labels
    assert frozenset({2, 4}) not in labels


def test_square_move_twice_restores_labels(gr25_graph):
    H = plabic.square_move(gr25_graph, {2, 4})
    H2 = plabic.square_move(H, {1, 3})
    assert set(plabic.face_labeling(H2, "target").labels) == set(
        plabic.face_labeling(gr25_graph, "target").labels
    )


def test_square_move_not_eligible(gr25_graph):
    with pytest.raises((plabic.NotSquareEligible, KeyError)):
        plabic.square_move(gr25_graph, {1, 5})  # boundary face
    with pytest.raises(KeyError):
        plabic.square_move(gr25_graph, {2, 5})  # not a target label


def test_square_move_matches_quiver_mutation(gr25_graph, gr37_graph):
    for G in (gr25_graph, gr37_graph):
        for lab in plabic.square_eligible_labels(G):
            S = seeds.seed_from_graph(G, "target")
            H = plabic.square_move(G, lab)
            SH = seeds.seed_from_graph(H, "target")
            Smut = seeds.mutate_seed(S, lab)
            new_label = next(iter(set(SH.labels) - set(S.labels)))
            relabeled = {
                v if v != lab else new_label: (
                    seeds.PluckerSymbol(new_label) if v == lab else S.labels[v]
                )
                for v in Smut.labels
            }
            Sren = seeds.LabeledSeed(
                seeds.Quiver(
                    {(new_label if v == lab else v): f for v, f in Smut.quiver.frozen.items()},
                    tuple(
                        (new_label if s == lab else s, new_label if t == lab else t)
                        for s, t in Smut.quiver.arrows
                    ),
                ),
                relabeled,
            )
            assert seeds.seeds_equal(Sren, SH)


# ---------------------------------------------------------------------------
# bridges
# ---------------------------------------------------------------------------

def test_add_bridge_validity_errors():
    G = plabic.lollipop_graph(2, 5)
    with pytest.raises(plabic.InvalidBridge):
        plabic.add_bridge(G, 3, 4)  # lift not decreasing (both black lollipops)
    with pytest.raises(plabic.InvalidBridge):
        plabic.add_bridge(G, 1, 2)  # white-white


def test_add_bridge_composes_transposition():
    rng = random.Random(0)
    for _ in range(40):
        n = rng.randint(3, 8)
        k, v, x = random_skew_pair(n, rng)
        word = perm.columnar_expression(x, k)
        G = plabic.lollipop_graph(k, n)
        lifted = perm.bounded_affine(plabic.trip_permutation_positions(G))
        for i in word:
            G = plabic.add_bridge(G, i, i + 1)
            sigma = plabic.trip_permutation_positions(G)
            new = perm.bounded_affine(sigma)
            expect = tuple(
                lifted.window[i] if p == i - 1 else
                lifted.window[i - 1] if p == i else lifted.window[p]
                for p in range(n)
            )
            assert new.window == expect
            lifted = new


def test_bridge_graphs_pass_reducedness_checks():
    rng = random.Random(1)
    for _ in range(25):
        n = rng.randint(3, 8)
        k, v, x = random_skew_pair(n, rng)
        G = plabic.bridge_graph(k, n, x)
        assert plabic.reducedness_witness_checks(G).passed


def test_goldens_pass_reducedness_checks(gr25_graph, gr37_graph):
    assert plabic.reducedness_witness_checks(gr25_graph).passed
    assert plabic.reducedness_witness_checks(gr37_graph).passed


def test_parallel_edge_reduction_detection():
    W, B = plabic.WHITE, plabic.BLACK
    # hand-built doubled edge between a trivalent black/white pair
    boundary = (-1, -2)
    labels = {-1: 1, -2: 2}
    colors = {1: W, 2: B}
    edges = {1: (-1, 1), 2: (-2, 2), 3: (1, 2), 4: (1, 2)}
    rot = {1: (1, 3, 4), 2: (2, 4, 3)}
    G = plabic.PlabicGraph(boundary, labels, colors, edges, rot)
    G.validate()
    assert plabic.parallel_edge_reduction_applicable(G) == (1, 2)
    assert not plabic.reducedness_witness_checks(G).passed
    assert plabic.parallel_edge_reduction_applicable(plabic.lollipop_graph(1, 3)) is None


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def test_json_roundtrip(gr25_graph, gr37_graph):
    for G in (gr25_graph, gr37_graph, plabic.bridge_graph(2, 5, (3, 5, 1, 2, 4))):
        H = plabic.from_json(plabic.to_json(G))
        _, s1 = plabic.trips(G)
        _, s2 = plabic.trips(H)
        assert s1 == s2
        assert set(plabic.face_labeling(H, "target").labels) == set(
            plabic.face_labeling(G, "target").labels
        )


def test_to_dot_smoke(gr25_graph):
    text = plabic.to_dot(gr25_graph, plabic.face_labeling(gr25_graph, "target"))
    assert "graph plabic" in text and "--" in text
