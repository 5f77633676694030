"""Shared fixtures: hand-built golden graphs with known trips, labels and
quivers, plus samplers for length-additive pairs."""

from __future__ import annotations

import random

import pytest

from positroids import perm, plabic, shapes


def golden_gr25_graph() -> plabic.PlabicGraph:
    """Disk graph with trip permutation (3, 4, 5, 1, 2): a square of
    alternating colors joined to a lower quadrilateral, five boundary
    pendants."""
    W, B = plabic.WHITE, plabic.BLACK
    boundary = (-1, -2, -3, -4, -5)
    labels = {-p: p for p in range(1, 6)}
    colors = {1: W, 2: B, 3: W, 4: B, 5: W, 6: B}
    edges = {
        1: (-1, 1), 2: (-2, 2), 3: (-3, 3), 4: (-4, 6), 5: (-5, 5),
        6: (1, 2), 7: (2, 3), 8: (3, 4), 9: (1, 4), 10: (4, 5), 11: (5, 6), 12: (3, 6),
    }
    rot = {
        1: (6, 1, 9),
        2: (2, 6, 7),
        3: (7, 8, 12, 3),
        4: (8, 9, 10),
        5: (10, 5, 11),
        6: (12, 11, 4),
    }
    G = plabic.PlabicGraph(boundary, labels, colors, edges, rot)
    G.validate()
    return G


def golden_gr37_graph() -> plabic.PlabicGraph:
    """Disk graph with trip permutation (2, 4, 6, 7, 1, 3, 5) and ten faces."""
    W, B = plabic.WHITE, plabic.BLACK
    boundary = tuple(-p for p in range(1, 8))
    labels = {-p: p for p in range(1, 8)}
    colors = {1: W, 2: B, 3: B, 4: B, 5: W, 6: W, 7: W, 8: B}
    edges = {
        1: (-1, 1), 2: (-2, 1), 3: (-3, 4), 4: (-4, 6), 5: (-5, 8),
        6: (-6, 7), 7: (-7, 2),
        8: (1, 2), 9: (1, 3), 10: (1, 4), 11: (2, 5), 12: (2, 7),
        13: (3, 5), 14: (3, 6), 15: (4, 6), 16: (5, 8), 17: (7, 8),
    }
    rot = {
        1: (2, 1, 8, 9, 10),
        2: (8, 7, 12, 11),
        3: (9, 13, 14),
        4: (3, 10, 15),
        5: (13, 11, 16),
        6: (15, 14, 4),
        7: (12, 6, 17),
        8: (16, 17, 5),
    }
    G = plabic.PlabicGraph(boundary, labels, colors, edges, rot)
    G.validate()
    return G


@pytest.fixture
def gr25_graph():
    return golden_gr25_graph()


@pytest.fixture
def gr37_graph():
    return golden_gr37_graph()


def skew_pairs(n: int):
    """All (k, v, x) with v in W^K_max, x in ^K W and x*v length-additive,
    via nested partition pairs."""
    for k in range(1, n):
        for lam_v in shapes.partitions_in_box(k, n - k):
            v = perm.max_rep_from_image(shapes.vert_sw(lam_v, k, n), k, n)
            for lam_x in shapes.subpartitions(lam_v):
                x = perm.grassmannian_from_image(shapes.vert_ne(lam_x, k, n), k, n)
                yield k, v, x


def random_skew_pair(n: int, rng: random.Random, min_boxes: int = 0):
    """Random (k, v, x) with x*v length-additive; resamples until the shape of
    x has at least ``min_boxes`` boxes (when attainable)."""
    for _ in range(200):
        k = rng.randint(1, n - 1)
        cells = sorted(rng.sample(range(1, n + 1), k))
        lam_v = shapes.from_vert_sw(cells, k, n)
        subs = [s for s in shapes.subpartitions(lam_v) if shapes.size(s) >= min_boxes]
        if not subs:
            continue
        lam_x = subs[rng.randrange(len(subs))]
        v = perm.max_rep_from_image(shapes.vert_sw(lam_v, k, n), k, n)
        x = perm.grassmannian_from_image(shapes.vert_ne(lam_x, k, n), k, n)
        return k, v, x
    raise RuntimeError(f"no shape with {min_boxes} boxes fits n={n}")
