import random

import pytest

from positroids import lediag, perm, shapes
from conftest import skew_pairs


def test_is_le_diagram():
    assert lediag.is_le_diagram(lediag.parse("+ +\n+ +"))
    assert lediag.is_le_diagram(lediag.parse("0 0\n0 0"))
    assert not lediag.is_le_diagram(lediag.parse("+ +\n+ 0"))
    # the figure pair: the skew filling fails, its Le-ification passes
    O = lediag.parse("+ + + 0\n+ 0 0 0\n0 0 0\n0")
    M = lediag.parse("0 0 + 0\n+ + + 0\n0 0 0\n0")
    assert not lediag.is_le_diagram(O)
    assert lediag.is_le_diagram(M)


def test_reading_word_extremes():
    shape = (3, 2)
    all_plus = lediag.OplusDiagram(shape, frozenset(shapes.boxes(shape)))
    assert lediag.reading_word(all_plus, 2, 5) == perm.identity(5)
    all_zero = lediag.OplusDiagram(shape, frozenset())
    assert lediag.reading_word(all_zero, 2, 5) == perm.grassmannian_from_image(
        shapes.vert_ne(shape, 2, 5), 2, 5
    )


def test_reading_word_order_independent():
    rng = random.Random(3)
    shape = (4, 3, 1)
    for _ in range(12):
        boxes = list(shapes.boxes(shape))
        plus = frozenset(b for b in boxes if rng.random() < 0.5)
        O = lediag.OplusDiagram(shape, plus)
        base = lediag.reading_word(O, 3, 8)
        for order in lediag.sample_reading_orders(shape, rng, 5):
            assert lediag.reading_word(O, 3, 8, order) == base


def test_le_moves_figure_cases():
    # the two smallest moves
    O = lediag.parse("0 +\n+ 0")
    (site,) = lediag.le_moves_applicable(O)
    assert lediag.apply_le_move(O, site) == lediag.parse("+ +\n+ +")
    O = lediag.parse("+ +\n+ 0")
    (site,) = lediag.le_moves_applicable(O)
    assert lediag.apply_le_move(O, site) == lediag.parse("0 +\n+ +")


def test_le_move_preserves_reading_word():
    rng = random.Random(5)
    shape = (4, 4, 2)
    for _ in range(20):
        boxes = list(shapes.boxes(shape))
        O = lediag.OplusDiagram(shape, frozenset(b for b in boxes if rng.random() < 0.5))
        r = lediag.reading_word(O, 3, 7)
        for site in lediag.le_moves_applicable(O):
            assert lediag.reading_word(lediag.apply_le_move(O, site), 3, 7) == r


def test_leify_idempotent_and_fixed_on_le():
    M = lediag.parse("0 0 + 0\n+ + + 0\n0 0 0\n0")
    assert lediag.leify(M) == M


def test_leify_golden():
    x = (1, 2, 4, 7, 3, 5, 6, 8)
    v = (4, 3, 8, 2, 7, 6, 1, 5)
    O = lediag.skew_oplus(4, 8, x, v)
    assert O == lediag.parse("+ + + 0\n+ 0 0 0\n0 0 0\n0")
    assert lediag.leify(O) == lediag.parse("0 0 + 0\n+ + + 0\n0 0 0\n0")


def test_leify_confluence_random():
    rng = random.Random(7)
    shape = (4, 3, 3, 1)
    for _ in range(50):
        boxes = list(shapes.boxes(shape))
        O = lediag.OplusDiagram(shape, frozenset(b for b in boxes if rng.random() < 0.5))
        M = lediag.leify(O)
        for trial in range(10):
            assert lediag.leify(O, rng=random.Random(trial)) == M


def test_skew_oplus_trivial():
    k, n = 2, 5
    v = perm.parabolic_longest(k, n)
    O = lediag.skew_oplus(k, n, perm.identity(n), v)
    assert not O.plus
    assert O.shape == shapes.from_vert_sw(perm.inverse(v)[:k], k, n)


def test_le_to_positroid_all_plus_is_schubert():
    # all-+ of shape lam: reading word e, so the datum has w = w0
    lam = (3, 2)
    k, n = 2, 5
    M = lediag.OplusDiagram(lam, frozenset(shapes.boxes(lam)))
    v, w = lediag.le_to_positroid(M, k, n)
    assert w == perm.longest_element(n)
    assert perm.is_max_rep(v, k)
    assert frozenset(perm.inverse(v)[:k]) == shapes.vert_sw(lam, k, n)


def test_le_to_positroid_opposite_schubert():
    # full rectangle, all boxes above the path of u^{-1}([k]) zero
    k, n = 2, 5
    rect = (3, 3)
    u = perm.inverse((2, 4, 1, 3, 5))  # a W^K_min element
    lam_u = shapes.from_vert_sw(perm.inverse(u)[:k], k, n)
    plus = frozenset(set(shapes.boxes(rect)) - set(shapes.boxes(lam_u)))
    M = lediag.OplusDiagram(rect, plus)
    assert lediag.is_le_diagram(M)
    v, w = lediag.le_to_positroid(M, k, n)
    dec = perm.positroid_decoration(v, w, k)
    expect = perm.positroid_decoration(
        perm.parabolic_longest(k, n), perm.multiply(perm.parabolic_longest(k, n), u), k
    )
    assert dec == expect


def test_skew_roundtrip_exhaustive_small():
    for n in range(2, 7):
        for k, v, x in skew_pairs(n):
            M = lediag.leify(lediag.skew_oplus(k, n, x, v))
            dec = lediag.le_decoration(M, k, n)
            assert dec == perm.positroid_decoration(v, perm.multiply(x, v), k)


def test_not_le_rejected():
    with pytest.raises(ValueError):
        lediag.le_to_positroid(lediag.parse("+ +\n+ 0"), 2, 4)


def test_json_roundtrip():
    O = lediag.parse("+ 0\n0")
    assert lediag.from_json(lediag.to_json(O)) == O
