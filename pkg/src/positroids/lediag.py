"""Oplus-diagrams (0/+ fillings of Young diagrams), Le-moves, Le-ification,
reading words, and the two-path diagrams of skew Schubert varieties."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from positroids import perm as permmod
from positroids import shapes
from positroids.perm import DecoratedPermutation, Permutation
from positroids.shapes import Box, Partition


@dataclass(frozen=True)
class OplusDiagram:
    shape: Partition
    plus: frozenset[Box]

    def __post_init__(self) -> None:
        for b in self.plus:
            if not shapes.contains_box(self.shape, b):
                raise ValueError(f"plus at {b} outside shape {self.shape}")

    def is_plus(self, b: Box) -> bool:
        return b in self.plus

    def toggle(self, b: Box) -> "OplusDiagram":
        plus = self.plus ^ {b}
        return OplusDiagram(self.shape, plus)

    def render(self) -> str:
        rows = []
        for r, part in enumerate(self.shape, start=1):
            rows.append(" ".join("+" if (r, c) in self.plus else "0" for c in range(1, part + 1)))
        return "\n".join(rows)


def parse(text: str) -> OplusDiagram:
    """Inverse of :meth:`OplusDiagram.render`.

    >>> parse("+ 0\\n0").plus
    frozenset({(1, 1)})
    """
    parts = []
    plus = set()
    for r, line in enumerate([l for l in text.splitlines() if l.strip()], start=1):
        cells = line.split()
        parts.append(len(cells))
        for c, cell in enumerate(cells, start=1):
            if cell == "+":
                plus.add((r, c))
            elif cell != "0":
                raise ValueError(f"unexpected cell {cell!r}")
    return OplusDiagram(shapes.normalize(parts), frozenset(plus))


def is_le_diagram(O: OplusDiagram) -> bool:
    """No 0 with a + above it in its column and a + to its left in its row.

    >>> is_le_diagram(parse("+ +\\n+ 0"))
    False
    """
    for r, part in enumerate(O.shape, start=1):
        for c in range(1, part + 1):
            if (r, c) in O.plus:
                continue
            above = any((r2, c) in O.plus for r2 in range(1, r))
            left = any((r, c2) in O.plus for c2 in range(1, c))
            if above and left:
                return False
    return True


# ---------------------------------------------------------------------------
# Reading words
# ---------------------------------------------------------------------------

def reading_word(
    O: OplusDiagram, k: int, n: int, order: Iterable[Box] | None = None
) -> Permutation:
    """Product of the simple reflections in the 0-boxes (box (r, c) carries
    ``s_{k+c-r}``), taken along a standard reading order of the shape; the
    + boxes are skipped.  The result does not depend on the reading order.
    """
    if not shapes.fits(O.shape, k, n):
        raise ValueError(f"shape {O.shape} does not fit {k} x {n - k}")
    boxes = tuple(order) if order is not None else tuple(shapes.boxes(O.shape))
    letters = [k + c - r for (r, c) in boxes if (r, c) not in O.plus]
    return permmod.apply_word(letters, n)


def sample_reading_orders(shape: Partition, rng: random.Random, count: int) -> Iterator[tuple[Box, ...]]:
    """Random standard reading orders: each box precedes the boxes below it
    and to its right."""
    all_boxes = list(shapes.boxes(shape))
    for _ in range(count):
        placed: list[Box] = []
        remaining = set(all_boxes)
        while remaining:
            ready = [
                (r, c)
                for (r, c) in remaining
                if (r - 1, c) not in remaining and (r, c - 1) not in remaining
            ]
            placed.append(ready[rng.randrange(len(ready))])
            remaining.remove(placed[-1])
        yield tuple(placed)


# ---------------------------------------------------------------------------
# Le-moves and Le-ification
# ---------------------------------------------------------------------------

MoveSite = tuple[Box, Box]  # (northwest corner a, southeast corner b)


def le_moves_applicable(O: OplusDiagram) -> tuple[MoveSite, ...]:
    """Rectangles with + in the northeast and southwest corners, 0 everywhere
    else except possibly the northwest corner, and 0 in the southeast corner."""
    sites = []
    rows = len(O.shape)
    for r1 in range(1, rows + 1):
        for r2 in range(r1 + 1, rows + 1):
            for c1 in range(1, O.shape[r2 - 1] + 1):
                for c2 in range(c1 + 1, O.shape[r2 - 1] + 1):
                    if (r2, c2) in O.plus:
                        continue
                    if (r1, c2) not in O.plus or (r2, c1) not in O.plus:
                        continue
                    interior_ok = all(
                        (r, c) in ((r1, c1), (r1, c2), (r2, c1), (r2, c2))
                        or (r, c) not in O.plus
                        for r in range(r1, r2 + 1)
                        for c in range(c1, c2 + 1)
                    )
                    if interior_ok:
                        sites.append(((r1, c1), (r2, c2)))
    return tuple(sites)


def apply_le_move(O: OplusDiagram, site: MoveSite) -> OplusDiagram:
    """Set the southeast corner to + and toggle the northwest corner."""
    if site not in le_moves_applicable(O):
        raise ValueError(f"move {site} does not apply")
    a, b = site
    return OplusDiagram(O.shape, (O.plus | {b}) ^ {a})


def leify(O: OplusDiagram, rng: random.Random | None = None) -> OplusDiagram:
    """Apply Le-moves until the Le-property holds.  The result is independent
    of the move order; by default the first applicable site in a fixed scan
    order is used, a seeded ``rng`` picks sites at random instead.

    Termination: a move turns a strictly-southeast 0 into a + while toggling a
    box earlier in the columnar order, so the 2-adic weight of the + set over
    the columnar order strictly increases and is bounded.
    """
    current = O
    while not is_le_diagram(current):
        sites = le_moves_applicable(current)
        if not sites:
            raise RuntimeError("not a Le-diagram but no move applies")
        site = sites[0] if rng is None else sites[rng.randrange(len(sites))]
        current = apply_le_move(current, site)
    return current


# ---------------------------------------------------------------------------
# Skew Schubert diagrams
# ---------------------------------------------------------------------------

def skew_oplus(k: int, n: int, x: Permutation, v: Permutation) -> OplusDiagram:
    """The diagram of shape ``lambda_v`` with + exactly on ``lambda_x``, for a
    length-additive pair (x in ^K W, v in W^K_max)."""
    if not permmod.is_grassmannian(x, k):
        raise ValueError(f"{x} not in ^K W")
    if not permmod.is_max_rep(v, k):
        raise ValueError(f"{v} not in W^K_max")
    if not permmod.is_length_additive(x, v):
        raise ValueError("x*v is not length-additive")
    lam_x = shapes.from_vert_ne(x[:k], k, n)
    vi = permmod.inverse(v)
    lam_v = shapes.from_vert_sw(vi[:k], k, n)
    return OplusDiagram(lam_v, frozenset(shapes.boxes(lam_x)))


def le_to_positroid(M: OplusDiagram, k: int, n: int) -> tuple[Permutation, Permutation]:
    """Positroid datum of a Le-diagram: with u the Grassmannian permutation of
    the shape and r the reading word, the diagram indexes the projection of
    the Richardson datum ``(u^{-1} w_0, r^{-1} w_0)``."""
    if not is_le_diagram(M):
        raise ValueError("not a Le-diagram")
    u = permmod.grassmannian_from_image(shapes.vert_ne(M.shape, k, n), k, n)
    r = reading_word(M, k, n)
    w0 = permmod.longest_element(n)
    return permmod.multiply(permmod.inverse(u), w0), permmod.multiply(permmod.inverse(r), w0)


def le_decoration(M: OplusDiagram, k: int, n: int) -> DecoratedPermutation:
    """Decorated trip permutation of the positroid indexed by a Le-diagram."""
    v, w = le_to_positroid(M, k, n)
    return permmod.positroid_decoration(v, w, k)


def all_fillings(shape: Partition) -> Iterator[OplusDiagram]:
    boxes = list(shapes.boxes(shape))
    for mask in range(1 << len(boxes)):
        plus = frozenset(b for i, b in enumerate(boxes) if mask >> i & 1)
        yield OplusDiagram(shape, plus)


def to_json(O: OplusDiagram) -> dict:
    return {"shape": list(O.shape), "plus": sorted(O.plus)}


def from_json(data: dict) -> OplusDiagram:
    return OplusDiagram(shapes.normalize(data["shape"]), frozenset(tuple(b) for b in data["plus"]))
