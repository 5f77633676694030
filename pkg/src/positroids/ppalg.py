"""Composition-factor diagram calculus for the type-A preprojective algebra.

A module is a finite set of cells ``(vertex, level)`` with ``vertex`` in
``[1, n-1]``.  A cell covers the cells at ``(vertex +- 1, level - 1)``; the
socle sits at the bottom of the staggered diagram and the top at the top.
Modules are compared up to a uniform level shift.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from positroids import perm as permmod
from positroids import shapes
from positroids.perm import Permutation

Cell = tuple[int, int]  # (vertex, level)


@dataclass(frozen=True)
class DiagramModule:
    n: int
    cells: frozenset[Cell]

    def __post_init__(self) -> None:
        for i, _ in self.cells:
            if not 1 <= i <= self.n - 1:
                raise ValueError(f"vertex {i} outside [1, {self.n - 1}]")

    def dimension(self) -> int:
        return len(self.cells)

    def dimension_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.n - 1)
        for i, _ in self.cells:
            counts[i - 1] += 1
        return tuple(counts)

    def below(self, cell: Cell) -> tuple[Cell, ...]:
        i, t = cell
        return tuple(c for c in ((i - 1, t - 1), (i + 1, t - 1)) if c in self.cells)

    def above(self, cell: Cell) -> tuple[Cell, ...]:
        i, t = cell
        return tuple(c for c in ((i - 1, t + 1), (i + 1, t + 1)) if c in self.cells)

    def top(self) -> frozenset[Cell]:
        return frozenset(c for c in self.cells if not self.above(c))

    def socle(self) -> frozenset[Cell]:
        return frozenset(c for c in self.cells if not self.below(c))

    def normalized(self) -> "DiagramModule":
        """Shift levels so the minimum is 0 (modules agree up to translation)."""
        if not self.cells:
            return self
        lo = min(t for _, t in self.cells)
        return DiagramModule(self.n, frozenset((i, t - lo) for i, t in self.cells))

    def is_connected(self) -> bool:
        if not self.cells:
            return True
        seen = {next(iter(self.cells))}
        queue = list(seen)
        while queue:
            c = queue.pop()
            for d in self.below(c) + self.above(c):
                if d not in seen:
                    seen.add(d)
                    queue.append(d)
        return len(seen) == len(self.cells)

    def render(self) -> str:
        """Staggered text diagram in the style of composition-factor pictures."""
        if not self.cells:
            return "0"
        levels = sorted({t for _, t in self.cells}, reverse=True)
        width = max(i for i, _ in self.cells)
        lines = []
        for t in levels:
            row = [" "] * (2 * width)
            for i, s in self.cells:
                if s == t:
                    row[2 * (i - 1)] = str(i)
            lines.append("".join(row).rstrip())
        return "\n".join(lines)


def module(n: int, cells: Iterable[Cell]) -> DiagramModule:
    return DiagramModule(n, frozenset(cells))


def zero_module(n: int) -> DiagramModule:
    return DiagramModule(n, frozenset())


def injective(n: int, i: int) -> DiagramModule:
    """Composition diagram of the injective Q_i: the rotated rectangle with
    socle S_i and top S_{n-i}.

    >>> injective(6, 2).dimension_vector()
    (1, 2, 2, 2, 1)
    """
    if not 1 <= i <= n - 1:
        raise ValueError(f"need 1 <= i <= n-1, got i={i}")
    cells = {
        (i + u - v, u + v)
        for u in range(0, n - i)
        for v in range(0, i)
    }
    return DiagramModule(n, frozenset(cells))


# ---------------------------------------------------------------------------
# Functors
# ---------------------------------------------------------------------------

def functor_E(M: DiagramModule, i: int) -> DiagramModule:
    """Remove every top cell at vertex i (kernel of the surjection onto the
    S_i-isotypical top)."""
    doomed = {c for c in M.top() if c[0] == i}
    return DiagramModule(M.n, M.cells - doomed)


def functor_E_dagger(M: DiagramModule, i: int) -> DiagramModule:
    """Remove every socle cell at vertex i."""
    doomed = {c for c in M.socle() if c[0] == i}
    return DiagramModule(M.n, M.cells - doomed)


def functor_E_word(M: DiagramModule, word: Sequence[int]) -> DiagramModule:
    for i in word:
        M = functor_E(M, i)
    return M


def functor_E_dagger_word(M: DiagramModule, word: Sequence[int]) -> DiagramModule:
    for i in word:
        M = functor_E_dagger(M, i)
    return M


def soc_chain(ambient: DiagramModule, word: Sequence[int]) -> DiagramModule:
    """Iterated socle construction inside ``ambient``: reading the word in
    application order, each letter p adjoins every ambient cell at vertex p
    whose lower neighbors are already present."""
    included: set[Cell] = set()
    for p in word:
        if not 1 <= p <= ambient.n - 1:
            raise ValueError(f"letter {p} outside [1, {ambient.n - 1}]")
        added = {
            c for c in ambient.cells
            if c[0] == p and c not in included and set(ambient.below(c)) <= included
        }
        included |= added
    return DiagramModule(ambient.n, frozenset(included))


# ---------------------------------------------------------------------------
# The cluster-tilting summands U_j
# ---------------------------------------------------------------------------

def word_prefix_data(v: Permutation, w_word: Sequence[int], j: int):
    """For position j of the word: the letter i_j, the prefix product w_(j),
    and v_(j) (the product of the PDS letters at positions <= j)."""
    n = len(v)
    pds = permmod.positive_distinguished_subexpression(v, w_word)
    if not 1 <= j <= len(w_word):
        raise ValueError(f"position {j} outside the word")
    i_j = w_word[j - 1]
    w_j = permmod.apply_word(w_word[:j], n)
    v_letters = [w_word[p - 1] for p in range(1, j + 1) if p in pds]
    v_j = permmod.apply_word(v_letters, n)
    return i_j, w_j, v_j, tuple(v_letters)


def tilting_summand(
    k: int, n: int, v: Permutation, w_word: Sequence[int], j: int
) -> DiagramModule:
    """The summand U_j built from the injective Q_{i_j}: first the socle chain
    along ``w_(j)^{-1}``, then socle removal along ``v_(j)^{-1}``."""
    pds = permmod.positive_distinguished_subexpression(v, w_word)
    if j in pds:
        raise ValueError(f"position {j} belongs to the subexpression for v")
    i_j, _, _, v_letters = word_prefix_data(v, w_word, j)
    V_j = soc_chain(injective(n, i_j), tuple(reversed(w_word[:j])))
    return functor_E_dagger_word(V_j, tuple(reversed(v_letters)))


def tilting_presummand(
    k: int, n: int, v: Permutation, w_word: Sequence[int], j: int
) -> DiagramModule:
    """V_j, the socle-chain stage before socle removal."""
    i_j, _, _, _ = word_prefix_data(v, w_word, j)
    return soc_chain(injective(n, i_j), tuple(reversed(w_word[:j])))


def region_module(k: int, n: int, v: Permutation, P: Iterable[int]) -> DiagramModule:
    """The composition diagram read off the region between the lattice paths
    of P and of ``v^{-1}([k])`` in the rotated rectangle: the skew shape
    ``lambda_v / lambda_P`` with box (r, c) contributing vertex
    ``(n-k) + r - c`` at level ``-(r + c)``."""
    P = frozenset(P)
    vi = permmod.inverse(tuple(v))
    lam_v = shapes.from_vert_sw(vi[:k], k, n)
    lam_P = shapes.from_vert_sw(P, k, n)
    if not shapes.contains(lam_v, lam_P):
        raise ValueError(f"{sorted(P)} does not lie between the paths")
    cells = set()
    for (r, c) in shapes.boxes(lam_v):
        if shapes.contains_box(lam_P, (r, c)):
            continue
        cells.add(((n - k) + r - c, -(r + c)))
    return DiagramModule(n, frozenset(cells)).normalized()


# ---------------------------------------------------------------------------
# Pluecker labels and the endomorphism quiver
# ---------------------------------------------------------------------------

def box_of_position(lam: shapes.Partition, j: int, offset: int) -> shapes.Box:
    """Box of lam at columnar position ``j - offset`` (positions past the
    letters of v in a standard word)."""
    boxes = list(shapes.boxes(lam))
    return boxes[j - offset - 1]


def plucker_of_module(
    k: int, n: int, v: Permutation, w_word: Sequence[int], j: int
) -> frozenset[int]:
    """Pluecker label of U_j: the projection of the generalized minor
    ``(v_(j)^{-1}([i_j]), w_(j)^{-1}([i_j]))`` to the Grassmannian."""
    from positroids import pluecker

    i_j, w_j, v_j, _ = word_prefix_data(v, w_word, j)
    wj_inv = permmod.inverse(w_j)
    vj_inv = permmod.inverse(v_j)
    rows = frozenset(vj_inv[:i_j])
    expected_rows = frozenset(permmod.inverse(v)[:i_j]) if i_j <= n else None
    if rows != expected_rows:
        raise ValueError(
            "generalized minor rows are not v^{-1}([l]); "
            "input word is not standard for a skew pair"
        )
    result = pluecker.project_minor(v, k, i_j, frozenset(wj_inv[:i_j]))
    if result is None:
        raise ValueError("generalized minor does not project to a single Pluecker coordinate")
    return result


def morphism_arrows(lam: shapes.Partition) -> tuple[tuple[shapes.Box, shapes.Box], ...]:
    """Irreducible morphisms between the summands indexed by boxes of lam:
    ``Rect(b_j)`` is obtained from ``Rect(b_i)`` by removing a row, removing a
    column, or adding a hook.  At most one arrow per ordered pair."""
    boxes = set(shapes.boxes(lam))
    arrows = []
    for (r, c) in sorted(boxes):
        for target in ((r - 1, c), (r, c - 1), (r + 1, c + 1)):
            if target in boxes:
                arrows.append(((r, c), target))
    return tuple(arrows)


def endomorphism_quiver(k: int, n: int, v: Permutation, x: Permutation):
    """Quiver of the canonical cluster-tilting module for the pair
    ``(v, x v)``: vertices are the boxes of ``lambda_x``, frozen exactly at
    the projective-injective summands (the boxes on the southeast boundary),
    arrows by the hook/row/column rules with frozen-frozen arrows dropped.
    Returns ``(quiver, labels)`` with labels the Pluecker column sets."""
    from positroids.seeds import Quiver

    if not permmod.is_length_additive(x, v):
        raise ValueError("x*v is not length-additive")
    lam = shapes.from_vert_ne(tuple(x)[:k], k, n)
    vi = permmod.inverse(v)
    frozen = {b: shapes.is_lambda_frozen(lam, b) for b in shapes.boxes(lam)}
    arrows = tuple(
        (s, t) for s, t in morphism_arrows(lam) if not (frozen[s] and frozen[t])
    )
    labels = {
        (r, c): frozenset(vi[j - 1] for j in shapes.rect_vert_ne(r, c, k, n))
        for (r, c) in frozen
    }
    return Quiver(frozen, arrows), labels


def projective_injective_boxes(lam: shapes.Partition) -> frozenset[shapes.Box]:
    return frozenset(b for b in shapes.boxes(lam) if shapes.is_lambda_frozen(lam, b))


def to_json(M: DiagramModule) -> dict:
    return {"n": M.n, "cells": sorted(M.cells)}


def from_json(data: dict) -> DiagramModule:
    return DiagramModule(data["n"], frozenset(tuple(c) for c in data["cells"]))
