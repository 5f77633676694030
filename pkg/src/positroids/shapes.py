"""Young diagrams in a ``k x (n-k)`` rectangle and their lattice-path views.

A partition is a tuple of weakly decreasing positive parts (no trailing
zeros), drawn in English orientation with row 1 on top.  Its boundary inside
the rectangle is a lattice path from the southwest corner to the northeast
corner; labeling the n steps northeast-ward, the labels of the north steps
form a k-subset of [n] (``vert_ne``), and labeling southwest-ward from the
northeast corner, the south steps form ``vert_sw``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Box = tuple[int, int]  # (row, col), 1-based


def normalize(parts: Iterable[int]) -> Partition:
    """
    >>> normalize([3, 2, 0, 0])
    (3, 2)
    """
    out = tuple(p for p in parts if p > 0)
    if any(out[i] < out[i + 1] for i in range(len(out) - 1)) or any(p < 0 for p in out):
        raise ValueError(f"not weakly decreasing nonnegative parts: {parts}")
    return out


def size(lam: Partition) -> int:
    return sum(lam)


def fits(lam: Partition, k: int, n: int) -> bool:
    return len(lam) <= k and (not lam or lam[0] <= n - k)


def boxes(lam: Partition) -> Iterator[Box]:
    """Boxes in columnar reading order: columns left to right, top to bottom."""
    ncols = lam[0] if lam else 0
    for c in range(1, ncols + 1):
        for r in range(1, len(lam) + 1):
            if lam[r - 1] >= c:
                yield (r, c)


def contains_box(lam: Partition, b: Box) -> bool:
    r, c = b
    return 1 <= r <= len(lam) and 1 <= c <= lam[r - 1]


def contains(lam: Partition, mu: Partition) -> bool:
    """mu fits inside lam."""
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def transpose(lam: Partition) -> Partition:
    """
    >>> transpose((3, 3, 1, 1))
    (4, 2, 2)
    """
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= c) for c in range(1, lam[0] + 1))


# ---------------------------------------------------------------------------
# Lattice-path labelings
# ---------------------------------------------------------------------------

def vert_ne(mu: Partition, k: int, n: int) -> frozenset[int]:
    """Labels of the north steps of the northeast-ward boundary path.

    >>> sorted(vert_ne((), 3, 7))
    [1, 2, 3]
    >>> sorted(vert_ne((4, 3, 2), 3, 7))
    [3, 5, 7]
    """
    if not fits(mu, k, n):
        raise ValueError(f"{mu} does not fit in {k} x {n - k}")
    parts = tuple(mu) + (0,) * (k - len(mu))
    return frozenset(parts[k - j] + j for j in range(1, k + 1))


def vert_sw(mu: Partition, k: int, n: int) -> frozenset[int]:
    """Labels of the south steps of the southwest-ward boundary path.

    >>> sorted(vert_sw((4, 3, 2), 3, 7))
    [1, 3, 5]
    """
    return frozenset(n + 1 - i for i in vert_ne(mu, k, n))


def from_vert_ne(labels: Iterable[int], k: int, n: int) -> Partition:
    """Partition whose northeast path has north steps at the given labels.

    >>> from_vert_ne({3, 5, 7}, 3, 7)
    (4, 3, 2)
    """
    ordered = sorted(labels)
    if len(ordered) != k or not all(1 <= i <= n for i in ordered):
        raise ValueError(f"not a {k}-subset of [{n}]: {ordered}")
    return normalize(ordered[k - r] - (k + 1 - r) for r in range(1, k + 1))


def from_vert_sw(labels: Iterable[int], k: int, n: int) -> Partition:
    return from_vert_ne({n + 1 - i for i in labels}, k, n)


def pperm_sw(lam: Partition, k: int, n: int) -> tuple[int, ...]:
    """Grassmannian permutation of type (n-k, n) read off the southwest path:
    first the horizontal-step labels, then the vertical-step labels.

    >>> pperm_sw((4, 3, 2), 3, 7)
    (2, 4, 6, 7, 1, 3, 5)
    """
    vs = sorted(vert_sw(lam, k, n))
    hs = sorted(set(range(1, n + 1)) - set(vs))
    return tuple(hs + vs)


# ---------------------------------------------------------------------------
# Rectangles and frozenness
# ---------------------------------------------------------------------------

def rect_of(lam: Partition, b: Box) -> Partition:
    """Largest rectangle inside lam whose lower-right corner is b: always the
    full ``row(b) x col(b)`` rectangle anchored at the top-left corner.

    >>> rect_of((4, 3, 2), (2, 3))
    (3, 3)
    """
    if not contains_box(lam, b):
        raise ValueError(f"box {b} outside {lam}")
    r, c = b
    return (c,) * r


def rect_vert_ne(r: int, c: int, k: int, n: int) -> frozenset[int]:
    """``vert_ne`` of the r x c rectangle: [1..k-r] followed by [k-r+c+1..k+c]."""
    return frozenset(range(1, k - r + 1)) | frozenset(range(k - r + c + 1, k + c + 1))


def is_lambda_frozen(lam: Partition, b: Box) -> bool:
    """True iff Rect(b) touches the south or east boundary of lam,
    i.e. the box just southeast of b is not in lam.

    >>> [b for b in boxes((4, 3, 2)) if is_lambda_frozen((4, 3, 2), b)]
    [(3, 1), (2, 2), (3, 2), (1, 3), (2, 3), (1, 4)]
    """
    if not contains_box(lam, b):
        raise ValueError(f"box {b} outside {lam}")
    r, c = b
    return not contains_box(lam, (r + 1, c + 1))


def mutable_part(lam: Partition) -> Partition:
    """Boxes left after deleting every box on the southeast boundary."""
    return normalize(max(part - 1, 0) for part in lam[1:])


# ---------------------------------------------------------------------------
# Lattice paths and the length-additive bijection
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LatticePath:
    """A path across the ``k x (n-k)`` rectangle.

    ``steps`` has one tag per unit step, ``True`` for vertical; a path with
    orientation ``"NE"`` runs east/north from the southwest corner, one with
    ``"SW"`` runs west/south from the northeast corner.
    """

    steps: tuple[bool, ...]
    orientation: str  # "NE" | "SW"

    def __post_init__(self) -> None:
        if self.orientation not in ("NE", "SW"):
            raise ValueError(f"bad orientation {self.orientation!r}")

    @property
    def n(self) -> int:
        return len(self.steps)

    @property
    def k(self) -> int:
        return sum(self.steps)

    def vertical_labels(self) -> frozenset[int]:
        return frozenset(i for i, v in enumerate(self.steps, start=1) if v)

    def reversed(self) -> "LatticePath":
        other = "SW" if self.orientation == "NE" else "NE"
        return LatticePath(tuple(reversed(self.steps)), other)

    def as_ne(self) -> "LatticePath":
        return self if self.orientation == "NE" else self.reversed()

    def shape(self) -> Partition:
        """The partition northwest of the path."""
        ne = self.as_ne()
        return from_vert_ne(ne.vertical_labels(), ne.k, ne.n)


def path_ne(labels: Iterable[int], k: int, n: int) -> LatticePath:
    labs = frozenset(labels)
    if len(labs) != k:
        raise ValueError(f"need a {k}-subset")
    return LatticePath(tuple(i in labs for i in range(1, n + 1)), "NE")


def path_sw(labels: Iterable[int], k: int, n: int) -> LatticePath:
    labs = frozenset(labels)
    return LatticePath(tuple(i in labs for i in range(1, n + 1)), "SW")


def path_leq(J: LatticePath, L: LatticePath) -> bool:
    """J lies above L: componentwise comparison of vertical-step labels of the
    northeast-normalized paths.

    >>> path_leq(path_ne({1, 3, 6}, 3, 8), path_sw({2, 3, 8}, 3, 8).as_ne())
    True
    """
    a, b = J.as_ne(), L.as_ne()
    if (a.n, a.k) != (b.n, b.k):
        raise ValueError("paths live in different rectangles")
    return all(x <= y for x, y in zip(sorted(a.vertical_labels()), sorted(b.vertical_labels())))


def lengthadditive_from_paths(
    J: LatticePath, L: LatticePath, k: int, n: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Inverse of ``(v, xv) -> (P_ne(x([k])), P_sw(v^{-1}([k])))``.

    Returns ``(v, w)`` with v in W^K_max and ``w = x v`` length-additive.

    >>> v, w = lengthadditive_from_paths(
    ...     path_ne({1, 3, 6}, 3, 8), path_sw({2, 3, 8}, 3, 8), 3, 8)
    >>> v
    (8, 3, 2, 7, 6, 5, 4, 1)
    """
    from positroids import perm

    if not path_leq(J, L):
        raise ValueError("J does not lie above L")
    x = perm.grassmannian_from_image(J.as_ne().vertical_labels(), k, n)
    L_sw = L if L.orientation == "SW" else L.reversed()
    v = perm.max_rep_from_image(L_sw.vertical_labels(), k, n)
    return v, perm.multiply(x, v)


def paths_from_lengthadditive(
    v: Sequence[int], w: Sequence[int], k: int, n: int
) -> tuple[LatticePath, LatticePath]:
    """Forward direction of the bijection: ``(v, w) -> (J, L)``."""
    from positroids import perm

    v, w = tuple(v), tuple(w)
    x = perm.multiply(w, perm.inverse(v))
    vi = perm.inverse(v)
    return path_ne(x[:k], k, n), path_sw(vi[:k], k, n)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def partitions_in_box(k: int, cols: int) -> Iterator[Partition]:
    """All partitions fitting in a k x cols rectangle."""
    for labels in combinations(range(1, k + cols + 1), k):
        yield from_vert_ne(labels, k, k + cols)


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """All partitions contained in lam.

    >>> sorted(subpartitions((2, 1)))
    [(), (1,), (1, 1), (2,), (2, 1)]
    """
    def rec(row: int, prev: int) -> Iterator[tuple[int, ...]]:
        if row < len(lam):
            for p in range(min(lam[row], prev), 0, -1):
                for rest in rec(row + 1, p):
                    yield (p,) + rest
        yield ()

    yield from rec(0, lam[0] if lam else 0)


def to_json(lam: Partition, k: int, n: int) -> dict:
    return {"parts": list(lam), "k": k, "n": n}


def from_json(data: dict) -> tuple[Partition, int, int]:
    return normalize(data["parts"]), data["k"], data["n"]
