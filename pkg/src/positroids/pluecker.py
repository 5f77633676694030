"""Exact rational linear algebra on ``k x n`` matrices: Pluecker coordinates,
Schubert-cell sampling, three-term relations, weak separation, and the
projection from generalized minors to Pluecker coordinates.

All arithmetic is exact (``fractions.Fraction`` over arbitrary-precision
integers); there is no floating point anywhere in this module.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Matrix = tuple[tuple[Fraction, ...], ...]


def matrix(rows: Iterable[Iterable]) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Bareiss fraction-free elimination; exact for rational entries.

    >>> determinant(matrix([[1, 2], [3, 4]]))
    Fraction(-2, 1)
    """
    m = [list(row) for row in rows]
    size = len(m)
    if any(len(row) != size for row in m):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    prev = Fraction(1)
    for j in range(size - 1):
        if m[j][j] == 0:
            for i in range(j + 1, size):
                if m[i][j] != 0:
                    m[j], m[i] = m[i], m[j]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(j + 1, size):
            for c in range(j + 1, size):
                m[i][c] = (m[i][c] * m[j][j] - m[i][j] * m[j][c]) / prev
            m[i][j] = Fraction(0)
        prev = m[j][j]
    return sign * m[size - 1][size - 1]


def plucker(M: Matrix, I: Iterable[int]) -> Fraction:
    """Maximal minor in the column set I (1-based columns).

    >>> plucker(matrix([[1, 0, -1, -2], [0, 1, 3, 1]]), {3, 4})
    Fraction(5, 1)
    """
    cols = sorted(I)
    if len(cols) != len(M):
        raise ValueError(f"need {len(M)} columns, got {cols}")
    return determinant([[row[c - 1] for c in cols] for row in M])


def three_term_check(M: Matrix, R: Iterable[int], quad: Sequence[int]) -> bool:
    """Verify ``D_{Rac} D_{Rbd} = D_{Rbc} D_{Rad} + D_{Rab} D_{Rcd}`` exactly,
    for a cyclically ordered quadruple (a, b, c, d) disjoint from R."""
    R = frozenset(R)
    a, b, c, d = quad
    if R & {a, b, c, d}:
        raise ValueError("index sets overlap")
    if not cyclically_ordered(a, b, c, d):
        raise ValueError(f"{quad} is not cyclically ordered")

    def D(*extra: int) -> Fraction:
        return plucker(M, R | set(extra))

    return D(a, c) * D(b, d) == D(b, c) * D(a, d) + D(a, b) * D(c, d)


def cyclically_ordered(*values: int) -> bool:
    """True iff the values, rotated so the smallest comes first, increase.

    >>> cyclically_ordered(3, 5, 1, 2)
    True
    >>> cyclically_ordered(3, 1, 5, 2)
    False
    """
    lo = values.index(min(values))
    rotated = values[lo:] + values[:lo]
    return all(rotated[i] < rotated[i + 1] for i in range(len(rotated) - 1))


@dataclass(frozen=True)
class SamplePoint:
    matrix: Matrix
    cell: frozenset[int]


def sample_schubert_cell(
    k: int,
    n: int,
    I: Iterable[int],
    rng: random.Random | int,
    require_nonzero: Iterable[frozenset[int]] = (),
    max_tries: int = 200,
) -> SamplePoint:
    """Random point of the Schubert cell with pivot set I: a reduced
    row-echelon matrix with pivot columns I and nonzero random integer free
    entries, so the lexicographically minimal nonvanishing Pluecker coordinate
    is exactly ``D_I``.

    When ``require_nonzero`` subsets are given (e.g. a Grassmann necklace),
    the point is resampled until all of those coordinates are nonzero.
    """
    if isinstance(rng, int):
        rng = random.Random(rng)
    pivots = sorted(I)
    if len(pivots) != k:
        raise ValueError(f"need a {k}-subset of pivot columns")
    required = [frozenset(s) for s in require_nonzero]
    for _ in range(max_tries):
        rows = []
        for r, p in enumerate(pivots):
            row = [Fraction(0)] * n
            row[p - 1] = Fraction(1)
            for c in range(p + 1, n + 1):
                if c not in pivots:
                    val = 0
                    while val == 0:
                        val = rng.randint(-10**6, 10**6)
                    row[c - 1] = Fraction(val)
            rows.append(tuple(row))
        M = tuple(rows)
        if all(plucker(M, s) != 0 for s in required):
            return SamplePoint(M, frozenset(pivots))
    raise RuntimeError(f"no sample with the required nonvanishing coordinates in {max_tries} tries")


# ---------------------------------------------------------------------------
# Weak separation and realizability
# ---------------------------------------------------------------------------

def weakly_separated(I: Iterable[int], J: Iterable[int]) -> bool:
    """No pattern a < c < b < d nor c < a < d < b with a, b in I-J and
    c, d in J-I.

    >>> weakly_separated({4, 6, 7}, {2, 3, 5})
    False
    >>> weakly_separated({1, 3}, {2, 4})
    False
    """
    A = sorted(set(I) - set(J))
    B = sorted(set(J) - set(I))

    def crossed(xs: list[int], ys: list[int]) -> bool:
        return any(x1 < y1 < x2 < y2 for x1 in xs for x2 in xs for y1 in ys for y2 in ys)

    return not crossed(A, B) and not crossed(B, A)


def singleton_occurrence_check(labels: Iterable[Iterable[int]], n: int) -> tuple[int, ...]:
    """Realizability pre-check for a would-be face-label set of a lollipop-free
    generalized plabic graph with no internal faces: every boundary label must
    occur in at least two faces.  Returns the offending elements (those that
    occur exactly once); nonempty means non-realizable.

    >>> singleton_occurrence_check([{1, 3}, {2, 3}, {1, 4}, {4, 5}, {1, 5}], 5)
    (2,)
    """
    counts = [0] * (n + 1)
    for lab in labels:
        for i in lab:
            counts[i] += 1
    return tuple(i for i in range(1, n + 1) if counts[i] == 1)


# ---------------------------------------------------------------------------
# Generalized minors and rectangle labels
# ---------------------------------------------------------------------------

def project_minor(
    v: Sequence[int], k: int, ell: int, J: Iterable[int]
) -> frozenset[int] | None:
    """Pluecker coordinate equal to the generalized minor with row set
    ``v^{-1}([ell])`` and column set J, on the Grassmannian of k-planes.

    Case split on ell: pad with ``v^{-1}([k] - [ell])`` when ell < k, strip
    ``v^{-1}([ell] - [k])`` when ell > k; returns None when the size comes out
    wrong (the minor does not project to a single Pluecker coordinate).
    """
    from positroids.perm import inverse

    J = frozenset(J)
    if len(J) != ell:
        raise ValueError(f"column set {sorted(J)} does not have size {ell}")
    vi = inverse(tuple(v))
    if ell == k:
        return J
    if ell < k:
        padded = J | {vi[i - 1] for i in range(ell + 1, k + 1)}
        return padded if len(padded) == k else None
    strip = {vi[i - 1] for i in range(k + 1, ell + 1)}
    if not strip <= J:
        return None
    return J - strip


def rectangle_label_word(
    lam: Sequence[int], b: tuple[int, int], k: int, n: int
) -> tuple[tuple[int, ...], bool]:
    """The columnar prefix permutation ``w_b`` through box b, together with the
    verification that ``w_b([ell])`` (adjusted by the [k]-interval padding or
    stripping rule) reproduces the rectangle label ``vert_ne(Rect(b))``.
    """
    from positroids import perm, shapes

    lam = shapes.normalize(lam)
    if not shapes.contains_box(lam, b):
        raise ValueError(f"box {b} outside {lam}")
    prefix = []
    for box in shapes.boxes(lam):
        r, c = box
        prefix.append(k + c - r)
        if box == b:
            break
    # reading order is product order for W^K elements: first box acts last
    w_b = perm.apply_word(tuple(reversed(prefix)), n)
    r, c = b
    ell = k + c - r
    J = frozenset(w_b[:ell])
    target = shapes.rect_vert_ne(r, c, k, n)
    if ell == k:
        check = J == target
    elif ell < k:
        check = J | set(range(ell + 1, k + 1)) == target
    else:
        check = J - set(range(k + 1, ell + 1)) == target
    return w_b, check


def matrix_to_json(M: Matrix) -> list[list[str]]:
    return [[str(x) for x in row] for row in M]


def matrix_from_json(data: Sequence[Sequence[str]]) -> Matrix:
    return matrix(data)
