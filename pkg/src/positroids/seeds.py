"""Quivers, labeled seeds, mutation, and the rectangles seed.

Cluster variables are expression DAGs over Pluecker symbols, evaluated with
exact rational arithmetic at sample points of a Schubert cell; identities are
decided by agreement at many independent exact sample points rather than by
symbolic normal forms.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations as iter_permutations
from typing import Hashable, Iterable, Sequence

from positroids import perm as permmod
from positroids import pluecker, shapes
from positroids.perm import Permutation
from positroids.pluecker import Matrix


# ---------------------------------------------------------------------------
# Quivers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Quiver:
    """Directed multigraph without loops or oriented 2-cycles; each vertex is
    mutable or frozen.  Arrows between two frozen vertices are never stored."""

    frozen: dict[Hashable, bool]  # vertex id -> frozen?
    arrows: tuple[tuple[Hashable, Hashable], ...]

    def __post_init__(self) -> None:
        counts = Counter(self.arrows)
        for (s, t), m in counts.items():
            if s == t:
                raise ValueError(f"loop at {s}")
            if s not in self.frozen or t not in self.frozen:
                raise ValueError(f"arrow {s}->{t} uses an unknown vertex")
            if counts.get((t, s), 0) and m:
                raise ValueError(f"oriented 2-cycle between {s} and {t}")
            if self.frozen[s] and self.frozen[t]:
                raise ValueError(f"stored arrow between frozen vertices {s}, {t}")

    @property
    def vertices(self) -> tuple[Hashable, ...]:
        return tuple(self.frozen)

    def mutable_vertices(self) -> tuple[Hashable, ...]:
        return tuple(v for v, f in self.frozen.items() if not f)

    def arrows_from(self, q: Hashable) -> tuple[Hashable, ...]:
        return tuple(t for s, t in self.arrows if s == q)

    def arrows_into(self, q: Hashable) -> tuple[Hashable, ...]:
        return tuple(s for s, t in self.arrows if t == q)

    def reversed(self) -> "Quiver":
        return Quiver(dict(self.frozen), tuple((t, s) for s, t in self.arrows))

    def delete_vertex(self, v: Hashable) -> "Quiver":
        frozen = {u: f for u, f in self.frozen.items() if u != v}
        return Quiver(frozen, tuple(a for a in self.arrows if v not in a))

    def restrict_mutable(self) -> "Quiver":
        keep = {v for v, f in self.frozen.items() if not f}
        return Quiver(
            {v: False for v in self.frozen if v in keep},
            tuple((s, t) for s, t in self.arrows if s in keep and t in keep),
        )

    def max_multiplicity(self) -> int:
        counts = Counter(self.arrows)
        return max(counts.values(), default=0)


def mutate_quiver(Q: Quiver, q: Hashable) -> Quiver:
    """Fomin-Zelevinsky mutation at a mutable vertex.

    1. for each path r -> q -> s add r -> s (unless r, s both frozen);
    2. reverse all arrows at q;
    3. cancel oriented 2-cycles.
    """
    if q not in Q.frozen or Q.frozen[q]:
        raise ValueError(f"cannot mutate at {q!r}")
    net: Counter[tuple[Hashable, Hashable]] = Counter()
    for a in Q.arrows:
        net[a] += 1
    for r in Q.arrows_into(q):
        for s in Q.arrows_from(q):
            if not (Q.frozen[r] and Q.frozen[s]):
                net[(r, s)] += 1
    for s, t in list(net):
        if q in (s, t):
            m = net.pop((s, t))
            net[(t, s)] += m
    arrows: list[tuple[Hashable, Hashable]] = []
    for (s, t), m in sorted(net.items(), key=lambda kv: (str(kv[0][0]), str(kv[0][1]))):
        m -= net.get((t, s), 0)
        if m > 0 and not (Q.frozen[s] and Q.frozen[t]):
            arrows.extend([(s, t)] * m)
    return Quiver(dict(Q.frozen), tuple(arrows))


# ---------------------------------------------------------------------------
# Cluster expressions
# ---------------------------------------------------------------------------

class ClusterExpression:
    """Base class; subclasses are Pluecker symbols and exchange quotients."""

    def evaluate(self, M: Matrix, cache: dict | None = None) -> Fraction:
        raise NotImplementedError


@dataclass(frozen=True)
class PluckerSymbol(ClusterExpression):
    columns: frozenset[int]

    def evaluate(self, M: Matrix, cache: dict | None = None) -> Fraction:
        if cache is None:
            return pluecker.plucker(M, self.columns)
        key = (id(M), self.columns)
        if key not in cache:
            cache[key] = pluecker.plucker(M, self.columns)
        return cache[key]

    def __repr__(self) -> str:
        return "D" + "".join(str(c) for c in sorted(self.columns))


@dataclass(frozen=True)
class ExchangeExpr(ClusterExpression):
    """One exchange step: (prod(out_factors) + prod(in_factors)) / divisor."""

    out_factors: tuple[ClusterExpression, ...]
    in_factors: tuple[ClusterExpression, ...]
    divisor: ClusterExpression

    def evaluate(self, M: Matrix, cache: dict | None = None) -> Fraction:
        if cache is None:
            cache = {}
        key = (id(M), id(self))
        if key in cache:
            return cache[key]
        num = Fraction(1)
        for f in self.out_factors:
            num *= f.evaluate(M, cache)
        num2 = Fraction(1)
        for f in self.in_factors:
            num2 *= f.evaluate(M, cache)
        den = self.divisor.evaluate(M, cache)
        if den == 0:
            raise ZeroDivisionError("exchange denominator vanishes at this sample point")
        val = (num + num2) / den
        cache[key] = val
        return val


def expressions_agree(
    a: ClusterExpression,
    b: ClusterExpression,
    samples: Sequence[Matrix],
) -> bool:
    """Exact agreement at every sample point (probabilistic identity testing:
    for honest Laurent expressions a false positive needs every sample to hit
    a hypersurface, which has vanishing probability over the integer box)."""
    cache: dict = {}
    return all(a.evaluate(M, cache) == b.evaluate(M, cache) for M in samples)


# ---------------------------------------------------------------------------
# Labeled seeds
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LabeledSeed:
    quiver: Quiver
    labels: dict[Hashable, ClusterExpression]

    def label(self, v: Hashable) -> ClusterExpression:
        return self.labels[v]

    def plucker_labels(self) -> dict[Hashable, frozenset[int]]:
        out = {}
        for v, lab in self.labels.items():
            if isinstance(lab, PluckerSymbol):
                out[v] = lab.columns
        return out

    def delete_vertex(self, v: Hashable) -> "LabeledSeed":
        labels = {u: l for u, l in self.labels.items() if u != v}
        return LabeledSeed(self.quiver.delete_vertex(v), labels)


def mutate_seed(S: LabeledSeed, q: Hashable) -> LabeledSeed:
    """Seed mutation: the label at q is replaced by the exchange expression
    ``(prod over arrows out of q + prod over arrows into q) / old label``."""
    new_label = ExchangeExpr(
        tuple(S.labels[r] for r in S.quiver.arrows_from(q)),
        tuple(S.labels[s] for s in S.quiver.arrows_into(q)),
        S.labels[q],
    )
    labels = dict(S.labels)
    labels[q] = new_label
    return LabeledSeed(mutate_quiver(S.quiver, q), labels)


def seeds_equal(S1: LabeledSeed, S2: LabeledSeed, up_to_arrow_reversal: bool = False) -> bool:
    """Label-preserving quiver isomorphism.  Labels must evaluate equal as
    data (Pluecker symbols compare by column set); correspondences are matched
    by label, brute-forcing ties."""

    def key(lab: ClusterExpression):
        return lab.columns if isinstance(lab, PluckerSymbol) else id(lab)

    by_label1: dict = {}
    for v, lab in S1.labels.items():
        by_label1.setdefault(key(lab), []).append(v)
    by_label2: dict = {}
    for v, lab in S2.labels.items():
        by_label2.setdefault(key(lab), []).append(v)
    if set(by_label1) != set(by_label2):
        return False
    if any(len(by_label1[k]) != len(by_label2[k]) for k in by_label1):
        return False

    def try_maps(keys: list, mapping: dict) -> bool:
        if not keys:
            return _quiver_map_ok(S1, S2, mapping, up_to_arrow_reversal)
        k, rest = keys[0], keys[1:]
        for assignment in iter_permutations(by_label2[k]):
            trial = dict(mapping)
            trial.update(zip(by_label1[k], assignment))
            if try_maps(rest, trial):
                return True
        return False

    return try_maps(list(by_label1), {})


def _quiver_map_ok(
    S1: LabeledSeed, S2: LabeledSeed, mapping: dict, up_to_arrow_reversal: bool
) -> bool:
    if any(S1.quiver.frozen[v] != S2.quiver.frozen[mapping[v]] for v in mapping):
        return False
    a1 = Counter((mapping[s], mapping[t]) for s, t in S1.quiver.arrows)
    a2 = Counter(S2.quiver.arrows)
    if a1 == a2:
        return True
    if up_to_arrow_reversal:
        return Counter((t, s) for s, t in a1.elements()) == a2
    return False


# ---------------------------------------------------------------------------
# The rectangles seed
# ---------------------------------------------------------------------------

def rectangles_quiver(lam: shapes.Partition) -> Quiver:
    """Quiver on the boxes of lam: arrows up and left between adjacent boxes,
    a southeast diagonal arrow in every 2x2 rectangle, frozen at the boxes on
    the southeast boundary, and frozen-frozen arrows dropped."""
    frozen = {b: shapes.is_lambda_frozen(lam, b) for b in shapes.boxes(lam)}
    arrows = []
    for (r, c) in frozen:
        for target in ((r - 1, c), (r, c - 1), (r + 1, c + 1)):
            if target in frozen and not (frozen[(r, c)] and frozen[target]):
                arrows.append(((r, c), target))
    return Quiver(frozen, tuple(sorted(arrows)))


def rectangles_seed(k: int, n: int, v: Permutation, x: Permutation) -> LabeledSeed:
    """The rectangles seed for the pair (v, w = x v): one vertex per box b of
    ``lambda = shape of x([k])``, labeled by the Pluecker coordinate on the
    column set ``v^{-1}(vert_ne(Rect(b)))``."""
    if not permmod.is_max_rep(v, k):
        raise ValueError(f"{v} is not in W^K_max")
    if not permmod.is_grassmannian(x, k):
        raise ValueError(f"{x} is not in ^K W")
    if not permmod.is_length_additive(x, v):
        raise ValueError("x*v is not length-additive")
    lam = shapes.from_vert_ne(x[:k], k, n)
    vi = permmod.inverse(v)
    quiver = rectangles_quiver(lam)
    labels = {}
    for (r, c) in quiver.vertices:
        J = shapes.rect_vert_ne(r, c, k, n)
        labels[(r, c)] = PluckerSymbol(frozenset(vi[j - 1] for j in J))
    return LabeledSeed(quiver, labels)


def seed_from_graph(G, mode: str, delete_label: Iterable[int] | None = None) -> LabeledSeed:
    """Dual quiver of a plabic graph with faces labeled by Pluecker symbols;
    optionally deletes the vertex carrying ``delete_label`` (the normalization
    that sets that coordinate to 1).  Seed vertices are keyed by label."""
    from positroids import plabic

    labeling = plabic.face_labeling(G, mode)
    quiver_idx, fc = plabic.dual_quiver(G)
    labels_by_idx = labeling.labels
    if len(set(labels_by_idx)) != len(labels_by_idx):
        raise ValueError("face labels are not distinct; cannot key the seed by label")
    frozen = {labels_by_idx[i]: f for i, f in quiver_idx.frozen.items()}
    arrows = tuple((labels_by_idx[s], labels_by_idx[t]) for s, t in quiver_idx.arrows)
    seed = LabeledSeed(
        Quiver(frozen, arrows),
        {lab: PluckerSymbol(lab) for lab in labels_by_idx},
    )
    if delete_label is not None:
        lab = frozenset(delete_label)
        if lab not in seed.labels:
            raise KeyError(f"no face labeled {sorted(lab)}")
        seed = seed.delete_vertex(lab)
    return seed


# ---------------------------------------------------------------------------
# Finite-type classification
# ---------------------------------------------------------------------------

_EXCEPTIONAL = {
    (3, 3): "E6",
    (3, 2, 1): "E6",
    (4, 3): "E7",
    (4, 2, 1): "E7",
    (3, 3, 1): "E7",
    (5, 3): "E8",
    (5, 2, 1): "E8",
    (4, 4): "E8",
    (3, 3, 1, 1): "E8",
}


def classify_finite_type(lam: shapes.Partition) -> str:
    """Cluster type of the rectangles seed on lam, from the shape of its
    mutable part: ``A<m>``, ``D<m>``, ``E6``/``E7``/``E8``, or ``Infinite``.

    >>> classify_finite_type((3, 3, 3))
    'D4'
    >>> classify_finite_type((4, 4, 4))
    'E6'
    """
    lam = shapes.normalize(lam)
    mut = shapes.mutable_part(lam)
    return classify_mutable_shape(mut)


def classify_mutable_shape(mut: shapes.Partition) -> str:
    """Classification from the mutable-part shape itself."""
    mut = shapes.normalize(mut)
    m = shapes.size(mut)
    if len(mut) < 2 or mut[1] < 2:
        return f"A{m}"
    t = shapes.transpose(mut)
    for cand in (mut, t):
        if len(cand) == 2 and cand[1] == 2 and cand[0] >= 2:
            return f"D{m}"
    for cand in (mut, t):
        if cand in _EXCEPTIONAL:
            return _EXCEPTIONAL[cand]
    return "Infinite"


def mutable_grid_quiver(mut: shapes.Partition) -> Quiver:
    """The all-mutable grid quiver on the boxes of a partition: up, left, and
    2x2 diagonal arrows (the mutable part of a rectangles quiver)."""
    boxes = set(shapes.boxes(mut))
    frozen = {b: False for b in sorted(boxes)}
    arrows = []
    for (r, c) in sorted(boxes):
        for target in ((r - 1, c), (r, c - 1), (r + 1, c + 1)):
            if target in boxes:
                arrows.append(((r, c), target))
    return Quiver(frozen, tuple(arrows))


def canonical_form(Q: Quiver) -> tuple:
    """Canonical invariant of a quiver up to isomorphism (respecting frozen
    flags): the minimal arrow-matrix encoding over vertex orderings compatible
    with an iteratively refined degree coloring."""
    verts = list(Q.frozen)
    n = len(verts)
    idx = {v: i for i, v in enumerate(verts)}
    mat = [[0] * n for _ in range(n)]
    for s, t in Q.arrows:
        mat[idx[s]][idx[t]] += 1

    # refinement: start from (frozen, out/in degree multisets), then fold in
    # neighbor colors until stable
    color = [
        (
            Q.frozen[verts[i]],
            tuple(sorted(m for m in mat[i] if m)),
            tuple(sorted(mat[j][i] for j in range(n) if mat[j][i])),
        )
        for i in range(n)
    ]
    for _ in range(n):
        signature = [
            (
                color[i],
                tuple(sorted((color[j], mat[i][j]) for j in range(n) if mat[i][j])),
                tuple(sorted((color[j], mat[j][i]) for j in range(n) if mat[j][i])),
            )
            for i in range(n)
        ]
        relabel = {sig: rank for rank, sig in enumerate(sorted(set(signature), key=repr))}
        new_color = [relabel[sig] for sig in signature]
        if len(set(new_color)) == len(set(color)):
            color = new_color
            break
        color = new_color

    classes: dict[object, list[int]] = {}
    for i in range(n):
        classes.setdefault(color[i], []).append(i)
    ordered_classes = [classes[c] for c in sorted(classes, key=repr)]
    class_sizes = tuple(len(g) for g in ordered_classes)

    best: tuple | None = None

    def search(order: list[int], remaining: list[list[int]]) -> None:
        nonlocal best
        if not remaining:
            rows = tuple(tuple(mat[i][j] for j in order) for i in order)
            flags = tuple(Q.frozen[verts[i]] for i in order)
            cand = (flags, rows)
            if best is None or cand < best:
                best = cand
            return
        group, rest = remaining[0], remaining[1:]
        for pick in iter_permutations(group):
            search(order + list(pick), rest)

    search([], ordered_classes)
    assert best is not None
    return (class_sizes, best)


@dataclass(frozen=True)
class MutationClassReport:
    closed: bool
    class_size: int
    bound_hit: bool
    saw_multiple_arrow: bool
    representatives: tuple[Quiver, ...]

    @property
    def verdict(self) -> str:
        """'finite' / 'infinite' / 'unknown'.  A double arrow anywhere in the
        class certifies infinite type (skew-symmetric finite type forces all
        exchange-matrix entries into {-1, 0, 1}); closure without one
        certifies finite type."""
        if self.saw_multiple_arrow:
            return "infinite"
        if self.closed:
            return "finite"
        return "unknown"


def mutation_class_explore(
    Q: Quiver,
    max_size: int = 20000,
    max_depth: int | None = None,
    keep_representatives: bool = False,
    stop_on_multiple_arrow: bool = True,
) -> MutationClassReport:
    """Breadth-first search of the mutation class of the mutable part of Q, up
    to quiver isomorphism."""
    Q0 = Q.restrict_mutable()
    if len(Q0.frozen) > 12:
        raise ValueError("exhaustive canonical hashing is limited to <= 12 mutable vertices")
    seen = {canonical_form(Q0)}
    reps = [Q0] if keep_representatives else []
    frontier = [Q0]
    saw_multiple = Q0.max_multiplicity() >= 2
    depth = 0
    bound_hit = False
    while frontier and not (saw_multiple and stop_on_multiple_arrow):
        if max_depth is not None and depth >= max_depth:
            bound_hit = True
            break
        depth += 1
        nxt = []
        for cur in frontier:
            for q in cur.mutable_vertices():
                new = mutate_quiver(cur, q)
                key = canonical_form(new)
                if key in seen:
                    continue
                seen.add(key)
                if new.max_multiplicity() >= 2:
                    saw_multiple = True
                if keep_representatives:
                    reps.append(new)
                nxt.append(new)
                if len(seen) > max_size:
                    bound_hit = True
                    nxt = []
                    break
            if bound_hit:
                break
        if bound_hit:
            break
        frontier = nxt
    closed = not bound_hit and not frontier
    if saw_multiple and stop_on_multiple_arrow:
        closed = False
    return MutationClassReport(
        closed, len(seen), bound_hit, saw_multiple, tuple(reps)
    )


def dynkin_quiver(type_name: str) -> Quiver:
    """A fixed orientation of a simply-laced Dynkin diagram, e.g. 'A3', 'D5',
    'E7'."""
    family, rank = type_name[0], int(type_name[1:])
    if family == "A":
        edges = [(i, i + 1) for i in range(1, rank)]
    elif family == "D":
        if rank < 4:
            raise ValueError("type D starts at rank 4")
        edges = [(i, i + 1) for i in range(1, rank - 1)] + [(rank - 2, rank)]
    elif family == "E":
        if rank not in (6, 7, 8):
            raise ValueError("type E has ranks 6, 7, 8")
        edges = [(i, i + 1) for i in range(1, rank - 1)] + [(3, rank)]
    else:
        raise ValueError(f"unknown type {type_name!r}")
    frozen = {i: False for i in range(1, rank + 1)}
    return Quiver(frozen, tuple(edges))


def underlying_graph_isomorphic(Q1: Quiver, Q2: Quiver) -> bool:
    """Isomorphism of underlying undirected (multi)graphs; brute force with
    degree pruning, adequate for Dynkin-sized quivers."""
    v1, v2 = list(Q1.frozen), list(Q2.frozen)
    if len(v1) != len(v2) or len(Q1.arrows) != len(Q2.arrows):
        return False
    und1 = Counter(frozenset(a) for a in Q1.arrows)
    und2 = Counter(frozenset(a) for a in Q2.arrows)

    def degs(und, verts):
        d = {v: 0 for v in verts}
        for pair, m in und.items():
            for v in pair:
                d[v] += m
        return d

    d1, d2 = degs(und1, v1), degs(und2, v2)
    if sorted(d1.values()) != sorted(d2.values()):
        return False
    for assign in iter_permutations(v2):
        mapping = dict(zip(v1, assign))
        if any(d1[v] != d2[mapping[v]] for v in v1):
            continue
        mapped = Counter(frozenset(mapping[x] for x in pair) for pair in und1.elements())
        if mapped == und2:
            return True
    return False


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def _label_to_json(lab: ClusterExpression):
    if isinstance(lab, PluckerSymbol):
        return sorted(lab.columns)
    return {
        "out": [_label_to_json(f) for f in lab.out_factors],
        "in": [_label_to_json(f) for f in lab.in_factors],
        "divisor": _label_to_json(lab.divisor),
    }


def seed_to_json(S: LabeledSeed) -> dict:
    ids = {v: i for i, v in enumerate(S.quiver.vertices)}
    return {
        "vertices": [
            {
                "id": ids[v],
                "frozen": S.quiver.frozen[v],
                "label": _label_to_json(S.labels[v]),
            }
            for v in S.quiver.vertices
        ],
        "arrows": [[ids[s], ids[t]] for s, t in S.quiver.arrows],
    }


def seed_to_dot(S: LabeledSeed) -> str:
    ids = {v: i for i, v in enumerate(S.quiver.vertices)}
    lines = ["digraph seed {"]
    for v in S.quiver.vertices:
        shape = "box" if S.quiver.frozen[v] else "ellipse"
        lab = S.labels[v]
        text = "".join(str(c) for c in sorted(lab.columns)) if isinstance(lab, PluckerSymbol) else "expr"
        lines.append(f'  n{ids[v]} [shape={shape}, label="{text}"];')
    for s, t in S.quiver.arrows:
        lines.append(f"  n{ids[s]} -> n{ids[t]};")
    lines.append("}")
    return "\n".join(lines)
