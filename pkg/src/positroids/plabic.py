"""Plabic graphs with a combinatorial disk embedding.

A graph is stored as a rotation system: every internal vertex carries the
counterclockwise cyclic order of its incident edges.  Boundary vertices sit on
a clockwise cycle of the disk and have degree one into the graph; for face
tracing the boundary arcs between consecutive boundary vertices are treated as
virtual edges, and a boundary vertex's implicit rotation is
``(arc to next position, arc to previous position, pendant edge)``.

Conventions (pinned by the golden-graph tests):

- Faces are orbits of ``d -> dart leaving head(d) along the predecessor of d's
  edge in the ccw rotation``; every face lies to the left of its darts, and
  the outer face is the orbit of clockwise arc darts.
- A trip turns at a black vertex onto the successor of its entry edge in ccw
  order, and at a white vertex onto the predecessor.

Vertex ids are positive integers for internal vertices and negative integers
for boundary vertices.  Edge ids are positive integers; a dart is ``(eid,
end)`` with tail ``edges[eid][end]`` and head ``edges[eid][1 - end]``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace
from typing import Iterable, Iterator, Sequence

from positroids import perm as permmod
from positroids.perm import DecoratedPermutation, Permutation

BLACK = "b"
WHITE = "w"

Dart = tuple[object, int]  # (edge id, tail end); arcs use ("arc", p) ids


class PlabicError(Exception):
    pass


class InvalidBridge(PlabicError):
    pass


class NotSquareEligible(PlabicError):
    pass


class AmbiguousSide(PlabicError):
    pass


@dataclass(frozen=True)
class PlabicGraph:
    boundary_order: tuple[int, ...]  # boundary vertex ids, clockwise
    labels: dict[int, int]  # boundary vertex id -> label
    colors: dict[int, str]  # internal vertex id -> BLACK | WHITE
    edges: dict[int, tuple[int, int]]  # edge id -> endpoints
    rot: dict[int, tuple[int, ...]]  # internal vertex id -> ccw edge ids

    @property
    def n(self) -> int:
        return len(self.boundary_order)

    @property
    def boundary_labels(self) -> tuple[int, ...]:
        return tuple(self.labels[b] for b in self.boundary_order)

    def is_boundary(self, v: int) -> bool:
        return v < 0

    def incident(self, v: int) -> tuple[int, ...]:
        if self.is_boundary(v):
            return tuple(e for e, (a, b) in sorted(self.edges.items()) if v in (a, b))
        return self.rot[v]

    def degree(self, v: int) -> int:
        return len(self.incident(v))

    def other_end(self, eid: int, v: int) -> int:
        a, b = self.edges[eid]
        if v == a:
            return b
        if v == b:
            return a
        raise PlabicError(f"vertex {v} not on edge {eid}")

    def pendant_edge(self, bd: int) -> int:
        inc = self.incident(bd)
        if len(inc) != 1:
            raise PlabicError(f"boundary vertex {bd} has degree {len(inc)}")
        return inc[0]

    def validate(self) -> None:
        n = self.n
        if sorted(self.labels.values()) != list(range(1, n + 1)):
            raise PlabicError("boundary labels are not a permutation of [n]")
        for eid, (a, b) in self.edges.items():
            if a == b:
                raise PlabicError(f"loop edge {eid}")
            if a > 0 and b > 0 and self.colors[a] == self.colors[b]:
                raise PlabicError(f"monochromatic edge {eid}: {a}-{b}")
            if a < 0 and b < 0:
                raise PlabicError(f"edge {eid} joins two boundary vertices")
        for v, order in self.rot.items():
            incident = [e for e, ends in self.edges.items() if v in ends]
            if sorted(order) != sorted(incident):
                raise PlabicError(f"rotation at {v} does not list its incident edges")
        for b in self.boundary_order:
            if self.degree(b) != 1:
                raise PlabicError(f"boundary vertex {b} must have degree exactly 1")
        for v in self.colors:
            if len(self.rot[v]) == 1:
                nbr = self.other_end(self.rot[v][0], v)
                if not self.is_boundary(nbr):
                    raise PlabicError(f"internal leaf {v} not adjacent to the boundary")

    # -- dart navigation ----------------------------------------------------

    def dart_tail(self, d: Dart) -> int:
        eid, end = d
        if isinstance(eid, tuple):  # boundary arc ("arc", p)
            p = eid[1]
            return self.boundary_order[p] if end == 0 else self.boundary_order[(p + 1) % self.n]
        return self.edges[eid][end]

    def dart_head(self, d: Dart) -> int:
        eid, end = d
        return self.dart_tail((eid, 1 - end))

    def _arc(self, p: int) -> tuple[str, int]:
        return ("arc", p % self.n)

    def _boundary_rotation(self, bd: int) -> tuple:
        p = self.boundary_order.index(bd)
        return (self._arc(p), self._arc(p - 1), self.pendant_edge(bd))

    def _rotation_at(self, v: int) -> tuple:
        return self._boundary_rotation(v) if self.is_boundary(v) else self.rot[v]

    def _dart_from(self, v: int, eid) -> Dart:
        if isinstance(eid, tuple):
            p = eid[1]
            end = 0 if self.boundary_order[p] == v else 1
            return (eid, end)
        a, b = self.edges[eid]
        if v == a:
            return (eid, 0)
        if v == b:
            return (eid, 1)
        raise PlabicError(f"vertex {v} not on edge {eid}")

    def face_next(self, d: Dart) -> Dart:
        """Next dart of the face on the left of d."""
        v = self.dart_head(d)
        order = self._rotation_at(v)
        i = order.index(d[0])
        return self._dart_from(v, order[(i - 1) % len(order)])

    def trip_next(self, d: Dart) -> Dart:
        """Rules of the road: successor at black, predecessor at white."""
        v = self.dart_head(d)
        if self.is_boundary(v):
            raise PlabicError("trip step at a boundary vertex")
        order = self.rot[v]
        i = order.index(d[0])
        step = 1 if self.colors[v] == BLACK else -1
        return self._dart_from(v, order[(i + step) % len(order)])

    def all_darts(self, include_arcs: bool = True) -> Iterator[Dart]:
        for eid in sorted(self.edges):
            yield (eid, 0)
            yield (eid, 1)
        if include_arcs:
            for p in range(self.n):
                yield (self._arc(p), 0)
                yield (self._arc(p), 1)


def _dart_key(d: Dart) -> tuple:
    eid, end = d
    if isinstance(eid, tuple):
        return (1, eid[1], end)
    return (0, eid, end)


# ---------------------------------------------------------------------------
# Faces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Face:
    darts: tuple[Dart, ...]
    boundary: bool


@dataclass(frozen=True)
class Faces:
    faces: tuple[Face, ...]
    face_of: dict[Dart, int]

    def __len__(self) -> int:
        return len(self.faces)

    def boundary_indices(self) -> tuple[int, ...]:
        return tuple(i for i, f in enumerate(self.faces) if f.boundary)


def faces(G: PlabicGraph) -> Faces:
    """All interior faces (the outer face is identified and dropped).

    Raises :class:`PlabicError` when the orbit count violates Euler's formula,
    which signals an inconsistent rotation system.
    """
    if G.n == 1:
        all_d = tuple(G.all_darts(include_arcs=False))
        f = Face(all_d, True)
        return Faces((f,), {d: 0 for d in all_d})

    seen: set[Dart] = set()
    orbits: list[tuple[Dart, ...]] = []
    for d0 in sorted(G.all_darts(), key=_dart_key):
        if d0 in seen:
            continue
        orbit = [d0]
        seen.add(d0)
        d = G.face_next(d0)
        while d != d0:
            if d in seen:
                raise PlabicError("face tracing revisited a dart; rotation system inconsistent")
            orbit.append(d)
            seen.add(d)
            d = G.face_next(d)
        orbits.append(tuple(orbit))

    V = len(G.colors) + G.n
    E = len(G.edges) + G.n
    if V - E + len(orbits) != 2:
        raise PlabicError(
            f"Euler check failed: V={V} E={E} F={len(orbits)} (disconnected embedding data?)"
        )

    outer_dart = (G._arc(0), 0)
    interior = []
    for orbit in orbits:
        if outer_dart in orbit:
            continue
        has_arc = any(isinstance(d[0], tuple) for d in orbit)
        interior.append(Face(orbit, has_arc))
    face_of = {d: i for i, f in enumerate(interior) for d in f.darts}
    return Faces(tuple(interior), face_of)


# ---------------------------------------------------------------------------
# Trips and the trip permutation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Trip:
    start: int  # boundary label
    end: int
    darts: tuple[Dart, ...]


def _trip_from(G: PlabicGraph, bd: int) -> tuple[int, tuple[Dart, ...]]:
    d = G._dart_from(bd, G.pendant_edge(bd))
    walk = [d]
    limit = 2 * len(G.edges) + 2
    while not G.is_boundary(G.dart_head(d)):
        d = G.trip_next(d)
        walk.append(d)
        if len(walk) > limit:
            raise PlabicError("trip failed to terminate; malformed rotation system")
    return G.dart_head(d), tuple(walk)


def _leaf_color(G: PlabicGraph, walk: Sequence[Dart]) -> str:
    """Color of the (possibly subdivided) lollipop leaf on a round trip."""
    for d in walk:
        v = G.dart_head(d)
        if not G.is_boundary(v) and len(G.rot[v]) == 1:
            return G.colors[v]
    return BLACK


def trips(G: PlabicGraph) -> tuple[tuple[Trip, ...], DecoratedPermutation]:
    """One trip per boundary vertex, plus the decorated trip permutation on
    boundary labels (fixed points colored by their lollipop)."""
    out = []
    images = {}
    white = set()
    for bd in G.boundary_order:
        end_bd, walk = _trip_from(G, bd)
        i, j = G.labels[bd], G.labels[end_bd]
        out.append(Trip(i, j, walk))
        images[i] = j
        if i == j and _leaf_color(G, walk) == WHITE:
            white.add(i)
    pi = tuple(images[i] for i in range(1, G.n + 1))
    return tuple(out), DecoratedPermutation(pi, frozenset(white))


def trip_permutation_positions(G: PlabicGraph) -> DecoratedPermutation:
    """The trip permutation on boundary *positions* (independent of labels)."""
    images = {}
    white = set()
    pos = {bd: p for p, bd in enumerate(G.boundary_order, start=1)}
    for bd in G.boundary_order:
        end_bd, walk = _trip_from(G, bd)
        images[pos[bd]] = pos[end_bd]
        if bd == end_bd and _leaf_color(G, walk) == WHITE:
            white.add(pos[bd])
    pi = tuple(images[p] for p in range(1, G.n + 1))
    return DecoratedPermutation(pi, frozenset(white))


# ---------------------------------------------------------------------------
# Face labelings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FaceLabeling:
    mode: str  # "source" | "target"
    faces: Faces
    labels: tuple[frozenset[int], ...]

    def label_of(self, idx: int) -> frozenset[int]:
        return self.labels[idx]

    def index_of(self, label: Iterable[int]) -> int:
        lab = frozenset(label)
        for i, l in enumerate(self.labels):
            if l == lab:
                return i
        raise KeyError(f"no face labeled {sorted(lab)}")

    def label_set(self) -> tuple[frozenset[int], ...]:
        return self.labels


def _edge_adjacency(G: PlabicGraph, fc: Faces, skip_edges: set) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {i: set() for i in range(len(fc.faces))}
    for eid in G.edges:
        if eid in skip_edges:
            continue
        f0 = fc.face_of.get((eid, 0))
        f1 = fc.face_of.get((eid, 1))
        if f0 is None or f1 is None or f0 == f1:
            continue
        adj[f0].add(f1)
        adj[f1].add(f0)
    return adj


def _trip_sides(G: PlabicGraph, fc: Faces, trip: Trip) -> dict[int, str]:
    """Assign LEFT/RIGHT of the trip to every interior face by flood fill."""
    side: dict[int, str] = {}

    def put(f: int | None, s: str) -> None:
        if f is None:
            return
        if side.get(f, s) != s:
            raise AmbiguousSide(
                f"face {f} lies on both sides of the trip {trip.start}->{trip.end}"
            )
        side[f] = s

    for d in trip.darts:
        eid, end = d
        put(fc.face_of.get(d), "L")
        put(fc.face_of.get((eid, 1 - end)), "R")

    trip_edges = {d[0] for d in trip.darts}
    adj = _edge_adjacency(G, fc, trip_edges)
    queue = list(side)
    while queue:
        f = queue.pop()
        for g in adj[f]:
            if g not in side:
                side[g] = side[f]
                queue.append(g)
            elif side[g] != side[f]:
                raise AmbiguousSide(
                    f"contradictory side assignment near trip {trip.start}->{trip.end}"
                )
    if len(side) != len(fc.faces):
        raise PlabicError("flood fill left faces unassigned")
    return side


def face_labeling(G: PlabicGraph, mode: str) -> FaceLabeling:
    """Source or target labeling: trip ``T(i -> j)`` deposits ``j`` (target)
    or ``i`` (source) in every face to its left; a white lollipop labels all
    faces, a black one labels none."""
    if mode not in ("source", "target"):
        raise ValueError(f"mode must be 'source' or 'target', got {mode!r}")
    fc = faces(G)
    all_trips, _ = trips(G)
    labels: list[set[int]] = [set() for _ in fc.faces]
    for trip in all_trips:
        if trip.start == trip.end:
            if _leaf_color(G, trip.darts) == WHITE:
                for lab in labels:
                    lab.add(trip.start)
            continue
        side = _trip_sides(G, fc, trip)
        mark = trip.end if mode == "target" else trip.start
        for f, s in side.items():
            if s == "L":
                labels[f].add(mark)
    return FaceLabeling(mode, fc, tuple(frozenset(l) for l in labels))


# ---------------------------------------------------------------------------
# Dual quiver
# ---------------------------------------------------------------------------

def dual_quiver_arrows(G: PlabicGraph, fc: Faces) -> list[tuple[int, int]]:
    """One arrow per internal edge, oriented to see the white endpoint on the
    left and the black endpoint on the right while crossing; oriented 2-cycles
    cancelled pairwise.  Faces are referenced by index into ``fc``."""
    raw: Counter[tuple[int, int]] = Counter()
    for eid, (a, b) in sorted(G.edges.items()):
        if a < 0 or b < 0:
            continue
        end_w = 0 if G.colors[a] == WHITE else 1
        w_dart = (eid, end_w)
        b_dart = (eid, 1 - end_w)
        f_left = fc.face_of.get(w_dart)
        f_right = fc.face_of.get(b_dart)
        if f_left is None or f_right is None or f_left == f_right:
            continue
        raw[(f_right, f_left)] += 1
    arrows = []
    for (s, t), m in sorted(raw.items()):
        m -= raw.get((t, s), 0)
        if m > 0:
            arrows.extend([(s, t)] * m)
    return arrows


def dual_quiver(G: PlabicGraph):
    """Dual quiver of G: one vertex per interior face, frozen iff the face is
    incident to the disk boundary; arrows between two frozen faces removed.
    Returns ``(quiver, faces)`` with quiver vertices = face indices."""
    from positroids.seeds import Quiver

    fc = faces(G)
    frozen = {i: f.boundary for i, f in enumerate(fc.faces)}
    arrows = [
        (s, t) for (s, t) in dual_quiver_arrows(G, fc) if not (frozen[s] and frozen[t])
    ]
    return Quiver(frozen=frozen, arrows=tuple(arrows)), fc


# ---------------------------------------------------------------------------
# Construction: lollipops and bridges
# ---------------------------------------------------------------------------

def lollipop_graph(k: int, n: int) -> PlabicGraph:
    """n boundary vertices, each with a lollipop: white on [1..k], black after.

    >>> G = lollipop_graph(2, 5)
    >>> len(faces(G))
    1
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    boundary = tuple(-p for p in range(1, n + 1))
    labels = {-p: p for p in range(1, n + 1)}
    colors = {p: (WHITE if p <= k else BLACK) for p in range(1, n + 1)}
    edges = {p: (-p, p) for p in range(1, n + 1)}
    rot = {p: (p,) for p in range(1, n + 1)}
    return PlabicGraph(boundary, labels, colors, edges, rot)


def _next_ids(G: PlabicGraph) -> tuple[int, int]:
    next_v = max(G.colors, default=0) + 1
    next_e = max(G.edges, default=0) + 1
    return next_v, next_e


def add_bridge(G: PlabicGraph, a: int, b: int) -> PlabicGraph:
    """Insert an (a b)-bridge at boundary positions a < b.

    Validity (checked against the bounded affine trip permutation): the lift
    satisfies ``f(a) > f(b)``, every boundary position strictly between a and b
    is a lollipop, and a lollipop at a (resp. b) is white (resp. black).
    Lollipop leaves at the endpoints are reused as bridge vertices; degree-2
    vertices are inserted if bipartiteness requires them.
    """
    n = G.n
    if not 1 <= a < b <= n:
        raise InvalidBridge(f"need 1 <= a < b <= n, got ({a}, {b})")
    lifted = permmod.bounded_affine(trip_permutation_positions(G))
    if lifted.window[a - 1] <= lifted.window[b - 1]:
        raise InvalidBridge(f"bounded affine permutation not decreasing on ({a}, {b})")

    def leaf_at(p: int) -> int | None:
        t = G.other_end(G.pendant_edge(G.boundary_order[p - 1]), G.boundary_order[p - 1])
        return t if len(G.rot[t]) == 1 else None

    for c in range(a + 1, b):
        if leaf_at(c) is None:
            raise InvalidBridge(f"boundary position {c} between {a} and {b} is not a lollipop")
    for p, want in ((a, WHITE), (b, BLACK)):
        t = leaf_at(p)
        if t is not None and G.colors[t] != want:
            raise InvalidBridge(f"lollipop at position {p} must be "
                                + ("white" if want == WHITE else "black"))

    colors = dict(G.colors)
    edges = dict(G.edges)
    rot = {v: list(r) for v, r in G.rot.items()}
    next_v, next_e = _next_ids(G)

    def attach(p: int, color: str) -> int:
        """Bridge vertex at position p; returns its id and updates state."""
        nonlocal next_v, next_e
        bd = G.boundary_order[p - 1]
        e_pend = G.pendant_edge(bd)
        t = G.other_end(e_pend, bd)
        if len(G.rot[t]) == 1:  # reuse the lollipop leaf
            return t
        v_new = next_v
        next_v += 1
        colors[v_new] = color
        e_inner = next_e
        next_e += 1
        # pendant edge now ends at v_new; new inner edge continues to t
        edges[e_pend] = (bd, v_new)
        edges[e_inner] = (v_new, t)
        rot[t] = [e_inner if e == e_pend else e for e in rot[t]]
        if colors[t] == color:  # bipartite fix: degree-2 buffer on the inner edge
            m = next_v
            next_v += 1
            colors[m] = WHITE if color == BLACK else BLACK
            e_buf = next_e
            next_e += 1
            edges[e_inner] = (v_new, m)
            edges[e_buf] = (m, t)
            rot[m] = [e_inner, e_buf]
            rot[t] = [e_buf if e == e_inner else e for e in rot[t]]
            rot[v_new] = [e_pend, e_inner]
        else:
            rot[v_new] = [e_pend, e_inner]
        return v_new

    w_new = attach(a, WHITE)
    b_new = attach(b, BLACK)
    e_br = next_e
    edges[e_br] = (w_new, b_new)

    def bridge_rotation(v: int, p: int, first: bool) -> list[int]:
        bd = G.boundary_order[p - 1]
        e_bd = next(e for e, ends in edges.items() if set(ends) == {bd, v})
        others = [e for e in rot.get(v, []) if e != e_bd] if v in rot else []
        inner = others[0] if others else None
        if first:  # white endpoint at a: ccw (bridge, boundary, interior)
            return [e_br, e_bd] + ([inner] if inner is not None else [])
        return [e_bd, e_br] + ([inner] if inner is not None else [])

    rot[w_new] = bridge_rotation(w_new, a, True)
    rot[b_new] = bridge_rotation(b_new, b, False)

    H = PlabicGraph(
        G.boundary_order,
        dict(G.labels),
        colors,
        edges,
        {v: tuple(r) for v, r in rot.items()},
    )
    H.validate()
    return H


def bridge_graph(k: int, n: int, x: Permutation) -> PlabicGraph:
    """Bridge graph for a Grassmannian permutation x: start from the lollipop
    graph and add the bridge ``(i, i+1)`` for each letter ``s_i`` of the
    columnar word of x, in application order.  The trip permutation comes out
    as ``x^{-1}`` with white fixed points exactly in [k]."""
    G = lollipop_graph(k, n)
    for i in permmod.columnar_expression(x, k):
        G = add_bridge(G, i, i + 1)
    return G


# ---------------------------------------------------------------------------
# Relabeling and the mirror reflection
# ---------------------------------------------------------------------------

def relabel_boundary(G: PlabicGraph, u: Permutation) -> PlabicGraph:
    """Replace each boundary label l by u(l); the embedding is unchanged."""
    if len(u) != G.n:
        raise ValueError("permutation size does not match the boundary")
    labels = {bd: u[lab - 1] for bd, lab in G.labels.items()}
    return replace(G, labels=labels)


def mirror(G: PlabicGraph) -> PlabicGraph:
    """Reflect the disk: all rotations reverse and the boundary cycle reverses.
    Trips reverse, so source labels of the mirror equal target labels of G."""
    return replace(
        G,
        boundary_order=tuple(reversed(G.boundary_order)),
        rot={v: tuple(reversed(r)) for v, r in G.rot.items()},
    )


# ---------------------------------------------------------------------------
# Local moves
# ---------------------------------------------------------------------------

def contract_degree2(G: PlabicGraph, x: int) -> PlabicGraph:
    """(M2) delete a degree-2 internal vertex not adjacent to the boundary and
    merge its two (same-colored) neighbors."""
    if G.is_boundary(x) or len(G.rot[x]) != 2:
        raise PlabicError(f"{x} is not an internal degree-2 vertex")
    e1, e2 = G.rot[x]
    u, v = G.other_end(e1, x), G.other_end(e2, x)
    if G.is_boundary(u) or G.is_boundary(v):
        raise PlabicError(f"{x} is adjacent to the boundary")
    if u == v:
        raise PlabicError(f"contracting {x} would create a loop")
    colors = dict(G.colors)
    edges = dict(G.edges)
    rot = {w: list(r) for w, r in G.rot.items()}
    del colors[x], rot[x], edges[e1], edges[e2]
    # splice v's other edges into u's rotation at the slot of e1
    rv = rot.pop(v)
    i = rv.index(e2)
    spliced = rv[i + 1:] + rv[:i]
    for e in spliced:
        a, b = edges[e]
        edges[e] = (u if a == v else a, u if b == v else b)
    ru = rot[u]
    j = ru.index(e1)
    rot[u] = ru[:j] + spliced + ru[j + 1:]
    del colors[v]
    H = PlabicGraph(G.boundary_order, dict(G.labels), colors, edges,
                    {w: tuple(r) for w, r in rot.items()})
    H.validate()
    return H


def expand_vertex(G: PlabicGraph, v: int, e_pair: tuple[int, int]) -> PlabicGraph:
    """(M2, reversed) split off a ccw-adjacent pair of edges of v onto a new
    same-colored vertex, joined to v through a new degree-2 vertex."""
    e_a, e_b = e_pair
    order = G.rot[v]
    i = order.index(e_a)
    if order[(i + 1) % len(order)] != e_b:
        raise PlabicError(f"edges {e_pair} are not ccw-adjacent at {v}")
    colors = dict(G.colors)
    edges = dict(G.edges)
    rot = {w: list(r) for w, r in G.rot.items()}
    next_v, next_e = _next_ids(G)
    v2, mid = next_v, next_v + 1
    e_v2mid, e_midv = next_e, next_e + 1
    colors[v2] = G.colors[v]
    colors[mid] = WHITE if G.colors[v] == BLACK else BLACK
    for e in (e_a, e_b):
        a, b = edges[e]
        edges[e] = (v2 if a == v else a, v2 if b == v else b)
    edges[e_v2mid] = (v2, mid)
    edges[e_midv] = (mid, v)
    rot[v2] = [e_a, e_b, e_v2mid]
    rot[mid] = [e_v2mid, e_midv]
    # rebuild v's rotation: everything except e_a, e_b, with the connector in their slot
    new_rv = []
    for j, e in enumerate(order):
        if e == e_a:
            new_rv.append(e_midv)
        elif e == e_b:
            continue
        else:
            new_rv.append(e)
    rot[v] = new_rv
    H = PlabicGraph(G.boundary_order, dict(G.labels), colors, edges,
                    {w: tuple(r) for w, r in rot.items()})
    H.validate()
    return H


def insert_degree2_pair(G: PlabicGraph, eid: int) -> PlabicGraph:
    """(M3) subdivide an edge with two new degree-2 vertices of alternating
    colors, keeping the graph bipartite."""
    u, v = G.edges[eid]
    for w in (u, v):
        if w > 0 and len(G.rot[w]) == 1:
            raise PlabicError(f"subdividing edge {eid} would strand the lollipop leaf {w}")
    colors = dict(G.colors)
    edges = dict(G.edges)
    rot = {w: list(r) for w, r in G.rot.items()}
    next_v, next_e = _next_ids(G)
    y, z = next_v, next_v + 1
    e_yz, e_zv = next_e, next_e + 1

    if u > 0:
        colors[y] = WHITE if G.colors[u] == BLACK else BLACK
    else:  # u is a boundary vertex; y must oppose z, which must oppose v
        colors[y] = G.colors[v]
    colors[z] = WHITE if colors[y] == BLACK else BLACK
    edges[eid] = (u, y)
    edges[e_yz] = (y, z)
    edges[e_zv] = (z, v)
    rot[y] = [eid, e_yz]
    rot[z] = [e_yz, e_zv]
    if v > 0:
        rot[v] = [e_zv if e == eid else e for e in rot[v]]
    H = PlabicGraph(G.boundary_order, dict(G.labels), colors, edges,
                    {w: tuple(r) for w, r in rot.items()})
    H.validate()
    return H


def remove_degree2_pair(G: PlabicGraph, y: int) -> PlabicGraph:
    """(M3, reversed) remove two adjacent degree-2 internal vertices and glue
    the hanging edges back together."""
    if G.is_boundary(y) or len(G.rot[y]) != 2:
        raise PlabicError(f"{y} is not an internal degree-2 vertex")
    z = next((G.other_end(e, y) for e in G.rot[y]
              if not G.is_boundary(G.other_end(e, y)) and len(G.rot[G.other_end(e, y)]) == 2),
             None)
    if z is None:
        raise PlabicError(f"{y} has no degree-2 neighbor")
    e_mid = next(e for e in G.rot[y] if G.other_end(e, y) == z)
    e_u = next(e for e in G.rot[y] if e != e_mid)
    e_v = next(e for e in G.rot[z] if e != e_mid)
    u, v = G.other_end(e_u, y), G.other_end(e_v, z)
    if u < 0 and v < 0:
        raise PlabicError("removal would join two boundary vertices")
    colors = dict(G.colors)
    edges = dict(G.edges)
    rot = {w: list(r) for w, r in G.rot.items()}
    del colors[y], colors[z], rot[y], rot[z], edges[e_mid], edges[e_v]
    edges[e_u] = (u, v)
    if v > 0:
        rot[v] = [e_u if e == e_v else e for e in rot[v]]
    H = PlabicGraph(G.boundary_order, dict(G.labels), colors, edges,
                    {w: tuple(r) for w, r in rot.items()})
    H.validate()
    return H


def full_contract(G: PlabicGraph) -> PlabicGraph:
    """Contract every eligible degree-2 vertex, smallest id first."""
    while True:
        candidates = sorted(
            x for x, r in G.rot.items()
            if len(r) == 2
            and not any(G.is_boundary(G.other_end(e, x)) for e in r)
            and G.other_end(r[0], x) != G.other_end(r[1], x)
        )
        if not candidates:
            return G
        G = contract_degree2(G, candidates[0])


def _square_face_data(G: PlabicGraph, label: frozenset[int]):
    labeling = face_labeling(G, "target")
    idx = labeling.index_of(label)
    face = labeling.faces.faces[idx]
    if face.boundary or len(face.darts) != 4:
        raise NotSquareEligible(f"face {sorted(label)} is not an interior quadrilateral")
    if any(isinstance(d[0], tuple) for d in face.darts):
        raise NotSquareEligible("face touches the boundary circle")
    corners = [G.dart_head(d) for d in face.darts]
    if len(set(corners)) != 4 or any(G.is_boundary(c) for c in corners):
        raise NotSquareEligible("face corners are not four distinct internal vertices")
    return face, corners


def square_move(G: PlabicGraph, label: Iterable[int]) -> PlabicGraph:
    """(M1) square move at the interior face carrying the given target label.

    The graph is first fully contracted; corners of degree > 3 are expanded so
    the face has four trivalent corners, the four colors are switched, and
    degree-2 vertices are inserted on the legs wherever bipartiteness needs
    repair.  The trip permutation is unchanged.
    """
    label = frozenset(label)
    G = full_contract(G)
    face, corners = _square_face_data(G, label)
    if any(len(G.rot[c]) < 3 for c in corners):
        raise NotSquareEligible("square face has a degree-2 corner")

    # normalize: expand corners of degree > 3 down to trivalent
    while True:
        face, corners = _square_face_data(G, label)
        big = [
            (i, c) for i, c in enumerate(corners) if len(G.rot[c]) > 3
        ]
        if not big:
            break
        i, c = big[0]
        e_in = face.darts[i][0]
        e_out = face.darts[(i + 1) % 4][0]
        G = expand_vertex(G, c, (e_out, e_in))

    face, corners = _square_face_data(G, label)
    cols = [G.colors[c] for c in corners]
    if cols[0] == cols[1] or cols[1] == cols[2]:
        raise NotSquareEligible("square face colors do not alternate")

    colors = dict(G.colors)
    edges = dict(G.edges)
    rot = {w: list(r) for w, r in G.rot.items()}
    for c in corners:
        colors[c] = WHITE if colors[c] == BLACK else BLACK
    face_edges = {d[0] for d in face.darts}
    next_v, next_e = _next_ids(G)
    for c in corners:
        leg = next(e for e in G.rot[c] if e not in face_edges)
        z = G.other_end(leg, c)
        if z > 0 and colors[z] == colors[c]:
            m = next_v
            next_v += 1
            colors[m] = WHITE if colors[c] == BLACK else BLACK
            e_new = next_e
            next_e += 1
            edges[leg] = (c, m)
            edges[e_new] = (m, z)
            rot[m] = [leg, e_new]
            rot[z] = [e_new if e == leg else e for e in rot[z]]
    H = PlabicGraph(G.boundary_order, dict(G.labels), colors, edges,
                    {w: tuple(r) for w, r in rot.items()})
    H.validate()
    return full_contract(H)


def square_eligible_labels(G: PlabicGraph) -> tuple[frozenset[int], ...]:
    """Target labels of the faces where a square move currently applies."""
    H = full_contract(G)
    labeling = face_labeling(H, "target")
    out = []
    for idx, face in enumerate(labeling.faces.faces):
        try:
            _square_face_data(H, labeling.labels[idx])
        except (NotSquareEligible, KeyError):
            continue
        corners = [H.dart_head(d) for d in face.darts]
        if all(len(H.rot[c]) >= 3 for c in corners):
            out.append(labeling.labels[idx])
    return tuple(out)


# ---------------------------------------------------------------------------
# Reduction (R1) and reducedness witnesses
# ---------------------------------------------------------------------------

def parallel_edge_reduction_applicable(G: PlabicGraph) -> tuple[int, int] | None:
    """A pair of trivalent, oppositely-colored vertices joined by parallel
    edges, if one exists in G itself."""
    seen: Counter[tuple[int, int]] = Counter()
    for a, b in G.edges.values():
        if a > 0 and b > 0:
            seen[tuple(sorted((a, b)))] += 1
    for (a, b), m in sorted(seen.items()):
        if m >= 2 and len(G.rot[a]) == 3 and len(G.rot[b]) == 3:
            return (a, b)
    return None


@dataclass(frozen=True)
class ReducednessReport:
    round_trips: int
    self_intersecting_trips: tuple[int, ...]
    parallel_trip_pairs: tuple[tuple[int, int], ...]
    r1_applicable: bool

    @property
    def passed(self) -> bool:
        return (
            self.round_trips == 0
            and not self.self_intersecting_trips
            and not self.parallel_trip_pairs
            and not self.r1_applicable
        )


def reducedness_witness_checks(G: PlabicGraph) -> ReducednessReport:
    """Necessary conditions for reducedness: no interior round trips, no trip
    using an edge in both directions, no two trips sharing two edges in the
    same relative order, and (R1) not directly applicable."""
    all_trips, _ = trips(G)
    used = {d for t in all_trips for d in t.darts}
    round_trips = 0
    seen = set(used)
    for d0 in G.all_darts(include_arcs=False):
        if d0 in seen:
            continue
        d = d0
        while True:
            seen.add(d)
            d = G.trip_next(d)
            if d == d0:
                break
        round_trips += 1

    selfint = tuple(
        t.start for t in all_trips
        if t.start != t.end and len({d[0] for d in t.darts}) < len(t.darts)
    )

    parallel = []
    for i, t1 in enumerate(all_trips):
        order1 = {d[0]: p for p, d in enumerate(t1.darts)}
        for t2 in all_trips[i + 1:]:
            # shared edges in t2's traversal order; flag a pair t1 also
            # traverses in that order
            shared = [d[0] for d in t2.darts if d[0] in order1]
            if any(
                order1[shared[ei]] < order1[shared[ej]]
                for ei in range(len(shared))
                for ej in range(ei + 1, len(shared))
            ):
                parallel.append((t1.start, t2.start))

    return ReducednessReport(
        round_trips,
        selfint,
        tuple(sorted(set(parallel))),
        parallel_edge_reduction_applicable(G) is not None,
    )


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def to_json(G: PlabicGraph) -> dict:
    """Canonical JSON form: boundary vertex at clockwise position p becomes
    id -p; rotations list neighbor ids counterclockwise."""
    pos = {bd: -p for p, bd in enumerate(G.boundary_order, start=1)}

    def vid(v: int) -> int:
        return pos.get(v, v)

    return {
        "n": G.n,
        "boundary_labels": list(G.boundary_labels),
        "vertices": [{"id": v, "color": G.colors[v]} for v in sorted(G.colors)],
        "edges": [[vid(a), vid(b)] for _, (a, b) in sorted(G.edges.items())],
        "rotations": {
            str(v): [vid(G.other_end(e, v)) for e in G.rot[v]] for v in sorted(G.rot)
        },
    }


def from_json(data: dict) -> PlabicGraph:
    n = data["n"]
    boundary = tuple(-p for p in range(1, n + 1))
    labels = {-p: lab for p, lab in enumerate(data["boundary_labels"], start=1)}
    colors = {v["id"]: v["color"] for v in data["vertices"]}
    edges = {i: (a, b) for i, (a, b) in enumerate(data["edges"], start=1)}
    # rotations reference neighbors; recover edge ids, consuming parallel
    # edges in listed order
    incident: dict[int, dict[int, list[int]]] = {}
    for eid, (a, b) in edges.items():
        incident.setdefault(a, {}).setdefault(b, []).append(eid)
        incident.setdefault(b, {}).setdefault(a, []).append(eid)
    rot = {}
    for v_str, nbrs in data["rotations"].items():
        v = int(v_str)
        pools = {w: list(eids) for w, eids in incident.get(v, {}).items()}
        rot[v] = tuple(pools[w].pop(0) for w in nbrs)
    G = PlabicGraph(boundary, labels, colors, edges, rot)
    G.validate()
    return G


def to_dot(G: PlabicGraph, labeling: FaceLabeling | None = None) -> str:
    lines = ["graph plabic {"]
    if labeling is not None:
        for i, lab in enumerate(labeling.labels):
            lines.append(f'  // face {i}: {"".join(str(x) for x in sorted(lab))}')
    for bd in G.boundary_order:
        lines.append(f'  v{bd} [shape=plaintext, label="{G.labels[bd]}"];')
    for v in sorted(G.colors):
        fill = "black" if G.colors[v] == BLACK else "white"
        lines.append(f'  v{v} [shape=circle, style=filled, fillcolor={fill}, label=""];')
    for _, (a, b) in sorted(G.edges.items()):
        lines.append(f"  v{a} -- v{b};")
    lines.append("}")
    return "\n".join(lines)
