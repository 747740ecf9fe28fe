"""Matroid polytopes over exact rationals.

Vertices are the 0/1 incidence vectors of the bases.  Facets come from a
double description computation in coordinates on the affine hull, and the
face lattice is the intersection closure of the facet vertex sets.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .toric import GradedPoset

Point = tuple[Fraction, ...]

MAX_FACET_DIM = 12
MAX_FACET_VERTICES = 64


class CapExceededError(RuntimeError):
    pass


def _rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / Fraction(m[r][c])
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def _differences(points: Sequence[Point]) -> list[list[Fraction]]:
    base = points[0]
    return [[a - b for a, b in zip(p, base)] for p in points[1:]]


def affine_dimension(points: Sequence[Point]) -> int:
    if not points:
        raise ValueError("affine dimension of an empty point set")
    reduced, _ = _rref(_differences(points), len(points[0]))
    return len(reduced)


def as_point(coords) -> Point:
    return tuple(Fraction(c) for c in coords)


def incidence_vertices(matroid) -> list[Point]:
    """One 0/1 incidence vector per basis, in basis order."""
    n = matroid.ground_size
    pts = []
    for basis in matroid.bases:
        members = set(basis)
        pts.append(tuple(Fraction(int(i in members)) for i in range(1, n + 1)))
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate bases")
    return pts


def product_of_simplices_points(m: int, n: int) -> list[Point]:
    """Vertices ``(e_i, e_j)`` of the product of an m-simplex and an n-simplex."""
    pts = []
    for i in range(m + 1):
        for j in range(n + 1):
            v = [0] * (m + n + 2)
            v[i] = 1
            v[m + 1 + j] = 1
            pts.append(as_point(v))
    return pts


def simplex_points(d: int) -> list[Point]:
    return [as_point([int(i == j) for j in range(d + 1)]) for i in range(d + 1)]


@dataclass(frozen=True)
class Hyperplane:
    """Halfspace ``normal . x <= offset`` with a primitive integer normal."""

    normal: tuple[int, ...]
    offset: Fraction

    def value(self, point: Point) -> Fraction:
        return sum((a * x for a, x in zip(self.normal, point)), Fraction(0))


@dataclass(frozen=True)
class Facet:
    hyperplane: Hyperplane
    tight: frozenset[int]


def _canonical_normal(vec: Sequence[Fraction]) -> tuple[int, ...]:
    denom = math.lcm(*(v.denominator for v in vec))
    ints = [int(v * denom) for v in vec]
    g = math.gcd(*ints)
    return tuple(i // g for i in ints)


class _AffineChart:
    """Coordinates of the points in a subset of axes that is injective on the affine hull."""

    def __init__(self, points: Sequence[Point]):
        self.points = list(points)
        self.ambient = len(points[0])
        _, pivots = _rref(_differences(points), self.ambient)
        self.axes = pivots
        self.dim = len(pivots)
        self.coords = [tuple(p[a] for a in pivots) for p in points]

    def dim_of(self, indices) -> int:
        idx = list(indices)
        if not idx:
            return -1
        return affine_dimension([self.coords[i] for i in idx]) if self.dim else 0


def _mask(indices) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out


def _indices(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _integer_row(values: Sequence[Fraction]) -> list[int]:
    denom = math.lcm(*(Fraction(v).denominator for v in values))
    return [int(v * denom) for v in values]


def _primitive(vec: list[int]) -> tuple[int, ...]:
    g = math.gcd(*vec)
    return tuple(v // g for v in vec) if g > 1 else tuple(vec)


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _extreme_rays(rows: list[list[int]], start: list[int]) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone ``{h : row . h >= 0 for every row}``.

    Double description: ``start`` indexes ``len(h)`` linearly independent rows
    whose cone is simplicial; the other rows are then added one at a time.
    Two rays are adjacent when no third ray is tight on every row they share.
    """
    dim = len(rows[0])
    inv, _ = _rref([[Fraction(v) for v in rows[i]] + [Fraction(int(j == k)) for k in range(dim)]
                    for j, i in enumerate(start)], 2 * dim)
    # columns of the inverse of the start block are the initial rays
    rays = [_primitive(_integer_row([inv[r][dim + c] for r in range(dim)])) for c in range(dim)]
    done = list(start)
    tight = [_mask(i for i in done if _dot(rows[i], ray) == 0) for ray in rays]
    for i in range(len(rows)):
        if i in start:
            continue
        vals = [_dot(rows[i], ray) for ray in rays]
        pos = [j for j, v in enumerate(vals) if v > 0]
        neg = [j for j, v in enumerate(vals) if v < 0]
        keep = [j for j, v in enumerate(vals) if v >= 0]
        new_rays = [rays[j] for j in keep]
        new_tight = [tight[j] | (1 << i if vals[j] == 0 else 0) for j in keep]
        for a in pos:
            for b in neg:
                common = tight[a] & tight[b]
                if any(common & t == common for k, t in enumerate(tight) if k not in (a, b)):
                    continue
                ray = _primitive([vals[a] * y - vals[b] * x for x, y in zip(rays[a], rays[b])])
                new_rays.append(ray)
                new_tight.append(common | 1 << i)
        rays, tight = new_rays, new_tight
        done.append(i)
    return rays


def enumerate_facets(
    points: Sequence[Point],
    max_dim: int = MAX_FACET_DIM,
    max_vertices: int = MAX_FACET_VERTICES,
) -> list[Facet]:
    """All facets of ``conv(points)`` relative to its affine hull.

    Facet inequalities ``a . x <= b`` in chart coordinates are the extreme rays
    ``(b, -a)`` of the cone of inequalities valid on every point.
    """
    points = list(points)
    if len(points) > max_vertices:
        raise CapExceededError(f"{len(points)} vertices exceed the cap {max_vertices}")
    chart = _AffineChart(points)
    d = chart.dim
    if d > max_dim:
        raise CapExceededError(f"dimension {d} exceeds the cap {max_dim}")
    if d < 1:
        raise ValueError("facet enumeration needs at least two affinely independent points")
    rows = [_integer_row([Fraction(1), *q]) for q in chart.coords]
    _, start = _rref([[Fraction(v) for v in r] for r in zip(*rows)], len(rows))
    found: dict[int, Facet] = {}
    for ray in _extreme_rays(rows, start):
        tight = frozenset(i for i, r in enumerate(rows) if _dot(r, ray) == 0)
        ambient = [Fraction(0)] * chart.ambient
        for axis, c in zip(chart.axes, ray[1:]):
            ambient[axis] = Fraction(-c)
        canon = _canonical_normal(ambient)
        offset = sum((a * x for a, x in zip(canon, points[min(tight)])), Fraction(0))
        found[_mask(tight)] = Facet(Hyperplane(canon, offset), tight)
    return sorted(found.values(), key=lambda f: sorted(f.tight))


@dataclass
class FaceLattice:
    """Faces as vertex-index sets, from the empty face (rank 0) to the polytope."""

    points: list[Point]
    faces: list[frozenset[int]]
    ranks: list[int]
    hasse: list[tuple[int, int]]

    @property
    def rank(self) -> int:
        return self.ranks[-1]

    @property
    def dimension(self) -> int:
        return self.rank - 1

    def index_of(self, face) -> int:
        return self.faces.index(frozenset(face))

    def to_poset(self) -> GradedPoset:
        return GradedPoset(self.ranks, self.hasse)

    def level_sizes(self) -> list[int]:
        out = [0] * (self.rank + 1)
        for r in self.ranks:
            out[r] += 1
        return out


def build_face_lattice(points: Sequence[Point], facets: Sequence[Facet] | None = None,
                       max_faces: int | None = None) -> FaceLattice:
    points = list(points)
    chart = _AffineChart(points)
    full = (1 << len(points)) - 1
    if facets is None:
        facets = enumerate_facets(points) if chart.dim >= 1 else []
    facet_masks = sorted({_mask(f.tight) for f in facets})

    seen = {full, 0}
    queue = deque(facet_masks)
    while queue:
        face = queue.popleft()
        if face in seen:
            continue
        seen.add(face)
        if max_faces is not None and len(seen) > max_faces:
            raise CapExceededError(f"face lattice exceeds {max_faces} elements")
        for g in facet_masks:
            h = face & g
            if h not in seen:
                queue.append(h)

    ranked = []
    for mask in seen:
        idx = _indices(mask)
        ranked.append((chart.dim_of(idx) + 1, idx, mask))
    ranked.sort(key=lambda t: (t[0], t[1]))
    faces = [frozenset(idx) for _, idx, _ in ranked]
    ranks = [r for r, _, _ in ranked]
    masks = [m for _, _, m in ranked]

    by_rank: dict[int, list[int]] = {}
    for i, r in enumerate(ranks):
        by_rank.setdefault(r, []).append(i)
    hasse = []
    for r, lows in by_rank.items():
        for lo in lows:
            for hi in by_rank.get(r + 1, ()):
                if masks[lo] & masks[hi] == masks[lo]:
                    hasse.append((lo, hi))
    hasse.sort()
    return FaceLattice(points, faces, ranks, hasse)


def f_vector(lattice: FaceLattice) -> tuple[int, ...]:
    return tuple(lattice.level_sizes()[1:])


def euler_characteristic_holds(fvec: Sequence[int]) -> bool:
    """Euler-Poincare for ``(f_0, ..., f_d)`` with ``f_d = 1``: ``f_0 - f_1 + ... = 1``."""
    d = len(fvec) - 1
    boundary = sum((-1) ** i * f for i, f in enumerate(fvec[:d]))
    return fvec[d] == 1 and boundary == 1 - (-1) ** d


def squared_distance(p: Point, q: Point) -> Fraction:
    return sum(((a - b) ** 2 for a, b in zip(p, q)), Fraction(0))


@dataclass(frozen=True)
class EdgeMetrics:
    squared_lengths: frozenset[Fraction]
    graph_diameter: int
    max_squared_distance: Fraction


def edge_metrics(points: Sequence[Point], lattice: FaceLattice) -> EdgeMetrics:
    edges = [tuple(sorted(f)) for f, r in zip(lattice.faces, lattice.ranks) if r == 2]
    lengths = frozenset(squared_distance(points[a], points[b]) for a, b in edges)
    adj: dict[int, list[int]] = {i: [] for i in range(len(points))}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    diameter = 0
    for src in adj:
        dist = {src: 0}
        todo = deque([src])
        while todo:
            u = todo.popleft()
            for v in adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    todo.append(v)
        if len(dist) != len(adj):
            raise ValueError("1-skeleton is disconnected")
        diameter = max(diameter, max(dist.values()))
    far = max((squared_distance(p, q) for p, q in combinations(points, 2)), default=Fraction(0))
    return EdgeMetrics(lengths, diameter, far)


def polytope_json(points: Sequence[Point], facets: Sequence[Facet], fvec: Sequence[int]) -> dict:
    return {
        "vertices": [[str(c) for c in p] for p in points],
        "facets": [
            {
                "normal": [str(c) for c in f.hyperplane.normal],
                "offset": str(f.hyperplane.offset),
                "tight": sorted(f.tight),
            }
            for f in facets
        ],
        "f_vector": list(fvec),
    }


def dumps_polytope(points, facets, fvec) -> str:
    return json.dumps(polytope_json(points, facets, fvec), sort_keys=True)
