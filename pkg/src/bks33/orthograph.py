"""Orthogonality graphs, triad/dyad decomposition, and rotation-induced permutations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Sequence, Union

from .majorana import MPair, MVector, overlap2_closed_form
from .rays import Ray, is_orthogonal, proportional
from .scalar import DEFAULT_TOL

Edge = tuple[int, int]
IndexPermutation = dict[int, int]
RotationMatrix = tuple[tuple[int, int, int], ...]

CATALOG_SIZE = 33


class AmbiguousDecompositionError(ValueError):
    """Raised when an edge lies in two distinct triangles."""


class NotClosedError(ValueError):
    """Raised when a rotation does not map a catalog onto itself."""


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class OrthoGraph:
    """Undirected graph on catalog indices with orthogonal pairs as edges."""

    vertices: frozenset[int]
    edges: frozenset[Edge]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _edge(u, v) in self.edges

    @cached_property
    def _adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(n) for v, n in adj.items()}

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adjacency[v]

    def delete_vertex(self, v: int) -> OrthoGraph:
        if v not in self.vertices:
            raise ValueError(f"vertex {v} not in graph")
        return OrthoGraph(
            self.vertices - {v},
            frozenset(e for e in self.edges if v not in e),
        )

    def triangles(self) -> list[tuple[int, int, int]]:
        """All triangles as sorted index triples, lexicographically ordered."""
        found = []
        for u, v in sorted(self.edges):
            for w in sorted(self._adjacency[u] & self._adjacency[v]):
                if w > v:
                    found.append((u, v, w))
        return sorted(found)


@dataclass(frozen=True)
class TriadDyadDecomposition:
    """Every edge covered exactly once: triangles plus triangle-free edges."""

    triads: tuple[tuple[int, int, int], ...]
    dyads: tuple[Edge, ...]

    @property
    def edge_count(self) -> int:
        return 3 * len(self.triads) + len(self.dyads)

    def edges(self) -> frozenset[Edge]:
        out: set[Edge] = set(self.dyads)
        for a, b, c in self.triads:
            out.update(((a, b), (a, c), (b, c)))
        return frozenset(out)


Catalog = Union[Sequence[Ray], Sequence[MPair]]


def build_graph(catalog: Catalog, tol: float = DEFAULT_TOL) -> OrthoGraph:
    """Orthogonality graph of a 33-entry catalog of rays or M-vector pairs."""
    items = list(catalog)
    if len(items) != CATALOG_SIZE:
        raise ValueError(f"expected {CATALOG_SIZE} catalog entries, got {len(items)}")
    edges: set[Edge] = set()
    for (i, a), (j, b) in combinations(enumerate(items, start=1), 2):
        if isinstance(a, MPair):
            value = overlap2_closed_form(a, b)
            orthogonal = (value == 0) if a.is_exact and b.is_exact else (
                value < tol * tol
            )
        else:
            orthogonal = is_orthogonal(a, b, tol)
        if orthogonal:
            edges.add((i, j))
    return OrthoGraph(frozenset(range(1, CATALOG_SIZE + 1)), frozenset(edges))


def decompose(g: OrthoGraph) -> TriadDyadDecomposition:
    """Triads are the triangles; dyads the edges in no triangle.

    Rejects graphs where an edge lies in two triangles, since then the
    exactly-once edge cover would not exist.
    """
    triads = g.triangles()
    seen: set[Edge] = set()
    for a, b, c in triads:
        for e in ((a, b), (a, c), (b, c)):
            if e in seen:
                raise AmbiguousDecompositionError(
                    f"edge {e} lies in two distinct triangles"
                )
            seen.add(e)
    dyads = tuple(e for e in sorted(g.edges) if e not in seen)
    return TriadDyadDecomposition(tuple(triads), dyads)


# Published orthogonality table shared by the real and complex catalogs:
# 16 triads and 24 dyads.
_REFERENCE_TRIADS: tuple[tuple[int, int, int], ...] = (
    (1, 2, 3), (1, 4, 5), (1, 26, 33), (1, 29, 30),
    (2, 6, 7), (2, 22, 32), (2, 25, 31), (3, 8, 9),
    (3, 23, 28), (3, 24, 27), (4, 10, 13), (5, 11, 12),
    (6, 14, 17), (7, 15, 16), (8, 18, 21), (9, 19, 20),
)

_REFERENCE_DYADS: tuple[Edge, ...] = (
    (10, 24), (10, 25), (11, 23), (11, 25),
    (12, 22), (12, 24), (13, 22), (13, 23),
    (14, 28), (14, 29), (15, 27), (15, 29),
    (16, 26), (16, 28), (17, 26), (17, 27),
    (18, 32), (18, 33), (19, 31), (19, 33),
    (20, 30), (20, 32), (21, 30), (21, 31),
)


def reference_decomposition() -> TriadDyadDecomposition:
    """The published 16-triad / 24-dyad table, transcribed verbatim."""
    return TriadDyadDecomposition(_REFERENCE_TRIADS, _REFERENCE_DYADS)


def reference_graph() -> OrthoGraph:
    d = reference_decomposition()
    return OrthoGraph(frozenset(range(1, CATALOG_SIZE + 1)), d.edges())


#: 120-degree rotation about the (1,1,1) axis: x -> y -> z -> x.
ROTATION_111: RotationMatrix = ((0, 0, 1), (1, 0, 0), (0, 1, 0))

#: Proper rotations about the x-axis, keyed by angle in degrees.
X_AXIS_ROTATIONS: dict[int, RotationMatrix] = {
    90: ((1, 0, 0), (0, 0, -1), (0, 1, 0)),
    180: ((1, 0, 0), (0, -1, 0), (0, 0, -1)),
    270: ((1, 0, 0), (0, 0, 1), (0, -1, 0)),
}


def _check_rotation(m: RotationMatrix) -> None:
    det = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    if det != 1:
        raise ValueError("rotation must be proper (determinant +1)")
    for i in range(3):
        for j in range(3):
            dot = sum(m[i][k] * m[j][k] for k in range(3))
            if dot != (1 if i == j else 0):
                raise ValueError("rotation must be orthogonal")


def _rotate_ray(m: RotationMatrix, ray: Ray) -> Ray:
    v = ray.components
    return Ray(
        tuple(m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2] for i in range(3))
    )


def _rotate_mvector(m: RotationMatrix, v: MVector) -> MVector:
    comp = (v.x, v.y, v.z)
    return MVector(
        *(m[i][0] * comp[0] + m[i][1] * comp[1] + m[i][2] * comp[2] for i in range(3))
    )


def _same_direction(u: MVector, v: MVector, tol: float) -> bool:
    """True iff v is a POSITIVE multiple of u (directions, not rays)."""
    if u.is_exact and v.is_exact:
        scale: Fraction | None = None
        for a, b in zip((u.x, u.y, u.z), (v.x, v.y, v.z)):
            if a == 0:
                if b != 0:
                    return False
            else:
                s = b / a
                if scale is None:
                    scale = s
                elif s != scale:
                    return False
        return scale is not None and scale > 0
    return all(abs(a - b) <= tol for a, b in zip(u.unit(), v.unit()))


def induced_permutation(
    rotation: RotationMatrix, catalog: Catalog, tol: float = DEFAULT_TOL
) -> IndexPermutation:
    """Permutation pi with rotation * catalog[i] matching catalog[pi(i)].

    M-vector pairs are rotated vectorwise and matched unordered; rays are
    matched projectively.  Raises NotClosedError if the rotation does not
    map the catalog onto itself.
    """
    _check_rotation(rotation)
    items = list(catalog)
    perm: IndexPermutation = {}
    for i, item in enumerate(items, start=1):
        if isinstance(item, MPair):
            rotated_pair = MPair(
                _rotate_mvector(rotation, item.first),
                _rotate_mvector(rotation, item.second),
            )
            matches = [
                j
                for j, cand in enumerate(items, start=1)
                if _pairs_same(rotated_pair, cand, tol)
            ]
        else:
            rotated = _rotate_ray(rotation, item)
            matches = [
                j
                for j, cand in enumerate(items, start=1)
                if proportional(rotated, cand, tol)
            ]
        if len(matches) != 1:
            raise NotClosedError(
                f"rotation image of entry {i} matches catalog entries {matches}"
            )
        perm[i] = matches[0]
    if len(set(perm.values())) != len(items):
        raise NotClosedError("rotation does not permute the catalog")
    return perm


def _pairs_same(p: MPair, q: MPair, tol: float) -> bool:
    return (
        _same_direction(p.first, q.first, tol)
        and _same_direction(p.second, q.second, tol)
    ) or (
        _same_direction(p.first, q.second, tol)
        and _same_direction(p.second, q.first, tol)
    )


def is_automorphism(perm: IndexPermutation, g: OrthoGraph) -> bool:
    """True iff the permutation maps the edge set onto itself."""
    if set(perm) != g.vertices or set(perm.values()) != g.vertices:
        return False
    return all(_edge(perm[u], perm[v]) in g.edges for u, v in g.edges)
