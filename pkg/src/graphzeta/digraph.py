"""Finite digraphs with multi-arcs and multi-loops.

Vertices are ``0 .. n-1``; an arc is identified by its position in the arc
list, so two arcs with the same endpoints are distinct multi-arcs.  Vertex
order is ascending index and arc order is ascending id everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .algebra import ZZ, Matrix


@dataclass(frozen=True)
class Digraph:
    vertex_count: int
    arcs: tuple[tuple[int, int], ...] = ()
    vertex_names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple((int(u), int(v)) for u, v in self.arcs))
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        for k, (u, v) in enumerate(self.arcs):
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"arc {k} = ({u}, {v}) has an endpoint outside 0..{self.vertex_count - 1}")
        if self.vertex_names is not None and len(self.vertex_names) != self.vertex_count:
            raise ValueError("vertex_names length differs from vertex_count")

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def tail(self, a: int) -> int:
        return self.arcs[a][0]

    def head(self, a: int) -> int:
        return self.arcs[a][1]

    def is_loop(self, a: int) -> bool:
        u, v = self.arcs[a]
        return u == v

    @property
    def loops(self) -> tuple[int, ...]:
        return tuple(a for a, (u, v) in enumerate(self.arcs) if u == v)

    @cached_property
    def _by_pair(self) -> dict[tuple[int, int], tuple[int, ...]]:
        out: dict[tuple[int, int], list[int]] = {}
        for a, uv in enumerate(self.arcs):
            out.setdefault(uv, []).append(a)
        return {k: tuple(v) for k, v in out.items()}

    def arcs_from_to(self, u: int, v: int) -> tuple[int, ...]:
        """The set of arcs with tail ``u`` and head ``v``, ascending ids."""
        return self._by_pair.get((u, v), ())

    def out_arcs(self, u: int) -> tuple[int, ...]:
        return tuple(a for a, (x, _) in enumerate(self.arcs) if x == u)

    def in_arcs(self, v: int) -> tuple[int, ...]:
        return tuple(a for a, (_, y) in enumerate(self.arcs) if y == v)

    @cached_property
    def successors(self) -> tuple[tuple[int, ...], ...]:
        """For each arc ``a``, the arcs whose tail is the head of ``a``."""
        by_tail: dict[int, list[int]] = {}
        for a, (u, _) in enumerate(self.arcs):
            by_tail.setdefault(u, []).append(a)
        return tuple(tuple(by_tail.get(v, ())) for _, v in self.arcs)

    @cached_property
    def inverse_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(self.arcs_from_to(v, u)) for u, v in self.arcs)

    def vertex_name(self, v: int) -> str:
        return self.vertex_names[v] if self.vertex_names else f"v{v + 1}"

    def relabel_arcs(self, perm) -> "Digraph":
        """Digraph whose arc ``i`` is this digraph's arc ``perm[i]``."""
        return Digraph(self.vertex_count, tuple(self.arcs[p] for p in perm), self.vertex_names)


@dataclass(frozen=True)
class Graph:
    """Undirected multigraph; an edge ``(u, u)`` is a loop."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        for u, v in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside the vertex range")

    @property
    def loop_count(self) -> int:
        return sum(1 for u, v in self.edges if u == v)

    def is_simple(self) -> bool:
        seen = set()
        for u, v in self.edges:
            if u == v:
                return False
            key = (min(u, v), max(u, v))
            if key in seen:
                return False
            seen.add(key)
        return True

    def adjacency_matrix(self) -> Matrix:
        """``A[u][v]`` counts edges between ``u`` and ``v``; a loop adds 1 on the diagonal."""
        n = self.vertex_count
        a = [[0] * n for _ in range(n)]
        for u, v in self.edges:
            a[u][v] += 1
            if u != v:
                a[v][u] += 1
        return Matrix.from_rows(ZZ, a) if n else Matrix.zeros(ZZ, 0)

    def degree_matrix(self) -> Matrix:
        """Diagonal matrix of non-loop degrees."""
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            if u != v:
                deg[u] += 1
                deg[v] += 1
        return Matrix.diagonal(ZZ, deg)


@dataclass(frozen=True)
class PhiPartition:
    phi1: tuple[tuple[int, int], ...]
    phi2: tuple[tuple[int, int], ...]
    phi3: tuple[tuple[int, int], ...]

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """All of Phi in lexicographic vertex order."""
        return tuple(sorted(self.phi1 + self.phi2 + self.phi3))

    def kind(self, pair) -> int:
        for k, part in enumerate((self.phi1, self.phi2, self.phi3), start=1):
            if pair in part:
                return k
        return 0


def _check_arc(d: Digraph, a: int):
    if not (0 <= a < d.arc_count):
        raise IndexError(f"arc id {a} out of range 0..{d.arc_count - 1}")


def _check_vertex(d: Digraph, v: int):
    if not (0 <= v < d.vertex_count):
        raise IndexError(f"vertex {v} out of range 0..{d.vertex_count - 1}")


def inverse_set(d: Digraph, a: int) -> frozenset[int]:
    """All arcs running from ``head(a)`` back to ``tail(a)``; loops include themselves."""
    _check_arc(d, a)
    return d.inverse_sets[a]


def arcs_between(d: Digraph, u: int, v: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    _check_vertex(d, u)
    _check_vertex(d, v)
    return d.arcs_from_to(u, v), d.arcs_from_to(v, u)


def phi_partition(d: Digraph) -> PhiPartition:
    """Split vertex pairs ``u <= v`` joined by at least one arc into loop pairs,
    one-directional pairs and bidirectional pairs."""
    pairs = sorted({(min(u, v), max(u, v)) for u, v in d.arcs})
    p1, p2, p3 = [], [], []
    for u, v in pairs:
        if u == v:
            p1.append((u, v))
        elif d.arcs_from_to(u, v) and d.arcs_from_to(v, u):
            p3.append((u, v))
        else:
            p2.append((u, v))
    return PhiPartition(tuple(p1), tuple(p2), tuple(p3))


def symmetric_digraph(g: Graph) -> tuple[Digraph, list[tuple[int, ...]]]:
    """Symmetric digraph of ``g`` plus, per edge, the ids of the arcs it produced.

    A non-loop edge ``{u, v}`` becomes ``(u, v)`` and ``(v, u)``; a loop becomes a
    single directed loop.
    """
    arcs: list[tuple[int, int]] = []
    provenance: list[tuple[int, ...]] = []
    for u, v in g.edges:
        if u == v:
            provenance.append((len(arcs),))
            arcs.append((u, u))
        else:
            provenance.append((len(arcs), len(arcs) + 1))
            arcs.append((u, v))
            arcs.append((v, u))
    return Digraph(g.vertex_count, tuple(arcs)), provenance


def adjacency_matrix(d: Digraph) -> Matrix:
    n = d.vertex_count
    a = [[0] * n for _ in range(n)]
    for u, v in d.arcs:
        a[u][v] += 1
    return Matrix.from_rows(ZZ, a) if n else Matrix.zeros(ZZ, 0)


def backtrack_matrix(d: Digraph) -> Matrix:
    """Diagonal matrix counting backtracks through each vertex, loops excluded."""
    n = d.vertex_count
    deg = []
    for u in range(n):
        deg.append(sum(len(d.arcs_from_to(u, v)) * len(d.arcs_from_to(v, u))
                       for v in range(n) if v != u))
    return Matrix.diagonal(ZZ, deg)
