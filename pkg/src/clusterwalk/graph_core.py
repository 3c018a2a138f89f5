"""Simple undirected graphs, standard families, the cluster construction and
structural analysis (bridges, cut vertices, diameter, bipartiteness).

Vertices are always labelled ``0..n-1``.  A :class:`Graph` is immutable once
built.  Disconnected graphs can be represented, but every analysis entry point
calls :func:`require_connected` first.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx
import numpy as np


class GraphError(ValueError):
    """Invalid graph input (bad vertex, self-loop, unknown family, ...)."""


class DisconnectedGraphError(GraphError):
    """Raised when an analysis routine receives a disconnected graph."""


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    @property
    def degrees(self) -> np.ndarray:
        return np.array([len(a) for a in self.adjacency], dtype=np.int64)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted pairs ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def adjacency_matrix(self, dtype=np.float64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for u, nbrs in enumerate(self.adjacency):
            a[u, list(nbrs)] = 1
        return a

    def laplacian(self) -> np.ndarray:
        return np.diag(self.degrees.astype(np.float64)) - self.adjacency_matrix()

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        return len(_bfs_distances(self, 0)) == self.n

    def is_regular(self) -> bool:
        d = self.degrees
        return bool(np.all(d == d[0]))

    def __repr__(self) -> str:
        label = self.name or "Graph"
        return f"<{label}: n={self.n}, m={self.m}>"


def make_graph(n: int, edges: Iterable[tuple[int, int]], name: str = "") -> Graph:
    """Build a simple graph on ``0..n-1``; duplicate edges are merged."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs), name=name)


def require_connected(g: Graph) -> Graph:
    if not g.is_connected():
        raise DisconnectedGraphError(f"{g!r} is not connected")
    return g


def _bfs_distances(g: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    frontier = [source]
    while frontier:
        nxt = []
        for u in frontier:
            for v in g.adjacency[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    return dist


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs shortest path lengths by repeated BFS."""
    require_connected(g)
    d = np.zeros((g.n, g.n), dtype=np.int64)
    for s in range(g.n):
        for t, k in _bfs_distances(g, s).items():
            d[s, t] = k
    return d


# ----------------------------------------------------------------------------
# families

def complete(n: int) -> Graph:
    _need(n >= 2, "complete needs n >= 2")
    return make_graph(n, itertools.combinations(range(n), 2), name=f"K{n}")


def complete_bipartite(a: int, b: int) -> Graph:
    _need(a >= 1 and b >= 1, "complete_bipartite needs both sides >= 1")
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return make_graph(a + b, edges, name=f"K{a},{b}")


def path(n: int) -> Graph:
    _need(n >= 2, "path needs n >= 2")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def star(leaves: int) -> Graph:
    _need(leaves >= 1, "star needs at least one leaf")
    return make_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)],
                      name=f"K1,{leaves}")


def barbell(a: int, b: int, c: int) -> Graph:
    """K_a and K_c joined by a path of ``b`` edges.

    K_a occupies ``0..a-1``, the path interior follows, K_c comes last.  The
    path runs from vertex ``a-1`` to the first vertex of K_c.
    """
    _need(a >= 2 and c >= 2 and b >= 1, "barbell needs a, c >= 2 and b >= 1")
    edges = list(itertools.combinations(range(a), 2))
    chain = [a - 1] + list(range(a, a + b - 1)) + [a + b - 1]
    edges += list(zip(chain, chain[1:]))
    start = a + b - 1
    edges += [(start + i, start + j) for i, j in itertools.combinations(range(c), 2)]
    return make_graph(a + b - 1 + c, edges, name=f"barbell({a},{b},{c})")


def conjoined_polygons(k: int, n: int) -> Graph:
    """``k`` copies of the n-cycle sharing vertex 0."""
    _need(k >= 1 and n >= 3, "conjoined_polygons needs k >= 1 and n >= 3")
    edges = []
    nxt = 1
    for _ in range(k):
        ring = [0] + list(range(nxt, nxt + n - 1))
        nxt += n - 1
        edges += [(ring[i], ring[(i + 1) % n]) for i in range(n)]
    return make_graph(nxt, edges, name=f"conjoined_polygons({k},{n})")


def friendship(k: int) -> Graph:
    """Windmill of ``k`` triangles sharing vertex 0."""
    g = conjoined_polygons(k, 3)
    return Graph(g.n, g.adjacency, name=f"F{k}")


def hypercube(d: int) -> Graph:
    _need(d >= 1, "hypercube needs dimension >= 1")
    n = 1 << d
    edges = [(v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)]
    return make_graph(n, edges, name=f"Q{d}")


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return make_graph(10, outer + spokes + inner, name="Petersen")


FAMILIES = {
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "path": path,
    "cycle": cycle,
    "star": star,
    "barbell": barbell,
    "conjoined_polygons": conjoined_polygons,
    "friendship": friendship,
    "hypercube": hypercube,
    "petersen": petersen,
}


def generate(family: str, *params: int) -> Graph:
    """Build a named family instance, e.g. ``generate("complete", 4)``."""
    try:
        builder = FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}; known: {sorted(FAMILIES)}") from None
    try:
        return builder(*(int(p) for p in params))
    except TypeError as exc:
        raise GraphError(f"bad parameters {params} for family {family!r}: {exc}") from None


def random_connected(n: int, p: float, rng: np.random.Generator) -> Graph:
    """G(n, p) conditioned on connectivity, by rejection with a spanning-tree fallback.

    A random spanning tree is added when rejection fails ten times in a row,
    so the call always terminates.
    """
    _need(n >= 2, "random_connected needs n >= 2")
    pairs = list(itertools.combinations(range(n), 2))
    for _ in range(10):
        keep = rng.random(len(pairs)) < p
        g = make_graph(n, [e for e, k in zip(pairs, keep) if k])
        if g.is_connected():
            return Graph(g.n, g.adjacency, name=f"G({n},{p:.2f})")
    order = rng.permutation(n)
    tree = [(int(order[i]), int(order[rng.integers(0, i)])) for i in range(1, n)]
    g = make_graph(n, [e for e, k in zip(pairs, keep) if k] + tree)
    return Graph(g.n, g.adjacency, name=f"G({n},{p:.2f})+tree")


def _need(ok: bool, msg: str) -> None:
    if not ok:
        raise GraphError(msg)


# ----------------------------------------------------------------------------
# cluster construction

@dataclass(frozen=True)
class ClusterSpec:
    g1: Graph
    g2: Graph
    root: int

    def __post_init__(self):
        if self.g2.n < 2:
            raise GraphError("the glued graph needs at least 2 vertices")
        if not 0 <= self.root < self.g2.n:
            raise GraphError(f"root {self.root} is not a vertex of {self.g2!r}")


@dataclass(frozen=True)
class ClusterGraph:
    """A cluster together with its vertex-role map.

    ``contact[v]`` is the backbone vertex whose copy of g2 contains ``v``
    (``contact[v] == v`` on the backbone).  ``copy_vertex[v]`` is the label of
    ``v`` inside g2.
    """
    graph: Graph
    spec: ClusterSpec
    contact: tuple[int, ...]
    copy_vertex: tuple[int, ...]

    def is_backbone(self, v: int) -> bool:
        return v < self.spec.g1.n

    def copy_interior(self, c: int) -> list[int]:
        return [v for v in range(self.spec.g1.n, self.graph.n) if self.contact[v] == c]


def cluster(spec: ClusterSpec) -> ClusterGraph:
    """Glue a copy of ``g2`` (at ``root``) onto every vertex of ``g1``.

    Backbone vertices keep g1's labels.  Copy ``c`` places the non-root
    vertices of g2, in increasing g2 order, in the block
    ``n1 + c*(n2-1) .. n1 + (c+1)*(n2-1) - 1``.
    """
    g1, g2, root = spec.g1, spec.g2, spec.root
    require_connected(g1)
    require_connected(g2)
    n1, n2 = g1.n, g2.n
    others = [v for v in range(n2) if v != root]
    edges = list(g1.edges())
    contact = list(range(n1))
    copy_vertex = [root] * n1
    for c in range(n1):
        base = n1 + c * (n2 - 1)
        label = {root: c}
        label.update({v: base + i for i, v in enumerate(others)})
        edges += [(label[u], label[v]) for u, v in g2.edges()]
        contact += [c] * (n2 - 1)
        copy_vertex += others
    name = f"{g1.name or 'G1'}{{{g2.name or 'G2'}}}"
    g = make_graph(n1 * n2, edges, name=name)
    return ClusterGraph(g, spec, tuple(contact), tuple(copy_vertex))


# ----------------------------------------------------------------------------
# structure

@dataclass(frozen=True)
class StructureReport:
    bridges: list[tuple[int, int]]
    bridge_sides: list[tuple[int, int]]  # (m_i, m_j) edge counts of the two sides
    articulation_points: list[int]
    diameter: int
    is_bipartite: bool
    is_regular: bool
    degree: int | None  # common degree when regular


def structure(g: Graph) -> StructureReport:
    require_connected(g)
    nxg = g.to_networkx()
    bridges = sorted(tuple(sorted(e)) for e in nx.bridges(nxg))
    sides = [_bridge_sides(g, u, v) for u, v in bridges]
    arts = sorted(nx.articulation_points(nxg))
    regular = g.is_regular()
    return StructureReport(
        bridges=bridges,
        bridge_sides=sides,
        articulation_points=arts,
        diameter=int(distance_matrix(g).max()),
        is_bipartite=nx.is_bipartite(nxg),
        is_regular=regular,
        degree=int(g.degrees[0]) if regular else None,
    )


def _bridge_sides(g: Graph, u: int, v: int) -> tuple[int, int]:
    # vertices reachable from u without crossing (u, v)
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        for y in g.adjacency[x]:
            if (x, y) in ((u, v), (v, u)) or y in seen:
                continue
            seen.add(y)
            stack.append(y)
    deg_sum = sum(len(g.adjacency[x]) for x in seen)
    m_u = (deg_sum - 1) // 2
    return m_u, g.m - 1 - m_u


# ----------------------------------------------------------------------------
# edge-list text format

def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines format.  '#' lines are comments."""
    header = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(lineno, f"expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(lineno, f"expected two integers, got {line!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise EdgeListError(lineno, "header counts must be non-negative")
            header = (a, b)
            continue
        if not (0 <= a < header[0] and 0 <= b < header[0]):
            raise EdgeListError(lineno, f"vertex out of range 0..{header[0] - 1}")
        if a == b:
            raise EdgeListError(lineno, f"self-loop at vertex {a}")
        edges.append((a, b))
    if header is None:
        raise EdgeListError(0, "missing 'n m' header")
    if len(edges) != header[1]:
        raise EdgeListError(0, f"header declares {header[1]} edges, found {len(edges)}")
    return make_graph(header[0], edges)


def format_edge_list(g: Graph, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"{g.n} {g.m}")
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


class EdgeListError(GraphError):
    def __init__(self, lineno: int, msg: str):
        self.lineno = lineno
        where = f"line {lineno}: " if lineno else ""
        super().__init__(where + msg)


def relabel(g: Graph, order: Sequence[int], name: str = "") -> Graph:
    """Graph isomorphic to ``g`` with vertex ``v`` renamed ``order[v]``."""
    return make_graph(g.n, [(order[u], order[v]) for u, v in g.edges()], name=name or g.name)
