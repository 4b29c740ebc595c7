"""Graphs, partitions and partition multigraphs.

Vertices are 0-based integers.  Edges are stored as pairs ``(i, j)`` with
``i < j``, sorted lexicographically, each carrying a strictly positive
weight (1.0 by default).  Graphs must be simple and connected; both are
checked on construction.  All values are immutable after construction and
safe to share between threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import DisconnectedDomain, DisconnectedGraph


class UnionFind:
    """Disjoint-set forest with path compression and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size
        self.components = size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.components -= 1
        return True


def _normalize_edge(edge) -> tuple[int, int]:
    i, j = int(edge[0]), int(edge[1])
    if i == j:
        raise ValueError(f"self-loop ({i},{j}) not allowed")
    return (i, j) if i < j else (j, i)


class Graph:
    """Simple, finite, connected graph with positive edge weights.

    Parameters
    ----------
    vertex_count : number of vertices (>= 1)
    edges : iterable of vertex pairs; order of each pair is irrelevant
    weights : per-edge positive weights aligned with ``edges``; defaults
        to all ones
    """

    def __init__(self, vertex_count: int, edges, weights=None):
        vertex_count = int(vertex_count)
        if vertex_count < 1:
            raise ValueError("vertex_count must be positive")

        pairs = [_normalize_edge(e) for e in edges]
        if weights is None:
            w = np.ones(len(pairs))
        else:
            w = np.asarray(weights, dtype=float)
            if w.shape != (len(pairs),):
                raise ValueError("weights must align with edges")
        if len(pairs) and not np.all(np.isfinite(w) & (w > 0)):
            raise ValueError("edge weights must be strictly positive")

        order = sorted(range(len(pairs)), key=lambda k: pairs[k])
        pairs = [pairs[k] for k in order]
        w = w[order] if len(pairs) else w

        seen = set()
        for i, j in pairs:
            if not (0 <= i < vertex_count and 0 <= j < vertex_count):
                raise ValueError(f"edge ({i},{j}) out of range")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i},{j})")
            seen.add((i, j))

        uf = UnionFind(vertex_count)
        for i, j in pairs:
            uf.union(i, j)
        if uf.components != 1:
            raise DisconnectedGraph(
                f"graph has {uf.components} components; must be connected"
            )

        self.vertex_count = vertex_count
        self.edges: tuple[tuple[int, int], ...] = tuple(pairs)
        w.flags.writeable = False
        self.weights = w
        self._edge_index = {e: k for k, e in enumerate(self.edges)}
        adj: list[list[int]] = [[] for _ in range(vertex_count)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        self._adj = tuple(tuple(sorted(n)) for n in adj)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def has_edge(self, i: int, j: int) -> bool:
        return _normalize_edge((i, j)) in self._edge_index

    def weight(self, i: int, j: int) -> float:
        return float(self.weights[self._edge_index[_normalize_edge((i, j))]])

    def degree(self, v: int) -> float:
        """Weighted degree: sum of weights of incident edges."""
        return float(sum(self.weight(v, u) for u in self._adj[v]))

    def without_edge(self, edge) -> "Graph":
        """Copy with one edge removed; raises DisconnectedGraph if the edge
        is a bridge."""
        e = _normalize_edge(edge)
        if e not in self._edge_index:
            raise ValueError(f"edge {e} not in graph")
        keep = [k for k, other in enumerate(self.edges) if other != e]
        return Graph(
            self.vertex_count,
            [self.edges[k] for k in keep],
            self.weights[keep],
        )

    def without_edges(self, edges) -> "Graph":
        drop = {_normalize_edge(e) for e in edges}
        missing = drop - set(self.edges)
        if missing:
            raise ValueError(f"edges {sorted(missing)} not in graph")
        keep = [k for k, e in enumerate(self.edges) if e not in drop]
        return Graph(
            self.vertex_count,
            [self.edges[k] for k in keep],
            self.weights[keep],
        )

    def is_connected_without(self, edge) -> bool:
        e = _normalize_edge(edge)
        uf = UnionFind(self.vertex_count)
        for other in self.edges:
            if other != e:
                uf.union(*other)
        return uf.components == 1

    def induced_subgraph(self, vertices) -> tuple["Graph", tuple[int, ...]]:
        """Subgraph on ``vertices`` plus the global indices of its vertices.

        Local vertex k corresponds to global vertex ``mapping[k]``; the
        mapping is sorted ascending.  Raises DisconnectedGraph if the
        induced subgraph is not connected.
        """
        mapping = tuple(sorted(int(v) for v in vertices))
        local = {g: k for k, g in enumerate(mapping)}
        sub_edges, sub_weights = [], []
        for k, (i, j) in enumerate(self.edges):
            if i in local and j in local:
                sub_edges.append((local[i], local[j]))
                sub_weights.append(self.weights[k])
        return Graph(len(mapping), sub_edges, sub_weights), mapping

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.vertex_count == other.vertex_count
            and self.edges == other.edges
            and np.array_equal(self.weights, other.weights)
        )

    def __hash__(self):
        return hash((self.vertex_count, self.edges, self.weights.tobytes()))

    def __repr__(self):
        return f"Graph(V={self.vertex_count}, E={self.edge_count})"


def betti(g: Graph) -> int:
    """Number of independent cycles, E - V + 1, of a connected graph."""
    return g.edge_count - g.vertex_count + 1


def spanning_tree(g: Graph) -> tuple[tuple[int, int], ...]:
    """Deterministic spanning tree: depth-first from vertex 0, visiting the
    lowest-index unvisited neighbor first.  Returns sorted edges."""
    visited = [False] * g.vertex_count
    visited[0] = True
    stack = [0]
    tree = []
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if not visited[u]:
                visited[u] = True
                tree.append((min(v, u), max(v, u)))
                # re-scan v after descending into its lowest neighbor
                stack.append(v)
                stack.append(u)
                break
    return tuple(sorted(tree))


class Partition:
    """A partition of a graph into connected domains.

    ``domain_of[v]`` gives the domain index of vertex v, in 0..nu-1.
    Removed edges are exactly the edges whose endpoints lie in different
    domains.  Use :func:`partition_from_labels` to construct one.
    """

    def __init__(self, parent: Graph, domain_of: np.ndarray, nu: int,
                 removed_edges: tuple[tuple[int, int], ...]):
        self.parent = parent
        domain_of = np.asarray(domain_of, dtype=int)
        domain_of.flags.writeable = False
        self.domain_of = domain_of
        self.nu = nu
        self.removed_edges = removed_edges

    def domain_vertices(self, k: int) -> tuple[int, ...]:
        return tuple(int(v) for v in np.nonzero(self.domain_of == k)[0])

    def domain_subgraph(self, k: int) -> tuple[Graph, tuple[int, ...]]:
        return self.parent.induced_subgraph(self.domain_vertices(k))

    def kept_edges(self) -> tuple[tuple[int, int], ...]:
        removed = set(self.removed_edges)
        return tuple(e for e in self.parent.edges if e not in removed)

    def __eq__(self, other):
        return (
            isinstance(other, Partition)
            and self.parent == other.parent
            and np.array_equal(self.domain_of, other.domain_of)
        )

    def __hash__(self):
        return hash((self.parent, self.domain_of.tobytes()))

    def __repr__(self):
        return f"Partition(nu={self.nu}, removed={len(self.removed_edges)})"


def partition_from_labels(g: Graph, labels) -> Partition:
    """Build a Partition from an arbitrary vertex labeling.

    Labels are renumbered to 0..nu-1 in order of first occurrence.  Each
    label class must induce a connected subgraph, otherwise
    DisconnectedDomain is raised.
    """
    labels = list(labels)
    if len(labels) != g.vertex_count:
        raise ValueError("labels must cover every vertex")
    renumber: dict = {}
    domain_of = np.empty(g.vertex_count, dtype=int)
    for v, lab in enumerate(labels):
        if lab not in renumber:
            renumber[lab] = len(renumber)
        domain_of[v] = renumber[lab]
    nu = len(renumber)

    uf = UnionFind(g.vertex_count)
    for i, j in g.edges:
        if domain_of[i] == domain_of[j]:
            uf.union(i, j)
    roots_per_domain: dict[int, set] = {}
    for v in range(g.vertex_count):
        roots_per_domain.setdefault(int(domain_of[v]), set()).add(uf.find(v))
    bad = sorted(k for k, roots in roots_per_domain.items() if len(roots) > 1)
    if bad:
        raise DisconnectedDomain(
            f"label classes {bad} do not induce connected subgraphs"
        )

    removed = tuple(e for e in g.edges if domain_of[e[0]] != domain_of[e[1]])
    return Partition(g, domain_of, nu, removed)


@dataclass(frozen=True)
class PartitionGraph:
    """Multigraph on the domains of a partition: one edge per removed edge
    of the base graph (parallel edges allowed)."""

    vertex_count: int
    multi_edges: tuple[tuple[int, int, tuple[int, int]], ...]

    @property
    def edge_count(self) -> int:
        return len(self.multi_edges)

    def is_connected(self) -> bool:
        uf = UnionFind(self.vertex_count)
        for a, b, _ in self.multi_edges:
            uf.union(a, b)
        return uf.components == 1

    def is_tree(self) -> bool:
        return self.is_connected() and self.edge_count == self.vertex_count - 1

    def is_bipartite(self) -> bool:
        color = [-1] * self.vertex_count
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for a, b, _ in self.multi_edges:
            adj[a].append(b)
            adj[b].append(a)
        for start in range(self.vertex_count):
            if color[start] != -1:
                continue
            color[start] = 0
            queue = [start]
            while queue:
                v = queue.pop()
                for u in adj[v]:
                    if color[u] == -1:
                        color[u] = 1 - color[v]
                        queue.append(u)
                    elif color[u] == color[v]:
                        return False
        return True

    def two_coloring(self) -> list[int]:
        """A 0/1 coloring of the domains; raises ValueError if not bipartite."""
        if not self.is_bipartite():
            raise ValueError("partition multigraph is not bipartite")
        color = [-1] * self.vertex_count
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for a, b, _ in self.multi_edges:
            adj[a].append(b)
            adj[b].append(a)
        for start in range(self.vertex_count):
            if color[start] != -1:
                continue
            color[start] = 0
            queue = [start]
            while queue:
                v = queue.pop()
                for u in adj[v]:
                    if color[u] == -1:
                        color[u] = 1 - color[v]
                        queue.append(u)
        return color


def partition_multigraph(p: Partition) -> PartitionGraph:
    """Multigraph with one vertex per domain and one edge per removed edge."""
    multi = tuple(
        (
            min(int(p.domain_of[i]), int(p.domain_of[j])),
            max(int(p.domain_of[i]), int(p.domain_of[j])),
            (i, j),
        )
        for i, j in p.removed_edges
    )
    return PartitionGraph(p.nu, multi)


# --- JSON interface ---------------------------------------------------------
#
# {"vertices": N, "edges": [[i, j] | [i, j, w], ...], "potential": [... N ...]}
# "potential" is optional (defaults to zeros); no other keys are accepted.

def graph_from_json_dict(data: dict) -> tuple[Graph, np.ndarray]:
    if not isinstance(data, dict):
        raise ValueError("graph JSON must be an object")
    unknown = set(data) - {"vertices", "edges", "potential"}
    if unknown:
        raise ValueError(f"unknown keys in graph JSON: {sorted(unknown)}")
    if "vertices" not in data or "edges" not in data:
        raise ValueError("graph JSON requires 'vertices' and 'edges'")
    n = data["vertices"]
    if not isinstance(n, int) or n < 1:
        raise ValueError("'vertices' must be a positive integer")
    edges, weights = [], []
    for entry in data["edges"]:
        if not isinstance(entry, (list, tuple)) or len(entry) not in (2, 3):
            raise ValueError(f"edge entry {entry!r} must be [i, j] or [i, j, w]")
        edges.append((entry[0], entry[1]))
        weights.append(float(entry[2]) if len(entry) == 3 else 1.0)
    potential = data.get("potential")
    if potential is None:
        q = np.zeros(n)
    else:
        q = np.asarray(potential, dtype=float)
        if q.shape != (n,):
            raise ValueError("'potential' must list one value per vertex")
        if not np.all(np.isfinite(q)):
            raise ValueError("'potential' values must be finite")
    return Graph(n, edges, weights), q


def graph_to_json_dict(g: Graph, q=None) -> dict:
    uniform = bool(np.all(g.weights == 1.0)) if g.edge_count else True
    if uniform:
        edges = [[i, j] for i, j in g.edges]
    else:
        edges = [[i, j, float(w)] for (i, j), w in zip(g.edges, g.weights)]
    data: dict = {"vertices": g.vertex_count, "edges": edges}
    if q is not None:
        data["potential"] = [float(x) for x in np.asarray(q, dtype=float)]
    return data


def load_graph_file(path) -> tuple[Graph, np.ndarray]:
    with open(path, "r", encoding="utf-8") as fh:
        return graph_from_json_dict(json.load(fh))
