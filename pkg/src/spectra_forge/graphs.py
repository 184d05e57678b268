"""Cayley graphs, Cayley sum graphs, and mirror di-Cayley (sum) graphs as
dense 0/1 adjacency tables, with the structural predicates used elsewhere.

Adjacency convention: entry (u, v) = 1 means a directed edge u -> v.
Loops count once toward both the row and the column sum.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .algebra import FiniteGroup, GroupSubset

ISOMORPHISM_SIZE_CAP = 10


class GraphError(ValueError):
    """Invalid graph operation."""


@dataclass(frozen=True)
class Graph:
    """Dense adjacency over labeled vertices."""

    adjacency: np.ndarray
    vertex_labels: tuple[str, ...] = ()

    def __post_init__(self):
        adj = np.asarray(self.adjacency, dtype=np.uint8)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise GraphError("adjacency must be square")
        if adj.size and adj.max() > 1:
            raise GraphError("adjacency entries must be 0/1")
        object.__setattr__(self, "adjacency", adj)
        labels = self.vertex_labels or tuple(str(i) for i in range(adj.shape[0]))
        if len(labels) != adj.shape[0]:
            raise GraphError("label count mismatch")
        object.__setattr__(self, "vertex_labels", tuple(labels))

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    @property
    def undirected(self) -> bool:
        return bool(np.array_equal(self.adjacency, self.adjacency.T))

    @property
    def has_loops(self) -> bool:
        return bool(np.any(np.diag(self.adjacency)))

    @property
    def out_degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1, dtype=np.int64)

    @property
    def in_degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=0, dtype=np.int64)

    @property
    def regular_degree(self) -> int | None:
        out, inn = self.out_degrees, self.in_degrees
        if len(out) and out.min() == out.max() == inn.min() == inn.max():
            return int(out[0])
        return None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and np.array_equal(
            self.adjacency, other.adjacency
        )

    def __hash__(self):
        return hash((self.n, int(self.adjacency.sum())))

    def permuted(self, perm: list[int]) -> "Graph":
        """Relabel vertices: new vertex i is old vertex perm[i]."""
        p = np.asarray(perm)
        return Graph(self.adjacency[np.ix_(p, p)], tuple(self.vertex_labels[i] for i in p))

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "labels": list(self.vertex_labels),
                "adjacency": ["".join(str(int(x)) for x in row) for row in self.adjacency],
            },
            separators=(",", ":"),
        )

    @staticmethod
    def from_json(text: str) -> "Graph":
        data = json.loads(text)
        adj = np.array([[int(c) for c in row] for row in data["adjacency"]], dtype=np.uint8)
        return Graph(adj, tuple(data["labels"]))

    def to_dot(self, name: str = "G") -> str:
        """DOT export; mutual edge pairs collapse to a single undirected line."""
        A = self.adjacency
        if self.undirected:
            lines = [f"graph {name} {{"]
            for u in range(self.n):
                for v in range(u, self.n):
                    if A[u, v]:
                        lines.append(f'  "{self.vertex_labels[u]}" -- "{self.vertex_labels[v]}";')
        else:
            lines = [f"digraph {name} {{"]
            for u in range(self.n):
                for v in range(self.n):
                    if not A[u, v]:
                        continue
                    if A[v, u] and v < u:
                        continue
                    if A[v, u] and u != v:
                        lines.append(
                            f'  "{self.vertex_labels[u]}" -> "{self.vertex_labels[v]}" [dir=both];'
                        )
                    else:
                        lines.append(f'  "{self.vertex_labels[u]}" -> "{self.vertex_labels[v]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# constructors


def cayley(group: FiniteGroup, S: GroupSubset, kind: str) -> Graph:
    """X(G,S) for kind 'difference' (edge h->g iff g h^-1 in S) or
    X^+(G,S) for kind 'sum' (edge h->g iff g h in S)."""
    _check_kind(kind)
    if S.parent != group:
        raise GraphError("connection set over a different group")
    n = group.order
    mask = S.mask()
    op = group.op_table
    if kind == "difference":
        prod = op[:, group.inv_table]        # prod[g, h] = g * h^-1
    else:
        prod = op                            # prod[g, h] = g * h
    adj = mask[prod].T.astype(np.uint8)      # adj[h, g] = 1 iff rule holds
    labels = tuple(str(g) for g in range(n))
    return Graph(adj, labels)


def mirror_dicayley(group: FiniteGroup, S: GroupSubset, T: GroupSubset, kind: str) -> Graph:
    """MX*(G; S, T): two Cayley mirrors joined by T-crossing edges.

    Vertex order: all (g, 0) first in group order, then all (g, 1).
    """
    _check_kind(kind)
    if S.parent != group or T.parent != group:
        raise GraphError("connection sets over a different group")
    B = cayley(group, S, kind).adjacency
    C = cayley(group, T, kind).adjacency
    adj = np.block([[B, C], [C, B]])
    labels = tuple(f"({g},{i})" for i in (0, 1) for g in range(group.order))
    return Graph(adj, labels)


def with_loops(graph: Graph) -> Graph:
    adj = graph.adjacency.copy()
    np.fill_diagonal(adj, 1)
    return Graph(adj, graph.vertex_labels)


def disjoint_union(graphs: list[Graph]) -> Graph:
    if not graphs:
        raise GraphError("disjoint union of nothing")
    n = sum(g.n for g in graphs)
    adj = np.zeros((n, n), dtype=np.uint8)
    labels = []
    at = 0
    for k, g in enumerate(graphs):
        adj[at:at + g.n, at:at + g.n] = g.adjacency
        labels.extend(f"{k}:{lab}" for lab in g.vertex_labels)
        at += g.n
    return Graph(adj, tuple(labels))


def _check_kind(kind: str) -> None:
    if kind not in ("difference", "sum"):
        raise GraphError(f"kind must be 'difference' or 'sum', got {kind!r}")


# ---------------------------------------------------------------------------
# structure


@dataclass(frozen=True)
class StructureReport:
    directed: bool
    loop_vertices: tuple[int, ...]
    out_degrees: tuple[int, ...]
    in_degrees: tuple[int, ...]
    regular_degree: int | None
    bipartite: bool | None
    components: tuple[tuple[int, ...], ...]
    twin_classes: tuple[tuple[int, ...], ...]

    @property
    def has_twins(self) -> bool:
        return any(len(c) > 1 for c in self.twin_classes)


def structure_report(graph: Graph) -> StructureReport:
    A = graph.adjacency
    n = graph.n
    directed = not graph.undirected
    loops = tuple(int(v) for v in np.nonzero(np.diag(A))[0])

    # components of the underlying undirected graph
    U = ((A + A.T) > 0).astype(np.uint8)
    seen = np.zeros(n, dtype=bool)
    components = []
    for s in range(n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in np.nonzero(U[u])[0]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(int(v))
        components.append(tuple(sorted(comp)))

    bipartite = None
    if not directed and not loops:
        color = np.full(n, -1, dtype=np.int64)
        bipartite = True
        for comp in components:
            color[comp[0]] = 0
            stack = [comp[0]]
            while stack and bipartite:
                u = stack.pop()
                for v in np.nonzero(A[u])[0]:
                    if color[v] == -1:
                        color[v] = 1 - color[u]
                        stack.append(int(v))
                    elif color[v] == color[u]:
                        bipartite = False
                        break

    # twins: identical neighborhoods, both outgoing and incoming
    keys = {}
    for v in range(n):
        key = (A[v].tobytes(), A[:, v].tobytes())
        keys.setdefault(key, []).append(v)
    twins = tuple(tuple(vs) for vs in keys.values())

    return StructureReport(
        directed=directed,
        loop_vertices=loops,
        out_degrees=tuple(int(d) for d in graph.out_degrees),
        in_degrees=tuple(int(d) for d in graph.in_degrees),
        regular_degree=graph.regular_degree,
        bipartite=bipartite,
        components=tuple(components),
        twin_classes=twins,
    )


def bipartite_or_raise(graph: Graph) -> bool:
    if not graph.undirected or graph.has_loops:
        raise GraphError("bipartite test requires an undirected loopless graph")
    return bool(structure_report(graph).bipartite)


def small_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Brute-force isomorphism for graphs on at most 10 vertices."""
    if g1.n > ISOMORPHISM_SIZE_CAP or g2.n > ISOMORPHISM_SIZE_CAP:
        raise GraphError(f"isomorphism test capped at {ISOMORPHISM_SIZE_CAP} vertices")
    if g1.n != g2.n:
        return False
    A, B = g1.adjacency, g2.adjacency

    def profile(M):
        return sorted(
            (int(M[v].sum()), int(M[:, v].sum()), int(M[v, v])) for v in range(M.shape[0])
        )

    if profile(A) != profile(B):
        return False
    prof_a = [(int(A[v].sum()), int(A[:, v].sum()), int(A[v, v])) for v in range(g1.n)]
    prof_b = [(int(B[v].sum()), int(B[:, v].sum()), int(B[v, v])) for v in range(g1.n)]
    for perm in permutations(range(g1.n)):
        if any(prof_b[perm[v]] != prof_a[v] for v in range(g1.n)):
            continue
        p = np.asarray(perm)
        if np.array_equal(B[np.ix_(p, p)], A):
            return True
    return False
